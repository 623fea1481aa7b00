#include "orbk/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace orbk {

FiniteGroupoid::FiniteGroupoid() {
  auto impl = std::make_shared<Impl>();
  impl->out_offset = {0};
  impl_ = std::move(impl);
}

FiniteGroupoid FiniteGroupoid::build(int objects, std::vector<int> source,
                                     std::vector<int> target, const ComposeFn& compose,
                                     const BuildOptions& opts) {
  const auto arrows = static_cast<std::int64_t>(source.size());
  if (static_cast<std::int64_t>(target.size()) != arrows) {
    throw ValidationError("source/target tables differ in length");
  }
  if (arrows > opts.arrow_cap) {
    throw ValidationError("arrow count " + std::to_string(arrows) + " exceeds cap " +
                          std::to_string(opts.arrow_cap));
  }
  auto impl = std::make_shared<Impl>();
  impl->objects = objects;
  const int n = static_cast<int>(arrows);
  for (int a = 0; a < n; ++a) {
    if (source[a] < 0 || source[a] >= objects || target[a] < 0 || target[a] >= objects) {
      throw ValidationError("arrow " + std::to_string(a) + " has an invalid endpoint");
    }
  }
  impl->out_offset.assign(objects + 1, 0);
  for (int a = 0; a < n; ++a) ++impl->out_offset[source[a] + 1];
  for (int x = 0; x < objects; ++x) impl->out_offset[x + 1] += impl->out_offset[x];
  impl->out.resize(n);
  impl->out_pos.resize(n);
  {
    std::vector<int> fill(impl->out_offset.begin(), impl->out_offset.end() - 1);
    for (int a = 0; a < n; ++a) {
      impl->out_pos[a] = fill[source[a]] - impl->out_offset[source[a]];
      impl->out[fill[source[a]]++] = a;
    }
  }
  auto out_degree = [&](int x) { return impl->out_offset[x + 1] - impl->out_offset[x]; };
  impl->comp_offset.resize(n);
  std::int64_t total = 0;
  for (int a = 0; a < n; ++a) {
    impl->comp_offset[a] = total;
    total += out_degree(target[a]);
  }
  impl->comp.resize(total);
  for (int a = 0; a < n; ++a) {
    const int x = target[a];
    for (int i = impl->out_offset[x]; i < impl->out_offset[x + 1]; ++i) {
      const int b = impl->out[i];
      const int c = compose(a, b);
      if (c < 0 || c >= n || source[c] != source[a] || target[c] != target[b]) {
        throw ValidationError("composition of (" + std::to_string(a) + "," + std::to_string(b) +
                              ") has wrong endpoints");
      }
      impl->comp[impl->comp_offset[a] + impl->out_pos[b]] = c;
    }
  }
  impl->source = std::move(source);
  impl->target = std::move(target);

  auto comp = [&](int a, int b) { return impl->comp[impl->comp_offset[a] + impl->out_pos[b]]; };

  impl->identity.assign(objects, -1);
  for (int x = 0; x < objects; ++x) {
    for (int i = impl->out_offset[x]; i < impl->out_offset[x + 1] && impl->identity[x] < 0; ++i) {
      const int e = impl->out[i];
      if (impl->target[e] != x) continue;
      bool unit = true;
      for (int j = impl->out_offset[x]; j < impl->out_offset[x + 1] && unit; ++j) {
        unit = comp(e, impl->out[j]) == impl->out[j];
      }
      if (unit) impl->identity[x] = e;
    }
    if (impl->identity[x] < 0) {
      throw ValidationError("object " + std::to_string(x) + " has no identity arrow");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (comp(a, impl->identity[impl->target[a]]) != a) {
      throw ValidationError("identity fails on the right at arrow " + std::to_string(a));
    }
  }
  impl->inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    const int y = impl->target[a];
    for (int i = impl->out_offset[y]; i < impl->out_offset[y + 1]; ++i) {
      const int b = impl->out[i];
      if (comp(a, b) == impl->identity[impl->source[a]] && comp(b, a) == impl->identity[y]) {
        impl->inverse[a] = b;
        break;
      }
    }
    if (impl->inverse[a] < 0) {
      throw ValidationError("arrow " + std::to_string(a) + " has no inverse");
    }
  }

  std::int64_t triples = 0;
  for (int a = 0; a < n && triples <= opts.associativity_check_limit; ++a) {
    for (int i = impl->out_offset[impl->target[a]]; i < impl->out_offset[impl->target[a] + 1]; ++i) {
      triples += out_degree(impl->target[impl->out[i]]);
    }
  }
  if (triples <= opts.associativity_check_limit) {
    for (int a = 0; a < n; ++a) {
      for (int i = impl->out_offset[impl->target[a]]; i < impl->out_offset[impl->target[a] + 1]; ++i) {
        const int b = impl->out[i];
        const int ab = comp(a, b);
        for (int j = impl->out_offset[impl->target[b]]; j < impl->out_offset[impl->target[b] + 1]; ++j) {
          const int c = impl->out[j];
          if (comp(ab, c) != comp(a, comp(b, c))) {
            throw ValidationError("associativity fails at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
          }
        }
      }
    }
  }
  FiniteGroupoid g;
  g.impl_ = std::move(impl);
  return g;
}

std::vector<int> FiniteGroupoid::isotropy(int x) const {
  std::vector<int> out;
  for (int a : arrows_from(x))
    if (target(a) == x) out.push_back(a);
  return out;
}

std::vector<int> FiniteGroupoid::orbit_index() const {
  std::vector<int> idx(object_count(), -1);
  int next = 0;
  for (int x = 0; x < object_count(); ++x) {
    if (idx[x] >= 0) continue;
    // Every object reachable from x is reached by a single arrow out of x.
    for (int a : arrows_from(x)) idx[target(a)] = next;
    ++next;
  }
  return idx;
}

std::vector<std::vector<int>> FiniteGroupoid::orbits() const {
  const auto idx = orbit_index();
  const int count = idx.empty() ? 0 : *std::max_element(idx.begin(), idx.end()) + 1;
  std::vector<std::vector<int>> out(count);
  for (int x = 0; x < object_count(); ++x) out[idx[x]].push_back(x);
  return out;
}

bool FiniteGroupoid::operator==(const FiniteGroupoid& other) const noexcept {
  if (impl_ == other.impl_) return true;
  return impl_->objects == other.impl_->objects && impl_->source == other.impl_->source &&
         impl_->target == other.impl_->target && impl_->comp == other.impl_->comp;
}

FiniteGroupoid action_groupoid(const FiniteGroup& g, const std::vector<std::vector<int>>& act) {
  const int nx = static_cast<int>(act.size());
  const int ng = g.order();
  for (int x = 0; x < nx; ++x) {
    if (static_cast<int>(act[x].size()) != ng) throw ValidationError("action table has wrong width");
    for (int e = 0; e < ng; ++e) {
      if (act[x][e] < 0 || act[x][e] >= nx) throw ValidationError("action table out of range");
    }
    if (act[x][0] != x) {
      throw ValidationError("action fails identity at point " + std::to_string(x));
    }
    for (int a = 0; a < ng; ++a) {
      for (int b = 0; b < ng; ++b) {
        if (act[act[x][a]][b] != act[x][g.mul(a, b)]) {
          throw ValidationError("action fails compatibility at (" + std::to_string(x) + "," +
                                std::to_string(a) + "," + std::to_string(b) + ")");
        }
      }
    }
  }
  std::vector<int> src(static_cast<std::size_t>(nx) * ng), tgt(src.size());
  for (int x = 0; x < nx; ++x) {
    for (int e = 0; e < ng; ++e) {
      src[x * ng + e] = x;
      tgt[x * ng + e] = act[x][e];
    }
  }
  return FiniteGroupoid::build(nx, std::move(src), std::move(tgt), [&](int a, int b) {
    return (a / ng) * ng + g.mul(a % ng, b % ng);
  });
}

FiniteGroupoid point_groupoid(const FiniteGroup& g) {
  return action_groupoid(g, {std::vector<int>(g.order(), 0)});
}

IsotropyGroup isotropy_group(const FiniteGroupoid& g, int x) {
  IsotropyGroup out;
  out.arrows.push_back(g.identity(x));
  for (int a : g.isotropy(x))
    if (a != g.identity(x)) out.arrows.push_back(a);
  const int n = static_cast<int>(out.arrows.size());
  std::vector<int> local(g.arrow_count(), -1);
  for (int i = 0; i < n; ++i) local[out.arrows[i]] = i;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = local[g.compose(out.arrows[i], out.arrows[j])];
  out.group = FiniteGroup::from_table(std::move(t), {}, std::max(n, kDefaultOrderCap));
  return out;
}

bool is_functor(const GroupoidHom& h) {
  const auto& s = h.source;
  const auto& t = h.target;
  if (static_cast<int>(h.object_map.size()) != s.object_count() ||
      static_cast<int>(h.arrow_map.size()) != s.arrow_count()) {
    return false;
  }
  for (int x : h.object_map)
    if (x < 0 || x >= t.object_count()) return false;
  for (int a : h.arrow_map)
    if (a < 0 || a >= t.arrow_count()) return false;
  for (int a = 0; a < s.arrow_count(); ++a) {
    if (t.source(h.arrow_map[a]) != h.object_map[s.source(a)]) return false;
    if (t.target(h.arrow_map[a]) != h.object_map[s.target(a)]) return false;
  }
  for (int x = 0; x < s.object_count(); ++x) {
    if (h.arrow_map[s.identity(x)] != t.identity(h.object_map[x])) return false;
  }
  for (int a = 0; a < s.arrow_count(); ++a) {
    for (int b : s.arrows_from(s.target(a))) {
      if (h.arrow_map[s.compose(a, b)] != t.compose(h.arrow_map[a], h.arrow_map[b])) return false;
    }
  }
  return true;
}

namespace {

bool is_bijection(const std::vector<int>& m, int size) {
  if (static_cast<int>(m.size()) != size) return false;
  std::vector<char> hit(size, 0);
  for (int v : m) {
    if (v < 0 || v >= size || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

}  // namespace

bool is_isomorphism(const GroupoidHom& h) {
  return is_bijection(h.object_map, h.target.object_count()) &&
         is_bijection(h.arrow_map, h.target.arrow_count()) && is_functor(h);
}

bool is_equivalence(const GroupoidHom& h) {
  if (!is_functor(h)) return false;
  const auto so = h.source.orbit_index();
  const auto to = h.target.orbit_index();
  const int sn = so.empty() ? 0 : *std::max_element(so.begin(), so.end()) + 1;
  const int tn = to.empty() ? 0 : *std::max_element(to.begin(), to.end()) + 1;
  if (sn != tn) return false;
  std::vector<int> orbit_map(sn, -1);
  for (int x = 0; x < h.source.object_count(); ++x) {
    const int img = to[h.object_map[x]];
    if (orbit_map[so[x]] >= 0 && orbit_map[so[x]] != img) return false;
    orbit_map[so[x]] = img;
  }
  if (!is_bijection(orbit_map, tn)) return false;
  for (int x = 0; x < h.source.object_count(); ++x) {
    const auto iso = h.source.isotropy(x);
    const auto tiso = h.target.isotropy(h.object_map[x]);
    if (iso.size() != tiso.size()) return false;
    std::set<int> images;
    for (int a : iso) images.insert(h.arrow_map[a]);
    if (images.size() != iso.size()) return false;
  }
  return true;
}

GroupoidHom compose_homs(const GroupoidHom& first, const GroupoidHom& second) {
  GroupoidHom out{first.source, second.target, {}, {}};
  out.object_map.resize(first.object_map.size());
  out.arrow_map.resize(first.arrow_map.size());
  for (std::size_t i = 0; i < first.object_map.size(); ++i)
    out.object_map[i] = second.object_map[first.object_map[i]];
  for (std::size_t i = 0; i < first.arrow_map.size(); ++i)
    out.arrow_map[i] = second.arrow_map[first.arrow_map[i]];
  return out;
}

GroupoidHom identity_hom(const FiniteGroupoid& g) {
  GroupoidHom h{g, g, std::vector<int>(g.object_count()), std::vector<int>(g.arrow_count())};
  std::iota(h.object_map.begin(), h.object_map.end(), 0);
  std::iota(h.arrow_map.begin(), h.arrow_map.end(), 0);
  return h;
}

int SectorGroupoid::object_of(std::span<const int> l) const {
  if (static_cast<int>(l.size()) != k) throw UsageError("object_of: wrong tuple length");
  const int x = base.source(l[0]);
  int idx = 0;
  for (int a : l) {
    if (base.source(a) != x || base.target(a) != x) {
      throw UsageError("object_of: arrows are not loops at a common object");
    }
    idx = idx * loops_per_object[x] + loop_position[a];
  }
  return object_offset[x] + idx;
}

SectorGroupoid k_sectors(const FiniteGroupoid& g, int k, std::int64_t arrow_cap) {
  if (k < 1) throw UsageError("k_sectors: k must be positive");
  SectorGroupoid s;
  s.base = g;
  s.k = k;
  s.loop_position.assign(g.arrow_count(), -1);
  s.loops_per_object.assign(g.object_count(), 0);
  s.object_offset.assign(g.object_count(), 0);
  std::vector<std::vector<int>> loops_at(g.object_count());
  for (int x = 0; x < g.object_count(); ++x) {
    loops_at[x] = g.isotropy(x);
    s.loops_per_object[x] = static_cast<int>(loops_at[x].size());
    for (int i = 0; i < s.loops_per_object[x]; ++i) s.loop_position[loops_at[x][i]] = i;
  }
  std::int64_t objects = 0, arrows = 0;
  for (int x = 0; x < g.object_count(); ++x) {
    s.object_offset[x] = static_cast<int>(objects);
    std::int64_t count = 1;
    for (int i = 0; i < k; ++i) {
      count *= s.loops_per_object[x];
      if (count * static_cast<std::int64_t>(g.arrows_from(x).size()) > arrow_cap) {
        throw ValidationError("k_sectors: arrow count exceeds cap " + std::to_string(arrow_cap));
      }
    }
    objects += count;
    arrows += count * static_cast<std::int64_t>(g.arrows_from(x).size());
    if (arrows > arrow_cap) {
      throw ValidationError("k_sectors: arrow count exceeds cap " + std::to_string(arrow_cap));
    }
  }
  s.loop_table.resize(static_cast<std::size_t>(objects) * k);
  s.arrow_offset.resize(objects);
  s.conjugator_table.resize(arrows);
  std::vector<int> src(arrows), tgt(arrows);
  int obj = 0, arr = 0;
  for (int x = 0; x < g.object_count(); ++x) {
    const int l = s.loops_per_object[x];
    std::vector<int> digits(k, 0);
    std::int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= l;
    for (std::int64_t c = 0; c < count; ++c, ++obj) {
      for (int i = 0; i < k; ++i) s.loop_table[static_cast<std::size_t>(obj) * k + i] = loops_at[x][digits[i]];
      s.arrow_offset[obj] = arr;
      for (int u : g.arrows_from(x)) {
        s.conjugator_table[arr] = u;
        src[arr] = obj;
        ++arr;
      }
      for (int i = k - 1; i >= 0; --i) {
        if (++digits[i] < l) break;
        digits[i] = 0;
      }
    }
  }
  std::vector<int> conj(k);
  for (int a = 0; a < arrows; ++a) {
    const int o = src[a];
    const int u = s.conjugator_table[a];
    for (int i = 0; i < k; ++i) {
      const int loop = s.loop_table[static_cast<std::size_t>(o) * k + i];
      conj[i] = g.compose(g.compose(g.inverse(u), loop), u);
    }
    tgt[a] = s.object_of(conj);
  }
  const std::vector<int> arrow_source = src;
  s.groupoid = FiniteGroupoid::build(
      static_cast<int>(objects), std::move(src), std::move(tgt),
      [&](int a, int b) {
        const int o = arrow_source[a];
        return s.arrow_of(o, g.compose(s.conjugator_table[a], s.conjugator_table[b]));
      },
      FiniteGroupoid::BuildOptions{arrow_cap, 5'000'000});
  return s;
}

namespace {

GroupoidHom sector_map(const SectorGroupoid& src, const FiniteGroupoid& dst,
                       const std::function<int(int)>& object_image,
                       const std::function<int(int, int)>& arrow_image) {
  GroupoidHom h{src.groupoid, dst, std::vector<int>(src.groupoid.object_count()),
                std::vector<int>(src.groupoid.arrow_count())};
  for (int o = 0; o < src.groupoid.object_count(); ++o) h.object_map[o] = object_image(o);
  for (int a = 0; a < src.groupoid.arrow_count(); ++a) {
    h.arrow_map[a] = arrow_image(h.object_map[src.groupoid.source(a)], src.conjugator(a));
  }
  return h;
}

}  // namespace

GroupoidHom unit_embedding(const SectorGroupoid& in) {
  if (in.k != 1) throw UsageError("unit_embedding expects the inertia groupoid");
  const auto& g = in.base;
  GroupoidHom h{g, in.groupoid, std::vector<int>(g.object_count()), std::vector<int>(g.arrow_count())};
  for (int x = 0; x < g.object_count(); ++x) {
    const int id = g.identity(x);
    h.object_map[x] = in.object_of(std::span<const int>(&id, 1));
  }
  for (int u = 0; u < g.arrow_count(); ++u) h.arrow_map[u] = in.arrow_of(h.object_map[g.source(u)], u);
  return h;
}

GroupoidHom identity_section(const SectorGroupoid& s) {
  const auto& g = s.base;
  GroupoidHom h{g, s.groupoid, std::vector<int>(g.object_count()), std::vector<int>(g.arrow_count())};
  for (int x = 0; x < g.object_count(); ++x) {
    const std::vector<int> ids(s.k, g.identity(x));
    h.object_map[x] = s.object_of(ids);
  }
  for (int u = 0; u < g.arrow_count(); ++u) h.arrow_map[u] = s.arrow_of(h.object_map[g.source(u)], u);
  return h;
}

GroupoidHom base_projection(const SectorGroupoid& s) {
  return sector_map(
      s, s.base, [&](int o) { return s.base_object(o); }, [](int, int u) { return u; });
}

GroupoidHom word_map(const SectorGroupoid& src, const SectorGroupoid& dst,
                     const std::vector<SectorWord>& words) {
  if (static_cast<int>(words.size()) != dst.k) throw UsageError("word_map: word count != target k");
  if (!(src.base == dst.base)) throw UsageError("word_map: sector groupoids over different bases");
  const auto& g = src.base;
  std::vector<int> image(dst.k);
  return sector_map(
      src, dst.groupoid,
      [&](int o) {
        const auto l = src.loops(o);
        const int x = src.base_object(o);
        for (int w = 0; w < dst.k; ++w) {
          int acc = g.identity(x);
          for (int letter : words[w]) {
            const int i = std::abs(letter) - 1;
            if (i < 0 || i >= src.k) throw UsageError("word_map: letter out of range");
            acc = g.compose(acc, letter > 0 ? l[i] : g.inverse(l[i]));
          }
          image[w] = acc;
        }
        return dst.object_of(image);
      },
      [&](int o, int u) { return dst.arrow_of(o, u); });
}

GroupoidHom evaluation_hom(Evaluation which, const SectorGroupoid& two, const SectorGroupoid& in) {
  if (two.k != 2) throw UsageError("evaluation_hom: source must be the 2-sector groupoid");
  if (which != Evaluation::Base && in.k != 1) {
    throw UsageError("evaluation_hom: target must be the inertia groupoid");
  }
  switch (which) {
    case Evaluation::First:
      return word_map(two, in, {{1}});
    case Evaluation::Second:
      return word_map(two, in, {{2}});
    case Evaluation::Product:
      return word_map(two, in, {{1, 2}});
    case Evaluation::Base:
      return base_projection(two);
  }
  throw UsageError("evaluation_hom: unknown evaluation");
}

GroupoidHom i3_rotation(const SectorGroupoid& three) {
  if (three.k != 3) throw UsageError("i3_rotation expects the 3-sector groupoid");
  return word_map(three, three, {{2}, {3}, {-3, -2, 1, 2, 3}});
}

int FiberedProduct::object_index(int left, int middle, int right) const {
  const std::int64_t key = (static_cast<std::int64_t>(left) * middle_count + middle) * right_count + right;
  auto it = object_lookup.find(key);
  return it == object_lookup.end() ? -1 : it->second;
}

int FiberedProduct::arrow_of(int object, int h, int k) const {
  const auto& o = objects[object];
  const int right_out = static_cast<int>(right_source.arrows_from(o.right).size());
  return arrow_offset[object] + left_source.out_position(h) * right_out + right_source.out_position(k);
}

FiberedProduct fibered_product(const GroupoidHom& f, const GroupoidHom& g, std::int64_t arrow_cap) {
  if (!(f.target == g.target)) throw UsageError("fibered_product: maps have different targets");
  const auto& H = f.source;
  const auto& K = g.source;
  const auto& G = f.target;
  FiberedProduct p;
  p.left_source = H;
  p.right_source = K;
  p.middle_count = G.arrow_count();
  p.right_count = K.object_count();

  std::vector<std::vector<int>> over(G.object_count());
  for (int z = 0; z < K.object_count(); ++z) over[g.object_map[z]].push_back(z);

  std::int64_t arrows = 0;
  for (int y = 0; y < H.object_count(); ++y) {
    for (int a : G.arrows_from(f.object_map[y])) {
      for (int z : over[G.target(a)]) {
        p.object_lookup.emplace(
            (static_cast<std::int64_t>(y) * p.middle_count + a) * p.right_count + z,
            static_cast<int>(p.objects.size()));
        p.objects.push_back({y, a, z});
        p.arrow_offset.push_back(static_cast<int>(arrows));
        arrows += static_cast<std::int64_t>(H.arrows_from(y).size()) *
                  static_cast<std::int64_t>(K.arrows_from(z).size());
        if (arrows > arrow_cap) {
          throw ValidationError("fibered_product: arrow count exceeds cap " + std::to_string(arrow_cap));
        }
      }
    }
  }
  std::vector<int> src(arrows), tgt(arrows);
  p.arrows.resize(arrows);
  for (int o = 0; o < static_cast<int>(p.objects.size()); ++o) {
    const auto [y, a, z] = p.objects[o];
    for (int h : H.arrows_from(y)) {
      for (int k : K.arrows_from(z)) {
        const int idx = p.arrow_of(o, h, k);
        const int a2 = G.compose(G.compose(G.inverse(f.arrow_map[h]), a), g.arrow_map[k]);
        src[idx] = o;
        tgt[idx] = p.object_index(H.target(h), a2, K.target(k));
        p.arrows[idx] = {h, k};
      }
    }
  }
  const std::vector<int> arrow_source = src;
  p.groupoid = FiniteGroupoid::build(
      static_cast<int>(p.objects.size()), std::move(src), std::move(tgt),
      [&](int x, int y) {
        const auto [h1, k1] = p.arrows[x];
        const auto [h2, k2] = p.arrows[y];
        return p.arrow_of(arrow_source[x], H.compose(h1, h2), K.compose(k1, k2));
      },
      FiniteGroupoid::BuildOptions{arrow_cap, 5'000'000});
  p.left_projection = GroupoidHom{p.groupoid, H, {}, {}};
  p.right_projection = GroupoidHom{p.groupoid, K, {}, {}};
  for (const auto& o : p.objects) {
    p.left_projection.object_map.push_back(o.left);
    p.right_projection.object_map.push_back(o.right);
  }
  for (const auto& [h, k] : p.arrows) {
    p.left_projection.arrow_map.push_back(h);
    p.right_projection.arrow_map.push_back(k);
  }
  return p;
}

FullSubgroupoid full_subgroupoid(const FiniteGroupoid& g, const std::vector<int>& objects) {
  std::vector<int> local(g.object_count(), -1);
  std::vector<int> sorted = objects;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) local[sorted[i]] = i;
  std::vector<int> arrows, src, tgt;
  std::vector<int> local_arrow(g.arrow_count(), -1);
  for (int x : sorted) {
    for (int a : g.arrows_from(x)) {
      if (local[g.target(a)] < 0) continue;
      local_arrow[a] = static_cast<int>(arrows.size());
      arrows.push_back(a);
      src.push_back(local[x]);
      tgt.push_back(local[g.target(a)]);
    }
  }
  FullSubgroupoid out;
  out.groupoid = FiniteGroupoid::build(
      static_cast<int>(sorted.size()), std::move(src), std::move(tgt),
      [&](int a, int b) { return local_arrow[g.compose(arrows[a], arrows[b])]; });
  out.inclusion = GroupoidHom{out.groupoid, g, sorted, arrows};
  return out;
}

GroupoidHom three_sectors_to_fibered(const SectorGroupoid& three, const SectorGroupoid& two,
                                     const SectorGroupoid& in, const FiberedProduct& p) {
  if (three.k != 3 || two.k != 2 || in.k != 1) {
    throw UsageError("three_sectors_to_fibered: wrong sector degrees");
  }
  const auto& g = three.base;
  GroupoidHom h{three.groupoid, p.groupoid, std::vector<int>(three.groupoid.object_count()),
                std::vector<int>(three.groupoid.arrow_count())};
  for (int o = 0; o < three.groupoid.object_count(); ++o) {
    const auto l = three.loops(o);
    const int x = three.base_object(o);
    const int ab = g.compose(l[0], l[1]);
    const int left = two.object_of(std::vector<int>{l[0], l[1]});
    const int right = two.object_of(std::vector<int>{ab, l[2]});
    const int middle = in.arrow_of(in.object_of(std::span<const int>(&ab, 1)), g.identity(x));
    h.object_map[o] = p.object_index(left, middle, right);
    if (h.object_map[o] < 0) throw UsageError("three_sectors_to_fibered: product does not match");
  }
  for (int a = 0; a < three.groupoid.arrow_count(); ++a) {
    const int o = three.groupoid.source(a);
    const int u = three.conjugator(a);
    const auto& fo = p.objects[h.object_map[o]];
    h.arrow_map[a] = p.arrow_of(h.object_map[o], two.arrow_of(fo.left, u), two.arrow_of(fo.right, u));
  }
  return h;
}

namespace {

struct Component {
  std::vector<int> objects;         // sorted
  std::vector<int> transversal;     // per object: arrow base -> object
  IsotropyGroup isotropy;
  std::vector<int> order_profile;   // sorted element orders
};

Component describe_component(const FiniteGroupoid& g, const std::vector<int>& objects) {
  Component c;
  c.objects = objects;
  const int base = objects.front();
  std::vector<int> arrow_to(g.object_count(), -1);
  for (int a : g.arrows_from(base))
    if (arrow_to[g.target(a)] < 0) arrow_to[g.target(a)] = a;
  arrow_to[base] = g.identity(base);
  for (int x : objects) c.transversal.push_back(arrow_to[x]);
  c.isotropy = isotropy_group(g, base);
  for (int i = 0; i < c.isotropy.group.order(); ++i) c.order_profile.push_back(c.isotropy.group.element_order(i));
  std::sort(c.order_profile.begin(), c.order_profile.end());
  return c;
}

}  // namespace

std::optional<GroupoidHom> find_isomorphism(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  if (a.object_count() != b.object_count() || a.arrow_count() != b.arrow_count()) return std::nullopt;
  std::vector<Component> ca, cb;
  for (const auto& o : a.orbits()) ca.push_back(describe_component(a, o));
  for (const auto& o : b.orbits()) cb.push_back(describe_component(b, o));
  if (ca.size() != cb.size()) return std::nullopt;

  GroupoidHom h{a, b, std::vector<int>(a.object_count(), -1), std::vector<int>(a.arrow_count(), -1)};
  std::vector<char> used(cb.size(), 0);
  for (const auto& c : ca) {
    bool matched = false;
    for (std::size_t j = 0; j < cb.size() && !matched; ++j) {
      const auto& d = cb[j];
      if (used[j] || d.objects.size() != c.objects.size() || d.order_profile != c.order_profile) continue;
      const auto iso = find_group_isomorphism(c.isotropy.group, d.isotropy.group);
      if (iso.empty()) continue;
      used[j] = 1;
      matched = true;
      std::vector<int> pos_in_c(a.object_count(), -1);
      for (std::size_t i = 0; i < c.objects.size(); ++i) {
        pos_in_c[c.objects[i]] = static_cast<int>(i);
        h.object_map[c.objects[i]] = d.objects[i];
      }
      std::vector<int> local(a.arrow_count(), -1);
      for (std::size_t i = 0; i < c.isotropy.arrows.size(); ++i) local[c.isotropy.arrows[i]] = static_cast<int>(i);
      for (int y : c.objects) {
        for (int arr : a.arrows_from(y)) {
          const int z = a.target(arr);
          const int ty = c.transversal[pos_in_c[y]];
          const int tz = c.transversal[pos_in_c[z]];
          const int loop = a.compose(a.compose(ty, arr), a.inverse(tz));
          const int image_loop = d.isotropy.arrows[iso[local[loop]]];
          const int sy = d.transversal[pos_in_c[y]];
          const int sz = d.transversal[pos_in_c[z]];
          h.arrow_map[arr] = b.compose(b.compose(b.inverse(sy), image_loop), sz);
        }
      }
    }
    if (!matched) return std::nullopt;
  }
  if (!is_isomorphism(h)) return std::nullopt;
  return h;
}

std::vector<SectorEntry> sector_decomposition(const FiniteGroup& g) {
  std::vector<SectorEntry> out;
  const auto classes = conjugacy_classes(g);
  for (int c = 0; c < classes.count(); ++c) {
    const Element rep = classes.representative(c);
    out.push_back({rep, centralizer(g, rep)});
  }
  return out;
}

namespace {

void simplex_recurse(const FiniteGroupoid& g, int degree, std::vector<int>& buf, int pos,
                     const std::function<void(std::span<const int>)>& visit) {
  if (pos == degree) {
    visit(buf);
    return;
  }
  for (int a : g.arrows_from(g.target(buf[pos - 1]))) {
    buf[pos] = a;
    simplex_recurse(g, degree, buf, pos + 1, visit);
  }
}

}  // namespace

void for_each_simplex(const FiniteGroupoid& g, int degree,
                      const std::function<void(std::span<const int>)>& visit) {
  if (degree < 0) throw UsageError("simplex degree must be non-negative");
  std::vector<int> buf(std::max(degree, 1));
  if (degree == 0) {
    for (int x = 0; x < g.object_count(); ++x) {
      buf[0] = x;
      visit(buf);
    }
    return;
  }
  for (int a = 0; a < g.arrow_count(); ++a) {
    buf[0] = a;
    simplex_recurse(g, degree, buf, 1, visit);
  }
}

std::vector<std::vector<int>> nerve(const FiniteGroupoid& g, int degree) {
  std::vector<std::vector<int>> out;
  for_each_simplex(g, degree, [&](std::span<const int> t) { out.emplace_back(t.begin(), t.end()); });
  return out;
}

std::int64_t nerve_size(const FiniteGroupoid& g, int degree) {
  if (degree == 0) return g.object_count();
  std::vector<std::int64_t> ending(g.object_count(), 0);  // paths ending at object
  for (int a = 0; a < g.arrow_count(); ++a) ++ending[g.target(a)];
  for (int r = 1; r < degree; ++r) {
    std::vector<std::int64_t> next(g.object_count(), 0);
    for (int a = 0; a < g.arrow_count(); ++a) next[g.target(a)] += ending[g.source(a)];
    ending = std::move(next);
  }
  std::int64_t total = 0;
  for (auto v : ending) total += v;
  return total;
}

}  // namespace orbk
