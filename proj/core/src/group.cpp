#include "orbk/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace orbk {

FiniteGroup::FiniteGroup() {
  auto impl = std::make_shared<Impl>();
  impl->order = 1;
  impl->mult = {0};
  impl->inv = {0};
  impl->labels = {"e"};
  impl->abelian = true;
  impl_ = std::move(impl);
}

namespace {

std::string triple(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels, int order_cap) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("group table is empty");
  if (n > order_cap) {
    throw ValidationError("group order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(order_cap));
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      throw ValidationError("row " + std::to_string(a) + " has wrong length");
    }
    for (int b = 0; b < n; ++b) {
      if (table[a][b] < 0 || table[a][b] >= n) {
        throw ValidationError("entry (" + std::to_string(a) + "," + std::to_string(b) +
                              ") out of range");
      }
    }
  }
  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = table[cand][g] == g && table[g][cand] == g;
    if (ok) e = cand;
  }
  if (e < 0) throw ValidationError("no identity element");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw ValidationError("associativity fails at " + triple(a, b, c));
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = table[a][b] == e && table[b][a] == e;
    if (!found) throw ValidationError("element " + std::to_string(a) + " has no inverse");
  }

  // Relabel so the identity sits at index 0.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[e]);  // perm: old index -> new index (an involution)
  if (labels.empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  }
  if (static_cast<int>(labels.size()) != n) throw ValidationError("label count mismatch");

  auto impl = std::make_shared<Impl>();
  impl->order = n;
  impl->mult.assign(static_cast<std::size_t>(n) * n, 0);
  impl->inv.assign(n, 0);
  impl->labels.resize(n);
  for (int a = 0; a < n; ++a) {
    impl->labels[perm[a]] = labels[a];
    for (int b = 0; b < n; ++b) {
      impl->mult[static_cast<std::size_t>(perm[a]) * n + perm[b]] = perm[table[a][b]];
    }
  }
  impl->abelian = true;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = impl->mult[static_cast<std::size_t>(a) * n + b];
      if (ab == 0) impl->inv[a] = b;
      if (ab != impl->mult[static_cast<std::size_t>(b) * n + a]) impl->abelian = false;
    }
  }
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_table(std::move(t), {}, std::max(n, kDefaultOrderCap));
}

FiniteGroup FiniteGroup::elementary_abelian(int p, int rank) {
  if (p < 2 || rank < 0) throw ValidationError("elemab needs p >= 2 and rank >= 0");
  int n = 1;
  for (int i = 0; i < rank; ++i) {
    n *= p;
    if (n > (1 << 16)) throw ValidationError("elemab order too large");
  }
  auto digits = [&](int x) {
    std::vector<int> d(rank);
    for (int i = 0; i < rank; ++i, x /= p) d[i] = x % p;
    return d;
  };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    const auto da = digits(a);
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < rank; ++i) os << (i ? "," : "") << da[i];
    os << ")";
    labels[a] = os.str();
    for (int b = 0; b < n; ++b) {
      const auto db = digits(b);
      int v = 0;
      for (int i = rank - 1; i >= 0; --i) v = v * p + (da[i] + db[i]) % p;
      t[a][b] = v;
    }
  }
  return from_table(std::move(t), std::move(labels), std::max(n, kDefaultOrderCap));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                        int order_cap) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  if (n > order_cap) {
    throw ValidationError("group order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(order_cap));
  }
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    labels[x] = "(" + a.label(x / nb) + "," + b.label(x % nb) + ")";
    for (int y = 0; y < n; ++y) {
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  return from_table(std::move(t), std::move(labels), order_cap);
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 4) throw ValidationError("symmetric(n) supports 1 <= n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    for (int i = 0; i < n; ++i) labels[a] += static_cast<char>('1' + perms[a][i]);
    for (int b = 0; b < m; ++b) {
      // (ab)(i) = b(a(i)): apply the left factor first.
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[b][perms[a][i]];
      t[a][b] = index.at(c);
    }
  }
  return from_table(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw ValidationError("dihedral n must be positive");
  const int m = 2 * n;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int x = 0; x < m; ++x) {
    const int f = x / n, k = x % n;
    labels[x] = "r" + std::to_string(k) + (f ? "s" : "");
    for (int y = 0; y < m; ++y) {
      const int g = y / n, l = y % n;
      const int rot = ((k + (f ? -l : l)) % n + n) % n;
      t[x][y] = ((f + g) % 2) * n + rot;
    }
  }
  return from_table(std::move(t), std::move(labels), std::max(m, kDefaultOrderCap));
}

int FiniteGroup::element_order(Element g) const {
  int k = 1;
  for (Element x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (Element g = 0; g < order(); ++g) e = std::lcm(e, element_order(g));
  return e;
}

bool FiniteGroup::operator==(const FiniteGroup& other) const noexcept {
  return impl_ == other.impl_ ||
         (impl_->order == other.impl_->order && impl_->mult == other.impl_->mult);
}

bool Subgroup::contains(Element g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

int Subgroup::local_index(Element g) const {
  auto it = std::lower_bound(members.begin(), members.end(), g);
  if (it == members.end() || *it != g) return -1;
  return static_cast<int>(it - members.begin());
}

FiniteGroup Subgroup::as_group() const {
  const int n = order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = parent.label(members[i]);
    for (int j = 0; j < n; ++j) t[i][j] = local_index(parent.mul(members[i], members[j]));
  }
  return FiniteGroup::from_table(std::move(t), std::move(labels), std::max(n, 1));
}

Subgroup centralizer(const FiniteGroup& g, Element x) {
  Subgroup s{g, {}};
  for (Element h = 0; h < g.order(); ++h) {
    if (g.mul(h, x) == g.mul(x, h)) s.members.push_back(h);
  }
  return s;
}

ConjugacyPartition conjugacy_classes(const FiniteGroup& g) {
  ConjugacyPartition p;
  p.class_of.assign(g.order(), -1);
  for (Element x = 0; x < g.order(); ++x) {
    if (p.class_of[x] >= 0) continue;
    std::set<Element> cls;
    for (Element u = 0; u < g.order(); ++u) cls.insert(g.conj(x, u));
    const int idx = p.count();
    for (Element y : cls) p.class_of[y] = idx;
    p.classes.emplace_back(cls.begin(), cls.end());
  }
  return p;
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> frontier{0};
  in[0] = 1;
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier) {
      for (Element s : gens) {
        const Element y = g.mul(x, s);
        if (!in[y]) {
          in[y] = 1;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  Subgroup s{g, {}};
  for (Element x = 0; x < g.order(); ++x)
    if (in[x]) s.members.push_back(x);
  return s;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Element>> seen;
  std::vector<std::vector<Element>> queue;
  auto visit = [&](std::vector<Element> m) {
    if (seen.insert(m).second) queue.push_back(std::move(m));
  };
  visit({0});
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::vector<Element> base = queue[i];
    std::vector<char> in(g.order(), 0);
    for (Element x : base) in[x] = 1;
    for (Element x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      std::vector<Element> gens = base;
      gens.push_back(x);
      visit(subgroup_generated(g, gens).members);
    }
  }
  std::vector<Subgroup> out;
  for (const auto& m : seen) out.push_back(Subgroup{g, m});
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order() > b.order(); });
  return out;
}

std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> gens;
  Subgroup cur = subgroup_generated(g, gens);
  for (Element x = 1; x < g.order() && cur.order() < g.order(); ++x) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = subgroup_generated(g, gens);
  }
  return gens;
}

namespace {

// Extends an assignment on generators along words; returns false on conflict
// or if the result is not a homomorphism.
template <class Combine, class Equal>
bool extend_on_generators(const FiniteGroup& g, std::span<const Element> gens,
                          std::span<const int> gen_values, int identity_value,
                          Combine combine, Equal equal, std::vector<int>& values) {
  values.assign(g.order(), -1);
  values[0] = identity_value;
  std::vector<Element> frontier{0};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Element y = g.mul(x, gens[i]);
        const int v = combine(values[x], gen_values[i]);
        if (values[y] < 0) {
          values[y] = v;
          next.push_back(y);
        } else if (!equal(values[y], v)) {
          return false;
        }
      }
    }
    frontier = std::move(next);
  }
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (!equal(values[g.mul(a, b)], combine(values[a], values[b]))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> homomorphisms_to_cyclic(const FiniteGroup& g, int denominator) {
  if (denominator < 1) throw UsageError("denominator must be positive");
  const auto gens = greedy_generators(g);
  std::vector<std::vector<int>> out;
  std::vector<int> assign(gens.size(), 0);
  auto combine = [denominator](int a, int b) { return (a + b) % denominator; };
  auto equal = [](int a, int b) { return a == b; };
  while (true) {
    std::vector<int> values;
    if (extend_on_generators(g, gens, assign, 0, combine, equal, values)) {
      out.push_back(std::move(values));
    }
    std::size_t i = 0;
    while (i < assign.size() && ++assign[i] == denominator) assign[i++] = 0;
    if (i == assign.size()) break;
  }
  return out;
}

std::vector<Element> find_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return {};
  std::vector<int> oa(a.order()), ob(b.order());
  for (Element x = 0; x < a.order(); ++x) oa[x] = a.element_order(x);
  for (Element x = 0; x < b.order(); ++x) ob[x] = b.element_order(x);
  {
    auto sa = oa, sb = ob;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return {};
  }
  const auto gens = greedy_generators(a);
  std::vector<int> images(gens.size(), 0);
  std::vector<Element> result;

  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == gens.size()) {
      std::vector<int> values;
      auto combine = [&b](int x, int y) { return b.mul(x, y); };
      auto equal = [](int x, int y) { return x == y; };
      if (!extend_on_generators(a, gens, images, 0, combine, equal, values)) return false;
      std::vector<char> hit(b.order(), 0);
      for (int v : values) {
        if (hit[v]) return false;
        hit[v] = 1;
      }
      result = std::move(values);
      return true;
    }
    for (Element y = 0; y < b.order(); ++y) {
      if (ob[y] != oa[gens[i]]) continue;
      images[i] = y;
      if (search(i + 1)) return true;
    }
    return false;
  };
  search(0);
  return result;
}

std::vector<std::vector<int>> f2_coordinates(const FiniteGroup& g) {
  if (!g.is_abelian()) throw UsageError("f2_coordinates: group is not abelian");
  for (Element x = 0; x < g.order(); ++x) {
    if (g.mul(x, x) != 0) throw UsageError("f2_coordinates: group is not elementary abelian 2-group");
  }
  const auto gens = greedy_generators(g);
  const std::size_t r = gens.size();
  std::vector<std::vector<int>> coords(g.order());
  coords[0].assign(r, 0);
  std::vector<Element> frontier{0};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier) {
      for (std::size_t i = 0; i < r; ++i) {
        const Element y = g.mul(x, gens[i]);
        if (coords[y].empty()) {
          coords[y] = coords[x];
          coords[y][i] ^= 1;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return coords;
}

namespace {

struct SpecParser {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  int cap;

  std::string next() {
    if (pos >= tokens.size()) throw ValidationError("group spec ended unexpectedly");
    return tokens[pos++];
  }
  int next_int() {
    const std::string t = next();
    try {
      std::size_t used = 0;
      const int v = std::stoi(t, &used);
      if (used != t.size()) throw ValidationError("expected integer, got '" + t + "'");
      return v;
    } catch (const std::invalid_argument&) {
      throw ValidationError("expected integer, got '" + t + "'");
    } catch (const std::out_of_range&) {
      throw ValidationError("integer out of range: '" + t + "'");
    }
  }
  FiniteGroup parse() {
    const std::string kind = next();
    FiniteGroup g = [&] {
      if (kind == "cyclic") return FiniteGroup::cyclic(next_int());
      if (kind == "elemab") {
        const int p = next_int();
        return FiniteGroup::elementary_abelian(p, next_int());
      }
      if (kind == "symmetric") return FiniteGroup::symmetric(next_int());
      if (kind == "dihedral") return FiniteGroup::dihedral(next_int());
      if (kind == "product") {
        FiniteGroup a = parse();
        FiniteGroup b = parse();
        return FiniteGroup::direct_product(a, b, cap);
      }
      throw ValidationError("unknown group kind '" + kind + "'");
    }();
    if (g.order() > cap) {
      throw ValidationError("group order " + std::to_string(g.order()) + " exceeds cap " +
                            std::to_string(cap));
    }
    return g;
  }
};

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view text, int order_cap) {
  std::string s(text);
  auto tokens = split_ws(s);
  if (tokens.empty()) throw ValidationError("empty group spec");
  if (tokens[0] == "order") {
    SpecParser p{tokens, 1, order_cap};
    const int n = p.next_int();
    if (n < 1) throw ValidationError("order must be positive");
    if (n > order_cap) {
      throw ValidationError("group order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(order_cap));
    }
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (auto& row : t)
      for (auto& v : row) v = p.next_int();
    if (p.pos != tokens.size()) throw ValidationError("trailing tokens after table");
    return FiniteGroup::from_table(std::move(t), {}, order_cap);
  }
  // Command-line shorthand: `A*B` is `product A B`; ':' and ',' separate fields.
  std::vector<std::string> pieces;
  {
    std::string cur;
    for (char c : s) {
      if (c == '*') {
        pieces.push_back(cur);
        cur.clear();
      } else {
        cur += (c == ':' || c == ',') ? ' ' : c;
      }
    }
    pieces.push_back(cur);
  }
  std::vector<std::string> all;
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) all.push_back("product");
  for (const auto& piece : pieces) {
    auto t = split_ws(piece);
    if (t.empty()) throw ValidationError("empty factor in group spec");
    all.insert(all.end(), t.begin(), t.end());
  }
  SpecParser p{all, 0, order_cap};
  FiniteGroup g = p.parse();
  if (p.pos != all.size()) throw ValidationError("trailing tokens in group spec");
  return g;
}

}  // namespace orbk
