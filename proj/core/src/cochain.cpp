#include "orbk/cochain.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "orbk/snf.hpp"

namespace orbk {

namespace {

RationalAngle signed_angle(int sign, const RationalAngle& a) { return sign > 0 ? a : -a; }

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

void require_degree(const Cochain& c, int min_degree, const char* what) {
  if (c.degree() < min_degree) {
    throw UsageError(std::string(what) + ": cochain degree must be at least " +
                     std::to_string(min_degree));
  }
}

void require_same_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b, const char* what) {
  if (!(a == b)) throw UsageError(std::string(what) + ": cochain lives on a different groupoid");
}

// The loop-and-conjugator data of a path in a sector groupoid: loops[i][j]
// is the j-th loop at the i-th object along the path, conj[i] the i-th
// conjugator.
struct SectorPath {
  std::vector<std::vector<int>> loops;
  std::vector<int> conj;
};

SectorPath decode_path(const SectorGroupoid& s, std::span<const int> tuple, int k) {
  SectorPath p;
  if (k == 0) {
    const auto l = s.loops(tuple[0]);
    p.loops.emplace_back(l.begin(), l.end());
    return p;
  }
  const auto& g = s.groupoid;
  auto push = [&](int obj) {
    const auto l = s.loops(obj);
    p.loops.emplace_back(l.begin(), l.end());
  };
  push(g.source(tuple[0]));
  for (int i = 0; i < k; ++i) {
    p.conj.push_back(s.conjugator(tuple[i]));
    push(g.target(tuple[i]));
  }
  return p;
}

}  // namespace

Cochain::Cochain(FiniteGroupoid groupoid, int degree) : groupoid_(std::move(groupoid)), degree_(degree) {
  if (degree < 0) throw UsageError("cochain degree must be nonnegative");
  radix_ = static_cast<std::uint64_t>(degree == 0 ? groupoid_.object_count() : groupoid_.arrow_count());
  if (radix_ == 0) radix_ = 1;
  unsigned __int128 span = 1;
  for (int i = 0; i < degree; ++i) {
    span *= radix_;
    if (span > (static_cast<unsigned __int128>(1) << 63)) {
      throw UsageError("cochain of degree " + std::to_string(degree) + " is too large to index");
    }
  }
}

std::uint64_t Cochain::key_of(std::span<const int> tuple) const {
  std::uint64_t key = 0;
  for (int a : tuple) key = key * radix_ + static_cast<std::uint64_t>(a);
  return key;
}

std::vector<int> Cochain::tuple_of(std::uint64_t key) const {
  const int len = std::max(degree_, 1);
  std::vector<int> t(len);
  for (int i = len - 1; i >= 0; --i) {
    t[i] = static_cast<int>(key % radix_);
    key /= radix_;
  }
  return t;
}

RationalAngle Cochain::operator()(std::span<const int> tuple) const {
  const auto it = values_.find(key_of(tuple));
  return it == values_.end() ? RationalAngle() : it->second;
}

RationalAngle Cochain::at(std::span<const int> tuple) const {
  const int len = std::max(degree_, 1);
  if (static_cast<int>(tuple.size()) != len) {
    throw UsageError("cochain access: expected a tuple of length " + std::to_string(len));
  }
  const int bound = degree_ == 0 ? groupoid_.object_count() : groupoid_.arrow_count();
  for (int a : tuple)
    if (a < 0 || a >= bound) throw UsageError("cochain access: index out of range");
  for (std::size_t i = 0; degree_ > 0 && i + 1 < tuple.size(); ++i) {
    if (!groupoid_.composable(tuple[i], tuple[i + 1])) {
      throw UsageError("cochain access: tuple is not composable at position " + std::to_string(i));
    }
  }
  return (*this)(tuple);
}

void Cochain::set(std::span<const int> tuple, RationalAngle value) {
  const auto key = key_of(tuple);
  if (value.is_zero()) {
    values_.erase(key);
  } else {
    values_[key] = value;
  }
}

void Cochain::add(std::span<const int> tuple, RationalAngle value) {
  if (value.is_zero()) return;
  const auto key = key_of(tuple);
  auto it = values_.find(key);
  if (it == values_.end()) {
    values_.emplace(key, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) values_.erase(it);
}

std::vector<std::pair<std::vector<int>, RationalAngle>> Cochain::entries() const {
  std::vector<std::pair<std::uint64_t, RationalAngle>> keyed(values_.begin(), values_.end());
  // Mixed radix keys sort like their tuples.
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::vector<int>, RationalAngle>> out;
  out.reserve(keyed.size());
  for (const auto& [k, v] : keyed) out.emplace_back(tuple_of(k), v);
  return out;
}

std::int64_t Cochain::common_denominator() const {
  std::int64_t l = 1;
  for (const auto& [k, v] : values_) l = std::lcm(l, v.den());
  return l;
}

void Cochain::require_compatible(const Cochain& o) const {
  if (degree_ != o.degree_) throw UsageError("cochain arithmetic: degrees differ");
  require_same_groupoid(groupoid_, o.groupoid_, "cochain arithmetic");
}

Cochain& Cochain::operator+=(const Cochain& o) {
  require_compatible(o);
  for (const auto& [k, v] : o.values_) {
    auto it = values_.find(k);
    if (it == values_.end()) {
      values_.emplace(k, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) values_.erase(it);
    }
  }
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) { return *this += -o; }

Cochain Cochain::operator-() const {
  Cochain out = *this;
  for (auto& [k, v] : out.values_) v = -v;
  return out;
}

Cochain operator*(std::int64_t k, const Cochain& c) {
  Cochain out(c.groupoid_, c.degree_);
  for (const auto& [key, v] : c.values_) {
    const RationalAngle w = k * v;
    if (!w.is_zero()) out.values_.emplace(key, w);
  }
  return out;
}

bool Cochain::operator==(const Cochain& o) const {
  return degree_ == o.degree_ && groupoid_ == o.groupoid_ && values_ == o.values_;
}

RationalAngle delta_at(const Cochain& c, std::span<const int> tuple) {
  const auto& g = c.groupoid();
  const int k = c.degree();
  if (k == 0) {
    const int t = g.target(tuple[0]), s = g.source(tuple[0]);
    return c(std::span<const int>(&t, 1)) - c(std::span<const int>(&s, 1));
  }
  RationalAngle acc = c(tuple.subspan(1));
  std::vector<int> buf(k);
  for (int i = 1; i <= k; ++i) {
    int w = 0;
    for (int j = 0; j < k + 1; ++j) {
      if (j == i - 1) {
        buf[w++] = g.compose(tuple[j], tuple[j + 1]);
        ++j;
      } else {
        buf[w++] = tuple[j];
      }
    }
    acc += signed_angle(parity_sign(i), c(buf));
  }
  acc += signed_angle(parity_sign(k + 1), c(tuple.first(k)));
  return acc;
}

Cochain delta(const Cochain& c) {
  Cochain out(c.groupoid(), c.degree() + 1);
  for_each_simplex(c.groupoid(), c.degree() + 1,
                   [&](std::span<const int> t) { out.set(t, delta_at(c, t)); });
  return out;
}

RationalAngle theta_at(const Cochain& phi, const SectorGroupoid& inertia, std::span<const int> tuple) {
  const int k = phi.degree() - 1;
  const SectorPath p = decode_path(inertia, tuple, k);
  std::vector<int> buf(k + 1);
  buf[0] = p.loops[0][0];
  for (int i = 0; i < k; ++i) buf[i + 1] = p.conj[i];
  RationalAngle acc = signed_angle(parity_sign(k), phi(buf));
  for (int i = 1; i <= k; ++i) {
    int w = 0;
    for (int j = 0; j < i; ++j) buf[w++] = p.conj[j];
    buf[w++] = p.loops[i][0];
    for (int j = i; j < k; ++j) buf[w++] = p.conj[j];
    acc += signed_angle(parity_sign(i + k), phi(buf));
  }
  return acc;
}

Cochain theta(const Cochain& phi, const SectorGroupoid& inertia) {
  require_degree(phi, 1, "theta");
  if (inertia.k != 1) throw UsageError("theta: expected the inertia groupoid");
  require_same_groupoid(phi.groupoid(), inertia.base, "theta");
  Cochain out(inertia.groupoid, phi.degree() - 1);
  for_each_simplex(inertia.groupoid, out.degree(),
                   [&](std::span<const int> t) { out.set(t, theta_at(phi, inertia, t)); });
  return out;
}

RationalAngle mu_at(const Cochain& phi, const SectorGroupoid& two, std::span<const int> tuple) {
  const int k = phi.degree() - 2;
  const SectorPath p = decode_path(two, tuple, k);
  std::vector<int> buf(k + 2);
  RationalAngle acc;
  for (int i = 0; i <= k; ++i) {
    for (int j = i; j <= k; ++j) {
      int w = 0;
      for (int m = 0; m < i; ++m) buf[w++] = p.conj[m];
      buf[w++] = p.loops[i][0];
      for (int m = i; m < j; ++m) buf[w++] = p.conj[m];
      buf[w++] = p.loops[j][1];
      for (int m = j; m < k; ++m) buf[w++] = p.conj[m];
      acc += signed_angle(parity_sign(i + j), phi(buf));
    }
  }
  return acc;
}

Cochain mu(const Cochain& phi, const SectorGroupoid& two) {
  require_degree(phi, 2, "mu");
  if (two.k != 2) throw UsageError("mu: expected the 2-sector groupoid");
  require_same_groupoid(phi.groupoid(), two.base, "mu");
  Cochain out(two.groupoid, phi.degree() - 2);
  for_each_simplex(two.groupoid, out.degree(),
                   [&](std::span<const int> t) { out.set(t, mu_at(phi, two, t)); });
  return out;
}

Cochain chain_homotopy(const Cochain& phi, const SectorGroupoid& two) {
  Cochain m = mu(phi, two);
  return (m.degree() % 2 == 0) ? m : -m;
}

Cochain pullback(const GroupoidHom& h, const Cochain& c) {
  require_same_groupoid(h.target, c.groupoid(), "pullback");
  Cochain out(h.source, c.degree());
  const auto& map = c.degree() == 0 ? h.object_map : h.arrow_map;
  std::vector<int> buf(std::max(c.degree(), 1));
  for_each_simplex(h.source, c.degree(), [&](std::span<const int> t) {
    for (std::size_t i = 0; i < t.size(); ++i) buf[i] = map[t[i]];
    out.set(t, c(buf));
  });
  return out;
}

Cochain shuffle_theta(const Cochain& phi, const FiniteGroup& group, Element g) {
  require_degree(phi, 1, "shuffle_theta");
  require_same_groupoid(phi.groupoid(), point_groupoid(group), "shuffle_theta");
  const Subgroup z = centralizer(group, g);
  const int k = phi.degree() - 1;
  Cochain out(point_groupoid(z.as_group()), k);
  std::vector<int> buf(k + 1);
  for_each_simplex(out.groupoid(), k, [&](std::span<const int> t) {
    RationalAngle acc;
    for (int i = 0; i <= k; ++i) {
      int w = 0;
      for (int j = 0; j < i; ++j) buf[w++] = z.members[t[j]];
      buf[w++] = g;
      for (int j = i; j < k; ++j) buf[w++] = z.members[t[j]];
      acc += signed_angle(parity_sign(k - i), phi(buf));
    }
    out.set(t, acc);
  });
  return out;
}

Cochain restrict_to_sector(const Cochain& c, const SectorGroupoid& inertia, const FiniteGroup& group,
                           Element g) {
  if (inertia.k != 1) throw UsageError("restrict_to_sector: expected the inertia groupoid");
  require_same_groupoid(inertia.base, point_groupoid(group), "restrict_to_sector");
  require_same_groupoid(c.groupoid(), inertia.groupoid, "restrict_to_sector");
  const Subgroup z = centralizer(group, g);
  const int obj = inertia.object_of(std::span<const int>(&g, 1));
  const int k = c.degree();
  Cochain out(point_groupoid(z.as_group()), k);
  if (k == 0) {
    const int zero = 0;
    out.set(std::span<const int>(&zero, 1), c(std::span<const int>(&obj, 1)));
    return out;
  }
  std::vector<int> buf(k);
  for_each_simplex(out.groupoid(), k, [&](std::span<const int> t) {
    for (int i = 0; i < k; ++i) buf[i] = inertia.arrow_of(obj, z.members[t[i]]);
    out.set(t, c(buf));
  });
  return out;
}

std::optional<std::vector<int>> cocycle_failure(const Cochain& c) {
  std::optional<std::vector<int>> witness;
  for_each_simplex(c.groupoid(), c.degree() + 1, [&](std::span<const int> t) {
    if (!witness && !delta_at(c, t).is_zero()) witness.emplace(t.begin(), t.end());
  });
  return witness;
}

bool is_cocycle(const Cochain& c) { return !cocycle_failure(c).has_value(); }

bool is_normalized(const Cochain& c) {
  const FiniteGroupoid& g = c.groupoid();
  for (const auto& [t, v] : c.entries())
    for (int a : t)
      if (c.degree() > 0 && a == g.identity(g.source(a))) return false;
  return true;
}

std::optional<Cochain> coboundary_solve(const Cochain& c) {
  require_degree(c, 1, "coboundary_solve");
  if (auto w = cocycle_failure(c)) {
    std::string s;
    for (int a : *w) s += (s.empty() ? "" : ",") + std::to_string(a);
    throw UsageError("coboundary_solve: input is not a cocycle (delta nonzero at " + s + ")");
  }
  const auto& g = c.groupoid();
  const int k = c.degree();
  Cochain out(g, k - 1);
  if (c.is_zero()) return out;

  const auto unknowns = nerve(g, k - 1);
  const auto equations = nerve(g, k);
  const auto cols = static_cast<std::int64_t>(unknowns.size());
  const auto rows = static_cast<std::int64_t>(equations.size());
  if (rows * cols > 50'000'000) {
    throw UsageError("coboundary_solve: system of " + std::to_string(rows) + "x" +
                     std::to_string(cols) + " is too large");
  }
  std::unordered_map<std::uint64_t, int> column;
  column.reserve(unknowns.size());
  for (int i = 0; i < static_cast<int>(cols); ++i) column.emplace(out.key_of(unknowns[i]), i);

  // Denominators of a primitive can be pushed to N (the values' lcm) times
  // the exponent bound of the isotropy groups; degree-0 primitives need only N.
  std::int64_t modulus = c.common_denominator();
  if (k >= 2) {
    std::int64_t l = 1;
    for (int x = 0; x < g.object_count(); ++x)
      l = std::lcm(l, static_cast<std::int64_t>(g.isotropy(x).size()));
    modulus *= l;
  }

  IntMatrix d(static_cast<int>(rows), static_cast<int>(cols));
  std::vector<mpz_class> rhs(rows);
  std::vector<int> buf(std::max(k - 1, 1));
  for (int r = 0; r < static_cast<int>(rows); ++r) {
    const auto& t = equations[r];
    auto add_face = [&](int sign, std::span<const int> face) {
      d(r, column.at(out.key_of(face))) += sign;
    };
    if (k == 1) {
      const int tt = g.target(t[0]), ss = g.source(t[0]);
      add_face(1, std::span<const int>(&tt, 1));
      add_face(-1, std::span<const int>(&ss, 1));
    } else {
      add_face(1, std::span<const int>(t).subspan(1));
      for (int i = 1; i < k; ++i) {
        int w = 0;
        for (int j = 0; j < k; ++j) {
          if (j == i - 1) {
            buf[w++] = g.compose(t[j], t[j + 1]);
            ++j;
          } else {
            buf[w++] = t[j];
          }
        }
        add_face(parity_sign(i), buf);
      }
      add_face(parity_sign(k), std::span<const int>(t).first(k - 1));
    }
    const RationalAngle v = c(t);
    rhs[r] = mpz_class(static_cast<long>(v.num() * (modulus / v.den())));
  }
  const auto x = solve_mod(d, rhs, mpz_class(static_cast<long>(modulus)));
  if (!x) return std::nullopt;
  for (int i = 0; i < static_cast<int>(cols); ++i) {
    out.set(unknowns[i], RationalAngle((*x)[i].get_si(), modulus));
  }
  return out;
}

bool cohomologous(const Cochain& c, const Cochain& d) { return coboundary_solve(c - d).has_value(); }

Cochain cup_one_cochains(const std::vector<Cochain>& factors) {
  if (factors.empty()) throw UsageError("cup_one_cochains: need at least one factor");
  const auto& g = factors.front().groupoid();
  const RationalAngle half(1, 2);
  for (const auto& f : factors) {
    if (f.degree() != 1) throw UsageError("cup_one_cochains: factors must have degree 1");
    require_same_groupoid(f.groupoid(), g, "cup_one_cochains");
    for (int a = 0; a < g.arrow_count(); ++a) {
      const RationalAngle v = f({a});
      if (!v.is_zero() && v != half) {
        throw ValidationError("cup_one_cochains: value " + v.to_string() + " at arrow " +
                              std::to_string(a) + " is not in {0, 1/2}");
      }
    }
    if (auto w = cocycle_failure(f)) {
      throw ValidationError("cup_one_cochains: factor is not a homomorphism at (" +
                            std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + ")");
    }
  }
  const int d = static_cast<int>(factors.size());
  Cochain out(g, d);
  for_each_simplex(g, d, [&](std::span<const int> t) {
    for (int i = 0; i < d; ++i)
      if (factors[i]({t[i]}).is_zero()) return;
    out.set(t, half);
  });
  return out;
}

std::vector<std::vector<RationalAngle>> commutator_pairing(const Cochain& tau) {
  if (tau.degree() != 2) throw UsageError("commutator_pairing: expected a 2-cochain");
  const auto& g = tau.groupoid();
  if (g.object_count() != 1) throw UsageError("commutator_pairing: expected a one-object groupoid");
  const int n = g.arrow_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.compose(a, b) != g.compose(b, a)) {
        throw UsageError("commutator_pairing: group is not abelian");
      }
  std::vector<std::vector<RationalAngle>> beta(n, std::vector<RationalAngle>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) beta[a][b] = tau({a, b}) - tau({b, a});
  return beta;
}

Cochain random_cochain(const FiniteGroupoid& g, int degree, int denominator, std::mt19937_64& rng) {
  if (denominator < 1) throw UsageError("random_cochain: denominator must be positive");
  Cochain out(g, degree);
  std::uniform_int_distribution<int> dist(0, denominator - 1);
  for_each_simplex(g, degree, [&](std::span<const int> t) { out.set(t, RationalAngle(dist(rng), denominator)); });
  return out;
}

Cochain cyclic_three_cocycle(int n) {
  const FiniteGroup c = FiniteGroup::cyclic(n);
  Cochain out(point_groupoid(c), 3);
  for (int a = 1; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e = n - b; e < n; ++e) out.set({a, b, e}, RationalAngle(a, n));
  return out;
}

Cochain random_three_cocycle(const FiniteGroup& g, std::mt19937_64& rng) {
  const FiniteGroupoid pg = point_groupoid(g);
  Cochain out(pg, 3);
  const int exponent = g.exponent();
  for (int d = 2; d <= exponent; ++d) {
    if (exponent % d != 0) continue;
    const auto homs = homomorphisms_to_cyclic(g, d);
    std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
    std::uniform_int_distribution<int> mult(0, d - 1);
    const auto& hom = homs[pick(rng)];
    const FiniteGroupoid target = point_groupoid(FiniteGroup::cyclic(d));
    GroupoidHom h{pg, target, {0}, hom};
    out += mult(rng) * pullback(h, cyclic_three_cocycle(d));
  }
  bool exponent_two = g.order() > 1 && exponent == 2 && g.is_abelian();
  if (exponent_two) {
    const auto coords = f2_coordinates(g);
    const int rank = static_cast<int>(coords.front().size());
    std::vector<Cochain> duals;
    for (int i = 0; i < rank; ++i) {
      Cochain f(pg, 1);
      for (int x = 0; x < g.order(); ++x)
        if (coords[x][i]) f.set({x}, RationalAngle(1, 2));
      duals.push_back(std::move(f));
    }
    std::uniform_int_distribution<int> var(0, rank - 1), coin(0, 1);
    for (int m = 0; m < 2; ++m) {
      if (!coin(rng)) continue;
      out += cup_one_cochains({duals[var(rng)], duals[var(rng)], duals[var(rng)]});
    }
  }
  // The coboundary part is built from a normalized 2-cochain so the result
  // vanishes whenever an argument is the identity.
  const int den = std::max(2, exponent);
  Cochain beta(pg, 2);
  for (const auto& [t, v] : random_cochain(pg, 2, den, rng).entries())
    if (t[0] != 0 && t[1] != 0) beta.set(t, v);
  out += delta(beta);
  return out;
}

void write_cochain(std::ostream& os, const Cochain& c) {
  os << "degree " << c.degree() << '\n';
  for (const auto& [t, v] : c.entries()) {
    for (int a : t) os << a << ' ';
    os << v << '\n';
  }
}

Cochain read_cochain(std::istream& is, const FiniteGroupoid& g) {
  std::string line;
  int degree = -1;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    std::string word;
    ss >> word >> degree;
    if (word != "degree" || ss.fail() || degree < 0) {
      throw ValidationError("cochain file: line " + std::to_string(lineno) + ": expected 'degree k'");
    }
    break;
  }
  if (degree < 0) throw ValidationError("cochain file: missing 'degree k' header");
  Cochain out(g, degree);
  const int len = std::max(degree, 1);
  std::vector<int> t(len);
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    for (int i = 0; i < len; ++i) ss >> t[i];
    std::string value, extra;
    ss >> value;
    if (ss.fail() || value.empty() || (ss >> extra)) {
      throw ValidationError("cochain file: line " + std::to_string(lineno) + ": expected " +
                            std::to_string(len) + " indices and a value");
    }
    RationalAngle v;
    try {
      v = RationalAngle::parse(value);
      (void)out.at(t);
    } catch (const UsageError& e) {
      throw ValidationError("cochain file: line " + std::to_string(lineno) + ": " + e.what());
    }
    out.add(t, v);
  }
  return out;
}

}  // namespace orbk
