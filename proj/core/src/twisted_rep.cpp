#include "orbk/twisted_rep.hpp"

#include <map>
#include <numeric>
#include <string>

namespace orbk {

namespace {

std::string triple_text(Element g, Element h, Element k) {
  return "(" + std::to_string(g) + "," + std::to_string(h) + "," + std::to_string(k) + ")";
}

}  // namespace

TwoCocycleGroup::TwoCocycleGroup(FiniteGroup group, std::vector<RationalAngle> values)
    : group_(std::move(group)), values_(std::move(values)) {
  const auto n = static_cast<std::size_t>(group_.order());
  if (values_.size() != n * n) throw UsageError("2-cocycle table must have |G|^2 entries");
}

TwoCocycleGroup TwoCocycleGroup::from_cochain(const FiniteGroup& group, const Cochain& c) {
  if (c.degree() != 2) throw UsageError("expected a degree-2 cochain");
  if (!(c.groupoid() == point_groupoid(group))) throw UsageError("cochain does not live on the point groupoid");
  const int n = group.order();
  std::vector<RationalAngle> v(static_cast<std::size_t>(n) * n);
  for (const auto& [t, a] : c.entries()) v[static_cast<std::size_t>(t[0]) * n + t[1]] = a;
  return TwoCocycleGroup(group, std::move(v));
}

TwoCocycleGroup TwoCocycleGroup::trivial(const FiniteGroup& group) {
  const auto n = static_cast<std::size_t>(group.order());
  return TwoCocycleGroup(group, std::vector<RationalAngle>(n * n));
}

Cochain TwoCocycleGroup::to_cochain() const {
  Cochain c(point_groupoid(group_), 2);
  const int n = group_.order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (!(*this)(g, h).is_zero()) c.set({g, h}, (*this)(g, h));
  return c;
}

std::optional<std::array<Element, 3>> TwoCocycleGroup::cocycle_failure() const {
  const int n = group_.order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        const auto d = (*this)(h, k) - (*this)(group_.mul(g, h), k) + (*this)(g, group_.mul(h, k)) - (*this)(g, h);
        if (!d.is_zero()) return std::array<Element, 3>{g, h, k};
      }
  return std::nullopt;
}

bool TwoCocycleGroup::is_normalized() const {
  for (int g = 0; g < group_.order(); ++g)
    if (!(*this)(0, g).is_zero() || !(*this)(g, 0).is_zero()) return false;
  return true;
}

NormalizedCocycle normalize_cocycle(const TwoCocycleGroup& raw) {
  if (auto bad = raw.cocycle_failure())
    throw ValidationError("2-cocycle identity fails at " + triple_text((*bad)[0], (*bad)[1], (*bad)[2]));
  const FiniteGroup& g = raw.group();
  const int n = g.order();
  const RationalAngle c = raw(0, 0);
  Cochain shift(point_groupoid(g), 1);
  std::vector<RationalAngle> v(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (!c.is_zero()) shift.set({a}, c);
    // δρ(a,b) = ρ(b) - ρ(ab) + ρ(a) = c
    for (int b = 0; b < n; ++b) v[static_cast<std::size_t>(a) * n + b] = raw(a, b) - c;
  }
  return {TwoCocycleGroup(g, std::move(v)), std::move(shift)};
}

bool is_tau_regular(const TwoCocycleGroup& tau, Element g) {
  const FiniteGroup& grp = tau.group();
  for (int h = 0; h < grp.order(); ++h)
    if (grp.mul(g, h) == grp.mul(h, g) && tau(g, h) != tau(h, g)) return false;
  return true;
}

std::vector<Element> tau_regular_classes(const TwoCocycleGroup& tau) {
  if (!tau.is_normalized()) throw UsageError("tau_regular_classes needs a normalized cocycle");
  const auto classes = conjugacy_classes(tau.group());
  std::vector<Element> out;
  for (int c = 0; c < classes.count(); ++c) {
    const Element rep = classes.representative(c);
    const bool regular = is_tau_regular(tau, rep);
    for (Element x : classes.classes[c])
      if (is_tau_regular(tau, x) != regular)
        throw std::logic_error("tau-regularity differs between " + std::to_string(rep) + " and its conjugate " +
                               std::to_string(x));
    if (regular) out.push_back(rep);
  }
  return out;
}

int twisted_rank(const TwoCocycleGroup& tau) { return static_cast<int>(tau_regular_classes(tau).size()); }

TwistedAlgebra::TwistedAlgebra(TwoCocycleGroup tau) : tau_(std::move(tau)) {
  const int n = group().order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) conductor_ = std::lcm<long>(conductor_, tau_(g, h).den());
  constants_.reserve(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const auto a = tau_(g, h);
      constants_.push_back(Cyclotomic::root_of_unity(conductor_, a.num() * (conductor_ / a.den())));
    }
}

std::vector<Cyclotomic> TwistedAlgebra::multiply(const std::vector<Cyclotomic>& a,
                                                 const std::vector<Cyclotomic>& b) const {
  const FiniteGroup& g = group();
  const int n = g.order();
  std::vector<Cyclotomic> out(n);
  for (int x = 0; x < n; ++x) {
    if (a[x].is_zero()) continue;
    for (int y = 0; y < n; ++y)
      if (!b[y].is_zero()) out[g.mul(x, y)] += a[x] * b[y] * constant(x, y);
  }
  return out;
}

bool TwistedAlgebra::is_associative() const {
  const FiniteGroup& g = group();
  const int n = g.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (constant(x, y) * constant(g.mul(x, y), z) != constant(y, z) * constant(x, g.mul(y, z))) return false;
  return true;
}

int center_dimension(const TwistedAlgebra& algebra) {
  const FiniteGroup& g = algebra.group();
  const int n = g.order();
  if (n > 64) throw UsageError("center_dimension is limited to groups of order <= 64");
  // z = Σ z_h e_h. The coefficient of e_x in z e_g - e_g z is
  // c(xg^-1, g) z_{xg^-1} - c(g, g^-1 x) z_{g^-1 x}.
  using Row = std::map<int, Cyclotomic>;
  std::vector<std::optional<Row>> pivots(n);
  int rank = 0;
  auto insert = [&](Row r) {
    while (!r.empty()) {
      const int col = r.begin()->first;
      if (!pivots[col]) {
        const Cyclotomic inv = r.begin()->second.inverse();
        for (auto& [c, v] : r) v *= inv;
        pivots[col] = std::move(r);
        ++rank;
        return;
      }
      const Cyclotomic f = r.begin()->second;
      for (const auto& [c, v] : *pivots[col]) {
        auto it = r.emplace(c, Cyclotomic()).first;
        it->second -= f * v;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  };
  for (int e = 0; e < n; ++e)
    for (int x = 0; x < n; ++x) {
      const int left = g.mul(x, g.inv(e));
      const int right = g.mul(g.inv(e), x);
      Row r;
      r[left] += algebra.constant(left, e);
      r[right] -= algebra.constant(e, right);
      for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
      if (!r.empty()) insert(std::move(r));
    }
  return n - rank;
}

}  // namespace orbk
