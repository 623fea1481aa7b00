#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orbk/angle.hpp"
#include "orbk/groupoid.hpp"

namespace orbk {

/// A U(1)-valued cochain of degree k on a finite groupoid: a function on
/// composable k-tuples of arrows (on objects when k = 0). Absent entries
/// are zero.
class Cochain {
 public:
  Cochain(FiniteGroupoid groupoid, int degree);

  const FiniteGroupoid& groupoid() const noexcept { return groupoid_; }
  int degree() const noexcept { return degree_; }

  /// No composability check; absent tuples read as zero.
  RationalAngle operator()(std::span<const int> tuple) const;
  RationalAngle operator()(std::initializer_list<int> tuple) const {
    return (*this)(std::span<const int>(tuple.begin(), tuple.size()));
  }
  /// Checked access: validates length, ranges and composability.
  RationalAngle at(std::span<const int> tuple) const;
  void set(std::span<const int> tuple, RationalAngle value);
  void set(std::initializer_list<int> tuple, RationalAngle value) {
    set(std::span<const int>(tuple.begin(), tuple.size()), value);
  }
  void add(std::span<const int> tuple, RationalAngle value);

  std::size_t support_size() const noexcept { return values_.size(); }
  bool is_zero() const noexcept { return values_.empty(); }
  /// Nonzero entries in lexicographic order of their tuples.
  std::vector<std::pair<std::vector<int>, RationalAngle>> entries() const;
  /// lcm of all value denominators (1 for the zero cochain).
  std::int64_t common_denominator() const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain operator-() const;
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(std::int64_t k, const Cochain& c);
  /// Same groupoid, same degree, same values.
  bool operator==(const Cochain& o) const;

  std::uint64_t key_of(std::span<const int> tuple) const;
  std::vector<int> tuple_of(std::uint64_t key) const;

 private:
  void require_compatible(const Cochain& o) const;

  FiniteGroupoid groupoid_;
  int degree_;
  std::uint64_t radix_;
  std::unordered_map<std::uint64_t, RationalAngle> values_;
};

/// Pointwise coboundary at one (k+1)-tuple:
/// δφ(g1..g_{k+1}) = φ(g2..) + Σ (-1)^i φ(.., g_i g_{i+1}, ..) + (-1)^{k+1} φ(..g_k).
/// In degree 0 this reads φ(t(g)) - φ(s(g)).
RationalAngle delta_at(const Cochain& c, std::span<const int> tuple);
Cochain delta(const Cochain& c);

/// Inverse transgression C^{k+1}(G) -> C^k(∧G):
/// θφ(a,u1..uk) = (-1)^k φ(a,u..) + Σ_i (-1)^{i+k} φ(u1..ui, a_i, u_{i+1}..uk),
/// a_i = (u1..ui)^{-1} a (u1..ui).
RationalAngle theta_at(const Cochain& phi, const SectorGroupoid& inertia, std::span<const int> tuple);
Cochain theta(const Cochain& phi, const SectorGroupoid& inertia);

/// Homotopy C^{k+2}(G) -> C^k(G^2):
/// μφ(a,b,u1..uk) = Σ_{0<=i<=j<=k} (-1)^{i+j} φ(u1..ui, a_i, u_{i+1}..uj, b_j, u_{j+1}..uk).
RationalAngle mu_at(const Cochain& phi, const SectorGroupoid& two_sectors, std::span<const int> tuple);
Cochain mu(const Cochain& phi, const SectorGroupoid& two_sectors);

/// (-1)^k mu(φ) for φ of degree k+2. With the coboundary above this is the
/// map satisfying δh + hδ = e1*θ + e2*θ - e12*θ in every degree; mu itself
/// satisfies μδ - δμ = ... in degree 3.
Cochain chain_homotopy(const Cochain& phi, const SectorGroupoid& two_sectors);

/// (h*c)(tuple) = c(h(tuple)).
Cochain pullback(const GroupoidHom& h, const Cochain& c);

/// θ_g on [*/Z_G(g)]: the signed sum over (k,1)-shuffles inserting g,
/// θ_g φ(g1..gk) = Σ_{i=0}^{k} (-1)^{k-i} φ(g1..gi, g, g_{i+1}..gk).
/// phi lives on point_groupoid(group); the result lives on
/// point_groupoid(centralizer(group, g).as_group()), in local indices.
Cochain shuffle_theta(const Cochain& phi, const FiniteGroup& group, Element g);

/// Restriction of a cochain on ∧[*/G] to the sector of g, as a cochain on
/// [*/Z_G(g)] in local indices.
/// `inertia` must be the inertia groupoid of point_groupoid(group).
Cochain restrict_to_sector(const Cochain& c, const SectorGroupoid& inertia, const FiniteGroup& group,
                           Element g);

bool is_cocycle(const Cochain& c);
/// Zero on every tuple containing an identity arrow.
bool is_normalized(const Cochain& c);
/// First tuple where δc is nonzero.
std::optional<std::vector<int>> cocycle_failure(const Cochain& c);

/// Returns b with δb = c when one exists. Exact: Smith normal form of the
/// integer δ-matrix, solved modulo a bound on the denominators of b.
/// Throws UsageError for degree 0 or non-cocycle input.
std::optional<Cochain> coboundary_solve(const Cochain& c);
/// Whether c - d is a coboundary (both cocycles on the same groupoid).
bool cohomologous(const Cochain& c, const Cochain& d);

/// Cup product of homomorphisms G -> {0, 1/2} on [*/G].
Cochain cup_one_cochains(const std::vector<Cochain>& factors);

/// β(g,h) = τ(g,h) - τ(h,g) for a 2-cocycle on [*/G], G abelian.
std::vector<std::vector<RationalAngle>> commutator_pairing(const Cochain& tau);

/// Uniform values in (1/denominator)Z/Z on every composable tuple.
Cochain random_cochain(const FiniteGroupoid& g, int degree, int denominator, std::mt19937_64& rng);

/// The generator of H^3(Z/n, U(1)): (a,b,c) -> a (b + c - [b+c]_n) / n^2
/// with elements read as residues.
Cochain cyclic_three_cocycle(int n);

/// A random 3-cocycle on [*/G]: pulled-back cyclic generators along random
/// homomorphisms to cyclic groups, lifted mod-2 cup classes when G is
/// elementary abelian of exponent 2, plus a random coboundary. The result
/// is normalized: it vanishes when any argument is the identity.
Cochain random_three_cocycle(const FiniteGroup& g, std::mt19937_64& rng);

/// Text format: `degree k` then one line `a1 .. ak p/q` per nonzero entry.
void write_cochain(std::ostream& os, const Cochain& c);
Cochain read_cochain(std::istream& is, const FiniteGroupoid& g);

}  // namespace orbk
