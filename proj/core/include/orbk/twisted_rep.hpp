#pragma once

#include <array>
#include <optional>
#include <vector>

#include "orbk/angle.hpp"
#include "orbk/cochain.hpp"
#include "orbk/cyclotomic.hpp"
#include "orbk/group.hpp"

namespace orbk {

/// A U(1)-valued 2-cochain on a group stored as a dense |G| x |G| table.
/// The cocycle identity is not enforced here; see normalize_cocycle.
class TwoCocycleGroup {
 public:
  TwoCocycleGroup(FiniteGroup group, std::vector<RationalAngle> values);
  /// From a degree-2 cochain on point_groupoid(group).
  static TwoCocycleGroup from_cochain(const FiniteGroup& group, const Cochain& c);
  static TwoCocycleGroup trivial(const FiniteGroup& group);

  const FiniteGroup& group() const noexcept { return group_; }
  RationalAngle operator()(Element g, Element h) const {
    return values_[static_cast<std::size_t>(g) * group_.order() + h];
  }
  Cochain to_cochain() const;

  /// First (g,h,k) where τ(h,k) - τ(gh,k) + τ(g,hk) - τ(g,h) != 0.
  std::optional<std::array<Element, 3>> cocycle_failure() const;
  bool is_normalized() const;

 private:
  FiniteGroup group_;
  std::vector<RationalAngle> values_;
};

struct NormalizedCocycle {
  TwoCocycleGroup cocycle;
  /// ρ with cocycle = raw - δρ.
  Cochain shift;
};

/// Subtracts δρ for the constant 1-cochain ρ = τ(1,1), which is all it
/// takes: the cocycle identity forces τ(1,g) = τ(g,1) = τ(1,1).
/// Throws ValidationError with the failing triple for non-cocycles.
NormalizedCocycle normalize_cocycle(const TwoCocycleGroup& raw);

/// g is τ-regular when τ(g,h) = τ(h,g) for every h commuting with g.
bool is_tau_regular(const TwoCocycleGroup& tau, Element g);
/// Representatives (smallest element) of the τ-regular conjugacy classes.
/// Requires a normalized cocycle; checks every member of each class.
std::vector<Element> tau_regular_classes(const TwoCocycleGroup& tau);
/// Number of irreducible τ-projective representations.
int twisted_rank(const TwoCocycleGroup& tau);

/// The twisted group algebra: e_g e_h = exp(2πi τ(g,h)) e_{gh}.
class TwistedAlgebra {
 public:
  explicit TwistedAlgebra(TwoCocycleGroup tau);

  const FiniteGroup& group() const noexcept { return tau_.group(); }
  const TwoCocycleGroup& cocycle() const noexcept { return tau_; }
  /// Common conductor of all structure constants.
  int conductor() const noexcept { return conductor_; }
  const Cyclotomic& constant(Element g, Element h) const {
    return constants_[static_cast<std::size_t>(g) * group().order() + h];
  }
  /// Product of two elements given by coefficient vectors.
  std::vector<Cyclotomic> multiply(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const;
  bool is_associative() const;

 private:
  TwoCocycleGroup tau_;
  int conductor_ = 1;
  std::vector<Cyclotomic> constants_;
};

/// Dimension of the center, from the kernel of z -> [z, e_g] over the
/// cyclotomic field. |G| <= 64.
int center_dimension(const TwistedAlgebra& algebra);

}  // namespace orbk
