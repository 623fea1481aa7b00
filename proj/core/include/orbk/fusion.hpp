#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbk/cochain.hpp"
#include "orbk/cyclotomic.hpp"
#include "orbk/twisted_rep.hpp"

namespace orbk {

/// A group with a 3-cocycle φ, its transgression τ = θ(φ) on the inertia
/// groupoid and the chain homotopy h(φ) on the 2-sectors. Everything the
/// star product needs is tabulated once.
struct TwistContext {
  FiniteGroup group;
  Cochain phi;
  SectorGroupoid inertia;
  SectorGroupoid two_sectors;
  Cochain tau;
  Cochain homotopy;

  /// τ at the composable pair (g,u1), (u1^-1 g u1, u2).
  RationalAngle tau_at(Element g, Element u1, Element u2) const {
    return tau_table[index3(g, u1, u2)];
  }
  /// h(φ) at the 2-sector arrow ((g1,g2), u).
  RationalAngle homotopy_at(Element g1, Element g2, Element u) const {
    return homotopy_table[index3(g1, g2, u)];
  }
  /// τ restricted to the sector of g, on the centralizer in local indices.
  TwoCocycleGroup sector_cocycle(Element g) const;
  bool untwisted() const noexcept { return phi.is_zero(); }

  std::size_t index3(int a, int b, int c) const {
    const auto n = static_cast<std::size_t>(group.order());
    return (static_cast<std::size_t>(a) * n + b) * n + c;
  }
  std::vector<RationalAngle> tau_table;
  std::vector<RationalAngle> homotopy_table;
  /// exp(2πi kStarPhaseSign h(φ)) where u centralizes g1 and g2, else zero.
  std::vector<Cyclotomic> star_phase_table;
  std::vector<Subgroup> centralizers;
};

using ContextPtr = std::shared_ptr<const TwistContext>;

/// Requires a normalized 3-cocycle on point_groupoid(g); throws
/// ValidationError otherwise. Checks δτ = 0 and
/// e1*τ + e2*τ - e12*τ = δh(φ) before returning.
ContextPtr make_context(const FiniteGroup& g, const Cochain& phi);

/// One column of a monomial matrix: basis vector -> phase * basis vector.
struct MonomialEntry {
  int target = 0;
  RationalAngle phase;
  bool operator==(const MonomialEntry&) const = default;
};

/// A τ-twisted G-equivariant bundle over G with monomial action matrices.
/// Basis vector i lies in V_{sector(i)}; u sends it to
/// exp(2πi phase) * e_target in V_{u^-1 g u}. The rule is
/// ρ_{g1,u2} ρ_{g,u1} = exp(2πi τ(g; u1,u2)) ρ_{g,u1u2}.
class TwistedBundle {
 public:
  TwistedBundle(ContextPtr context, std::vector<Element> sectors, std::vector<MonomialEntry> action);

  const ContextPtr& context() const noexcept { return context_; }
  int dimension() const noexcept { return static_cast<int>(sectors_.size()); }
  Element sector(int i) const { return sectors_[i]; }
  const std::vector<Element>& sectors() const noexcept { return sectors_; }
  int sector_dimension(Element g) const;
  const MonomialEntry& image(Element u, int i) const {
    return action_[static_cast<std::size_t>(u) * sectors_.size() + i];
  }
  /// ρ_{g,u}: V_g -> V_{u^-1 g u} as a dense matrix (rows: target basis).
  std::vector<std::vector<Cyclotomic>> matrix(Element g, Element u) const;

 private:
  ContextPtr context_;
  std::vector<Element> sectors_;
  std::vector<MonomialEntry> action_;
};

struct BundleCheck {
  bool ok = true;
  /// (g, u1, u2) of the first violation, scanning g, then u1, then u2.
  std::optional<std::array<Element, 3>> witness;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};
BundleCheck validate_bundle(const TwistedBundle& v);

/// Character values χ(g,u) at u in Z_G(g), zero elsewhere. Formal integer
/// combinations are allowed.
class KClass {
 public:
  KClass(ContextPtr context, std::vector<Cyclotomic> values);
  static KClass zero(ContextPtr context);

  const ContextPtr& context() const noexcept { return context_; }
  const Cyclotomic& operator()(Element g, Element u) const {
    return values_[static_cast<std::size_t>(g) * context_->group.order() + u];
  }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }

  KClass& operator+=(const KClass& o);
  KClass& operator-=(const KClass& o);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator*(long k, const KClass& a);
  bool operator==(const KClass& o) const;

 private:
  ContextPtr context_;
  std::vector<Cyclotomic> values_;
};

/// Throws ValidationError when the bundle fails validate_bundle.
KClass character(const TwistedBundle& v);
/// (1/|Z(g)|) Σ_{u in Z(g)} a(g,u) conj(b(g,u)).
Cyclotomic sector_inner_product(const KClass& a, const KClass& b, Element g);

/// The star phase on summand (g1,g2) under u is exp(2πi s h(φ)(g1,g2,u))
/// with s this constant; it is the sign for which star outputs validate.
inline constexpr int kStarPhaseSign = -1;

/// (V⋆W)_g = ⊕_{g1 g2 = g} V_{g1} ⊗ W_{g2}.
TwistedBundle star(const TwistedBundle& a, const TwistedBundle& b, int phase_sign = kStarPhaseSign);
/// χ(g,u) = Σ_{g1 g2 = g, u in Z(g1) ∩ Z(g2)} exp(2πi s h(φ)(g1,g2,u)) χa(g1,u) χb(g2,u).
KClass star(const KClass& a, const KClass& b, int phase_sign = kStarPhaseSign);

TwistedBundle direct_sum(const TwistedBundle& a, const TwistedBundle& b);
/// Trivial line at g = 1.
TwistedBundle unit_bundle(const ContextPtr& context);
/// Induced from the one-dimensional module of the subgroup H <= Z(g) given
/// by λ with δλ = τ_g on H. `subgroup` lists elements of G, identity
/// first; `lambda` is aligned with it. Supported on the class of g.
TwistedBundle induced_bundle(const ContextPtr& context, Element g, const std::vector<Element>& subgroup,
                             const std::vector<RationalAngle>& lambda);
/// Induced from the trivial subgroup: dimension |G| on the class of g.
TwistedBundle regular_bundle(const ContextPtr& context, Element g);

/// Irreducible bundles, one per isomorphism class, found by inducing
/// one-dimensional modules from subgroups of each centralizer. Ordered by
/// class representative. Throws ValidationError when some irreducible is
/// not reached this way.
std::vector<TwistedBundle> irreducible_basis(const ContextPtr& context);

struct StructureTable {
  int size = 0;
  std::vector<std::int64_t> constants;  // (i*size + j)*size + k
  std::int64_t at(int i, int j, int k) const {
    return constants[(static_cast<std::size_t>(i) * size + j) * size + k];
  }
};
/// Expands every basis[i] ⋆ basis[j] in the basis. Throws ValidationError
/// for dependent characters, a product outside the span (with residual),
/// or a non-integral coefficient.
StructureTable structure_constants(const std::vector<KClass>& basis, int workers = 1);

struct RingCheck {
  bool associative = true;
  bool commutative = true;
  std::optional<std::array<int, 3>> associativity_witness;
  std::optional<std::array<int, 2>> commutativity_witness;
  std::int64_t triples = 0;
};
/// Exhaustive character-level check of (a⋆b)⋆c = a⋆(b⋆c) and a⋆b = b⋆a.
RingCheck check_ring_axioms(const std::vector<KClass>& basis, int workers = 1);

}  // namespace orbk
