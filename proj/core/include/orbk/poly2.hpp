#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "orbk/cochain.hpp"

namespace orbk {

/// A polynomial over F_2 in n degree-one variables x, y, z, w, v, u.
/// Each term is an exponent vector; presence means coefficient 1.
struct Poly2Class {
  int n = 0;
  std::set<std::vector<int>> terms;

  /// Graded degree; throws UsageError for a non-homogeneous polynomial.
  /// The zero polynomial has degree -1.
  int degree() const;
  bool is_zero() const noexcept { return terms.empty(); }
  /// Adds a monomial over F_2, cancelling a duplicate.
  void toggle(const std::vector<int>& exponents);
  Poly2Class& operator+=(const Poly2Class& o);
  std::string to_string() const;
  bool operator==(const Poly2Class&) const = default;
};

/// Parses `x2yz|xy2z|xyz2`. Variables are x, y, z, w, v, u in that order;
/// `n` defaults to the highest variable used.
Poly2Class parse_poly2(std::string_view text, int n = 0);

/// Sq^1 as the derivation with Sq^1(x_i) = x_i^2.
Poly2Class sq1(const Poly2Class& p);

/// Some m with Sq^1(m) = p, found by linear algebra over F_2.
std::optional<Poly2Class> sq1_preimage(const Poly2Class& p);

/// Sum over monomials of (1/2)(cup product of the dual 1-cochains), each
/// variable repeated by its exponent in variable order. G must be an
/// elementary abelian 2-group of rank at least p.n.
Cochain poly_to_cocycle(const Poly2Class& p, const FiniteGroup& g);

/// The U(1) cocycle used for a degree-(d+1) integral class:
/// if Sq^1 p = 0 and p = Sq^1 m, the halved cocycle of m (degree d);
/// otherwise the halved cocycle of p itself.
Cochain bockstein_lift(const Poly2Class& p, const FiniteGroup& g);

}  // namespace orbk
