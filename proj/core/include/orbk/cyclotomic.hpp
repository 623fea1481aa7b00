#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "orbk/angle.hpp"

namespace orbk {

/// Integer coefficients of the N-th cyclotomic polynomial, constant term
/// first. Computed once per N and cached; safe to call concurrently.
const std::vector<long>& cyclotomic_polynomial(int n);

/// An exact element of Q(ζ_N) stored as a polynomial in ζ_N of degree
/// below φ(N). Binary operations on different conductors lift both sides to
/// the lcm first, so values from different fields mix freely.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(mpq_class(0)) {}
  Cyclotomic(long value) : Cyclotomic(mpq_class(value)) {}  // NOLINT: implicit from integers
  explicit Cyclotomic(const mpq_class& value, int conductor = 1);

  /// ζ_N^k.
  static Cyclotomic root_of_unity(int conductor, long power);
  /// e^{2πi q} for q in Q/Z.
  static Cyclotomic phase(const RationalAngle& q);

  int conductor() const noexcept { return n_; }
  const std::vector<mpq_class>& coefficients() const noexcept { return c_; }
  bool is_zero() const;
  /// The value as a rational, when it is one.
  std::optional<mpq_class> rational() const;

  /// Same element in Q(ζ_M); M must be a multiple of the conductor.
  Cyclotomic lift(int m) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;
  /// Throws std::domain_error for zero.
  Cyclotomic inverse() const;
  /// Complex conjugation ζ -> ζ^{-1}.
  Cyclotomic conj() const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// e.g. "1/2 + 3*z8^2"; "0" for zero.
  std::string to_string() const;

 private:
  Cyclotomic(int n, std::vector<mpq_class> coeffs);
  void reduce_from(std::vector<mpq_class> raw);

  int n_ = 1;
  std::vector<mpq_class> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// Rank of a matrix over a cyclotomic field, by Gaussian elimination.
int cyclotomic_rank(std::vector<std::vector<Cyclotomic>> rows);

/// Solves A x = b exactly when A is square and invertible; throws
/// std::domain_error otherwise.
std::vector<Cyclotomic> cyclotomic_solve(std::vector<std::vector<Cyclotomic>> a, std::vector<Cyclotomic> b);

}  // namespace orbk
