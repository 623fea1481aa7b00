#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace orbk {

/// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
  mpz_class& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const mpz_class& operator()(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
};

/// D = U^{-1} S V^{-1}-style decomposition: `left * A * right = diag`, with
/// left and right unimodular and diag carrying the invariant factors
/// d_1 | d_2 | ... on its leading diagonal.
struct SmithForm {
  IntMatrix left;
  IntMatrix right;
  std::vector<mpz_class> diagonal;  // length min(rows, cols)
  int rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Solves A x = b (mod m) for integer x, or returns nullopt.
std::optional<std::vector<mpz_class>> solve_mod(const IntMatrix& a, const std::vector<mpz_class>& b,
                                                const mpz_class& m);

}  // namespace orbk
