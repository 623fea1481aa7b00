#include "orbk/snf.hpp"

#include <stdexcept>
#include <utility>

namespace orbk {

namespace {

struct Tracking {
  IntMatrix* left = nullptr;          // row ops mirrored here
  IntMatrix* right = nullptr;         // column ops mirrored here
  std::vector<mpz_class>* rhs = nullptr;  // row ops mirrored here
};

void swap_rows(IntMatrix& a, int r1, int r2, const Tracking& t) {
  if (r1 == r2) return;
  for (int c = 0; c < a.cols; ++c) std::swap(a(r1, c), a(r2, c));
  if (t.left)
    for (int c = 0; c < t.left->cols; ++c) std::swap((*t.left)(r1, c), (*t.left)(r2, c));
  if (t.rhs) std::swap((*t.rhs)[r1], (*t.rhs)[r2]);
}

void swap_cols(IntMatrix& a, int c1, int c2, const Tracking& t) {
  if (c1 == c2) return;
  for (int r = 0; r < a.rows; ++r) std::swap(a(r, c1), a(r, c2));
  if (t.right)
    for (int r = 0; r < t.right->rows; ++r) std::swap((*t.right)(r, c1), (*t.right)(r, c2));
}

// row_dst -= q * row_src
void row_axpy(IntMatrix& a, int dst, int src, const mpz_class& q, int from_col, const Tracking& t) {
  for (int c = from_col; c < a.cols; ++c)
    if (sgn(a(src, c)) != 0) a(dst, c) -= q * a(src, c);
  if (t.left)
    for (int c = 0; c < t.left->cols; ++c)
      if (sgn((*t.left)(src, c)) != 0) (*t.left)(dst, c) -= q * (*t.left)(src, c);
  if (t.rhs) (*t.rhs)[dst] -= q * (*t.rhs)[src];
}

// col_dst -= q * col_src
void col_axpy(IntMatrix& a, int dst, int src, const mpz_class& q, int from_row, const Tracking& t) {
  for (int r = from_row; r < a.rows; ++r)
    if (sgn(a(r, src)) != 0) a(r, dst) -= q * a(r, src);
  if (t.right)
    for (int r = 0; r < t.right->rows; ++r)
      if (sgn((*t.right)(r, src)) != 0) (*t.right)(r, dst) -= q * (*t.right)(r, src);
}

void negate_row(IntMatrix& a, int r, const Tracking& t) {
  for (int c = 0; c < a.cols; ++c) a(r, c) = -a(r, c);
  if (t.left)
    for (int c = 0; c < t.left->cols; ++c) (*t.left)(r, c) = -(*t.left)(r, c);
  if (t.rhs) (*t.rhs)[r] = -(*t.rhs)[r];
}

// Diagonalizes a in place from pivot `start` on. Returns the rank.
int diagonalize(IntMatrix& a, int start, const Tracking& t) {
  const int n = std::min(a.rows, a.cols);
  int p = start;
  for (; p < n; ++p) {
    while (true) {
      int br = -1, bc = -1;
      mpz_class best;
      for (int r = p; r < a.rows; ++r)
        for (int c = p; c < a.cols; ++c) {
          if (sgn(a(r, c)) == 0) continue;
          mpz_class v = abs(a(r, c));
          if (br < 0 || v < best) {
            best = v;
            br = r;
            bc = c;
            if (best == 1) goto found;
          }
        }
    found:
      if (br < 0) return p;
      swap_rows(a, p, br, t);
      swap_cols(a, p, bc, t);
      bool clean = true;
      const mpz_class piv = a(p, p);
      for (int r = p + 1; r < a.rows; ++r) {
        if (sgn(a(r, p)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a(r, p).get_mpz_t(), piv.get_mpz_t());
        if (q != 0) row_axpy(a, r, p, q, p, t);
        if (sgn(a(r, p)) != 0) clean = false;
      }
      for (int c = p + 1; c < a.cols; ++c) {
        if (sgn(a(p, c)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a(p, c).get_mpz_t(), piv.get_mpz_t());
        if (q != 0) col_axpy(a, c, p, q, p, t);
        if (sgn(a(p, c)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (sgn(a(p, p)) < 0) negate_row(a, p, t);
  }
  return p;
}

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  SmithForm out;
  IntMatrix a = input;
  out.left = identity_matrix(a.rows);
  out.right = identity_matrix(a.cols);
  Tracking t{&out.left, &out.right, nullptr};
  int rank = diagonalize(a, 0, t);
  // Enforce the divisibility chain: fold row j into row i and re-reduce.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank && !changed; ++i)
      for (int j = i + 1; j < rank && !changed; ++j) {
        if (a(j, j) % a(i, i) == 0) continue;
        row_axpy(a, i, j, mpz_class(-1), 0, t);
        rank = diagonalize(a, i, t);
        changed = true;
      }
  }
  out.rank = rank;
  const int n = std::min(a.rows, a.cols);
  out.diagonal.resize(n);
  for (int i = 0; i < n; ++i) out.diagonal[i] = a(i, i);
  return out;
}

std::optional<std::vector<mpz_class>> solve_mod(const IntMatrix& input, const std::vector<mpz_class>& b,
                                                const mpz_class& m) {
  if (static_cast<int>(b.size()) != input.rows) throw std::invalid_argument("solve_mod: rhs size");
  if (m <= 0) throw std::invalid_argument("solve_mod: modulus must be positive");
  IntMatrix a = input;
  IntMatrix right = identity_matrix(a.cols);
  std::vector<mpz_class> w = b;
  Tracking t{nullptr, &right, &w};
  const int rank = diagonalize(a, 0, t);

  std::vector<mpz_class> z(a.cols);
  for (int i = 0; i < a.rows; ++i) {
    mpz_class wi = w[i] % m;
    if (wi < 0) wi += m;
    if (i >= rank) {
      if (wi != 0) return std::nullopt;
      continue;
    }
    mpz_class d = a(i, i) % m;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    if (wi % g != 0) return std::nullopt;
    const mpz_class m2 = m / g;
    mpz_class inv;
    const mpz_class d2 = d / g;
    if (m2 == 1) {
      z[i] = 0;
      continue;
    }
    mpz_invert(inv.get_mpz_t(), d2.get_mpz_t(), m2.get_mpz_t());
    z[i] = (wi / g) * inv % m2;
  }
  std::vector<mpz_class> x(a.cols);
  for (int r = 0; r < a.cols; ++r) {
    mpz_class s = 0;
    for (int c = 0; c < a.cols; ++c)
      if (sgn(z[c]) != 0) s += right(r, c) * z[c];
    s %= m;
    if (s < 0) s += m;
    x[r] = s;
  }
  return x;
}

}  // namespace orbk
