#include "orbk/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace orbk {

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Long division of integer polynomials; the divisor is monic.
std::vector<long> divide_exact(std::vector<long> num, const std::vector<long>& den) {
  const int dn = static_cast<int>(den.size()) - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (int i = static_cast<int>(num.size()) - 1; i >= dn; --i) {
    const long c = num[i];
    if (c == 0) continue;
    q[i - dn] = c;
    for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder over Q.
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
  trim(num);
  const int dd = static_cast<int>(den.size()) - 1;
  if (static_cast<int>(num.size()) - 1 < dd) return {Poly{}, num};
  Poly q(num.size() - dd);
  const mpq_class lead = den.back();
  for (int i = static_cast<int>(num.size()) - 1; i >= dd; --i) {
    if (sgn(num[i]) == 0) continue;
    const mpq_class c = num[i] / lead;
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  num.resize(dd);
  trim(num);
  trim(q);
  return {q, num};
}

int totient(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial index must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const std::vector<long>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // x^n - 1 divided by every Φ_d with d | n, d < n.
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(n, std::make_unique<const std::vector<long>>(std::move(p)));
  return *it->second;
}

Cyclotomic::Cyclotomic(const mpq_class& value, int conductor) : n_(conductor) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  c_.assign(totient(conductor), mpq_class(0));
  c_[0] = value;
  c_[0].canonicalize();
}

Cyclotomic::Cyclotomic(int n, std::vector<mpq_class> coeffs) : n_(n) { reduce_from(std::move(coeffs)); }

void Cyclotomic::reduce_from(std::vector<mpq_class> raw) {
  const auto& phi = cyclotomic_polynomial(n_);
  const int d = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(raw.size()) - 1; i >= d; --i) {
    if (sgn(raw[i]) == 0) continue;
    const mpq_class c = raw[i];
    for (int j = 0; j <= d; ++j)
      if (phi[j] != 0) raw[i - d + j] -= c * phi[j];
  }
  raw.resize(d);
  c_ = std::move(raw);
}

Cyclotomic Cyclotomic::root_of_unity(int conductor, long power) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  long k = power % conductor;
  if (k < 0) k += conductor;
  std::vector<mpq_class> raw(std::max<long>(k + 1, 1));
  raw[k] = 1;
  return Cyclotomic(conductor, std::move(raw));
}

Cyclotomic Cyclotomic::phase(const RationalAngle& q) {
  return root_of_unity(static_cast<int>(q.den()), q.num());
}

bool Cyclotomic::is_zero() const {
  for (const auto& v : c_)
    if (sgn(v) != 0) return false;
  return true;
}

std::optional<mpq_class> Cyclotomic::rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return std::nullopt;
  return c_[0];
}

Cyclotomic Cyclotomic::lift(int m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("lift: target conductor is not a multiple");
  const int step = m / n_;
  std::vector<mpq_class> raw((c_.size() - 1) * step + 1);
  for (std::size_t j = 0; j < c_.size(); ++j) raw[j * step] = c_[j];
  return Cyclotomic(m, std::move(raw));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ != n_) {
    const int m = std::lcm(n_, o.n_);
    *this = lift(m);
    return *this += o.lift(m);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ != n_) {
    const int m = std::lcm(n_, o.n_);
    *this = lift(m);
    return *this *= o.lift(m);
  }
  reduce_from(poly_mul(c_, o.c_));
  if (c_.empty()) c_.assign(1, mpq_class(0));
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in a cyclotomic field");
  const auto& phi_int = cyclotomic_polynomial(n_);
  Poly r0(phi_int.begin(), phi_int.end());
  Poly r1 = c_;
  trim(r1);
  Poly s0{}, s1{mpq_class(1)};
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Φ_N is irreducible.
  for (auto& v : s1) v /= r1[0];
  return Cyclotomic(n_, std::move(s1));
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<mpq_class> raw(n_ + 1);
  for (std::size_t j = 0; j < c_.size(); ++j) raw[(n_ - static_cast<int>(j)) % n_] += c_[j];
  return Cyclotomic(n_, std::move(raw));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (o.n_ != n_) {
    const int m = std::lcm(n_, o.n_);
    return lift(m) == o.lift(m);
  }
  return c_ == o.c_;
}

std::string Cyclotomic::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (sgn(c_[j]) == 0) continue;
    mpq_class v = c_[j];
    if (!s.empty()) {
      s += sgn(v) < 0 ? " - " : " + ";
      v = abs(v);
    }
    if (j == 0) {
      s += v.get_str();
    } else {
      if (v != 1) s += (v == -1 ? std::string("-") : v.get_str() + "*");
      s += "z" + std::to_string(n_);
      if (j > 1) s += "^" + std::to_string(j);
    }
  }
  return s.empty() ? "0" : s;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

int cyclotomic_rank(std::vector<std::vector<Cyclotomic>> rows) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows.front().size());
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (!rows[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const Cyclotomic inv = rows[rank][c].inverse();
    for (int j = c; j < cols; ++j) rows[rank][j] *= inv;
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Cyclotomic f = rows[r][c];
      for (int j = c; j < cols; ++j)
        if (!rows[rank][j].is_zero()) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<Cyclotomic> cyclotomic_solve(std::vector<std::vector<Cyclotomic>> a, std::vector<Cyclotomic> b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) throw std::domain_error("cyclotomic_solve: size mismatch");
  for (int c = 0; c < n; ++c) {
    if (static_cast<int>(a[c].size()) != n) throw std::domain_error("cyclotomic_solve: matrix not square");
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("cyclotomic_solve: singular matrix");
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    const Cyclotomic inv = a[c][c].inverse();
    for (int j = c; j < n; ++j) a[c][j] *= inv;
    b[c] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Cyclotomic f = a[r][c];
      for (int j = c; j < n; ++j)
        if (!a[c][j].is_zero()) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  return b;
}

}  // namespace orbk
