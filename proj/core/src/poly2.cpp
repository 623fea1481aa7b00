#include "orbk/poly2.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace orbk {

namespace {

constexpr std::string_view kVariables = "xyzwvu";

void monomials_of_degree(int n, int d, std::vector<int>& cur, int pos,
                         std::vector<std::vector<int>>& out) {
  if (pos == n - 1) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[pos] = e;
    monomials_of_degree(n, d - e, cur, pos + 1, out);
  }
}

std::vector<int> padded(const std::vector<int>& e, int n) {
  std::vector<int> out(e);
  out.resize(n, 0);
  return out;
}

}  // namespace

int Poly2Class::degree() const {
  int d = -1;
  for (const auto& t : terms) {
    const int td = std::accumulate(t.begin(), t.end(), 0);
    if (d >= 0 && td != d) throw UsageError("polynomial is not homogeneous: " + to_string());
    d = td;
  }
  return d;
}

void Poly2Class::toggle(const std::vector<int>& exponents) {
  const auto e = padded(exponents, n);
  if (!terms.erase(e)) terms.insert(e);
}

Poly2Class& Poly2Class::operator+=(const Poly2Class& o) {
  if (o.n > n) {
    std::set<std::vector<int>> widened;
    for (const auto& t : terms) widened.insert(padded(t, o.n));
    terms = std::move(widened);
    n = o.n;
  }
  for (const auto& t : o.terms) toggle(t);
  return *this;
}

std::string Poly2Class::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  // Highest exponents of earlier variables first.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!s.empty()) s += "|";
    bool any = false;
    for (int i = 0; i < n; ++i) {
      const int e = (*it)[i];
      if (e == 0) continue;
      any = true;
      s += kVariables[i];
      if (e > 1) s += std::to_string(e);
    }
    if (!any) s += "1";
  }
  return s;
}

Poly2Class parse_poly2(std::string_view text, int n) {
  std::vector<std::vector<int>> monos;
  int used = 0;
  std::vector<int> cur(kVariables.size(), 0);
  bool have = false;
  std::size_t i = 0;
  auto flush = [&]() {
    if (!have) throw ValidationError("poly spec: empty monomial in '" + std::string(text) + "'");
    monos.push_back(cur);
    std::fill(cur.begin(), cur.end(), 0);
    have = false;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '|' || c == '+') {
      flush();
      ++i;
      continue;
    }
    if (c == '1' && !have) {
      have = true;
      ++i;
      continue;
    }
    const auto var = kVariables.find(c);
    if (var == std::string_view::npos) {
      throw ValidationError("poly spec: unexpected character '" + std::string(1, c) + "'");
    }
    ++i;
    int e = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      e = e * 10 + (text[i] - '0');
      if (e > 64) throw ValidationError("poly spec: exponent too large");
      ++i;
    }
    if (e == 0) e = 1;
    cur[var] += e;
    used = std::max(used, static_cast<int>(var) + 1);
    have = true;
  }
  flush();
  if (n == 0) n = used;
  if (used > n) throw ValidationError("poly spec uses more than " + std::to_string(n) + " variables");
  Poly2Class p;
  p.n = n;
  for (auto& m : monos) {
    m.resize(n);
    p.toggle(m);
  }
  (void)p.degree();
  return p;
}

Poly2Class sq1(const Poly2Class& p) {
  Poly2Class out;
  out.n = p.n;
  for (const auto& t : p.terms) {
    for (int i = 0; i < p.n; ++i) {
      if (t[i] % 2 == 0) continue;
      auto u = t;
      ++u[i];
      out.toggle(u);
    }
  }
  return out;
}

std::optional<Poly2Class> sq1_preimage(const Poly2Class& p) {
  Poly2Class zero;
  zero.n = p.n;
  if (p.is_zero()) return zero;
  const int d = p.degree();
  if (d < 1 || p.n == 0) return std::nullopt;
  std::vector<std::vector<int>> cols;
  std::vector<int> cur(p.n);
  monomials_of_degree(p.n, d - 1, cur, 0, cols);
  std::vector<std::vector<int>> rows_list;
  monomials_of_degree(p.n, d, cur, 0, rows_list);
  std::map<std::vector<int>, int> row_of;
  for (int r = 0; r < static_cast<int>(rows_list.size()); ++r) row_of[rows_list[r]] = r;

  const int nr = static_cast<int>(rows_list.size()), nc = static_cast<int>(cols.size());
  // Augmented matrix over F_2.
  std::vector<std::vector<char>> m(nr, std::vector<char>(nc + 1, 0));
  for (int c = 0; c < nc; ++c) {
    Poly2Class single;
    single.n = p.n;
    single.toggle(cols[c]);
    for (const auto& t : sq1(single).terms) m[row_of.at(t)][c] ^= 1;
  }
  for (const auto& t : p.terms) m[row_of.at(t)][nc] ^= 1;

  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (m[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = 0; i < nr; ++i)
      if (i != r && m[i][c])
        for (int j = c; j <= nc; ++j) m[i][j] ^= m[r][j];
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < nr; ++i)
    if (m[i][nc]) return std::nullopt;
  Poly2Class out = zero;
  for (int i = 0; i < r; ++i)
    if (m[i][nc]) out.toggle(cols[pivot_col[i]]);
  return out;
}

Cochain poly_to_cocycle(const Poly2Class& p, const FiniteGroup& g) {
  const auto coords = f2_coordinates(g);
  const int rank = coords.empty() ? 0 : static_cast<int>(coords.front().size());
  if (p.n > rank) {
    throw ValidationError("poly uses " + std::to_string(p.n) + " variables but the group has rank " +
                          std::to_string(rank));
  }
  const FiniteGroupoid pg = point_groupoid(g);
  const int d = p.degree();
  Cochain out(pg, std::max(d, 0));
  if (d <= 0) {
    if (!p.is_zero()) throw UsageError("poly_to_cocycle: constant polynomials have no cup representative");
    return out;
  }
  std::vector<Cochain> duals;
  for (int i = 0; i < p.n; ++i) {
    Cochain f(pg, 1);
    for (int x = 0; x < g.order(); ++x)
      if (coords[x][i]) f.set({x}, RationalAngle(1, 2));
    duals.push_back(std::move(f));
  }
  for (const auto& t : p.terms) {
    std::vector<Cochain> factors;
    for (int i = 0; i < p.n; ++i)
      for (int e = 0; e < t[i]; ++e) factors.push_back(duals[i]);
    out += cup_one_cochains(factors);
  }
  return out;
}

Cochain bockstein_lift(const Poly2Class& p, const FiniteGroup& g) {
  if (sq1(p).is_zero() && !p.is_zero()) {
    if (auto m = sq1_preimage(p)) return poly_to_cocycle(*m, g);
    throw UsageError("bockstein lift: " + p.to_string() + " is Sq1-closed but not in the image of Sq1");
  }
  return poly_to_cocycle(p, g);
}

}  // namespace orbk
