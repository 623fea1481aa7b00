#include "orbk/fusion.hpp"

#include <algorithm>
#include <span>

#include "orbk/parallel.hpp"

namespace orbk {

namespace {

std::string tuple_text(std::span<const int> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

bool commutes(const FiniteGroup& g, Element a, Element b) { return g.mul(a, b) == g.mul(b, a); }

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a != b) throw UsageError("bundles or classes belong to different twist contexts");
}

}  // namespace

TwoCocycleGroup TwistContext::sector_cocycle(Element g) const {
  const Subgroup& z = centralizers[g];
  const int m = z.order();
  std::vector<RationalAngle> v(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) v[static_cast<std::size_t>(a) * m + b] = tau_at(g, z.members[a], z.members[b]);
  return TwoCocycleGroup(z.as_group(), std::move(v));
}

ContextPtr make_context(const FiniteGroup& g, const Cochain& phi) {
  const FiniteGroupoid pg = point_groupoid(g);
  if (phi.degree() != 3 || !(phi.groupoid() == pg))
    throw ValidationError("twist must be a degree-3 cochain on the point groupoid of the group");
  if (auto bad = cocycle_failure(phi)) throw ValidationError("twist is not a cocycle: delta nonzero at " + tuple_text(*bad));
  if (!is_normalized(phi)) throw ValidationError("twist is not normalized: it must vanish when an argument is 1");

  auto ctx = std::make_shared<TwistContext>(TwistContext{g, phi, inertia(pg), k_sectors(pg, 2), Cochain(pg, 2),
                                                         Cochain(pg, 1), {}, {}, {}, {}});
  ctx->tau = theta(phi, ctx->inertia);
  ctx->homotopy = chain_homotopy(phi, ctx->two_sectors);
  if (auto bad = cocycle_failure(ctx->tau))
    throw std::logic_error("transgressed twist is not a cocycle at " + tuple_text(*bad));
  const auto e1 = evaluation_hom(Evaluation::First, ctx->two_sectors, ctx->inertia);
  const auto e2 = evaluation_hom(Evaluation::Second, ctx->two_sectors, ctx->inertia);
  const auto e12 = evaluation_hom(Evaluation::Product, ctx->two_sectors, ctx->inertia);
  if (!(pullback(e1, ctx->tau) + pullback(e2, ctx->tau) - pullback(e12, ctx->tau) == delta(ctx->homotopy)))
    throw std::logic_error("e1*tau + e2*tau - e12*tau differs from the coboundary of the homotopy");

  const int n = g.order();
  const auto n3 = static_cast<std::size_t>(n) * n * n;
  ctx->tau_table.resize(n3);
  ctx->homotopy_table.resize(n3);
  ctx->star_phase_table.resize(n3);
  const auto& in = ctx->inertia;
  const auto& two = ctx->two_sectors;
  for (int x = 0; x < n; ++x) {
    const int o = in.object_of(std::vector<int>{x});
    for (int u1 = 0; u1 < n; ++u1) {
      const int a1 = in.arrow_of(o, u1);
      const int o1 = in.groupoid.target(a1);
      for (int u2 = 0; u2 < n; ++u2)
        ctx->tau_table[ctx->index3(x, u1, u2)] = ctx->tau({a1, in.arrow_of(o1, u2)});
    }
  }
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2) {
      const int o = two.object_of(std::vector<int>{g1, g2});
      for (int u = 0; u < n; ++u) {
        const auto h = ctx->homotopy({two.arrow_of(o, u)});
        const auto i = ctx->index3(g1, g2, u);
        ctx->homotopy_table[i] = h;
        if (commutes(g, g1, u) && commutes(g, g2, u)) ctx->star_phase_table[i] = Cyclotomic::phase(kStarPhaseSign * h);
      }
    }
  ctx->centralizers.reserve(n);
  for (int x = 0; x < n; ++x) ctx->centralizers.push_back(centralizer(g, x));
  return ctx;
}

TwistedBundle::TwistedBundle(ContextPtr context, std::vector<Element> sectors, std::vector<MonomialEntry> action)
    : context_(std::move(context)), sectors_(std::move(sectors)), action_(std::move(action)) {
  const int n = context_->group.order();
  if (action_.size() != static_cast<std::size_t>(n) * sectors_.size())
    throw UsageError("bundle action must list one column per (u, basis vector)");
  for (Element s : sectors_)
    if (s < 0 || s >= n) throw UsageError("bundle sector out of range");
  for (const auto& e : action_)
    if (e.target < 0 || e.target >= dimension()) throw UsageError("bundle action target out of range");
}

int TwistedBundle::sector_dimension(Element g) const {
  return static_cast<int>(std::count(sectors_.begin(), sectors_.end(), g));
}

std::vector<std::vector<Cyclotomic>> TwistedBundle::matrix(Element g, Element u) const {
  const Element h = context_->group.conj(g, u);
  std::vector<int> source, target_pos(dimension(), -1);
  int rows = 0;
  for (int i = 0; i < dimension(); ++i) {
    if (sectors_[i] == g) source.push_back(i);
    if (sectors_[i] == h) target_pos[i] = rows++;
  }
  std::vector<std::vector<Cyclotomic>> m(rows, std::vector<Cyclotomic>(source.size()));
  for (std::size_t c = 0; c < source.size(); ++c) {
    const auto& e = image(u, source[c]);
    m[target_pos[e.target]][c] = Cyclotomic::phase(e.phase);
  }
  return m;
}

BundleCheck validate_bundle(const TwistedBundle& v) {
  const TwistContext& ctx = *v.context();
  const FiniteGroup& g = ctx.group;
  const int n = g.order();
  BundleCheck out;
  auto fail = [&](Element x, Element u1, Element u2, std::string why) {
    out.ok = false;
    out.witness = std::array<Element, 3>{x, u1, u2};
    out.reason = std::move(why);
    return out;
  };
  for (int i = 0; i < v.dimension(); ++i)
    for (int u = 0; u < n; ++u)
      if (v.sector(v.image(u, i).target) != g.conj(v.sector(i), u))
        return fail(v.sector(i), u, 0, "action does not map V_g to V_{u^-1 g u}");
  const auto classes = conjugacy_classes(g);
  for (const auto& cls : classes.classes)
    for (Element x : cls)
      if (v.sector_dimension(x) != v.sector_dimension(cls.front()))
        return fail(x, 0, 0, "dimension differs across a conjugacy class");
  for (int x = 0; x < n; ++x) {
    std::vector<int> basis;
    for (int i = 0; i < v.dimension(); ++i)
      if (v.sector(i) == x) basis.push_back(i);
    if (basis.empty()) continue;
    for (int u1 = 0; u1 < n; ++u1)
      for (int u2 = 0; u2 < n; ++u2) {
        const RationalAngle t = ctx.tau_at(x, u1, u2);
        for (int i : basis) {
          const auto& a = v.image(u1, i);
          const auto& b = v.image(u2, a.target);
          const auto& c = v.image(g.mul(u1, u2), i);
          if (b.target != c.target || a.phase + b.phase != t + c.phase)
            return fail(x, u1, u2, "projective composition rule fails on basis vector " + std::to_string(i));
        }
      }
  }
  return out;
}

KClass::KClass(ContextPtr context, std::vector<Cyclotomic> values)
    : context_(std::move(context)), values_(std::move(values)) {
  const auto n = static_cast<std::size_t>(context_->group.order());
  if (values_.size() != n * n) throw UsageError("class table must have |G|^2 entries");
}

KClass KClass::zero(ContextPtr context) {
  const auto n = static_cast<std::size_t>(context->group.order());
  return KClass(std::move(context), std::vector<Cyclotomic>(n * n));
}

KClass& KClass::operator+=(const KClass& o) {
  require_same_context(context_, o.context_);
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!o.values_[i].is_zero()) values_[i] += o.values_[i];
  return *this;
}

KClass& KClass::operator-=(const KClass& o) {
  require_same_context(context_, o.context_);
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!o.values_[i].is_zero()) values_[i] -= o.values_[i];
  return *this;
}

KClass operator*(long k, const KClass& a) {
  KClass out = a;
  for (auto& v : out.values_)
    if (!v.is_zero()) v *= Cyclotomic(k);
  return out;
}

bool KClass::operator==(const KClass& o) const { return context_ == o.context_ && values_ == o.values_; }

KClass character(const TwistedBundle& v) {
  if (auto check = validate_bundle(v); !check)
    throw ValidationError("invalid bundle at " + tuple_text(*check.witness) + ": " + check.reason);
  const ContextPtr& ctx = v.context();
  const int n = ctx->group.order();
  std::vector<Cyclotomic> values(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < v.dimension(); ++i) {
    const Element x = v.sector(i);
    for (Element u : ctx->centralizers[x].members) {
      const auto& e = v.image(u, i);
      if (e.target == i) values[static_cast<std::size_t>(x) * n + u] += Cyclotomic::phase(e.phase);
    }
  }
  return KClass(ctx, std::move(values));
}

Cyclotomic sector_inner_product(const KClass& a, const KClass& b, Element g) {
  require_same_context(a.context(), b.context());
  const Subgroup& z = a.context()->centralizers[g];
  Cyclotomic sum;
  for (Element u : z.members) sum += a(g, u) * b(g, u).conj();
  return sum / Cyclotomic(static_cast<long>(z.order()));
}

TwistedBundle star(const TwistedBundle& a, const TwistedBundle& b, int phase_sign) {
  require_same_context(a.context(), b.context());
  const ContextPtr& ctx = a.context();
  const FiniteGroup& g = ctx->group;
  const int n = g.order();
  // Summand order: g1, then g2, then the basis of each factor.
  std::vector<int> index(static_cast<std::size_t>(a.dimension()) * b.dimension(), -1);
  std::vector<Element> sectors;
  std::vector<std::pair<int, int>> pairs;
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      for (int i = 0; i < a.dimension(); ++i) {
        if (a.sector(i) != g1) continue;
        for (int j = 0; j < b.dimension(); ++j) {
          if (b.sector(j) != g2) continue;
          index[static_cast<std::size_t>(i) * b.dimension() + j] = static_cast<int>(sectors.size());
          sectors.push_back(g.mul(g1, g2));
          pairs.emplace_back(i, j);
        }
      }
  std::vector<MonomialEntry> action;
  action.reserve(static_cast<std::size_t>(n) * sectors.size());
  for (int u = 0; u < n; ++u)
    for (const auto& [i, j] : pairs) {
      const auto& x = a.image(u, i);
      const auto& y = b.image(u, j);
      const auto h = ctx->homotopy_at(a.sector(i), b.sector(j), u);
      action.push_back({index[static_cast<std::size_t>(x.target) * b.dimension() + y.target],
                        x.phase + y.phase + static_cast<std::int64_t>(phase_sign) * h});
    }
  return TwistedBundle(ctx, std::move(sectors), std::move(action));
}

KClass star(const KClass& a, const KClass& b, int phase_sign) {
  require_same_context(a.context(), b.context());
  const ContextPtr& ctx = a.context();
  const FiniteGroup& g = ctx->group;
  const int n = g.order();
  if (phase_sign != 1 && phase_sign != -1) throw UsageError("star phase sign must be +1 or -1");
  const bool flip = phase_sign != kStarPhaseSign;
  std::vector<Cyclotomic> values(static_cast<std::size_t>(n) * n);
  for (int g1 = 0; g1 < n; ++g1)
    for (Element u : ctx->centralizers[g1].members) {
      const Cyclotomic& x = a(g1, u);
      if (x.is_zero()) continue;
      for (int g2 = 0; g2 < n; ++g2) {
        if (!commutes(g, g2, u)) continue;
        const Cyclotomic& y = b(g2, u);
        if (y.is_zero()) continue;
        const Cyclotomic& p = ctx->star_phase_table[ctx->index3(g1, g2, u)];
        values[static_cast<std::size_t>(g.mul(g1, g2)) * n + u] += x * y * (flip ? p.conj() : p);
      }
    }
  return KClass(ctx, std::move(values));
}

TwistedBundle direct_sum(const TwistedBundle& a, const TwistedBundle& b) {
  require_same_context(a.context(), b.context());
  const int n = a.context()->group.order();
  std::vector<Element> sectors = a.sectors();
  sectors.insert(sectors.end(), b.sectors().begin(), b.sectors().end());
  std::vector<MonomialEntry> action;
  for (int u = 0; u < n; ++u) {
    for (int i = 0; i < a.dimension(); ++i) action.push_back(a.image(u, i));
    for (int j = 0; j < b.dimension(); ++j) {
      auto e = b.image(u, j);
      e.target += a.dimension();
      action.push_back(e);
    }
  }
  return TwistedBundle(a.context(), std::move(sectors), std::move(action));
}

TwistedBundle unit_bundle(const ContextPtr& context) {
  const int n = context->group.order();
  return TwistedBundle(context, {0}, std::vector<MonomialEntry>(n, MonomialEntry{0, {}}));
}

TwistedBundle induced_bundle(const ContextPtr& context, Element g, const std::vector<Element>& subgroup,
                             const std::vector<RationalAngle>& lambda) {
  const FiniteGroup& grp = context->group;
  const int n = grp.order();
  if (subgroup.empty() || subgroup.front() != 0 || subgroup.size() != lambda.size())
    throw UsageError("induced_bundle: subgroup must start with the identity and match lambda");
  std::vector<int> local(n, -1);
  for (std::size_t i = 0; i < subgroup.size(); ++i) {
    if (!commutes(grp, subgroup[i], g)) throw UsageError("induced_bundle: subgroup must centralize g");
    local[subgroup[i]] = static_cast<int>(i);
  }
  for (Element h1 : subgroup)
    for (Element h2 : subgroup) {
      if (local[grp.mul(h1, h2)] < 0) throw UsageError("induced_bundle: elements do not form a subgroup");
      // δλ(h1,h2) = λ(h2) - λ(h1h2) + λ(h1) must equal τ_g(h1,h2).
      const auto d = lambda[local[h2]] - lambda[local[grp.mul(h1, h2)]] + lambda[local[h1]];
      if (d != context->tau_at(g, h1, h2))
        throw ValidationError("induced_bundle: lambda does not trivialize tau on the subgroup at " +
                              tuple_text(std::vector<int>{h1, h2}));
    }
  // Right cosets Hw with their smallest element as representative;
  // w = h * rep.
  std::vector<int> coset(n, -1), factor(n, -1), reps;
  for (int w = 0; w < n; ++w) {
    if (coset[w] >= 0) continue;
    for (Element h : subgroup) {
      coset[grp.mul(h, w)] = static_cast<int>(reps.size());
      factor[grp.mul(h, w)] = h;
    }
    reps.push_back(w);
  }
  // m_{hw} = exp(2πi(λ(h) - τ(g;h,w))) m_w and m_r . (x,u) = exp(2πi τ(g;r,u)) m_{ru}.
  std::vector<Element> sectors;
  for (Element r : reps) sectors.push_back(grp.conj(g, r));
  std::vector<MonomialEntry> action;
  action.reserve(static_cast<std::size_t>(n) * reps.size());
  for (int u = 0; u < n; ++u)
    for (Element r : reps) {
      const Element w = grp.mul(r, u);
      const Element h = factor[w];
      const Element r2 = reps[coset[w]];
      action.push_back({coset[w], context->tau_at(g, r, u) + lambda[local[h]] - context->tau_at(g, h, r2)});
    }
  return TwistedBundle(context, std::move(sectors), std::move(action));
}

TwistedBundle regular_bundle(const ContextPtr& context, Element g) {
  return induced_bundle(context, g, {0}, {RationalAngle()});
}

std::vector<TwistedBundle> irreducible_basis(const ContextPtr& context) {
  const FiniteGroup& grp = context->group;
  const auto classes = conjugacy_classes(grp);
  std::vector<TwistedBundle> out;
  for (int c = 0; c < classes.count(); ++c) {
    const Element g = classes.representative(c);
    const Subgroup& z = context->centralizers[g];
    const FiniteGroup zg = z.as_group();
    const int target = twisted_rank(normalize_cocycle(context->sector_cocycle(g)).cocycle);
    std::vector<KClass> found;
    for (const Subgroup& h : all_subgroups(zg)) {
      if (static_cast<int>(found.size()) == target) break;
      const FiniteGroup hg = h.as_group();
      std::vector<Element> members;
      for (int m : h.members) members.push_back(z.members[m]);
      Cochain restricted(point_groupoid(hg), 2);
      for (int a = 0; a < hg.order(); ++a)
        for (int b = 0; b < hg.order(); ++b) {
          const auto t = context->tau_at(g, members[a], members[b]);
          if (!t.is_zero()) restricted.set({a, b}, t);
        }
      const auto base = hg.order() == 1 ? std::optional<Cochain>(Cochain(point_groupoid(hg), 1))
                                         : coboundary_solve(restricted);
      if (!base) continue;
      const int m = hg.exponent();
      for (const auto& chi : homomorphisms_to_cyclic(hg, m)) {
        std::vector<RationalAngle> lambda;
        for (int a = 0; a < hg.order(); ++a) lambda.push_back((*base)({a}) + RationalAngle(chi[a], m));
        TwistedBundle v = induced_bundle(context, g, members, lambda);
        KClass x = character(v);
        if (sector_inner_product(x, x, g) != Cyclotomic(1)) continue;
        if (std::find(found.begin(), found.end(), x) != found.end()) continue;
        found.push_back(std::move(x));
        out.push_back(std::move(v));
        if (static_cast<int>(found.size()) == target) break;
      }
    }
    if (static_cast<int>(found.size()) != target)
      throw ValidationError("monomial induction reached " + std::to_string(found.size()) + " of " +
                            std::to_string(target) + " irreducibles in the sector of " + std::to_string(g));
  }
  return out;
}

namespace {

// Solves for coefficients in a fixed basis of characters: an invertible
// square block on independent rows, then a residual check on all rows.
class BasisSolver {
 public:
  explicit BasisSolver(const std::vector<KClass>& basis) : basis_(basis) {
    const int m = static_cast<int>(basis.size());
    const auto& ctx = basis.front().context();
    const int n = ctx->group.order();
    for (int x = 0; x < n; ++x)
      for (Element u : ctx->centralizers[x].members) rows_.push_back(x * n + u);
    // Greedy choice of independent rows.
    std::vector<std::vector<Cyclotomic>> reduced;
    std::vector<int> pivot_col;
    for (int r : rows_) {
      if (static_cast<int>(chosen_.size()) == m) break;
      std::vector<Cyclotomic> v(m);
      for (int k = 0; k < m; ++k) v[k] = basis[k].values()[r];
      for (std::size_t p = 0; p < reduced.size(); ++p) {
        if (v[pivot_col[p]].is_zero()) continue;
        const Cyclotomic f = v[pivot_col[p]];
        for (int k = 0; k < m; ++k)
          if (!reduced[p][k].is_zero()) v[k] -= f * reduced[p][k];
      }
      int col = -1;
      for (int k = 0; k < m; ++k)
        if (!v[k].is_zero()) {
          col = k;
          break;
        }
      if (col < 0) continue;
      const Cyclotomic inv = v[col].inverse();
      for (auto& e : v) e *= inv;
      reduced.push_back(std::move(v));
      pivot_col.push_back(col);
      chosen_.push_back(r);
    }
    if (static_cast<int>(chosen_.size()) < m) throw ValidationError("basis characters are linearly dependent");
    std::vector<std::vector<Cyclotomic>> block(m, std::vector<Cyclotomic>(m));
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) block[i][k] = basis[k].values()[chosen_[i]];
    inverse_.assign(m, std::vector<Cyclotomic>(m));
    for (int col = 0; col < m; ++col) {
      std::vector<Cyclotomic> e(m);
      e[col] = 1;
      const auto x = cyclotomic_solve(block, e);
      for (int k = 0; k < m; ++k) inverse_[k][col] = x[k];
    }
  }

  /// Coefficients of `target`, or a description of the residual.
  std::vector<Cyclotomic> solve(const KClass& target, std::string& residual) const {
    const int m = static_cast<int>(basis_.size());
    std::vector<Cyclotomic> coeff(m);
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i) {
        const Cyclotomic& t = target.values()[chosen_[i]];
        if (!t.is_zero() && !inverse_[k][i].is_zero()) coeff[k] += inverse_[k][i] * t;
      }
    const int n = target.context()->group.order();
    for (int r : rows_) {
      Cyclotomic sum;
      for (int k = 0; k < m; ++k)
        if (!coeff[k].is_zero() && !basis_[k].values()[r].is_zero()) sum += coeff[k] * basis_[k].values()[r];
      if (sum != target.values()[r]) {
        residual = "residual " + (target.values()[r] - sum).to_string() + " at (g,u) = (" + std::to_string(r / n) +
                   "," + std::to_string(r % n) + ")";
        break;
      }
    }
    return coeff;
  }

 private:
  const std::vector<KClass>& basis_;
  std::vector<int> rows_;
  std::vector<int> chosen_;
  std::vector<std::vector<Cyclotomic>> inverse_;
};

}  // namespace

StructureTable structure_constants(const std::vector<KClass>& basis, int workers) {
  StructureTable table;
  table.size = static_cast<int>(basis.size());
  if (basis.empty()) return table;
  for (const auto& b : basis) require_same_context(b.context(), basis.front().context());
  const BasisSolver solver(basis);
  const int m = table.size;
  table.constants.assign(static_cast<std::size_t>(m) * m * m, 0);
  parallel_for(static_cast<std::size_t>(m) * m, workers, [&](std::size_t idx) {
    const int i = static_cast<int>(idx / m), j = static_cast<int>(idx % m);
    std::string residual;
    const auto coeff = solver.solve(star(basis[i], basis[j]), residual);
    if (!residual.empty())
      throw ValidationError("product " + std::to_string(i) + "*" + std::to_string(j) + " leaves the span: " +
                            residual);
    for (int k = 0; k < m; ++k) {
      const auto q = coeff[k].rational();
      if (!q || q->get_den() != 1)
        throw ValidationError("non-integral structure constant at " + tuple_text(std::vector<int>{i, j, k}) + ": " +
                              coeff[k].to_string());
      table.constants[idx * m + k] = q->get_num().get_si();
    }
  });
  return table;
}

RingCheck check_ring_axioms(const std::vector<KClass>& basis, int workers) {
  RingCheck out;
  const std::size_t m = basis.size();
  std::vector<std::optional<KClass>> pair(m * m);
  parallel_for(m * m, workers, [&](std::size_t idx) { pair[idx] = star(basis[idx / m], basis[idx % m]); });
  for (std::size_t i = 0; i < m && out.commutative; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!(*pair[i * m + j] == *pair[j * m + i])) {
        out.commutative = false;
        out.commutativity_witness = std::array<int, 2>{static_cast<int>(i), static_cast<int>(j)};
        break;
      }
  std::vector<char> ok(m * m * m, 1);
  parallel_for(m * m * m, workers, [&](std::size_t idx) {
    const std::size_t i = idx / (m * m), j = (idx / m) % m, k = idx % m;
    ok[idx] = star(*pair[i * m + j], basis[k]) == star(basis[i], *pair[j * m + k]);
  });
  out.triples = static_cast<std::int64_t>(m * m * m);
  for (std::size_t idx = 0; idx < ok.size(); ++idx)
    if (!ok[idx]) {
      out.associative = false;
      out.associativity_witness = std::array<int, 3>{static_cast<int>(idx / (m * m)), static_cast<int>((idx / m) % m),
                                                     static_cast<int>(idx % m)};
      break;
    }
  return out;
}

}  // namespace orbk
