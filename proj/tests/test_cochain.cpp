#include <random>
#include <sstream>

#include "doctest.h"
#include "orbk/cochain.hpp"
#include "orbk/poly2.hpp"

using namespace orbk;

namespace {

RationalAngle q(std::int64_t n, std::int64_t d) { return RationalAngle(n, d); }

std::vector<FiniteGroup> small_groups() {
  return {FiniteGroup::cyclic(4), FiniteGroup::elementary_abelian(2, 2), FiniteGroup::symmetric(3),
          FiniteGroup::dihedral(4)};
}

// Arrow tuple in a sector groupoid of [*/G] starting at the given loops and
// conjugating successively by us.
std::vector<int> sector_path(const SectorGroupoid& s, const FiniteGroup& g, std::vector<int> loops,
                             const std::vector<int>& us) {
  std::vector<int> out;
  for (int u : us) {
    const int o = s.object_of(loops);
    out.push_back(s.arrow_of(o, u));
    for (int& l : loops) l = g.conj(l, u);
  }
  return out;
}

}  // namespace

TEST_CASE("delta on a single arrow pair of Z/2") {
  const auto g = FiniteGroup::cyclic(2);
  Cochain phi(point_groupoid(g), 1);
  phi.set({1}, q(1, 4));
  const Cochain d = delta(phi);
  CHECK(d({1, 1}) == q(1, 2));
  CHECK(d({0, 1}) == q(0, 1));
}

TEST_CASE("delta of a degree-0 cochain on a one-object groupoid vanishes") {
  const auto g = FiniteGroup::symmetric(3);
  Cochain c(point_groupoid(g), 0);
  c.set({0}, q(2, 7));
  CHECK(delta(c).is_zero());
}

TEST_CASE("delta squared vanishes on several groupoids") {
  std::mt19937_64 rng(11);
  const auto s3 = FiniteGroup::symmetric(3);
  std::vector<FiniteGroupoid> gs = {point_groupoid(s3), inertia(point_groupoid(s3)).groupoid,
                                    action_groupoid(FiniteGroup::cyclic(2), {{0, 1}, {1, 0}})};
  for (const auto& gr : gs)
    for (int degree = 0; degree <= 2; ++degree)
      for (int trial = 0; trial < 5; ++trial) {
        const Cochain c = random_cochain(gr, degree, 12, rng);
        CHECK(delta(delta(c)).is_zero());
      }
}

TEST_CASE("theta low-degree expansions") {
  std::mt19937_64 rng(3);
  SUBCASE("degree one: theta is evaluation at the loop") {
    const auto g = FiniteGroup::symmetric(3);
    const auto in = inertia(point_groupoid(g));
    const Cochain phi = random_cochain(point_groupoid(g), 1, 6, rng);
    const Cochain t = theta(phi, in);
    for (int a = 0; a < g.order(); ++a) CHECK(t({in.object_of(std::vector<int>{a})}) == phi({a}));
  }
  SUBCASE("abelian k=1 and the a=u cancellation") {
    const auto g = FiniteGroup::elementary_abelian(2, 2);
    const auto in = inertia(point_groupoid(g));
    const Cochain phi = random_cochain(point_groupoid(g), 2, 8, rng);
    const Cochain t = theta(phi, in);
    for (int a = 0; a < 4; ++a)
      for (int u = 0; u < 4; ++u) {
        const auto path = sector_path(in, g, {a}, {u});
        CHECK(t(path) == phi({u, a}) - phi({a, u}));
        if (a == u) CHECK(t(path).is_zero());
      }
  }
  SUBCASE("k=2 expansion on S3") {
    const auto g = FiniteGroup::symmetric(3);
    const auto in = inertia(point_groupoid(g));
    const Cochain phi = random_cochain(point_groupoid(g), 3, 10, rng);
    const Cochain t = theta(phi, in);
    for (int a = 0; a < 6; ++a)
      for (int u1 = 0; u1 < 6; ++u1)
        for (int u2 = 0; u2 < 6; ++u2) {
          const int a1 = g.conj(a, u1), a2 = g.conj(a1, u2);
          const RationalAngle expect = phi({a, u1, u2}) - phi({u1, a1, u2}) + phi({u1, u2, a2});
          CHECK(t(sector_path(in, g, {a}, {u1, u2})) == expect);
        }
  }
  SUBCASE("zero maps to zero") {
    const auto g = FiniteGroup::dihedral(4);
    const auto in = inertia(point_groupoid(g));
    CHECK(theta(Cochain(point_groupoid(g), 3), in).is_zero());
  }
}

TEST_CASE("mu low-degree expansions") {
  std::mt19937_64 rng(5);
  const auto g = FiniteGroup::symmetric(3);
  const auto two = k_sectors(point_groupoid(g), 2);
  SUBCASE("k=0") {
    const Cochain phi = random_cochain(point_groupoid(g), 2, 9, rng);
    const Cochain m = mu(phi, two);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) CHECK(m({two.object_of(std::vector<int>{a, b})}) == phi({a, b}));
  }
  SUBCASE("k=1 term enumeration") {
    const Cochain phi = random_cochain(point_groupoid(g), 3, 9, rng);
    const Cochain m = mu(phi, two);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int u = 0; u < 6; ++u) {
          const int a1 = g.conj(a, u), b1 = g.conj(b, u);
          const RationalAngle expect = phi({a, b, u}) - phi({a, u, b1}) + phi({u, a1, b1});
          CHECK(m(sector_path(two, g, {a, b}, {u})) == expect);
        }
  }
  SUBCASE("degree below two is rejected") {
    CHECK_THROWS_AS(mu(Cochain(point_groupoid(g), 1), two), UsageError);
    CHECK_THROWS_AS(theta(Cochain(point_groupoid(g), 0), inertia(point_groupoid(g))), UsageError);
  }
}

TEST_CASE("chain map and multiplicative identity in several degrees") {
  std::mt19937_64 rng(17);
  for (const auto& g : small_groups()) {
    CAPTURE(g.order());
    const auto pg = point_groupoid(g);
    const auto in = inertia(pg);
    const auto two = k_sectors(pg, 2);
    const auto e1 = evaluation_hom(Evaluation::First, two, in);
    const auto e2 = evaluation_hom(Evaluation::Second, two, in);
    const auto e12 = evaluation_hom(Evaluation::Product, two, in);
    for (int degree : {2, 3, 4}) {
      CAPTURE(degree);
      const Cochain phi = random_cochain(pg, degree, 24, rng);
      CHECK(delta(theta(phi, in)) == theta(delta(phi), in));
      const Cochain th = theta(phi, in);
      const Cochain rhs = pullback(e1, th) + pullback(e2, th) - pullback(e12, th);
      const Cochain lhs = delta(chain_homotopy(phi, two)) + chain_homotopy(delta(phi), two);
      CHECK(lhs == rhs);
      if (degree == 3) {
        // The unsigned formula closes with the opposite sign on δμ.
        CHECK(mu(delta(phi), two) - delta(mu(phi, two)) == rhs);
      }
    }
  }
}

TEST_CASE("untwisted sector pullback is an explicit coboundary") {
  std::mt19937_64 rng(23);
  for (const auto& g : small_groups()) {
    const auto pg = point_groupoid(g);
    const auto in = inertia(pg);
    const auto two = k_sectors(pg, 2);
    const auto e = unit_embedding(in);
    const auto lambda = identity_section(two);
    for (int trial = 0; trial < 3; ++trial) {
      const Cochain phi = random_three_cocycle(g, rng);
      REQUIRE(is_cocycle(phi));
      const Cochain et = pullback(e, theta(phi, in));
      CHECK(et == delta(pullback(lambda, chain_homotopy(phi, two))));
      // e*θ(φ)(u,v) = θ(φ)(1,u,v)
      const Cochain th = theta(phi, in);
      for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) CHECK(et({u, v}) == th(sector_path(in, g, {0}, {u, v})));
    }
  }
}

TEST_CASE("pullback along the identity is the identity") {
  std::mt19937_64 rng(29);
  const auto pg = point_groupoid(FiniteGroup::dihedral(4));
  const Cochain c = random_cochain(pg, 2, 5, rng);
  CHECK(pullback(identity_hom(pg), c) == c);
}

TEST_CASE("pullback along e1 of a sector-supported cochain") {
  const auto g = FiniteGroup::symmetric(3);
  const auto pg = point_groupoid(g);
  const auto in = inertia(pg);
  const auto two = k_sectors(pg, 2);
  const auto e1 = evaluation_hom(Evaluation::First, two, in);
  // Supported on the transposition sector only.
  Cochain c(in.groupoid, 0);
  for (int a = 0; a < 6; ++a)
    if (g.element_order(a) == 2) c.set({in.object_of(std::vector<int>{a})}, q(1, 3));
  const Cochain p = pullback(e1, c);
  for (int o = 0; o < two.groupoid.object_count(); ++o) {
    const int a = two.loops(o)[0];
    CHECK(p({o}) == (g.element_order(a) == 2 ? q(1, 3) : q(0, 1)));
  }
}

TEST_CASE("shuffle theta agrees with groupoid theta on the sector") {
  std::mt19937_64 rng(31);
  for (const auto& g : {FiniteGroup::elementary_abelian(2, 3), FiniteGroup::symmetric(3)}) {
    const auto pg = point_groupoid(g);
    const auto in = inertia(pg);
    for (int degree : {1, 2, 3}) {
      const Cochain phi = random_cochain(pg, degree, 12, rng);
      const Cochain t = theta(phi, in);
      for (int x = 0; x < g.order(); ++x) CHECK(shuffle_theta(phi, g, x) == restrict_to_sector(t, in, g, x));
    }
  }
  SUBCASE("k=0 is evaluation at g") {
    const auto g = FiniteGroup::cyclic(4);
    Cochain phi(point_groupoid(g), 1);
    phi.set({3}, q(1, 4));
    const Cochain t = shuffle_theta(phi, g, 3);
    CHECK(t({0}) == q(1, 4));
  }
}

TEST_CASE("coboundary_solve") {
  std::mt19937_64 rng(37);
  SUBCASE("zero") {
    const Cochain z(point_groupoid(FiniteGroup::symmetric(3)), 2);
    const auto b = coboundary_solve(z);
    REQUIRE(b);
    CHECK(b->is_zero());
  }
  SUBCASE("round trip on random coboundaries") {
    for (const auto& g : small_groups()) {
      const auto pg = point_groupoid(g);
      for (int degree : {1, 2, 3}) {
        const Cochain c = delta(random_cochain(pg, degree - 1, 12, rng));
        const auto b = coboundary_solve(c);
        REQUIRE(b);
        CHECK(delta(*b) == c);
      }
    }
  }
  SUBCASE("degree one on a groupoid with two components") {
    const auto gr = action_groupoid(FiniteGroup::cyclic(2), {{0, 1}, {1, 0}, {2, 2}});
    Cochain b(gr, 0);
    b.set({0}, q(1, 3));
    b.set({2}, q(1, 5));
    const auto sol = coboundary_solve(delta(b));
    REQUIRE(sol);
    CHECK(delta(*sol) == delta(b));
  }
  SUBCASE("the cyclic generator is not a coboundary") {
    for (int n : {2, 3, 4}) CHECK_FALSE(coboundary_solve(cyclic_three_cocycle(n)));
    CHECK(coboundary_solve(4 * cyclic_three_cocycle(4)));
  }
  SUBCASE("non-cocycles and degree 0 are usage errors") {
    const auto pg = point_groupoid(FiniteGroup::cyclic(3));
    Cochain c(pg, 1);
    c.set({1}, q(1, 2));
    CHECK_THROWS_AS(coboundary_solve(c), UsageError);
    CHECK_THROWS_AS(coboundary_solve(Cochain(pg, 0)), UsageError);
  }
  SUBCASE("the halved xyz class transgresses nontrivially away from the identity") {
    const auto g = FiniteGroup::elementary_abelian(2, 3);
    const Cochain phi = poly_to_cocycle(parse_poly2("xyz"), g);
    for (int x = 0; x < 8; ++x) CHECK(coboundary_solve(shuffle_theta(phi, g, x)).has_value() == (x == 0));
  }
}

TEST_CASE("cup products of mod-2 characters") {
  const auto g = FiniteGroup::elementary_abelian(2, 3);
  const auto pg = point_groupoid(g);
  const auto coords = f2_coordinates(g);
  std::vector<Cochain> duals;
  std::vector<int> basis(3, -1);
  for (int i = 0; i < 3; ++i) {
    Cochain f(pg, 1);
    for (int x = 0; x < 8; ++x)
      if (coords[x][i]) f.set({x}, q(1, 2));
    duals.push_back(f);
    for (int x = 0; x < 8; ++x) {
      int weight = 0;
      for (int j = 0; j < 3; ++j) weight += coords[x][j];
      if (weight == 1 && coords[x][i]) basis[i] = x;
    }
  }
  const Cochain xyz = cup_one_cochains(duals);
  CHECK(xyz({basis[0], basis[1], basis[2]}) == q(1, 2));
  CHECK(xyz({basis[1], basis[1], basis[2]}).is_zero());
  CHECK(xyz({0, basis[1], basis[2]}).is_zero());
  CHECK(is_cocycle(xyz));
  Cochain bad(pg, 1);
  bad.set({basis[0]}, q(1, 2));
  CHECK_THROWS_AS(cup_one_cochains({bad}), ValidationError);
}

TEST_CASE("commutator pairing") {
  std::mt19937_64 rng(41);
  const auto g = FiniteGroup::elementary_abelian(2, 2);
  const auto pg = point_groupoid(g);
  SUBCASE("coboundaries pair trivially") {
    const Cochain c = delta(random_cochain(pg, 1, 8, rng));
    for (const auto& row : commutator_pairing(c))
      for (const auto& v : row) CHECK(v.is_zero());
  }
  SUBCASE("the nontrivial class on (Z/2)^2") {
    const Cochain xy = poly_to_cocycle(parse_poly2("xy"), g);
    const auto beta = commutator_pairing(xy);
    for (int a = 1; a < 4; ++a)
      for (int b = 1; b < 4; ++b) CHECK(beta[a][b] == (a == b ? q(0, 1) : q(1, 2)));
    const auto shifted = commutator_pairing(xy + delta(random_cochain(pg, 1, 8, rng)));
    CHECK(shifted == beta);
  }
  SUBCASE("non-abelian input is rejected") {
    CHECK_THROWS_AS(commutator_pairing(Cochain(point_groupoid(FiniteGroup::symmetric(3)), 2)), UsageError);
  }
}

TEST_CASE("random three-cocycles are cocycles") {
  std::mt19937_64 rng(43);
  for (const auto& g : small_groups())
    for (int i = 0; i < 4; ++i) CHECK(is_cocycle(random_three_cocycle(g, rng)));
}

TEST_CASE("cochain text round trip") {
  std::mt19937_64 rng(47);
  const auto pg = point_groupoid(FiniteGroup::symmetric(3));
  const Cochain c = random_cochain(pg, 2, 7, rng);
  std::stringstream ss;
  write_cochain(ss, c);
  CHECK(read_cochain(ss, pg) == c);
  std::stringstream bad("degree 2\n0 1 1/2 extra\n");
  CHECK_THROWS_AS(read_cochain(bad, pg), ValidationError);
}
