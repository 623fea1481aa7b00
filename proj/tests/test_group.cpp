#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "orbk/group.hpp"

using namespace orbk;

namespace {

std::vector<FiniteGroup> zoo() {
  return {FiniteGroup::cyclic(1),
          FiniteGroup::cyclic(4),
          FiniteGroup::elementary_abelian(2, 3),
          FiniteGroup::elementary_abelian(3, 2),
          FiniteGroup::symmetric(3),
          FiniteGroup::symmetric(4),
          FiniteGroup::dihedral(4),
          FiniteGroup::direct_product(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2))};
}

// Brute-force permutation composition, independent of the library's table.
std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

}  // namespace

TEST_CASE("constructed groups satisfy the axioms") {
  for (const auto& g : zoo()) {
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
      CHECK(g.mul(0, a) == a);
      CHECK(g.mul(a, 0) == a);
      CHECK(g.mul(a, g.inv(a)) == 0);
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
  }
}

TEST_CASE("small group facts") {
  const auto e8 = FiniteGroup::elementary_abelian(2, 3);
  CHECK(e8.order() == 8);
  for (int a = 0; a < 8; ++a) CHECK(e8.inv(a) == a);

  const auto c4 = FiniteGroup::cyclic(4);
  CHECK(c4.order() == 4);
  CHECK(c4.element_order(1) == 4);

  const auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  int involutions = 0;
  for (int a = 1; a < 6; ++a) involutions += (s3.inv(a) == a);
  CHECK(involutions == 3);
  CHECK_FALSE(s3.is_abelian());
  CHECK(FiniteGroup::dihedral(4).order() == 8);
  CHECK(FiniteGroup::dihedral(4).exponent() == 4);
}

TEST_CASE("symmetric group table agrees with permutation composition") {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const auto s3 = FiniteGroup::symmetric(3);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const auto c = compose_perm(perms[a], perms[b]);
      const int idx = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      CHECK(s3.mul(a, b) == idx);
    }
}

TEST_CASE("from_table validation") {
  SUBCASE("identity relabelled to index 0") {
    // Z/2 with the identity stored at index 1.
    const auto g = FiniteGroup::from_table({{1, 0}, {0, 1}});
    CHECK(g.order() == 2);
    CHECK(g.mul(1, 1) == 0);
  }
  SUBCASE("non-associative table names a triple") {
    std::vector<std::vector<int>> t = {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
    try {
      (void)FiniteGroup::from_table(t);
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find('(') != std::string::npos);
    }
  }
  SUBCASE("out of range entry") {
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 2}, {1, 0}}), ValidationError);
  }
  SUBCASE("order cap") {
    CHECK_THROWS_AS(FiniteGroup::direct_product(FiniteGroup::symmetric(4), FiniteGroup::symmetric(4)),
                    ValidationError);
  }
}

TEST_CASE("centralizers") {
  const auto s3 = FiniteGroup::symmetric(3);
  CHECK(centralizer(s3, 0).order() == 6);
  CHECK(centralizer(s3, 1).order() == 2);  // a transposition
  for (int a = 0; a < 8; ++a) CHECK(centralizer(FiniteGroup::elementary_abelian(2, 3), a).order() == 8);
  for (const auto& g : zoo())
    for (int a = 0; a < g.order(); ++a) {
      const Subgroup z = centralizer(g, a);
      CHECK(std::is_sorted(z.members.begin(), z.members.end()));
      for (int h = 0; h < g.order(); ++h) CHECK(z.contains(h) == (g.mul(h, a) == g.mul(a, h)));
      const std::vector<int> gens = {a};
      for (int m : subgroup_generated(g, gens).members) CHECK(z.contains(m));
    }
}

TEST_CASE("conjugacy classes and orbit-stabilizer") {
  const auto s3 = FiniteGroup::symmetric(3);
  const auto cls = conjugacy_classes(s3);
  REQUIRE(cls.count() == 3);
  CHECK(cls.classes[0].size() == 1);
  CHECK(cls.classes[1].size() == 3);
  CHECK(cls.classes[2].size() == 2);
  CHECK(conjugacy_classes(FiniteGroup::elementary_abelian(2, 3)).count() == 8);
  CHECK(conjugacy_classes(FiniteGroup::cyclic(4)).count() == 4);
  CHECK(conjugacy_classes(FiniteGroup::symmetric(4)).count() == 5);
  CHECK(conjugacy_classes(FiniteGroup::dihedral(4)).count() == 5);

  for (const auto& g : zoo()) {
    const auto p = conjugacy_classes(g);
    int total = 0;
    for (int c = 0; c < p.count(); ++c) {
      total += static_cast<int>(p.classes[c].size());
      CHECK(p.representative(c) == *std::min_element(p.classes[c].begin(), p.classes[c].end()));
      if (c > 0) CHECK(p.representative(c - 1) < p.representative(c));
      for (int x : p.classes[c])
        for (int u = 0; u < g.order(); ++u) CHECK(p.class_of[g.conj(x, u)] == c);
    }
    CHECK(total == g.order());
    for (int a = 0; a < g.order(); ++a) {
      CHECK(static_cast<int>(p.classes[p.class_of[a]].size()) * centralizer(g, a).order() == g.order());
    }
  }
}

TEST_CASE("generated subgroups") {
  const auto c4 = FiniteGroup::cyclic(4);
  CHECK(subgroup_generated(c4, std::vector<int>{}).members == std::vector<int>{0});
  CHECK(subgroup_generated(c4, std::vector<int>{1}).order() == 4);
  CHECK(subgroup_generated(c4, std::vector<int>{2}).order() == 2);
  const auto s3 = FiniteGroup::symmetric(3);
  std::vector<int> transpositions;
  for (int a = 1; a < 6; ++a)
    if (s3.element_order(a) == 2) transpositions.push_back(a);
  REQUIRE(transpositions.size() == 3);
  CHECK(subgroup_generated(s3, std::vector<int>{transpositions[0], transpositions[1]}).order() == 6);
}

TEST_CASE("subgroup lattice of small groups") {
  CHECK(all_subgroups(FiniteGroup::symmetric(3)).size() == 6);
  CHECK(all_subgroups(FiniteGroup::elementary_abelian(2, 2)).size() == 5);
  CHECK(all_subgroups(FiniteGroup::dihedral(4)).size() == 10);
  const auto s = centralizer(FiniteGroup::symmetric(3), 1).as_group();
  CHECK(s.order() == 2);
}

TEST_CASE("homomorphisms to cyclic groups") {
  CHECK(homomorphisms_to_cyclic(FiniteGroup::elementary_abelian(2, 3), 2).size() == 8);
  CHECK(homomorphisms_to_cyclic(FiniteGroup::symmetric(3), 2).size() == 2);
  CHECK(homomorphisms_to_cyclic(FiniteGroup::symmetric(3), 3).size() == 1);
  CHECK(homomorphisms_to_cyclic(FiniteGroup::cyclic(4), 4).size() == 4);
  const auto g = FiniteGroup::dihedral(4);
  for (const auto& h : homomorphisms_to_cyclic(g, 4))
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) CHECK(h[g.mul(a, b)] == (h[a] + h[b]) % 4);
}

TEST_CASE("group isomorphisms") {
  const auto a = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  const auto b = FiniteGroup::elementary_abelian(2, 2);
  const auto iso = find_group_isomorphism(a, b);
  REQUIRE(iso.size() == 4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(iso[a.mul(x, y)] == b.mul(iso[x], iso[y]));
  CHECK(find_group_isomorphism(FiniteGroup::cyclic(4), b).empty());
  CHECK(find_group_isomorphism(FiniteGroup::dihedral(3), FiniteGroup::symmetric(3)).size() == 6);
}

TEST_CASE("F2 coordinates") {
  const auto g = FiniteGroup::elementary_abelian(2, 3);
  const auto c = f2_coordinates(g);
  std::set<std::vector<int>> seen(c.begin(), c.end());
  CHECK(seen.size() == 8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int i = 0; i < 3; ++i) CHECK(c[g.mul(a, b)][i] == (c[a][i] ^ c[b][i]));
  CHECK_THROWS_AS(f2_coordinates(FiniteGroup::cyclic(4)), UsageError);
}

TEST_CASE("group spec parsing") {
  CHECK(parse_group_spec("cyclic 5").order() == 5);
  CHECK(parse_group_spec("elemab 2 3").order() == 8);
  CHECK(parse_group_spec("elemab:2,3").order() == 8);
  CHECK(parse_group_spec("cyclic:1").order() == 1);
  CHECK(parse_group_spec("symmetric 3").order() == 6);
  CHECK(parse_group_spec("dihedral:4").order() == 8);
  CHECK(parse_group_spec("product cyclic 4 cyclic 2").order() == 8);
  CHECK(parse_group_spec("cyclic:4*cyclic:2").order() == 8);
  CHECK(parse_group_spec("order 2\n0 1\n1 0\n").order() == 2);
  CHECK_THROWS_AS(parse_group_spec("banana 3"), ValidationError);
  CHECK_THROWS_AS(parse_group_spec("order 2\n0 1\n1 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_group_spec("cyclic 100"), ValidationError);
  CHECK(parse_group_spec("cyclic 100", 128).order() == 100);
}
