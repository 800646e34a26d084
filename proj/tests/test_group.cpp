#include <doctest.h>

#include <set>

#include "schur/error.hpp"
#include "schur/group.hpp"
#include "support/oracles.hpp"

using namespace schur;

TEST_CASE("mixed-radix indexing puts the identity at 0 and the last factor lowest") {
  GroupSpec g({2, 3, 4});
  CHECK(g.order() == 24);
  CHECK(g.exponent() == 12);
  CHECK(g.element(0).residues == std::vector<int>{0, 0, 0});
  CHECK(g.element(1).residues == std::vector<int>{0, 0, 1});
  CHECK(g.element(4).residues == std::vector<int>{0, 1, 0});
  for (int x = 0; x < g.order(); ++x) CHECK(g.index(g.element(x)) == x);
}

TEST_CASE("group law agrees with residue arithmetic") {
  GroupSpec g({3, 9});
  for (int x = 0; x < g.order(); ++x) {
    CHECK(g.add(x, g.neg(x)) == 0);
    CHECK(g.add(x, 0) == x);
    for (int y = 0; y < g.order(); ++y) {
      Elem ex = g.element(x), ey = g.element(y);
      Elem s = mul(g, ex, ey);
      CHECK(g.index(s) == g.add(x, y));
      CHECK(g.add(x, y) == g.add(y, x));
    }
    int k = 0, y = 0;
    do {
      y = g.add(y, x);
      ++k;
    } while (y != 0);
    CHECK(g.order_of(x) == k);
    CHECK(elem_order(g, g.element(x)) == k);
    CHECK(g.scale(x, k) == 0);
    CHECK(g.scale(x, -1) == g.neg(x));
  }
}

TEST_CASE("invalid factors and residues are rejected") {
  CHECK_THROWS_AS(GroupSpec({1, 2}), Error);
  CHECK_THROWS_AS(GroupSpec({0}), Error);
  GroupSpec g({2, 2});
  CHECK_THROWS_AS(g.index(Elem{{2, 0}}), Error);
  CHECK_THROWS_AS(g.index(Elem{{0}}), Error);
}

TEST_CASE("subgroup lattice matches the closure oracle") {
  for (auto f : std::vector<std::vector<int>>{{2}, {4}, {2, 2}, {6}, {8}, {2, 4}, {2, 2, 2}, {3, 3}, {9}, {2, 6}, {12}, {4, 4}, {2, 2, 4}}) {
    GroupSpec g(f);
    auto subs = all_subgroups(g, g.order());
    std::set<std::vector<int>> got;
    for (const auto& s : subs) {
      got.insert(s.members);
      Subgroup regen = generated_subgroup(g, s.generators);
      CHECK(regen.members == s.members);
    }
    CHECK(got == oracle::subgroups_by_closure(g));
    CHECK(subs.size() == got.size());
  }
}

TEST_CASE("Aut(G) matches the homomorphism scan") {
  for (auto f : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}, {9}, {3, 3}}) {
    GroupSpec g(f);
    PermGroup aut = automorphism_group(g);
    auto scan = oracle::group_automorphisms_by_scan(g);
    CHECK(aut.order() == scan.size());
    for (const Perm& p : aut.elements()) {
      CHECK(scan.count(p.images()) == 1);
      CHECK(is_group_automorphism(g, p));
    }
  }
}

TEST_CASE("automorphism group orders of the elementary abelian cases") {
  CHECK(automorphism_group(GroupSpec({2, 2, 2})).order() == 168);
  CHECK(automorphism_group(GroupSpec({3, 3, 3})).order() == 11232);
  CHECK(automorphism_group(GroupSpec({2, 2, 2, 2})).order() == 20160);
}

TEST_CASE("generator images define a homomorphism only when consistent") {
  GroupSpec g({2, 4});
  std::vector<Elem> swap{Elem{{1, 2}}, Elem{{1, 1}}};
  auto f = hom_from_generator_images(g, swap);
  REQUIRE(f.has_value());
  CHECK(is_group_automorphism(g, f->as_perm()));
  std::vector<Elem> order_breaking{Elem{{0, 1}}, Elem{{0, 1}}};  // |a| = 2 but image has order 4
  CHECK_FALSE(hom_from_generator_images(g, order_breaking).has_value());
  std::vector<Elem> not_onto{Elem{{0, 0}}, Elem{{0, 1}}};
  CHECK_FALSE(hom_from_generator_images(g, not_onto).has_value());
}

TEST_CASE("number of abelian groups of each order") {
  for (int n = 1; n <= 64; ++n) {
    auto groups = enumerate_abelian_groups(n);
    CHECK(static_cast<int>(groups.size()) == oracle::abelian_group_count(n));
    for (const auto& g : groups) CHECK(g.order() == n);
  }
}

TEST_CASE("quotient sections project homomorphically onto groups of the right order") {
  GroupSpec g({2, 2, 8});
  for (const auto& u : all_subgroups(g)) {
    for (const auto& l : all_subgroups(g)) {
      if (!std::includes(u.members.begin(), u.members.end(), l.members.begin(), l.members.end())) continue;
      Section s = quotient_section(g, u, l);
      CHECK(s.quotient.order() * l.order() == u.order());
      for (int x : u.members)
        for (int y : u.members) CHECK(s.project(g.add(x, y)) == s.quotient.add(s.project(x), s.project(y)));
      for (int x : l.members) CHECK(s.project(x) == 0);
    }
  }
  Subgroup a = generated_subgroup(g, std::vector<int>{g.generator(0)});
  Subgroup c = generated_subgroup(g, std::vector<int>{g.generator(2)});
  CHECK_THROWS_AS(quotient_section(g, c, a), Error);
}

TEST_CASE("normal form is an isomorphism onto invariant factors") {
  GroupSpec g({6, 4});
  auto [nf, iso] = normal_form(g);
  CHECK(nf.factors() == std::vector<int>{2, 12});
  for (int x = 0; x < nf.order(); ++x)
    for (int y = 0; y < nf.order(); ++y) CHECK(iso[static_cast<std::size_t>(nf.add(x, y))] == g.add(iso[static_cast<std::size_t>(x)], iso[static_cast<std::size_t>(y)]));
}

TEST_CASE("right translations generate a regular group") {
  GroupSpec g({2, 6});
  PermGroup t(g.order(), right_translations(g));
  CHECK(t.order() == g.order());
  CHECK(t.orbits().size() == 1);
  CHECK(translation(g, 5)[0] == 5);
}
