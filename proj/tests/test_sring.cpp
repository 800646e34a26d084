#include <doctest.h>

#include <set>

#include "schur/constructors.hpp"
#include "schur/enumeration.hpp"
#include "schur/error.hpp"
#include "schur/sring.hpp"
#include "support/oracles.hpp"

using namespace schur;

namespace {

ErrorKind kind_of(const GroupSpec& g, std::vector<std::vector<int>> parts) {
  try {
    validate_sring(g, std::move(parts));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("partition was accepted");
  return ErrorKind::InvalidInput;
}

// The rank-3 ring over C3^3 whose two non-trivial classes have 13 elements:
// orbits of an automorphism of order 13.
SRing thirteen_ring() {
  GroupSpec g({3, 3, 3});
  for (const Perm& f : automorphism_group(g).elements(20000)) {
    Perm p = f;
    int k = 1;
    while (!p.is_identity()) {
      p = p * f;
      ++k;
    }
    if (k == 13) return cyclotomic(g, std::vector<Perm>{f});
  }
  FAIL("no automorphism of order 13");
  return SRing();
}

}  // namespace

TEST_CASE("each axiom violation has its own error kind") {
  GroupSpec c4({4});
  CHECK(kind_of(c4, {{0}, {1, 2}}) == ErrorKind::NotAPartition);
  CHECK(kind_of(c4, {{0}, {1, 2, 3}, {2}}) == ErrorKind::NotAPartition);
  CHECK(kind_of(c4, {{0, 2}, {1, 3}}) == ErrorKind::IdentityNotSingleton);
  CHECK(kind_of(GroupSpec({5}), {{0}, {1}, {2, 3, 4}}) == ErrorKind::NotInverseClosed);
  // {1,2} and {3,4} are mutually inverse, so only the product axiom fails.
  CHECK(kind_of(GroupSpec({5}), {{0}, {1, 2}, {3, 4}}) == ErrorKind::NotClosedUnderProduct);
  CHECK(kind_of(GroupSpec({7}), {{0}, {1, 6}, {2, 3, 4, 5}}) == ErrorKind::NotClosedUnderProduct);
}

TEST_CASE("error messages name the offending classes") {
  try {
    validate_sring(GroupSpec({7}), std::vector<std::vector<int>>{{0}, {1, 6}, {2, 3, 4, 5}});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("class") != std::string::npos);
  }
}

TEST_CASE("classes are ordered by smallest element and sorted") {
  SRing a = validate_sring(GroupSpec({6}), std::vector<std::vector<int>>{{5, 1}, {0}, {4, 2}, {3}});
  CHECK(a.classes() == std::vector<std::vector<int>>{{0}, {1, 5}, {2, 4}, {3}});
  CHECK(a.class_of(5) == 1);
  CHECK(a.inverse_class(1) == 1);
  CHECK(a.sizes() == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("structure constants match indicator convolution on every small ring") {
  for (auto f : std::vector<std::vector<int>>{{4}, {2, 2}, {6}, {2, 4}, {3, 3}}) {
    GroupSpec g(f);
    for (const SRing& a : enumerate_srings(g)) CHECK(a.constants() == oracle::convolution_constants(a));
  }
}

TEST_CASE("group ring and rank-two ring") {
  GroupSpec g({2, 4});
  SRing z = group_ring(g);
  CHECK(z.rank() == 8);
  SRing t = rank_two(g);
  CHECK(t.rank() == 2);
  CHECK(t.constants()(1, 1, 1) == 6);
  CHECK(t.constants()(1, 1, 0) == 7);
  CHECK(rank_two(GroupSpec()).rank() == 1);
}

TEST_CASE("radicals agree with the definition") {
  GroupSpec g({2, 4});
  for (const SRing& a : enumerate_srings(g))
    for (const auto& cls : a.classes()) CHECK(radical(g, cls).members == oracle::radical_by_definition(g, cls));
}

TEST_CASE("A-subgroups are exactly the subgroups that are unions of classes") {
  for (auto f : std::vector<std::vector<int>>{{2, 2, 2}, {2, 4}, {9}}) {
    GroupSpec g(f);
    for (const SRing& a : enumerate_srings(g)) {
      std::set<std::vector<int>> want;
      for (const auto& s : oracle::subgroups_by_closure(g))
        if (is_a_set(a, s)) want.insert(s);
      std::set<std::vector<int>> got;
      for (const auto& s : a_subgroups(a)) got.insert(s.members);
      CHECK(got == want);
    }
  }
}

TEST_CASE("A-set decomposition") {
  SRing a = group_ring(GroupSpec({3}));
  CHECK(a_set_classes(a, std::vector<int>{0, 2}) == std::vector<int>{0, 2});
  SRing t = rank_two(GroupSpec({3}));
  CHECK_FALSE(is_a_set(t, std::vector<int>{0, 1}));
  try {
    a_set_classes(t, std::vector<int>{1});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAnASet);
  }
}

TEST_CASE("induced rings on sections") {
  GroupSpec g({2, 4});
  SRing z = group_ring(g);
  for (const auto& u : all_subgroups(g))
    for (const auto& l : all_subgroups(g)) {
      if (!std::includes(u.members.begin(), u.members.end(), l.members.begin(), l.members.end())) continue;
      SRing s = induced_sring(z, quotient_section(g, u, l));
      CHECK(s.rank() == u.order() / l.order());
    }
  SRing t = rank_two(g);
  Subgroup c = generated_subgroup(g, std::vector<int>{1});
  try {
    induced_sring(t, quotient_section(g, c, trivial_subgroup()));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASection);
  }
}

TEST_CASE("rational conjugates permute basic sets") {
  GroupSpec g({9});
  SRing z = group_ring(g);
  CHECK(rational_conjugate(z, z.class_of(1), 2) == z.class_of(2));
  CHECK_THROWS_AS(rational_conjugate(z, 1, 3), Error);
}

TEST_CASE("tensor decompositions rebuild the ring") {
  for (auto f : std::vector<std::vector<int>>{{2, 2, 2}, {2, 4}, {3, 3}}) {
    GroupSpec g(f);
    for (const SRing& a : enumerate_srings(g)) {
      for (const TensorSplit& t : detect_tensor(a)) {
        SRing a1 = restrict_to(a, t.first), a2 = restrict_to(a, t.second);
        auto e1 = default_embedding(g, t.first), e2 = default_embedding(g, t.second);
        std::set<std::vector<int>> rebuilt;
        for (const auto& x : a1.classes())
          for (const auto& y : a2.classes()) {
            std::vector<int> cls;
            for (int u : x)
              for (int v : y) cls.push_back(g.add(e1[static_cast<std::size_t>(u)], e2[static_cast<std::size_t>(v)]));
            std::sort(cls.begin(), cls.end());
            rebuilt.insert(cls);
          }
        CHECK(rebuilt == std::set<std::vector<int>>(a.classes().begin(), a.classes().end()));
        CHECK(a1.rank() * a2.rank() == a.rank());
      }
    }
  }
}

TEST_CASE("S-wreath decompositions rebuild the ring") {
  for (auto f : std::vector<std::vector<int>>{{2, 4}, {2, 2, 2}, {8}}) {
    GroupSpec g(f);
    int sections = 0;
    for (const SRing& a : enumerate_srings(g)) {
      for (const Section& s : detect_s_wreath(a)) {
        ++sections;
        CHECK(s.lower.order() > 1);
        CHECK(s.upper.order() < g.order());
        SRing a_u = restrict_to(a, s.upper);
        SRing a_q = induced_sring(a, quotient_section(g, whole_group(g), s.lower));
        CHECK(s_wreath(a_u, a_q, g, s.upper, s.lower) == a);
      }
    }
    CHECK(sections > 0);
  }
}

TEST_CASE("wreath products expose the section U = L") {
  GroupSpec g({2, 4});
  Subgroup l = generated_subgroup(g, std::vector<int>{g.generator(0)});
  SRing inner = rank_two(quotient_section(g, l, trivial_subgroup()).quotient);
  SRing quot = rank_two(quotient_section(g, whole_group(g), l).quotient);
  SRing w = wreath(inner, quot, g, l);
  bool found = false;
  for (const Section& s : detect_s_wreath(w)) found = found || (s.upper == l && s.lower == l);
  CHECK(found);
}

TEST_CASE("the 13-13 ring over C3^3 is neither a tensor nor an S-wreath product") {
  SRing a = thirteen_ring();
  CHECK(a.sizes() == std::vector<int>{1, 13, 13});
  CHECK(detect_tensor(a).empty());
  CHECK(detect_s_wreath(a).empty());
}

TEST_CASE("the group ring of C3^3 is a tensor product") {
  CHECK_FALSE(detect_tensor(group_ring(GroupSpec({3, 3, 3}))).empty());
}
