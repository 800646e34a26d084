#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "schur/error.hpp"
#include "schur/perm_group.hpp"

using namespace schur;

namespace {

Perm cycle(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (i + 1) % n;
  return Perm(v);
}

Perm transposition(int n, int a, int b) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::swap(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]);
  return Perm(v);
}

// Every element by breadth-first closure; the reference for small groups.
std::set<Perm> closure(const std::vector<Perm>& gens, int n) {
  std::set<Perm> out{Perm::identity(n)};
  std::vector<Perm> queue{Perm::identity(n)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Perm& g : gens) {
      Perm h = queue[i] * g;
      if (out.insert(h).second) queue.push_back(h);
    }
  return out;
}

}  // namespace

TEST_CASE("products act on the right") {
  Perm a({1, 2, 0});
  Perm b({0, 2, 1});
  Perm ab = a * b;
  for (int x = 0; x < 3; ++x) CHECK(ab[x] == b[a[x]]);
  CHECK((a * a.inverse()).is_identity());
  CHECK(Perm::identity(4).first_moved() == -1);
  CHECK(b.first_moved() == 1);
  CHECK_THROWS_AS(Perm({0, 0, 1}), Error);
}

TEST_CASE("symmetric and alternating group orders") {
  for (int n = 2; n <= 9; ++n) {
    PermGroup s(n, {cycle(n), transposition(n, 0, 1)});
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(s.order() == fact);
  }
  std::vector<int> v{1, 2, 0, 3, 4};
  PermGroup a5(5, {Perm(v), Perm({0, 1, 3, 4, 2})});
  CHECK(a5.order() == 60);
  CHECK_FALSE(a5.contains(transposition(5, 0, 1)));
  CHECK(a5.contains(Perm(v) * Perm(v)));
}

TEST_CASE("random subgroups match breadth-first closure") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + trial % 4;
    std::vector<Perm> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<int> v(static_cast<std::size_t>(n));
      std::iota(v.begin(), v.end(), 0);
      // Sparse random perms keep the groups small enough to close.
      std::swap(v[0], v[static_cast<std::size_t>(rng() % static_cast<unsigned>(n))]);
      std::swap(v[1], v[static_cast<std::size_t>(rng() % static_cast<unsigned>(n))]);
      gens.emplace_back(v);
    }
    PermGroup g(n, gens);
    auto all = closure(gens, n);
    CHECK(g.order() == all.size());
    auto listed = g.elements();
    CHECK(std::set<Perm>(listed.begin(), listed.end()) == all);
    for (const Perm& p : all) CHECK(g.contains(p));
  }
}

TEST_CASE("stabilizer chain respects a requested base prefix") {
  int n = 6;
  PermGroup s(n, {cycle(n), transposition(n, 0, 1)}, {3});
  CHECK(s.base().front() == 3);
  PermGroup stab(n, s.stabilizer_generators(1));
  CHECK(stab.order() == 120);
  for (const Perm& p : stab.generators()) CHECK(p[3] == 3);
  auto orbits = orbits_of(n, s.stabilizer_generators(1));
  CHECK(orbits.size() == 2);
}

TEST_CASE("from_bsgs reproduces the order of a known chain") {
  int n = 5;
  PermGroup s(n, {cycle(n), transposition(n, 0, 1)});
  std::vector<Perm> strong;
  for (std::size_t i = 0; i < s.base().size(); ++i)
    for (const Perm& p : s.stabilizer_generators(i)) strong.push_back(p);
  PermGroup copy = PermGroup::from_bsgs(n, s.base(), strong);
  CHECK(copy.order() == s.order());
}

TEST_CASE("element listing honours its limit") {
  PermGroup s(8, {cycle(8), transposition(8, 0, 1)});
  CHECK_THROWS_AS(s.elements(100), Error);
}

TEST_CASE("orbits of a point") {
  std::vector<Perm> gens{Perm({1, 0, 2, 4, 3})};
  CHECK(orbit_of(3, gens, 5) == std::vector<int>{3, 4});
  CHECK(orbits_of(5, gens).size() == 3);
}
