#include <doctest.h>

#include "support/properties.hpp"
#include "support/samples.hpp"

// Seeded draws from every constructor; each invariant is checked on all of
// them. The acceptance binary runs the same checks on a larger draw.

namespace {

const std::vector<samples::Sample>& draws() {
  static const std::vector<samples::Sample> d = samples::Generator(97).draw(40, 12);
  return d;
}

void check_all(const std::function<std::string(const schur::SRing&)>& check) {
  for (const auto& s : draws()) {
    INFO(s.kind);
    CHECK(check(s.ring) == "");
  }
}

}  // namespace

TEST_CASE("constructor outputs satisfy the axioms") { check_all(props::axioms); }

TEST_CASE("structure constant identities") { check_all(props::tensor_identities); }

TEST_CASE("basic sets of S-rings over abelian groups are permuted by units") {
  check_all(props::rational_closure);
}

TEST_CASE("algebraic automorphisms extend to generated subgroups and radicals") {
  check_all([](const schur::SRing& a) { return props::extension_identities(a); });
}

TEST_CASE("the color matrix is already 2-WL stable") { check_all(props::wl_stable); }

TEST_CASE("cyclotomic rings are orbit rings") {
  samples::Generator gen(5);
  for (int i = 0; i < 25; ++i) {
    schur::GroupSpec g = gen.group(12);
    CHECK(props::cyclotomic_is_orbit(g, gen.random_automorphisms(g, gen.uniform(1, 3))) == "");
  }
}

TEST_CASE("lifted maps restrict correctly and stay algebraic") {
  samples::Generator gen(8);
  for (int i = 0; i < 15; ++i) {
    auto ls = gen.lift();
    std::vector<int> embed;
    for (int x = 0; x < ls.b.group().order(); ++x) {
      schur::Elem e = ls.b.group().element(x);
      e.residues.push_back(0);
      embed.push_back(ls.g.index(e));
    }
    CHECK(props::lift_properties(ls.b, ls.phi, ls.h, embed, ls.lift) == "");
  }
}

TEST_CASE("normalizer stabilizer equals Aut(A) meet Aut(G) on schurian rings") {
  int checked = 0;
  for (const auto& s : draws()) {
    if (!schur::is_schurian(s.ring).schurian) continue;
    auto out = props::normalizer_identity(s.ring);
    CHECK(out.error == "");
    checked += out.checked;
  }
  CHECK(checked > 0);
}
