#include "schur/constructors.hpp"

#include <algorithm>
#include <stdexcept>
#include <map>
#include <set>

#include "schur/error.hpp"
#include "schur/iso.hpp"

namespace schur {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

std::vector<int> checked_embedding(const GroupSpec& g, const Subgroup& sub, const GroupSpec& inner,
                                   std::span<const int> embed) {
  std::vector<int> e(embed.begin(), embed.end());
  if (e.empty()) {
    e = default_embedding(g, sub);
    if (static_cast<int>(e.size()) != inner.order())
      throw Error(ErrorKind::QuotientMismatch, "ring group order differs from subgroup order");
    GroupSpec nf = quotient_section(g, sub, trivial_subgroup()).quotient;
    if (!(nf == inner))
      throw Error(ErrorKind::QuotientMismatch, "ring group is not the invariant-factor form of the subgroup");
    return e;
  }
  if (static_cast<int>(e.size()) != inner.order())
    throw Error(ErrorKind::QuotientMismatch, "embedding length differs from ring group order");
  std::vector<int> sorted = e;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != sub.members) throw Error(ErrorKind::QuotientMismatch, "embedding image is not the subgroup");
  for (int x = 0; x < inner.order(); ++x)
    for (int y = 0; y < inner.order(); ++y)
      if (e[at(inner.add(x, y))] != g.add(e[at(x)], e[at(y)]))
        throw Error(ErrorKind::QuotientMismatch, "embedding is not a homomorphism");
  return e;
}

// Classes of a ring over the quotient G/L pulled back to G.
std::vector<std::vector<int>> preimages(const Section& q, const SRing& a_q) {
  std::vector<std::vector<int>> out(at(a_q.rank()));
  for (int x = 0; x < static_cast<int>(q.projection.size()); ++x)
    out[at(a_q.class_of(q.project(x)))].push_back(x);
  return out;
}

}  // namespace

SRing cyclotomic(const GroupSpec& g, std::span<const Perm> k_generators) {
  for (const Perm& f : k_generators) {
    if (f.degree() != g.order() || !is_group_automorphism(g, f))
      throw Error(ErrorKind::NotAutomorphism, "generator is not an automorphism of the group");
  }
  return validate_sring(g, orbits_of(g.order(), k_generators));
}

SRing cyclotomic(const GroupSpec& g, const PermGroup& k) { return cyclotomic(g, k.generators()); }

SRing orbit_sring(const GroupSpec& g, const PermGroup& k) {
  if (k.degree() != g.order()) throw Error(ErrorKind::InvalidInput, "group degree mismatch");
  for (const Perm& t : right_translations(g))
    if (!k.contains(t))
      throw Error(ErrorKind::RightRegularNotContained, "K does not contain the right regular representation");
  PermGroup chain(g.order(), k.generators(), {0});
  auto stab = chain.stabilizer_generators(1);
  return validate_sring(g, orbits_of(g.order(), stab));
}

SRing tensor(const SRing& a1, const SRing& a2) {
  const GroupSpec& g1 = a1.group();
  const GroupSpec& g2 = a2.group();
  std::vector<int> factors = g1.factors();
  factors.insert(factors.end(), g2.factors().begin(), g2.factors().end());
  GroupSpec g(factors);
  std::vector<std::vector<int>> parts;
  for (const auto& x1 : a1.classes()) {
    for (const auto& x2 : a2.classes()) {
      std::vector<int> cls;
      for (int u : x1)
        for (int v : x2) cls.push_back(u * g2.order() + v);
      parts.push_back(std::move(cls));
    }
  }
  return validate_sring(g, std::move(parts));
}

std::vector<int> default_embedding(const GroupSpec& g, const Subgroup& sub) {
  Section s = quotient_section(g, sub, trivial_subgroup());
  std::vector<int> e(at(s.quotient.order()));
  for (int x : sub.members) e[at(s.project(x))] = x;
  return e;
}

SRing s_wreath(const SRing& a_u, const SRing& a_q, const GroupSpec& g, const Subgroup& u,
               const Subgroup& l, std::span<const int> embed_u) {
  std::vector<int> e = checked_embedding(g, u, a_u.group(), embed_u);
  Section q = quotient_section(g, whole_group(g), l);
  if (!(q.quotient == a_q.group()))
    throw Error(ErrorKind::QuotientMismatch, "quotient ring group is not the invariant-factor form of G/L");

  std::vector<std::vector<int>> inside;
  for (const auto& cls : a_u.classes()) {
    std::vector<int> mapped;
    for (int x : cls) mapped.push_back(e[at(x)]);
    std::sort(mapped.begin(), mapped.end());
    inside.push_back(std::move(mapped));
  }

  // Both rings must induce the same partition of U/L.
  std::set<std::vector<int>> from_u, from_q;
  std::vector<int> l_in_u;
  for (const auto& cls : inside) {
    std::set<int> img;
    for (int x : cls) img.insert(q.project(x));
    from_u.insert({img.begin(), img.end()});
    if (l.contains(cls[0])) l_in_u.insert(l_in_u.end(), cls.begin(), cls.end());
  }
  std::sort(l_in_u.begin(), l_in_u.end());
  if (l_in_u != l.members)
    throw Error(ErrorKind::IncompatibleOnSection, "L is not a union of basic sets of A_U");
  std::vector<char> in_section(at(q.quotient.order()), 0);
  for (int x : u.members) in_section[at(q.project(x))] = 1;
  auto pulled = preimages(q, a_q);
  std::vector<std::vector<int>> parts = inside;
  for (int c = 0; c < a_q.rank(); ++c) {
    const auto& ycls = a_q.basic_set(c);
    std::size_t hits = 0;
    for (int y : ycls) hits += in_section[at(y)] ? 1 : 0;
    if (hits == ycls.size()) {
      from_q.insert(ycls);
    } else if (hits == 0) {
      parts.push_back(pulled[at(c)]);
    } else {
      throw Error(ErrorKind::IncompatibleOnSection, "U/L is not a union of basic sets of the quotient ring");
    }
  }
  // Images of A_U classes may repeat; the induced partition is their set.
  if (from_u != from_q)
    throw Error(ErrorKind::IncompatibleOnSection, "rings induce different partitions on U/L");
  return validate_sring(g, std::move(parts));
}

SRing wreath(const SRing& a_l, const SRing& a_q, const GroupSpec& g, const Subgroup& l,
             std::span<const int> embed_l) {
  return s_wreath(a_l, a_q, g, l, l, embed_l);
}

SRing fusion(const SRing& a, std::span<const AlgMap> phi_generators) {
  for (const AlgMap& phi : phi_generators) {
    if (phi.degree() != a.rank() || !is_algebraic_iso(a, a, phi).ok)
      throw Error(ErrorKind::MapNotAlgebraic, "fusion map is not an algebraic automorphism");
  }
  // Orbits of the generated group coincide with orbits of its generators.
  auto orbits = orbits_of(a.rank(), phi_generators);
  std::vector<std::vector<int>> parts;
  for (const auto& orb : orbits) {
    std::vector<int> cls;
    for (int c : orb) cls.insert(cls.end(), a.basic_set(c).begin(), a.basic_set(c).end());
    parts.push_back(std::move(cls));
  }
  return validate_sring(a.group(), std::move(parts));
}

LiftResult nonsep_lift(const SRing& b, const AlgMap& phi, const GroupSpec& g, const Subgroup& h,
                       std::span<const int> embed_h) {
  if (phi.degree() != b.rank() || !is_algebraic_iso(b, b, phi).ok)
    throw Error(ErrorKind::MapNotAlgebraic, "phi is not an algebraic automorphism of B");
  std::vector<int> e = checked_embedding(g, h, b.group(), embed_h);
  Section q = quotient_section(g, whole_group(g), h);
  SRing a = wreath(b, group_ring(q.quotient), g, h, e);

  std::vector<int> psi(at(a.rank()));
  for (int c = 0; c < a.rank(); ++c) psi[at(c)] = c;
  for (int c = 0; c < b.rank(); ++c) {
    int from = a.class_of(e[at(b.basic_set(c)[0])]);
    int to = a.class_of(e[at(b.basic_set(phi[c])[0])]);
    psi[at(from)] = to;
  }
  AlgMap m(psi);
  auto check = is_algebraic_iso(a, a, m);
  if (!check.ok) throw Error(ErrorKind::MapNotAlgebraic, "lifted map is not algebraic: " + check.reason);
  return {a, m};
}

namespace {

Perm automorphism_from(const GroupSpec& g, const std::vector<Elem>& images) {
  auto f = hom_from_generator_images(g, images);
  if (!f) throw std::logic_error("witness generator images do not define an automorphism");
  return f->as_perm();
}

struct Rep {
  const char* name;
  std::vector<int> residues;
};

std::vector<NamedClass> name_classes(const GroupSpec& g, const SRing& a, const std::vector<Rep>& reps) {
  std::vector<NamedClass> out;
  for (const Rep& r : reps) out.push_back({r.name, a.class_of(g.index(Elem{r.residues}))});
  return out;
}

int named(const std::vector<NamedClass>& names, std::string_view n) {
  for (const auto& c : names)
    if (c.name == n) return c.index;
  return -1;
}

AlgMap swap_map(int rank, const std::vector<NamedClass>& names,
                const std::vector<std::pair<const char*, const char*>>& swaps) {
  std::vector<int> m(at(rank));
  for (int c = 0; c < rank; ++c) m[at(c)] = c;
  for (auto [x, y] : swaps) std::swap(m[at(named(names, x))], m[at(named(names, y))]);
  return AlgMap(m);
}

}  // namespace

Witness witness_p2() {
  GroupSpec g({2, 2, 4});
  // f: (a, b, c) -> (a, b a c1, c a)
  Perm f = automorphism_from(g, {Elem{{1, 0, 0}}, Elem{{1, 1, 2}}, Elem{{1, 0, 1}}});
  SRing a = cyclotomic(g, std::vector<Perm>{f});
  auto names = name_classes(g, a,
                            {{"T0", {0, 0, 0}},
                             {"T1", {1, 0, 0}},
                             {"T2", {0, 0, 2}},
                             {"T3", {1, 0, 2}},
                             {"X1", {0, 0, 1}},
                             {"X2", {0, 0, 3}},
                             {"Y1", {0, 1, 0}},
                             {"Y2", {1, 1, 0}},
                             {"Z1", {0, 1, 1}},
                             {"Z2", {1, 1, 1}}});
  AlgMap phi = swap_map(a.rank(), names, {{"T2", "T3"}, {"Y1", "Z1"}, {"Y2", "Z2"}});
  if (!is_algebraic_iso(a, a, phi).ok) throw std::logic_error("witness map is not algebraic");
  return {a, phi, {f}, names};
}

Witness witness_p3() {
  GroupSpec g({3, 3, 9});
  // f1 inverts, f2: c -> c c1, f3: b -> b a.
  Perm f1 = automorphism_from(g, {Elem{{2, 0, 0}}, Elem{{0, 2, 0}}, Elem{{0, 0, 8}}});
  Perm f2 = automorphism_from(g, {Elem{{1, 0, 0}}, Elem{{0, 1, 0}}, Elem{{0, 0, 4}}});
  Perm f3 = automorphism_from(g, {Elem{{1, 0, 0}}, Elem{{1, 1, 0}}, Elem{{0, 0, 1}}});
  std::vector<Perm> gens{f1, f2, f3};
  SRing a = cyclotomic(g, gens);
  auto names = name_classes(g, a,
                            {{"T0", {0, 0, 0}},
                             {"T1", {1, 0, 0}},
                             {"T2", {0, 0, 3}},
                             {"T3", {1, 0, 3}},
                             {"T4", {2, 0, 3}},
                             {"X1", {0, 0, 1}},
                             {"X2", {1, 0, 1}},
                             {"X3", {2, 0, 1}},
                             {"Y1", {0, 1, 0}},
                             {"Y2", {0, 1, 3}},
                             {"Y3", {0, 2, 3}},
                             {"Z1", {0, 1, 1}},
                             {"Z2", {0, 2, 1}}});
  AlgMap phi = swap_map(a.rank(), names, {{"T3", "T4"}});
  if (!is_algebraic_iso(a, a, phi).ok) throw std::logic_error("witness map is not algebraic");
  return {a, phi, gens, names};
}

std::pair<Subgroup, std::vector<int>> p2_lift_subgroup(const GroupSpec& g) {
  GroupSpec inner({2, 2, 4});
  std::vector<int> e(at(inner.order()));
  for (int x = 0; x < inner.order(); ++x) {
    Elem r = inner.element(x);
    e[at(x)] = g.index(Elem{{r.residues[0], r.residues[1], 2 * r.residues[2]}});
  }
  std::vector<int> gens{e[at(inner.generator(0))], e[at(inner.generator(1))], e[at(inner.generator(2))]};
  return {generated_subgroup(g, gens), e};
}

}  // namespace schur
