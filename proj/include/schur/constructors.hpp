#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schur/group.hpp"
#include "schur/perm_group.hpp"
#include "schur/sring.hpp"

namespace schur {

/// A bijection of basic-set indices, acting on the right like Perm.
using AlgMap = Perm;

/// cyc(K, G): basic sets are the orbits of K <= Aut(G).
SRing cyclotomic(const GroupSpec& g, std::span<const Perm> k_generators);
SRing cyclotomic(const GroupSpec& g, const PermGroup& k);

/// V(K, G): basic sets are the orbits of K_e; K must contain G_right.
SRing orbit_sring(const GroupSpec& g, const PermGroup& k);

/// Tensor product over G1 x G2 (factors concatenated).
SRing tensor(const SRing& a1, const SRing& a2);

/// Maps each element of the invariant-factor form of `sub` to its element in
/// `g`; this is the default way a ring over a subgroup is placed inside G.
std::vector<int> default_embedding(const GroupSpec& g, const Subgroup& sub);

/// A_L wr A_{G/L}. `a_l` lives on L's group spec, embedded by `embed_l`
/// (default_embedding when empty); `a_q` lives on the invariant-factor form
/// of G/L.
SRing wreath(const SRing& a_l, const SRing& a_q, const GroupSpec& g, const Subgroup& l,
             std::span<const int> embed_l = {});

/// A_U wr_S A_{G/L} for the section S = U/L.
SRing s_wreath(const SRing& a_u, const SRing& a_q, const GroupSpec& g, const Subgroup& u,
               const Subgroup& l, std::span<const int> embed_u = {});

/// The algebraic fusion A^Phi; `phi_generators` generate Phi.
SRing fusion(const SRing& a, std::span<const AlgMap> phi_generators);

struct LiftResult {
  SRing ring;
  AlgMap psi;
};

/// A = B wr Z(G/H) together with psi: phi on basic sets inside H and the
/// identity outside.
LiftResult nonsep_lift(const SRing& b, const AlgMap& phi, const GroupSpec& g, const Subgroup& h,
                       std::span<const int> embed_h = {});

struct NamedClass {
  std::string name;
  int index;
};

struct Witness {
  SRing ring;
  AlgMap phi;
  std::vector<Perm> k_generators;  // generators of K <= Aut(G)
  std::vector<NamedClass> names;   // T0, T1, ... in the usual order
};

Witness witness_p2();
Witness witness_p3();

/// The subgroup H = <a, b, c^2> of C2 x C2 x C8 together with the
/// embedding of C2 x C2 x C4 sending a, b, c to a, b, c^2.
std::pair<Subgroup, std::vector<int>> p2_lift_subgroup(const GroupSpec& g);

}  // namespace schur
