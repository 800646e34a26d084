#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schur/constructors.hpp"
#include "schur/perm_group.hpp"
#include "schur/sring.hpp"

namespace schur {

inline constexpr int kDefaultIsoBound = 100;
inline constexpr int kDefaultRankBound = 40;

/// Edge coloring of G x G with color(g, h) = class of h - g.
struct ColorMatrix {
  int n = 0;
  int colors = 0;
  std::vector<int> color;  // row-major

  int operator()(int g, int h) const {
    return color[static_cast<std::size_t>(g) * static_cast<std::size_t>(n) + static_cast<std::size_t>(h)];
  }
  friend bool operator==(const ColorMatrix&, const ColorMatrix&) = default;
};

ColorMatrix color_matrix(const SRing& a);

/// Coarsest 2-WL-stable refinement of `initial` (with the diagonal
/// separated). Colors are renumbered in sorted order of their signatures.
ColorMatrix wl_refine(const ColorMatrix& initial);

/// True iff both colorings induce the same partition of pairs.
bool same_partition(const ColorMatrix& x, const ColorMatrix& y);

/// Aut(A): the color-preserving permutations of G. Base starts at e, so
/// level 1 of the chain is Aut(A)_e.
PermGroup automorphisms(const SRing& a, int bound = kDefaultIsoBound);

struct AlgCheck {
  bool ok = true;
  int x = -1, y = -1, z = -1;  // first violating triple, if any
  std::string reason;
};

AlgCheck is_algebraic_iso(const SRing& a, const SRing& b, const AlgMap& m);

/// All algebraic isomorphisms A -> B, sorted by image array.
std::vector<AlgMap> algebraic_isomorphisms(const SRing& a, const SRing& b,
                                           int rank_bound = kDefaultRankBound);
std::vector<AlgMap> algebraic_automorphisms(const SRing& a, int rank_bound = kDefaultRankBound);

/// Image of an A-set under m (sorted element indices of B's group).
std::vector<int> extend_to_set(const SRing& a, const SRing& b, const AlgMap& m,
                               std::span<const int> xs);
Subgroup extend_to_subgroup(const SRing& a, const SRing& b, const AlgMap& m, const Subgroup& h);
Section extend_to_section(const SRing& a, const SRing& b, const AlgMap& m, const Section& s);

/// The class bijection realized by a combinatorial isomorphism f: A -> B.
AlgMap induced_algebraic(const Perm& f, const SRing& a, const SRing& b);

/// Lexicographically least f with phi_f = m, or none when the exhaustive
/// search finds no such f. `aut_b`, when given, must be Aut(B) and is used
/// for orbit pruning.
std::optional<Perm> is_induced(const SRing& a, const SRing& b, const AlgMap& m,
                               int bound = kDefaultIsoBound, const PermGroup* aut_b = nullptr);

struct IsoCount {
  std::optional<Perm> witness;  // lexicographically least isomorphism
  BigInt count = 0;
};

/// Combinatorial isomorphisms A -> B. The count is |Aut(A)| times the number
/// of induced algebraic isomorphisms.
IsoCount color_isomorphisms(const SRing& a, const SRing& b, int bound = kDefaultIsoBound,
                            int rank_bound = kDefaultRankBound);

/// Iso(A) as a permutation group, computed by a search in which the class
/// bijection is discovered during backtracking rather than fixed up front.
/// Independent of the algebraic machinery; intended for small orders.
PermGroup color_automorphism_group_direct(const SRing& a, int bound = 16);

}  // namespace schur
