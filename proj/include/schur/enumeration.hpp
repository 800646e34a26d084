#pragma once

#include <string>
#include <vector>

#include "schur/group.hpp"
#include "schur/perm_group.hpp"
#include "schur/sring.hpp"

namespace schur {

inline constexpr int kDefaultEnumBound = 32;

/// Every S-ring over G, sorted. Orders above `bound` are rejected unless the
/// group is C3 x C3 x C3, which is always accepted.
///
/// The search first enumerates rational S-rings (basic sets closed under
/// x -> mx for every unit m), then splits each basic set W into a single
/// orbit {X^(m)} of the unit group. Every S-ring arises exactly once because
/// its fusion by the unit group is rational.
std::vector<SRing> enumerate_srings(const GroupSpec& g, int bound = kDefaultEnumBound,
                                    int workers = 1);

/// Rational S-rings only, sorted.
std::vector<SRing> enumerate_rational_srings(const GroupSpec& g, int bound = kDefaultEnumBound,
                                             int workers = 1);

/// Lexicographically least class-label vector (restricted growth) of A^f
/// over f in Aut(G).
std::vector<int> cayley_canonical_form(const SRing& a, const std::vector<Perm>& aut_g);

/// One representative per Aut(G)-orbit, each in canonical form, sorted.
std::vector<SRing> up_to_cayley(const std::vector<SRing>& rings, const GroupSpec& g,
                                std::size_t aut_limit = 12000);

enum class Label { Rank2, Tensor, SWreathSmall, Exceptional };

std::string to_string(Label label);

/// Classifies an S-ring over C_p^3, p in {2, 3}.
Label classify(const SRing& a);

struct Table1Row {
  std::string name;
  SRing ring;
  int rank = 0;
  std::vector<int> sizes;  // ascending
  bool schurian = false;
  BigInt aut_order = 0;
  BigInt iso_over_aut = 0;
  BigInt aut_alg_order = 0;
};

/// Exceptional rings among `reps`, sorted by rank and then by descending
/// size list, named A1, A2, ...
std::vector<Table1Row> table1_report(const std::vector<SRing>& reps, int workers = 1);

/// "1 2^3 4^5" style size multiset.
std::string size_multiset(const std::vector<int>& ascending_sizes);

}  // namespace schur
