#pragma once

#include <optional>
#include <span>
#include <vector>

#include "schur/iso.hpp"

namespace schur {

struct SchurianResult {
  bool schurian = false;
  std::vector<std::vector<int>> orbits;  // orbits of Aut(A)_e
  BigInt aut_order = 0;
};

SchurianResult is_schurian(const SRing& a, int bound = kDefaultIsoBound);

/// True iff G_right is normal in `aut` (which must be Aut(A)).
bool is_normal(const SRing& a, const PermGroup& aut);
bool is_normal(const SRing& a, int bound = kDefaultIsoBound);

struct InducedSplit {
  std::vector<AlgMap> aut_alg;   // Aut_alg(A), sorted
  std::vector<AlgMap> induced;   // Aut_alg(A)_0, sorted
  BigInt aut_order = 0;          // |Aut(A)|
  BigInt iso_order = 0;          // |Iso(A)| from a stabilizer chain
};

/// Splits Aut_alg(A) into induced and non-induced maps. |Iso(A)| is computed
/// from Aut(A) and one witness per generator of Aut_alg(A)_0, and must equal
/// |Aut(A)| * |Aut_alg(A)_0|; a mismatch throws std::logic_error.
InducedSplit aut_alg_induced(const SRing& a, int bound = kDefaultIsoBound,
                             int rank_bound = kDefaultRankBound);

enum class Verdict { Separable, NonSeparable };
enum class TargetsMode { Explicit, Exhaustive };

struct SeparabilityReport {
  SRing ring;
  Verdict verdict = Verdict::Separable;
  std::optional<SRing> witness_target;
  std::optional<AlgMap> witness_map;
  TargetsMode mode = TargetsMode::Explicit;
  std::size_t targets_checked = 0;
  BigInt aut = 0;
  BigInt aut_alg = 0;
  BigInt aut_alg_induced = 0;
};

/// Separability of A with respect to the given targets. Targets are examined
/// in sorted order and the first non-induced algebraic isomorphism (sorted by
/// image array) is the witness, independent of `workers`.
SeparabilityReport separability_verdict(const SRing& a, std::span<const SRing> targets,
                                        TargetsMode mode = TargetsMode::Explicit,
                                        int bound = kDefaultIsoBound,
                                        int rank_bound = kDefaultRankBound, int workers = 1);

/// Every S-ring over every abelian group of the given order, one per Cayley
/// isomorphism class. Enough for separability: Cayley isomorphisms are
/// combinatorial.
std::vector<SRing> exhaustive_targets(int order, int enum_bound, int workers = 1);

}  // namespace schur
