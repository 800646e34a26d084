#pragma once

#include <memory>
#include <span>
#include <vector>

#include "schur/group.hpp"

namespace schur {

/// Element of the integer group ring ZG, indexed by group element.
struct GroupRingVector {
  std::vector<long> coeffs;

  friend bool operator==(const GroupRingVector&, const GroupRingVector&) = default;
};

GroupRingVector indicator(const GroupSpec& g, std::span<const int> xs);
GroupRingVector convolve(const GroupSpec& g, const GroupRingVector& u, const GroupRingVector& v);
GroupRingVector operator+(const GroupRingVector& u, const GroupRingVector& v);
GroupRingVector operator*(long k, const GroupRingVector& v);

/// Structure constants c[X][Y][Z]: the number of pairs (x, y) in X x Y with
/// x + y equal to a fixed z in Z.
class SCTensor {
 public:
  SCTensor() = default;
  explicit SCTensor(int rank)
      : rank_(rank), c_(static_cast<std::size_t>(rank) * rank * rank, 0) {}

  int rank() const { return rank_; }
  int operator()(int x, int y, int z) const { return c_[offset(x, y, z)]; }
  int& at(int x, int y, int z) { return c_[offset(x, y, z)]; }

  friend bool operator==(const SCTensor&, const SCTensor&) = default;

 private:
  std::size_t offset(int x, int y, int z) const {
    return (static_cast<std::size_t>(x) * rank_ + y) * rank_ + z;
  }
  int rank_ = 0;
  std::vector<int> c_;
};

/// A validated S-ring: a partition of G into basic sets closed under the
/// Schur-Wielandt axioms.
///
/// Classes are sorted internally and ordered by their smallest element, so
/// the identity class is always index 0. Copies share state; the structure
/// constant tensor is computed on first use.
class SRing {
 public:
  /// The unique S-ring over the trivial group.
  SRing();

  const GroupSpec& group() const;
  int rank() const;
  const std::vector<std::vector<int>>& classes() const;
  const std::vector<int>& basic_set(int x) const { return classes()[static_cast<std::size_t>(x)]; }
  int class_of(int g) const;
  const std::vector<int>& class_index() const;
  int inverse_class(int x) const;
  int class_size(int x) const { return static_cast<int>(basic_set(x).size()); }
  /// Class sizes, ascending.
  std::vector<int> sizes() const;
  const SCTensor& constants() const;

  friend bool operator==(const SRing& a, const SRing& b);
  /// Orders by group factors, then by class index vector.
  friend bool operator<(const SRing& a, const SRing& b);

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
  friend SRing validate_sring(const GroupSpec& g, std::vector<std::vector<int>> partition);
};

/// Checks the partition axioms and returns the canonical S-ring.
SRing validate_sring(const GroupSpec& g, std::vector<std::vector<int>> partition);
SRing validate_sring(const GroupSpec& g, const std::vector<std::vector<Elem>>& partition);
/// Builds from a class label per element (labels arbitrary).
SRing sring_from_labels(const GroupSpec& g, std::span<const int> labels);

SRing group_ring(const GroupSpec& g);
SRing rank_two(const GroupSpec& g);

const SCTensor& structure_constants(const SRing& a);

/// True iff xs is a union of basic sets.
bool is_a_set(const SRing& a, std::span<const int> xs);
/// Basic-set indices whose union is xs; throws NotAnASet otherwise.
std::vector<int> a_set_classes(const SRing& a, std::span<const int> xs);

/// rad(X) = {g : g + X = X}.
Subgroup radical(const GroupSpec& g, std::span<const int> xs);

/// Index of the class X^(m) = {m x : x in X}; gcd(m, |G|) must be 1.
int rational_conjugate(const SRing& a, int cls, long m);

std::vector<Subgroup> a_subgroups(const SRing& a);

/// The S-ring A_S over the quotient of an A-section.
SRing induced_sring(const SRing& a, const Section& s);
/// Convenience: A_U as an S-ring over U's invariant-factor form.
SRing restrict_to(const SRing& a, const Subgroup& u);

struct TensorSplit {
  Subgroup first;
  Subgroup second;
};

/// All ordered decompositions G = G1 x G2 into nontrivial A-subgroups with
/// every basic set of the form X1 X2.
std::vector<TensorSplit> detect_tensor(const SRing& a);

/// All A-sections U/L with e < L <= U < G such that L <= rad(X) for every
/// basic set X outside U.
std::vector<Section> detect_s_wreath(const SRing& a);

}  // namespace schur
