#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace schur {

using BigInt = boost::multiprecision::cpp_int;

/// A permutation of {0..degree-1} stored as its image array.
///
/// Products act on the right: `(a * b)[x] == b[a[x]]`, i.e. `a` is applied
/// first.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  /// Smallest point moved, or -1 for the identity.
  int first_moved() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

/// Permutation group with a stabilizer chain.
///
/// Level i of the chain holds base point `base()[i]`, the strong generators
/// fixing the earlier base points, and a transversal of the basic orbit.
/// Orders are exact (arbitrary precision).
class PermGroup {
 public:
  /// The trivial group of the given degree.
  explicit PermGroup(int degree = 0);

  /// Deterministic Schreier-Sims from arbitrary generators. `base_prefix`
  /// fixes the first base points (used for point stabilizers).
  PermGroup(int degree, std::vector<Perm> generators,
            std::vector<int> base_prefix = {});

  /// Builds the chain from a base and a strong generating set that is already
  /// known to be complete (e.g. produced by an exhaustive search).
  static PermGroup from_bsgs(int degree, std::vector<int> base,
                             std::vector<Perm> strong_generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  std::vector<int> base() const;
  BigInt order() const;
  std::vector<std::size_t> basic_orbit_sizes() const;

  bool contains(const Perm& p) const;
  /// Generators of the pointwise stabilizer of the first `level` base points.
  std::vector<Perm> stabilizer_generators(std::size_t level) const;
  /// Orbits on {0..degree-1}, each sorted, ordered by smallest point.
  std::vector<std::vector<int>> orbits() const;
  /// Orbits of the stabilizer of the first base point.
  std::vector<std::vector<int>> stabilizer_orbits() const;
  /// All elements in sorted order; throws BoundExceeded above `limit`.
  std::vector<Perm> elements(std::size_t limit = 1000000) const;

 private:
  struct Level {
    int point = 0;
    std::vector<Perm> gens;
    std::vector<int> orbit;
    std::vector<Perm> transversal;  // indexed by point; empty when outside
  };

  void add_base_point(int point);
  void rebuild_orbit(std::size_t level);
  // Returns the residue and the level at which sifting stopped.
  std::pair<Perm, std::size_t> strip(const Perm& p, std::size_t from) const;
  void schreier_sims();

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Level> levels_;
};

/// Orbits of the group generated by `gens` on {0..degree-1}.
std::vector<std::vector<int>> orbits_of(int degree, std::span<const Perm> gens);
/// Orbit of a single point (sorted).
std::vector<int> orbit_of(int point, std::span<const Perm> gens, int degree);

}  // namespace schur
