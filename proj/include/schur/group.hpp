#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "schur/perm_group.hpp"

namespace schur {

inline constexpr int kDefaultGroupBound = 256;

/// Element of a GroupSpec written as its residue vector.
struct Elem {
  std::vector<int> residues;
  friend bool operator==(const Elem&, const Elem&) = default;
  friend auto operator<=>(const Elem&, const Elem&) = default;
};

/// A finite abelian group C_{n_1} x ... x C_{n_k}.
///
/// Elements are addressed by their mixed-radix rank (last factor least
/// significant), so index 0 is the identity. The group is written
/// additively internally; `add` is the group law.
class GroupSpec {
 public:
  /// The trivial group.
  GroupSpec();
  explicit GroupSpec(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  int exponent() const { return exponent_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }

  Elem element(int index) const;
  int index(const Elem& e) const;  // validates residues

  int add(int g, int h) const;
  int neg(int g) const;
  int sub(int g, int h) const { return add(g, neg(h)); }
  int scale(int g, long m) const;  // m-th power, m may be negative
  int order_of(int g) const;
  /// Index of the canonical generator of factor i.
  int generator(int i) const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<int> factors_;
  std::vector<int> strides_;
  int order_ = 1;
  int exponent_ = 1;
  std::shared_ptr<const std::vector<int>> add_table_;  // for small orders
  std::shared_ptr<const std::vector<int>> neg_table_;
};

/// GroupSpec constructor spelled as an operation.
GroupSpec make_group(std::vector<int> factors);

Elem mul(const GroupSpec& g, const Elem& x, const Elem& y);
Elem inv(const GroupSpec& g, const Elem& x);
int elem_order(const GroupSpec& g, const Elem& x);

struct Subgroup {
  std::vector<int> members;     // sorted element indices
  std::vector<int> generators;  // a minimal generating list

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int g) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members == b.members;
  }
};

Subgroup trivial_subgroup();
Subgroup whole_group(const GroupSpec& g);
Subgroup generated_subgroup(const GroupSpec& g, std::span<const int> xs);
Subgroup generated_subgroup(const GroupSpec& g, std::span<const Elem> xs);
/// Every subgroup, sorted by (order, members).
std::vector<Subgroup> all_subgroups(const GroupSpec& g, int bound = kDefaultGroupBound);

/// Section U/L with the quotient in invariant-factor form.
struct Section {
  Subgroup upper;
  Subgroup lower;
  GroupSpec quotient;
  std::vector<int> projection;  // indexed by element of G; -1 outside upper

  int project(int g) const { return projection[static_cast<std::size_t>(g)]; }
};

Section quotient_section(const GroupSpec& g, const Subgroup& upper, const Subgroup& lower);

/// Invariant factors (ascending, each dividing the next) of an abelian
/// group of the given order, from `killed(m) = #{x : x^m = e}`.
std::vector<int> invariant_factors(int order, const std::function<int(int)>& killed);

/// Isomorphism from the invariant-factor form of `g` onto `g`: entry q is the
/// element of g corresponding to element q of the returned spec.
std::pair<GroupSpec, std::vector<int>> normal_form(const GroupSpec& g);

struct GroupAutomorphism {
  std::vector<int> images;  // element index -> element index

  Perm as_perm() const { return Perm(images); }
  friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;
};

/// The homomorphism sending canonical generator i to images[i], if it exists
/// and is bijective.
std::optional<GroupAutomorphism> hom_from_generator_images(const GroupSpec& g,
                                                           std::span<const Elem> images);
std::optional<GroupAutomorphism> hom_from_generator_images(const GroupSpec& g,
                                                           std::span<const int> images);

bool is_group_automorphism(const GroupSpec& g, const Perm& p);

/// Aut(G) acting on element indices; the base is the canonical generators.
PermGroup automorphism_group(const GroupSpec& g, int bound = kDefaultGroupBound);

/// Right regular representation: generators are translations by the
/// canonical generators.
std::vector<Perm> right_translations(const GroupSpec& g);
Perm translation(const GroupSpec& g, int h);

/// One GroupSpec per isomorphism class of abelian groups of order n.
std::vector<GroupSpec> enumerate_abelian_groups(int n);

}  // namespace schur
