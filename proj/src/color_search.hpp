#pragma once

// Individualization-refinement search for color-preserving bijections between
// two complete edge-colored digraphs (Cayley schemes). Internal to the library.

#include <optional>
#include <span>
#include <vector>

#include "schur/perm_group.hpp"
#include "schur/sring.hpp"

namespace schur::detail {

struct Scheme {
  int n = 0;
  int colors = 0;
  std::vector<int> color;  // row-major n x n

  int operator()(int v, int w) const {
    return color[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(w)];
  }
};

Scheme scheme_of(const SRing& a);

enum class Branching {
  SmallestCell,  // first vertex of the smallest non-singleton cell
  Natural,       // smallest vertex whose cell is not a singleton
};

/// Finds bijections f with colors_b(f v, f w) = sigma(colors_a(v, w)).
///
/// A node keeps one cell id per vertex on each side; the ids are shared, so a
/// cell of A may only map onto the equally named cell of B.
class ColorSearch {
 public:
  struct Node {
    std::vector<int> cell_a;
    std::vector<int> cell_b;
    int cells = 0;
  };

  ColorSearch(const Scheme& a, const Scheme& b, std::vector<int> sigma);

  /// The refined node with `0 -> 0` individualized, or none if the initial
  /// color counts already disagree.
  std::optional<Node> root() const;
  std::optional<Node> individualize(const Node& node, int v, int u) const;

  /// First leaf in depth-first order. `prune` generates a subgroup of Aut(B)
  /// fixing every individualized B-vertex of `node`; candidates are reduced to
  /// its orbit minima, which keeps the lexicographically least solution
  /// reachable under Natural branching.
  std::optional<Perm> first_leaf(const Node& node, Branching branching,
                                 const std::vector<Perm>& prune) const;

  /// Aut of scheme a (requires a == b and identity sigma) as a chain with
  /// base starting at 0; `translations` are added at level 0.
  PermGroup automorphism_group(const std::vector<Perm>& translations) const;

  /// Vertex chosen for branching; -1 when the node is discrete.
  int branch_vertex(const Node& node, Branching branching) const;
  std::vector<int> candidates(const Node& node, int v) const;

 private:
  bool refine(Node& node) const;
  Perm leaf_map(const Node& node) const;

  const Scheme& a_;
  const Scheme& b_;
  std::vector<int> sigma_;
};

}  // namespace schur::detail
