#include "color_search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "schur/error.hpp"

namespace schur::detail {

namespace {
std::size_t at(int i) { return static_cast<std::size_t>(i); }
}  // namespace

Scheme scheme_of(const SRing& a) {
  const GroupSpec& g = a.group();
  Scheme s;
  s.n = g.order();
  s.colors = a.rank();
  s.color.resize(at(s.n) * at(s.n));
  for (int v = 0; v < s.n; ++v)
    for (int w = 0; w < s.n; ++w) s.color[at(v) * at(s.n) + at(w)] = a.class_of(g.sub(w, v));
  return s;
}

ColorSearch::ColorSearch(const Scheme& a, const Scheme& b, std::vector<int> sigma)
    : a_(a), b_(b), sigma_(std::move(sigma)) {}

bool ColorSearch::refine(Node& node) const {
  const int n = a_.n;
  const int stride = b_.colors;
  std::vector<std::vector<int>> keys_a(at(n)), keys_b(at(n));
  for (;;) {
    for (int v = 0; v < n; ++v) {
      auto& ka = keys_a[at(v)];
      auto& kb = keys_b[at(v)];
      ka.resize(at(n) + 1);
      kb.resize(at(n) + 1);
      ka[0] = node.cell_a[at(v)];
      kb[0] = node.cell_b[at(v)];
      for (int w = 0; w < n; ++w) {
        ka[at(w) + 1] = node.cell_a[at(w)] * stride + sigma_[at(a_(v, w))];
        kb[at(w) + 1] = node.cell_b[at(w)] * stride + b_(v, w);
      }
      std::sort(ka.begin() + 1, ka.end());
      std::sort(kb.begin() + 1, kb.end());
    }
    std::map<std::vector<int>, std::pair<int, int>> counts;
    for (int v = 0; v < n; ++v) {
      ++counts[keys_a[at(v)]].first;
      ++counts[keys_b[at(v)]].second;
    }
    int id = 0;
    for (auto& [key, c] : counts) {
      if (c.first != c.second) return false;
      c.first = id++;
    }
    if (id == node.cells) return true;
    for (int v = 0; v < n; ++v) {
      node.cell_a[at(v)] = counts[keys_a[at(v)]].first;
      node.cell_b[at(v)] = counts[keys_b[at(v)]].first;
    }
    node.cells = id;
  }
}

std::optional<ColorSearch::Node> ColorSearch::root() const {
  if (a_.n != b_.n) return std::nullopt;
  Node node;
  node.cell_a.assign(at(a_.n), 0);
  node.cell_b.assign(at(b_.n), 0);
  node.cells = 1;
  if (a_.n == 0) return node;
  return individualize(node, 0, 0);
}

std::optional<ColorSearch::Node> ColorSearch::individualize(const Node& node, int v, int u) const {
  if (node.cell_a[at(v)] != node.cell_b[at(u)]) return std::nullopt;
  Node child = node;
  child.cell_a[at(v)] = child.cells;
  child.cell_b[at(u)] = child.cells;
  ++child.cells;
  if (!refine(child)) return std::nullopt;
  return child;
}

int ColorSearch::branch_vertex(const Node& node, Branching branching) const {
  std::vector<int> size(at(node.cells), 0);
  for (int c : node.cell_a) ++size[at(c)];
  int best = -1;
  for (int v = 0; v < a_.n; ++v) {
    int s = size[at(node.cell_a[at(v)])];
    if (s <= 1) continue;
    if (branching == Branching::Natural) return v;
    if (best < 0 || s < size[at(node.cell_a[at(best)])] ||
        (s == size[at(node.cell_a[at(best)])] && node.cell_a[at(v)] < node.cell_a[at(best)]))
      best = v;
  }
  return best;
}

std::vector<int> ColorSearch::candidates(const Node& node, int v) const {
  std::vector<int> out;
  for (int u = 0; u < b_.n; ++u)
    if (node.cell_b[at(u)] == node.cell_a[at(v)]) out.push_back(u);
  return out;
}

Perm ColorSearch::leaf_map(const Node& node) const {
  std::vector<int> by_cell(at(node.cells), -1);
  for (int u = 0; u < b_.n; ++u) by_cell[at(node.cell_b[at(u)])] = u;
  std::vector<int> f(at(a_.n));
  for (int v = 0; v < a_.n; ++v) f[at(v)] = by_cell[at(node.cell_a[at(v)])];
  return Perm(f);
}

std::optional<Perm> ColorSearch::first_leaf(const Node& node, Branching branching,
                                            const std::vector<Perm>& prune) const {
  int v = branch_vertex(node, branching);
  if (v < 0) {
    Perm f = leaf_map(node);
    // A discrete equitable pair of partitions already forces every color; this
    // re-check guards the refinement invariant.
    for (int x = 0; x < a_.n; ++x)
      for (int y = 0; y < a_.n; ++y)
        if (b_(f[x], f[y]) != sigma_[at(a_(x, y))]) return std::nullopt;
    return f;
  }
  std::vector<int> cands = candidates(node, v);
  std::vector<char> skip(at(b_.n), 0);
  for (int u : cands) {
    if (skip[at(u)]) continue;
    std::vector<Perm> child_prune;
    if (!prune.empty()) {
      for (int w : orbit_of(u, prune, b_.n))
        if (w != u) skip[at(w)] = 1;
      PermGroup chain(b_.n, prune, {u});
      child_prune = chain.stabilizer_generators(1);
    }
    auto child = individualize(node, v, u);
    if (!child) continue;
    if (auto f = first_leaf(*child, branching, child_prune)) return f;
  }
  return std::nullopt;
}

PermGroup ColorSearch::automorphism_group(const std::vector<Perm>& translations) const {
  const int n = a_.n;
  std::vector<int> base{0};
  std::vector<Perm> strong = translations;
  if (n <= 1) return PermGroup::from_bsgs(n, {}, {});
  auto r = root();
  if (!r) throw Error(ErrorKind::InvalidInput, "scheme is not isomorphic to itself");

  std::vector<Node> states{*r};
  std::vector<int> points;
  for (;;) {
    int v = branch_vertex(states.back(), Branching::SmallestCell);
    if (v < 0) break;
    points.push_back(v);
    states.push_back(*individualize(states.back(), v, v));
  }

  // Level i: the stabilizer of 0 and points[0..i-1]; generators found at
  // deeper levels are complete before level i is processed.
  std::vector<Perm> found;
  for (std::size_t i = points.size(); i-- > 0;) {
    const int b = points[i];
    std::vector<int> orbit = orbit_of(b, found, n);
    std::vector<char> failed(at(n), 0);
    for (int u : candidates(states[i], b)) {
      if (std::binary_search(orbit.begin(), orbit.end(), u) || failed[at(u)]) continue;
      std::vector<int> orbit_u = orbit_of(u, found, n);
      bool known_bad = std::any_of(orbit_u.begin(), orbit_u.end(), [&](int w) { return failed[at(w)] != 0; });
      if (!known_bad) {
        auto child = individualize(states[i], b, u);
        if (child) {
          if (auto f = first_leaf(*child, Branching::SmallestCell, {})) {
            found.push_back(*f);
            orbit = orbit_of(b, found, n);
            continue;
          }
        }
      }
      for (int w : orbit_u) failed[at(w)] = 1;
    }
  }
  base.insert(base.end(), points.begin(), points.end());
  strong.insert(strong.end(), found.begin(), found.end());
  return PermGroup::from_bsgs(n, base, strong);
}

}  // namespace schur::detail
