#include "schur/iso.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "color_search.hpp"
#include "schur/error.hpp"

namespace schur {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

PermGroup stabilizer_chain_at_identity(const PermGroup& g) {
  auto base = g.base();
  if (!base.empty() && base[0] == 0) return g;
  return PermGroup(g.degree(), g.generators(), {0});
}

}  // namespace

ColorMatrix color_matrix(const SRing& a) {
  detail::Scheme s = detail::scheme_of(a);
  return ColorMatrix{s.n, s.colors, std::move(s.color)};
}

ColorMatrix wl_refine(const ColorMatrix& initial) {
  const int n = initial.n;
  const std::size_t nn = at(n) * at(n);
  std::vector<int> cur(nn);
  int count = 0;
  {
    std::map<std::pair<int, int>, int> ids;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) ids[{initial(x, y), x == y ? 1 : 0}] = 0;
    for (auto& [k, v] : ids) v = count++;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) cur[at(x) * at(n) + at(y)] = ids[{initial(x, y), x == y ? 1 : 0}];
  }
  std::vector<std::vector<long>> sig(nn);
  for (;;) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        auto& s = sig[at(x) * at(n) + at(y)];
        s.resize(at(n) + 1);
        s[0] = cur[at(x) * at(n) + at(y)];
        for (int z = 0; z < n; ++z)
          s[at(z) + 1] = static_cast<long>(cur[at(x) * at(n) + at(z)]) * count + cur[at(z) * at(n) + at(y)];
        std::sort(s.begin() + 1, s.end());
      }
    }
    std::map<std::vector<long>, int> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [k, v] : ids) v = next++;
    for (std::size_t i = 0; i < nn; ++i) cur[i] = ids[sig[i]];
    bool stable = next == count;
    count = next;
    if (stable) break;
  }
  return ColorMatrix{n, count, std::move(cur)};
}

bool same_partition(const ColorMatrix& x, const ColorMatrix& y) {
  if (x.n != y.n || x.color.size() != y.color.size()) return false;
  std::map<int, int> fwd, back;
  for (std::size_t i = 0; i < x.color.size(); ++i) {
    auto [f, fi] = fwd.emplace(x.color[i], y.color[i]);
    auto [b, bi] = back.emplace(y.color[i], x.color[i]);
    if (f->second != y.color[i] || b->second != x.color[i]) return false;
  }
  return true;
}

PermGroup automorphisms(const SRing& a, int bound) {
  check_bound(a.group().order(), bound, "group order for automorphism search");
  detail::Scheme s = detail::scheme_of(a);
  std::vector<int> id(at(s.colors));
  for (int c = 0; c < s.colors; ++c) id[at(c)] = c;
  detail::ColorSearch search(s, s, id);
  return search.automorphism_group(right_translations(a.group()));
}

AlgCheck is_algebraic_iso(const SRing& a, const SRing& b, const AlgMap& m) {
  AlgCheck r;
  auto fail = [&](std::string why, int x = -1, int y = -1, int z = -1) {
    r.ok = false;
    r.reason = std::move(why);
    r.x = x;
    r.y = y;
    r.z = z;
    return r;
  };
  if (a.rank() != b.rank() || m.degree() != a.rank()) return fail("rank mismatch");
  if (a.group().order() != b.group().order()) return fail("group order mismatch");
  for (int x = 0; x < a.rank(); ++x)
    if (a.class_size(x) != b.class_size(m[x])) return fail("class size mismatch", x);
  const SCTensor& ca = a.constants();
  const SCTensor& cb = b.constants();
  for (int x = 0; x < a.rank(); ++x)
    for (int y = 0; y < a.rank(); ++y)
      for (int z = 0; z < a.rank(); ++z)
        if (ca(x, y, z) != cb(m[x], m[y], m[z])) return fail("structure constant mismatch", x, y, z);
  return r;
}

namespace {

// Per-class data that every algebraic isomorphism preserves.
std::vector<std::vector<int>> class_invariants(const SRing& a) {
  const SCTensor& c = a.constants();
  std::vector<std::vector<int>> out;
  for (int x = 0; x < a.rank(); ++x) {
    std::vector<int> inv{a.class_size(x), a.inverse_class(x) == x ? 1 : 0};
    std::vector<int> sq, mixed, back;
    for (int z = 0; z < a.rank(); ++z) {
      sq.push_back(c(x, x, z));
      mixed.push_back(c(x, a.inverse_class(x), z));
      back.push_back(c(x, z, x));
    }
    for (auto* v : {&sq, &mixed, &back}) {
      std::sort(v->begin(), v->end());
      inv.insert(inv.end(), v->begin(), v->end());
    }
    out.push_back(std::move(inv));
  }
  return out;
}

class AlgSearch {
 public:
  AlgSearch(const SRing& a, const SRing& b)
      : a_(a), b_(b), ca_(a.constants()), cb_(b.constants()), r_(a.rank()) {
    inv_a_ = class_invariants(a);
    inv_b_ = class_invariants(b);
    sigma_.assign(at(r_), -1);
    used_.assign(at(r_), 0);
  }

  std::vector<AlgMap> run() {
    if (r_ == 0) return {};
    sigma_[0] = 0;
    used_[0] = 1;
    assigned_.push_back(0);
    if (!consistent(0)) return {};
    dfs(1);
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  bool consistent(int x) const {
    for (int p : assigned_) {
      for (int q : assigned_) {
        int sx = sigma_[at(x)], sp = sigma_[at(p)], sq = sigma_[at(q)];
        if (ca_(x, p, q) != cb_(sx, sp, sq)) return false;
        if (ca_(p, x, q) != cb_(sp, sx, sq)) return false;
        if (ca_(p, q, x) != cb_(sp, sq, sx)) return false;
      }
    }
    return true;
  }

  void dfs(int x) {
    if (x == r_) {
      out_.emplace_back(sigma_);
      return;
    }
    int inv = a_.inverse_class(x);
    for (int y = 0; y < r_; ++y) {
      if (used_[at(y)] || inv_a_[at(x)] != inv_b_[at(y)]) continue;
      if (inv < x && sigma_[at(inv)] != b_.inverse_class(y)) continue;
      sigma_[at(x)] = y;
      used_[at(y)] = 1;
      assigned_.push_back(x);
      if (consistent(x)) dfs(x + 1);
      assigned_.pop_back();
      used_[at(y)] = 0;
      sigma_[at(x)] = -1;
    }
  }

  const SRing& a_;
  const SRing& b_;
  const SCTensor& ca_;
  const SCTensor& cb_;
  int r_;
  std::vector<std::vector<int>> inv_a_, inv_b_;
  std::vector<int> sigma_;
  std::vector<char> used_;
  std::vector<int> assigned_;
  std::vector<AlgMap> out_;
};

}  // namespace

std::vector<AlgMap> algebraic_isomorphisms(const SRing& a, const SRing& b, int rank_bound) {
  check_bound(a.rank(), rank_bound, "rank for algebraic isomorphism search");
  if (a.rank() != b.rank() || a.group().order() != b.group().order() || a.sizes() != b.sizes())
    return {};
  return AlgSearch(a, b).run();
}

std::vector<AlgMap> algebraic_automorphisms(const SRing& a, int rank_bound) {
  return algebraic_isomorphisms(a, a, rank_bound);
}

std::vector<int> extend_to_set(const SRing& a, const SRing& b, const AlgMap& m,
                               std::span<const int> xs) {
  std::vector<int> out;
  for (int c : a_set_classes(a, xs)) {
    const auto& cls = b.basic_set(m[c]);
    out.insert(out.end(), cls.begin(), cls.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup extend_to_subgroup(const SRing& a, const SRing& b, const AlgMap& m, const Subgroup& h) {
  auto img = extend_to_set(a, b, m, h.members);
  Subgroup s = generated_subgroup(b.group(), img);
  if (s.members != img) throw Error(ErrorKind::NotAnASet, "image of an A-subgroup is not a subgroup");
  return s;
}

Section extend_to_section(const SRing& a, const SRing& b, const AlgMap& m, const Section& s) {
  return quotient_section(b.group(), extend_to_subgroup(a, b, m, s.upper),
                          extend_to_subgroup(a, b, m, s.lower));
}

AlgMap induced_algebraic(const Perm& f, const SRing& a, const SRing& b) {
  const int n = a.group().order();
  if (f.degree() != n || b.group().order() != n || a.rank() != b.rank())
    throw Error(ErrorKind::NotAnIsomorphism, "size mismatch");
  const GroupSpec& ga = a.group();
  const GroupSpec& gb = b.group();
  std::vector<int> sigma(at(a.rank()), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int ca = a.class_of(ga.sub(y, x));
      int cb = b.class_of(gb.sub(f[y], f[x]));
      if (sigma[at(ca)] < 0) sigma[at(ca)] = cb;
      if (sigma[at(ca)] != cb)
        throw Error(ErrorKind::NotAnIsomorphism, "map does not send basic relations to basic relations");
    }
  }
  std::vector<char> seen(at(a.rank()), 0);
  for (int c : sigma) {
    if (seen[at(c)]) throw Error(ErrorKind::NotAnIsomorphism, "map merges basic relations");
    seen[at(c)] = 1;
  }
  return AlgMap(sigma);
}

std::optional<Perm> is_induced(const SRing& a, const SRing& b, const AlgMap& m, int bound,
                               const PermGroup* aut_b) {
  check_bound(a.group().order(), bound, "group order for induced-isomorphism search");
  if (a.group().order() != b.group().order()) return std::nullopt;
  auto check = is_algebraic_iso(a, b, m);
  if (!check.ok) throw Error(ErrorKind::MapNotAlgebraic, "map is not an algebraic isomorphism: " + check.reason);
  PermGroup owned;
  if (!aut_b) {
    owned = automorphisms(b, bound);
    aut_b = &owned;
  }
  PermGroup chain = stabilizer_chain_at_identity(*aut_b);
  std::vector<Perm> prune = chain.stabilizer_generators(1);

  detail::Scheme sa = detail::scheme_of(a);
  detail::Scheme sb = detail::scheme_of(b);
  detail::ColorSearch search(sa, sb, m.images());
  auto root = search.root();
  if (!root) return std::nullopt;
  return search.first_leaf(*root, detail::Branching::Natural, prune);
}

IsoCount color_isomorphisms(const SRing& a, const SRing& b, int bound, int rank_bound) {
  IsoCount out;
  if (a.group().order() != b.group().order() || a.rank() != b.rank()) return out;
  check_bound(a.group().order(), bound, "group order for isomorphism search");
  PermGroup aut_a = automorphisms(a, bound);
  PermGroup aut_b = automorphisms(b, bound);
  long induced = 0;
  for (const AlgMap& m : algebraic_isomorphisms(a, b, rank_bound)) {
    auto f = is_induced(a, b, m, bound, &aut_b);
    if (!f) continue;
    ++induced;
    if (!out.witness || *f < *out.witness) out.witness = *f;
  }
  out.count = aut_a.order() * induced;
  return out;
}

namespace {

// Backtracking over vertex images in natural order; the class bijection is
// bound lazily as pairs of vertices are matched.
class FreeColorSearch {
 public:
  explicit FreeColorSearch(const detail::Scheme& s, std::vector<int> sizes)
      : s_(s), sizes_(std::move(sizes)) {}

  std::optional<Perm> extend(const std::vector<int>& prefix) {
    const int n = s_.n;
    f_.assign(at(n), -1);
    used_.assign(at(n), 0);
    sigma_.assign(at(s_.colors), -1);
    sigma_inv_.assign(at(s_.colors), -1);
    trail_.clear();
    order_.clear();
    for (int v = 0; v < static_cast<int>(prefix.size()); ++v) {
      if (used_[at(prefix[at(v)])] || !assign(v, prefix[at(v)])) return std::nullopt;
    }
    for (int v = static_cast<int>(prefix.size()); v < n; ++v) order_.push_back(v);
    if (!dfs(0)) return std::nullopt;
    return Perm(f_);
  }

 private:
  bool bind(int c, int d) {
    if (sigma_[at(c)] == d) return true;
    if (sigma_[at(c)] >= 0 || sigma_inv_[at(d)] >= 0 || sizes_[at(c)] != sizes_[at(d)]) return false;
    sigma_[at(c)] = d;
    sigma_inv_[at(d)] = c;
    trail_.push_back(c);
    return true;
  }

  bool assign(int v, int u) {
    f_[at(v)] = u;
    used_[at(u)] = 1;
    for (int w = 0; w < s_.n; ++w) {
      if (f_[at(w)] < 0) continue;
      if (!bind(s_(v, w), s_(u, f_[at(w)])) || !bind(s_(w, v), s_(f_[at(w)], u))) return false;
    }
    return true;
  }

  void undo(int v, std::size_t mark) {
    while (trail_.size() > mark) {
      int c = trail_.back();
      trail_.pop_back();
      sigma_inv_[at(sigma_[at(c)])] = -1;
      sigma_[at(c)] = -1;
    }
    used_[at(f_[at(v)])] = 0;
    f_[at(v)] = -1;
  }

  bool dfs(std::size_t k) {
    if (k == order_.size()) return true;
    int v = order_[k];
    for (int u = 0; u < s_.n; ++u) {
      if (used_[at(u)]) continue;
      std::size_t mark = trail_.size();
      if (assign(v, u) && dfs(k + 1)) return true;
      undo(v, mark);
    }
    return false;
  }

  const detail::Scheme& s_;
  std::vector<int> sizes_;
  std::vector<int> f_;
  std::vector<char> used_;
  std::vector<int> sigma_, sigma_inv_;
  std::vector<int> trail_;
  std::vector<int> order_;
};

}  // namespace

PermGroup color_automorphism_group_direct(const SRing& a, int bound) {
  const int n = a.group().order();
  check_bound(n, bound, "group order for direct isomorphism search");
  if (n <= 1) return PermGroup(n);
  detail::Scheme s = detail::scheme_of(a);
  std::vector<int> sizes;
  for (int c = 0; c < a.rank(); ++c) sizes.push_back(a.class_size(c));
  FreeColorSearch search(s, sizes);

  // Base 0, 1, ..., n - 2. Level i fixes 0..i-1 and moves i.
  std::vector<Perm> found;
  for (int i = n - 2; i >= 1; --i) {
    std::vector<int> orbit = orbit_of(i, found, n);
    std::vector<char> failed(at(n), 0);
    for (int u = i + 1; u < n; ++u) {
      if (std::binary_search(orbit.begin(), orbit.end(), u) || failed[at(u)]) continue;
      std::vector<int> prefix(at(i));
      for (int v = 0; v < i; ++v) prefix[at(v)] = v;
      prefix.push_back(u);
      if (auto f = search.extend(prefix)) {
        found.push_back(*f);
        orbit = orbit_of(i, found, n);
      } else {
        for (int w : orbit_of(u, found, n)) failed[at(w)] = 1;
      }
    }
  }
  std::vector<int> base(at(n - 1));
  for (int i = 0; i < n - 1; ++i) base[at(i)] = i;
  std::vector<Perm> strong = right_translations(a.group());
  strong.insert(strong.end(), found.begin(), found.end());
  return PermGroup::from_bsgs(n, base, strong);
}

}  // namespace schur
