#include "schur/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "schur/analysis.hpp"
#include "schur/error.hpp"

namespace schur {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t w = std::min<std::size_t>(at(workers), n);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(w);
  for (std::size_t t = 0; t < w; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += w) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void check_enum_bound(const GroupSpec& g, int bound) {
  bool c3_cubed = g.factors() == std::vector<int>{3, 3, 3};
  if (!c3_cubed) check_bound(g.order(), bound, "group order for S-ring enumeration");
}

// Units modulo the exponent; x -> m x permutes the basic sets of every
// S-ring over an abelian group.
std::vector<int> unit_multipliers(const GroupSpec& g) {
  std::vector<int> out;
  for (int m = 1; m <= std::max(1, g.exponent()); ++m)
    if (std::gcd(m, g.exponent()) == 1 && (m < g.exponent() || g.exponent() == 1)) out.push_back(m);
  return out;
}

/// Coarsest S-ring partition refining `labels` (any integer labels; element
/// 0 is separated automatically). Returns normalized labels.
class Closure {
 public:
  explicit Closure(const GroupSpec& g) : g_(g) {
    for (int m : unit_multipliers(g)) {
      std::vector<int> img(at(g.order()));
      for (int x = 0; x < g.order(); ++x) img[at(x)] = g.scale(x, m);
      scaled_.push_back(std::move(img));
    }
  }

  std::vector<int> operator()(std::vector<int> labels) const {
    const int n = g_.order();
    normalize(labels);
    // The identity is alone in every S-ring.
    {
      int k = *std::max_element(labels.begin(), labels.end()) + 1;
      labels[0] = k;
      normalize(labels);
    }
    int cells = *std::max_element(labels.begin(), labels.end()) + 1;
    for (;;) {
      std::vector<std::vector<int>> members(at(cells));
      for (int x = 0; x < n; ++x) members[at(labels[at(x)])].push_back(x);
      std::vector<std::vector<int>> keys(at(n));
      for (int x = 0; x < n; ++x) {
        keys[at(x)].push_back(labels[at(x)]);
        for (const auto& img : scaled_) keys[at(x)].push_back(labels[at(img[at(x)])]);
      }
      std::vector<int> coef(at(n));
      for (int i = 0; i < cells; ++i) {
        for (int j = i; j < cells; ++j) {
          std::fill(coef.begin(), coef.end(), 0);
          for (int a : members[at(i)])
            for (int b : members[at(j)]) ++coef[at(g_.add(a, b))];
          for (int x = 0; x < n; ++x) keys[at(x)].push_back(coef[at(x)]);
        }
      }
      std::map<std::vector<int>, int> ids;
      for (const auto& k : keys) ids.emplace(k, 0);
      if (static_cast<int>(ids.size()) == cells) break;
      int next = 0;
      for (auto& [k, v] : ids) v = next++;
      for (int x = 0; x < n; ++x) labels[at(x)] = ids[keys[at(x)]];
      normalize(labels);
      cells = next;
    }
    return labels;
  }

  // Relabels by first occurrence in element order.
  static void normalize(std::vector<int>& labels) {
    std::map<int, int> rename;
    for (int& l : labels) {
      auto [it, fresh] = rename.emplace(l, static_cast<int>(rename.size()));
      l = it->second;
    }
  }

 private:
  const GroupSpec& g_;
  std::vector<std::vector<int>> scaled_;
};

// Orbits of the unit group on G \ {e}, ordered by smallest element.
std::vector<std::vector<int>> unit_atoms(const GroupSpec& g) {
  std::vector<int> owner(at(g.order()), -1);
  std::vector<std::vector<int>> atoms;
  auto units = unit_multipliers(g);
  for (int x = 1; x < g.order(); ++x) {
    if (owner[at(x)] >= 0) continue;
    std::set<int> orb;
    for (int m : units) orb.insert(g.scale(x, m));
    for (int y : orb) owner[at(y)] = static_cast<int>(atoms.size());
    atoms.emplace_back(orb.begin(), orb.end());
  }
  return atoms;
}

class RationalSearch {
 public:
  explicit RationalSearch(const GroupSpec& g) : g_(g), closure_(g), atoms_(unit_atoms(g)) {}

  // Children of the root: choices for the basic set containing atom 0.
  std::vector<std::vector<int>> root_choices() const {
    std::vector<int> undecided(atoms_.size());
    std::iota(undecided.begin(), undecided.end(), 0);
    return choices({}, undecided);
  }

  void run_from(const std::vector<int>& first, std::vector<std::vector<int>>& out) const {
    std::vector<std::vector<int>> decided{first};
    std::vector<int> undecided;
    for (int a = 0; a < static_cast<int>(atoms_.size()); ++a)
      if (!std::binary_search(first.begin(), first.end(), a)) undecided.push_back(a);
    node(decided, undecided, out);
  }

  bool trivial() const { return atoms_.empty(); }

 private:
  std::vector<int> labels_for(const std::vector<std::vector<int>>& decided,
                              const std::vector<int>& undecided) const {
    std::vector<int> labels(at(g_.order()), 0);
    int id = 1;
    for (const auto& cls : decided) {
      for (int a : cls)
        for (int x : atoms_[at(a)]) labels[at(x)] = id;
      ++id;
    }
    for (int a : undecided)
      for (int x : atoms_[at(a)]) labels[at(x)] = id;
    return labels;
  }

  // Subsets of the closure cell of the first undecided atom that contain it;
  // empty when the partial partition is already infeasible.
  std::vector<std::vector<int>> choices(const std::vector<std::vector<int>>& decided,
                                        const std::vector<int>& undecided) const {
    std::vector<int> c = closure_(labels_for(decided, undecided));
    for (const auto& cls : decided) {
      int l = c[at(atoms_[at(cls[0])][0])];
      for (int a : cls)
        for (int x : atoms_[at(a)])
          if (c[at(x)] != l) return {};
    }
    for (int a : undecided)
      for (int x : atoms_[at(a)])
        if (c[at(x)] != c[at(atoms_[at(a)][0])]) return {};
    int a0 = undecided[0];
    int l0 = c[at(atoms_[at(a0)][0])];
    std::vector<int> cand;
    for (std::size_t i = 1; i < undecided.size(); ++i)
      if (c[at(atoms_[at(undecided[i])][0])] == l0) cand.push_back(undecided[i]);
    std::vector<std::vector<int>> out;
    std::size_t k = cand.size();
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
      std::vector<int> cls{a0};
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1UL << i)) cls.push_back(cand[i]);
      out.push_back(std::move(cls));
    }
    return out;
  }

  void node(std::vector<std::vector<int>>& decided, const std::vector<int>& undecided,
            std::vector<std::vector<int>>& out) const {
    if (undecided.empty()) {
      std::vector<int> labels = labels_for(decided, undecided);
      std::vector<int> c = closure_(labels);
      Closure::normalize(labels);
      if (c == labels) out.push_back(labels);
      return;
    }
    for (auto& cls : choices(decided, undecided)) {
      std::vector<int> rest;
      std::set_difference(undecided.begin(), undecided.end(), cls.begin(), cls.end(),
                          std::back_inserter(rest));
      decided.push_back(cls);
      node(decided, rest, out);
      decided.pop_back();
    }
  }

  const GroupSpec& g_;
  Closure closure_;
  std::vector<std::vector<int>> atoms_;
};

// All subgroups of the unit group, as sorted lists of multipliers.
std::vector<std::vector<int>> unit_subgroups(const std::vector<int>& units, int e) {
  std::set<std::vector<int>> found;
  auto close = [&](std::vector<int> gens) {
    std::set<int> h{1};
    std::vector<int> queue{1};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int m : gens) {
        int p = static_cast<int>((static_cast<long>(queue[i]) * m) % e);
        if (h.insert(p).second) queue.push_back(p);
      }
    return std::vector<int>(h.begin(), h.end());
  };
  std::vector<std::vector<int>> queue{close({})};
  found.insert(queue[0]);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int m : units) {
      auto gens = queue[i];
      gens.push_back(m);
      auto h = close(gens);
      if (found.insert(h).second) queue.push_back(h);
    }
  }
  return {found.begin(), found.end()};
}

class SplitSearch {
 public:
  SplitSearch(const GroupSpec& g, const std::vector<int>& rational_labels) : g_(g) {
    int k = *std::max_element(rational_labels.begin(), rational_labels.end()) + 1;
    std::vector<std::vector<int>> w(at(k));
    for (int x = 0; x < g.order(); ++x) w[at(rational_labels[at(x)])].push_back(x);
    auto units = unit_multipliers(g);
    auto subgroups = unit_subgroups(units, g.exponent());
    for (int c = 1; c < k; ++c) options_.push_back(split_options(w[at(c)], units, subgroups));
  }

  void run(std::vector<SRing>& out) {
    classes_.assign(1, std::vector<int>{0});
    label_.assign(at(g_.order()), -1);
    label_[0] = 0;
    dfs(0, out);
  }

 private:
  using Option = std::vector<std::vector<int>>;  // a unit-orbit of basic sets

  std::vector<Option> split_options(const std::vector<int>& w, const std::vector<int>& units,
                                    const std::vector<std::vector<int>>& subgroups) const {
    std::vector<Option> out;
    const int x0 = w[0];
    for (const auto& h : subgroups) {
      // H-orbits inside W, keyed by smallest element.
      std::map<int, std::vector<int>> horbit;
      std::vector<int> rep(at(g_.order()), -1);
      for (int x : w) {
        if (rep[at(x)] >= 0) continue;
        std::set<int> orb;
        for (int m : h) orb.insert(g_.scale(x, m));
        for (int y : orb) rep[at(y)] = *orb.begin();
        horbit[*orb.begin()] = {orb.begin(), orb.end()};
      }
      // The cosets U/H must move every H-orbit.
      bool free = true;
      for (const auto& [r, orb] : horbit) {
        for (int m : units) {
          if (std::binary_search(h.begin(), h.end(), m)) continue;
          if (rep[at(g_.scale(r, m))] == r) free = false;
        }
      }
      if (!free) continue;
      // Group H-orbits into U-orbits (the atoms of W).
      std::map<int, std::vector<int>> atoms;  // smallest point -> H-orbit reps
      std::vector<char> seen(at(g_.order()), 0);
      for (const auto& [r, orb] : horbit) {
        if (seen[at(r)]) continue;
        std::set<int> reps_in_atom;
        for (int m : units) reps_in_atom.insert(rep[at(g_.scale(r, m))]);
        for (int q : reps_in_atom) seen[at(q)] = 1;
        atoms[*reps_in_atom.begin()] = {reps_in_atom.begin(), reps_in_atom.end()};
      }
      std::vector<std::vector<int>> choice_lists;
      for (const auto& [first, reps] : atoms) {
        if (std::find(reps.begin(), reps.end(), rep[at(x0)]) != reps.end())
          choice_lists.push_back({rep[at(x0)]});
        else
          choice_lists.push_back(reps);
      }
      std::vector<std::size_t> idx(choice_lists.size(), 0);
      for (;;) {
        std::vector<int> x;
        for (std::size_t i = 0; i < idx.size(); ++i) {
          const auto& orb = horbit[choice_lists[i][idx[i]]];
          x.insert(x.end(), orb.begin(), orb.end());
        }
        std::sort(x.begin(), x.end());
        std::set<std::vector<int>> images;
        for (int m : units) {
          std::vector<int> img;
          for (int y : x) img.push_back(g_.scale(y, m));
          std::sort(img.begin(), img.end());
          images.insert(std::move(img));
        }
        out.emplace_back(images.begin(), images.end());
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == choice_lists[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
      }
    }
    return out;
  }

  // Products of completed pairs must be constant on completed classes.
  bool consistent(std::size_t first_new) const {
    std::vector<int> coef(at(g_.order()));
    for (std::size_t i = first_new; i < classes_.size(); ++i) {
      for (std::size_t j = 0; j < classes_.size(); ++j) {
        if (j >= first_new && j < i) continue;  // pair already checked
        std::fill(coef.begin(), coef.end(), 0);
        for (int a : classes_[i])
          for (int b : classes_[j]) ++coef[at(g_.add(a, b))];
        for (const auto& z : classes_) {
          int v = coef[at(z[0])];
          for (int y : z)
            if (coef[at(y)] != v) return false;
        }
      }
    }
    return true;
  }

  void dfs(std::size_t w, std::vector<SRing>& out) {
    if (w == options_.size()) {
      // Pairs completed early were only checked on the classes known then.
      try {
        out.push_back(validate_sring(g_, classes_));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotClosedUnderProduct) throw;
      }
      return;
    }
    for (const Option& opt : options_[w]) {
      std::size_t mark = classes_.size();
      classes_.insert(classes_.end(), opt.begin(), opt.end());
      if (consistent(mark)) dfs(w + 1, out);
      classes_.resize(mark);
    }
  }

  const GroupSpec& g_;
  std::vector<std::vector<Option>> options_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> label_;
};

std::vector<std::vector<int>> rational_label_vectors(const GroupSpec& g, int workers) {
  RationalSearch search(g);
  if (search.trivial()) return {std::vector<int>(at(g.order()), 0)};
  auto roots = search.root_choices();
  std::vector<std::vector<std::vector<int>>> parts(roots.size());
  parallel_for(roots.size(), workers, [&](std::size_t i) { search.run_from(roots[i], parts[i]); });
  std::vector<std::vector<int>> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SRing> enumerate_rational_srings(const GroupSpec& g, int bound, int workers) {
  check_enum_bound(g, bound);
  std::vector<SRing> out;
  for (const auto& labels : rational_label_vectors(g, workers)) out.push_back(sring_from_labels(g, labels));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SRing> enumerate_srings(const GroupSpec& g, int bound, int workers) {
  check_enum_bound(g, bound);
  auto rational = rational_label_vectors(g, workers);
  std::vector<std::vector<SRing>> parts(rational.size());
  parallel_for(rational.size(), workers, [&](std::size_t i) {
    if (g.order() == 1) {
      parts[i].push_back(SRing());
      return;
    }
    SplitSearch(g, rational[i]).run(parts[i]);
  });
  std::vector<SRing> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<int> restricted_growth(const std::vector<int>& labels) {
  std::vector<int> out = labels;
  Closure::normalize(out);
  return out;
}

std::vector<int> image_labels(const std::vector<int>& labels, const Perm& f) {
  std::vector<int> out(labels.size());
  for (std::size_t x = 0; x < labels.size(); ++x) out[at(f[static_cast<int>(x)])] = labels[x];
  return restricted_growth(out);
}

}  // namespace

std::vector<int> cayley_canonical_form(const SRing& a, const std::vector<Perm>& aut_g) {
  std::vector<int> best = restricted_growth(a.class_index());
  for (const Perm& f : aut_g) best = std::min(best, image_labels(a.class_index(), f));
  return best;
}

std::vector<SRing> up_to_cayley(const std::vector<SRing>& rings, const GroupSpec& g,
                                std::size_t aut_limit) {
  std::vector<Perm> aut_g = automorphism_group(g, std::max(g.order(), kDefaultGroupBound)).elements(aut_limit);
  std::set<std::vector<int>> seen;
  std::set<std::vector<int>> reps;
  for (const SRing& a : rings) {
    if (!(a.group() == g)) throw Error(ErrorKind::InvalidInput, "ring over a different group");
    std::vector<int> own = restricted_growth(a.class_index());
    if (seen.count(own)) continue;
    std::vector<int> best = own;
    for (const Perm& f : aut_g) {
      auto img = image_labels(a.class_index(), f);
      best = std::min(best, img);
      seen.insert(std::move(img));
    }
    reps.insert(best);
  }
  std::vector<SRing> out;
  for (const auto& labels : reps) out.push_back(sring_from_labels(g, labels));
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(Label label) {
  switch (label) {
    case Label::Rank2: return "RANK2";
    case Label::Tensor: return "TENSOR";
    case Label::SWreathSmall: return "S_WREATH_SMALL";
    case Label::Exceptional: return "EXCEPTIONAL";
  }
  return "?";
}

Label classify(const SRing& a) {
  const auto& f = a.group().factors();
  bool ok = f.size() == 3 && f[0] == f[1] && f[1] == f[2] && (f[0] == 2 || f[0] == 3);
  if (!ok) throw Error(ErrorKind::InvalidInput, "classification is defined over C2^3 and C3^3 only");
  const int p = f[0];
  if (a.rank() == 2) return Label::Rank2;
  if (!detect_tensor(a).empty()) return Label::Tensor;
  for (const Section& s : detect_s_wreath(a))
    if (s.quotient.order() <= p) return Label::SWreathSmall;
  return Label::Exceptional;
}

std::string size_multiset(const std::vector<int>& ascending_sizes) {
  std::string out;
  for (std::size_t i = 0; i < ascending_sizes.size();) {
    std::size_t j = i;
    while (j < ascending_sizes.size() && ascending_sizes[j] == ascending_sizes[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(ascending_sizes[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<Table1Row> table1_report(const std::vector<SRing>& reps, int workers) {
  std::vector<SRing> exceptional;
  for (const SRing& a : reps)
    if (classify(a) == Label::Exceptional) exceptional.push_back(a);
  std::vector<Table1Row> rows(exceptional.size());
  parallel_for(exceptional.size(), workers, [&](std::size_t i) {
    const SRing& a = exceptional[i];
    Table1Row& r = rows[i];
    r.ring = a;
    r.rank = a.rank();
    r.sizes = a.sizes();
    r.schurian = is_schurian(a).schurian;
    InducedSplit split = aut_alg_induced(a);
    r.aut_order = split.aut_order;
    r.iso_over_aut = split.iso_order / split.aut_order;
    r.aut_alg_order = split.aut_alg.size();
  });
  std::stable_sort(rows.begin(), rows.end(), [](const Table1Row& x, const Table1Row& y) {
    if (x.rank != y.rank) return x.rank < y.rank;
    return x.sizes > y.sizes;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].name = "A" + std::to_string(i + 1);
  return rows;
}

}  // namespace schur
