#include "schur/analysis.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>

#include "schur/enumeration.hpp"
#include "schur/error.hpp"

namespace schur {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

bool is_translation(const GroupSpec& g, const Perm& p) {
  int t = p[0];
  for (int x = 0; x < g.order(); ++x)
    if (p[x] != g.add(x, t)) return false;
  return true;
}

// Closure of a set of class permutations under composition.
std::set<AlgMap> generated(const std::vector<AlgMap>& gens, int rank) {
  std::set<AlgMap> out{AlgMap::identity(rank)};
  std::vector<AlgMap> queue{AlgMap::identity(rank)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const AlgMap& g : gens) {
      AlgMap h = queue[i] * g;
      if (out.insert(h).second) queue.push_back(h);
    }
  }
  return out;
}

// Runs fn(i) for i in [0, n) on up to `workers` threads.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t w = std::min<std::size_t>(at(workers), n);
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

}  // namespace

SchurianResult is_schurian(const SRing& a, int bound) {
  PermGroup aut = automorphisms(a, bound);
  SchurianResult r;
  r.aut_order = aut.order();
  r.orbits = orbits_of(a.group().order(), aut.stabilizer_generators(1));
  r.schurian = r.orbits == a.classes();
  return r;
}

bool is_normal(const SRing& a, const PermGroup& aut) {
  const GroupSpec& g = a.group();
  for (const Perm& t : right_translations(g))
    for (const Perm& s : aut.generators())
      if (!is_translation(g, s.inverse() * t * s)) return false;
  return true;
}

bool is_normal(const SRing& a, int bound) { return is_normal(a, automorphisms(a, bound)); }

InducedSplit aut_alg_induced(const SRing& a, int bound, int rank_bound) {
  InducedSplit out;
  out.aut_alg = algebraic_automorphisms(a, rank_bound);
  PermGroup aut = automorphisms(a, bound);
  out.aut_order = aut.order();

  // Aut_alg(A)_0 is a subgroup: products of induced maps are induced, and a
  // coset of it through a non-induced map contains no induced map.
  std::vector<AlgMap> induced_gens;
  std::vector<Perm> witnesses;
  std::set<AlgMap> closure{AlgMap::identity(a.rank())};
  std::vector<AlgMap> rejected;
  for (const AlgMap& phi : out.aut_alg) {
    if (closure.count(phi)) continue;
    bool known_bad = std::any_of(rejected.begin(), rejected.end(), [&](const AlgMap& r) {
      return closure.count(r.inverse() * phi) > 0;
    });
    if (known_bad) continue;
    if (auto f = is_induced(a, a, phi, bound, &aut)) {
      induced_gens.push_back(phi);
      witnesses.push_back(*f);
      closure = generated(induced_gens, a.rank());
    } else {
      rejected.push_back(phi);
    }
  }
  out.induced.assign(closure.begin(), closure.end());

  if (witnesses.empty()) {
    out.iso_order = out.aut_order;
  } else {
    std::vector<Perm> gens = aut.generators();
    gens.insert(gens.end(), witnesses.begin(), witnesses.end());
    PermGroup iso(a.group().order(), gens, {0});
    out.iso_order = iso.order();
  }
  if (out.iso_order != out.aut_order * out.induced.size())
    throw std::logic_error("|Iso(A)| differs from |Aut(A)| * |Aut_alg(A)_0|");
  return out;
}

SeparabilityReport separability_verdict(const SRing& a, std::span<const SRing> targets,
                                        TargetsMode mode, int bound, int rank_bound, int workers) {
  SeparabilityReport rep;
  rep.ring = a;
  rep.mode = mode;
  InducedSplit split = aut_alg_induced(a, bound, rank_bound);
  rep.aut = split.aut_order;
  rep.aut_alg = split.aut_alg.size();
  rep.aut_alg_induced = split.induced.size();

  std::vector<SRing> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  rep.targets_checked = sorted.size();

  std::vector<std::optional<AlgMap>> bad(sorted.size());
  parallel_for(sorted.size(), workers, [&](std::size_t i) {
    const SRing& b = sorted[i];
    if (b.group().order() != a.group().order() || b.sizes() != a.sizes()) return;
    auto maps = algebraic_isomorphisms(a, b, rank_bound);
    if (maps.empty()) return;
    PermGroup aut_b = automorphisms(b, bound);
    for (const AlgMap& m : maps) {
      if (!is_induced(a, b, m, bound, &aut_b)) {
        bad[i] = m;
        return;
      }
    }
  });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (bad[i]) {
      rep.verdict = Verdict::NonSeparable;
      rep.witness_target = sorted[i];
      rep.witness_map = bad[i];
      break;
    }
  }
  return rep;
}

std::vector<SRing> exhaustive_targets(int order, int enum_bound, int workers) {
  std::vector<SRing> out;
  for (const GroupSpec& g : enumerate_abelian_groups(order)) {
    auto reps = up_to_cayley(enumerate_srings(g, enum_bound, workers), g);
    out.insert(out.end(), reps.begin(), reps.end());
  }
  return out;
}

}  // namespace schur
