// Prints one PASS/FAIL line per acceptance criterion, with supporting detail
// lines indented underneath. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "schur/analysis.hpp"
#include "schur/constructors.hpp"
#include "schur/enumeration.hpp"
#include "schur/iso.hpp"
#include "support/oracles.hpp"
#include "support/reference_data.hpp"
#include "support/properties.hpp"
#include "support/samples.hpp"

using namespace schur;

namespace {

using Clock = std::chrono::steady_clock;

struct Report {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::size_t at(int i) { return static_cast<std::size_t>(i); }

int perm_order(const Perm& p) {
  Perm q = p;
  int k = 1;
  while (!q.is_identity()) {
    q = q * p;
    ++k;
  }
  return k;
}

std::map<std::string, int> names_of(const Witness& w) {
  std::map<std::string, int> out;
  for (const auto& n : w.names) out[n.name] = n.index;
  return out;
}

// Named sets and phi agree with the transcribed data; returns the class list
// check separately so both criteria can report it.
void check_witness_data(const Witness& w, const expected::NamedSets& sets,
                        const std::vector<std::pair<std::string, std::string>>& phi_pairs, Report& r) {
  auto names = names_of(w);
  std::set<std::vector<int>> expected, actual(w.ring.classes().begin(), w.ring.classes().end());
  for (const auto& [name, members] : sets) {
    expected.insert(members);
    auto it = names.find(name);
    r.require(it != names.end() && w.ring.basic_set(it->second) == members, "basic set " + name + " differs");
  }
  r.require(static_cast<int>(sets.size()) == w.ring.rank(), "rank differs from the listed set count");
  r.require(expected == actual, "basic sets differ from the listed sets");

  std::map<std::string, std::string> swap(phi_pairs.begin(), phi_pairs.end());
  bool phi_ok = true;
  for (const auto& [name, idx] : names) {
    std::string target = swap.count(name) ? swap[name] : name;
    if (w.phi[idx] != names[target]) phi_ok = false;
  }
  r.require(phi_ok, "phi differs from the listed permutation");
  AlgCheck chk = is_algebraic_iso(w.ring, w.ring, w.phi);
  r.require(chk.ok, "phi is not algebraic: " + chk.reason);
  r.require((w.phi * w.phi).is_identity() && !w.phi.is_identity(), "phi does not have order 2");
}

Report criterion1() {
  Report r;
  Witness w = witness_p2();
  const GroupSpec& g = w.ring.group();
  check_witness_data(w, expected::witness_p2_sets(g), expected::witness_p2_phi(), r);
  auto n = names_of(w);
  r.require(w.ring.constants()(n["Y1"], n["Y2"], n["T2"]) == 2, "c[Y1][Y2][T2] != 2");
  auto expect = [&](expected::Word u, expected::Word v) {
    GroupRingVector out{std::vector<long>(at(g.order()), 0)};
    out.coeffs[at(expected::word(g, u))] += 2;
    out.coeffs[at(expected::word(g, v))] += 2;
    return out;
  };
  auto product = [&](const char* x, const char* y) {
    return convolve(g, indicator(g, w.ring.basic_set(n[x])), indicator(g, w.ring.basic_set(n[y])));
  };
  r.require(product("Y1", "Y2") == expect({1, 0, 0}, {0, 0, 2}), "Y1 Y2 != 2a + 2c1");
  r.require(product("Z1", "Z2") == expect({1, 0, 0}, {1, 0, 2}), "Z1 Z2 != 2a + 2ac1");
  r.require(!is_induced(w.ring, w.ring, w.phi).has_value(), "phi is induced");
  std::vector<AlgMap> gens{w.phi};
  SRing fused = fusion(w.ring, gens);
  r.require(!is_schurian(fused).schurian, "fusion is schurian");
  std::vector<SRing> self{w.ring};
  SeparabilityReport rep = separability_verdict(w.ring, self);
  r.require(rep.verdict == Verdict::NonSeparable, "verdict is SEPARABLE");
  r.note("rank " + std::to_string(w.ring.rank()) + ", fusion rank " + std::to_string(fused.rank()) +
         ", |Aut_alg| " + rep.aut_alg.str() + ", induced " + rep.aut_alg_induced.str());
  return r;
}

Report criterion2() {
  Report r;
  Witness w = witness_p3();
  const GroupSpec& g = w.ring.group();
  check_witness_data(w, expected::witness_p3_sets(g), expected::witness_p3_phi(), r);
  const auto& k = w.k_generators;
  r.require(k.size() == 3, "K needs three generators");
  if (k.size() == 3) {
    r.require(perm_order(k[0]) == 2 && perm_order(k[1]) == 3 && perm_order(k[2]) == 3,
              "generator orders are not 2, 3, 3");
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        r.require(k[i] * k[j] == k[j] * k[i], "generators do not commute");
    r.require(PermGroup(g.order(), k).order() == 18, "|K| != 18");
  }
  r.require(!is_induced(w.ring, w.ring, w.phi).has_value(), "phi is induced");
  std::vector<AlgMap> gens{w.phi};
  SRing fused = fusion(w.ring, gens);
  r.require(!is_schurian(fused).schurian, "fusion is schurian");
  r.note("rank " + std::to_string(w.ring.rank()) + " (the listed family has " +
         std::to_string(expected::witness_p3_sets(g).size()) + " sets), fusion rank " +
         std::to_string(fused.rank()));
  return r;
}

Report criterion3() {
  Report r;
  GroupSpec g({3, 3, 3});
  auto all = enumerate_srings(g);
  auto reps = up_to_cayley(all, g);
  auto rows = table1_report(reps);
  r.note(std::to_string(all.size()) + " S-rings, " + std::to_string(reps.size()) +
         " up to Cayley isomorphism, " + std::to_string(rows.size()) + " exceptional");

  auto table = expected::table1();
  std::multiset<int> want_ranks, got_ranks;
  for (const auto& t : table) want_ranks.insert(t.rank);
  for (const auto& row : rows) got_ranks.insert(row.rank);
  r.require(rows.size() == table.size(), "expected " + std::to_string(table.size()) + " exceptional rings, found " +
                                             std::to_string(rows.size()));
  r.require(want_ranks == got_ranks, "rank multiset differs");

  // Row-for-row comparison of (rank, sizes).
  std::multiset<std::pair<int, std::vector<int>>> want, got;
  for (const auto& t : table) want.insert({t.rank, t.sizes});
  for (const auto& row : rows) got.insert({row.rank, row.sizes});
  r.require(want == got, "size multisets differ from the table");
  for (const auto& t : table) {
    if (got.count({t.rank, t.sizes})) continue;
    std::string line = t.name + " (rank " + std::to_string(t.rank) + ", " + size_multiset(t.sizes) + ") not exceptional:";
    int found = 0;
    for (const SRing& a : reps) {
      if (a.rank() != t.rank || a.sizes() != t.sizes) continue;
      ++found;
      line += " class labelled " + to_string(classify(a));
      if (auto ts = detect_tensor(a); !ts.empty())
        line += " (tensor over orders " + std::to_string(ts[0].first.order()) + "x" +
                std::to_string(ts[0].second.order()) + ")";
      for (const Section& s : detect_s_wreath(a)) {
        line += " (S-wreath |U|=" + std::to_string(s.upper.order()) + " |L|=" + std::to_string(s.lower.order()) + ")";
        break;
      }
    }
    if (found == 0) line += " no Cayley class with these parameters";
    r.note(line);
  }
  for (const auto& row : rows) {
    r.require(row.schurian, row.name + " is not schurian");
    r.require(row.iso_over_aut == row.aut_alg_order, row.name + ": |Aut_alg| != |Iso|/|Aut|");
  }
  std::size_t matched = 0;
  for (const auto& row : rows)
    if (want.count({row.rank, row.sizes})) ++matched;
  r.note(std::to_string(matched) + " of " + std::to_string(rows.size()) +
         " exceptional rings match a table row; all schurian with |Aut_alg| = |Iso|/|Aut|: " +
         (std::all_of(rows.begin(), rows.end(),
                      [](const Table1Row& x) { return x.schurian && x.iso_over_aut == x.aut_alg_order; })
              ? "yes"
              : "no"));
  return r;
}

Report criterion4() {
  Report r;
  std::size_t rings = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const GroupSpec& g : enumerate_abelian_groups(n)) {
      auto fast = enumerate_srings(g);
      auto slow = oracle::all_partition_srings(g);
      r.require(fast == slow, "enumeration differs from the all-partitions oracle at order " + std::to_string(n));
      for (const SRing& a : fast) {
        ++rings;
        oracle::ScanResult scan = oracle::scan_isomorphisms(a);
        r.require(automorphisms(a).order() == scan.aut, props::describe(a) + ": |Aut| differs from scan");
        InducedSplit split = aut_alg_induced(a);
        std::set<std::vector<int>> induced;
        for (const AlgMap& m : split.induced) induced.insert(m.images());
        r.require(induced == scan.induced, props::describe(a) + ": Aut_alg_0 differs from scan");
        r.require(split.iso_order == scan.iso, props::describe(a) + ": |Iso| differs from scan");
        r.require(static_cast<long>(scan.induced.size()) * scan.aut == scan.iso,
                  props::describe(a) + ": |Aut_alg_0| != |Iso|/|Aut|");
      }
    }
  }
  r.note(std::to_string(rings) + " S-rings over groups of order <= 8 checked against the |G|! scan");
  return r;
}

Report criterion5() {
  Report r;
  std::map<int, std::vector<SRing>> targets;
  std::size_t checked = 0;
  for (const std::vector<int>& f : std::vector<std::vector<int>>{{4}, {8}, {9}, {2, 2, 2}, {2, 4}}) {
    GroupSpec g(f);
    if (!targets.count(g.order())) targets[g.order()] = exhaustive_targets(g.order(), kDefaultEnumBound);
    for (const SRing& a : enumerate_srings(g)) {
      ++checked;
      SeparabilityReport rep = separability_verdict(a, targets[g.order()], TargetsMode::Exhaustive);
      r.require(rep.verdict == Verdict::Separable, props::describe(a) + " is not separable");
    }
  }
  r.note(std::to_string(checked) + " S-rings over C4, C8, C9, C2^3, C2xC4 against every S-ring of equal order");
  return r;
}

Report criterion6() {
  Report r;
  samples::Generator gen(20240611u);
  auto timed = [&](const std::string& name, const std::function<std::size_t()>& body) {
    auto t0 = Clock::now();
    std::size_t count = body();
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    r.require(secs < 60.0, name + " took longer than a minute");
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << name << ": " << count << " instances, " << secs << " s";
    r.note(s.str());
  };
  auto draws = gen.draw(120);
  auto each = [&](const std::string& name, const std::function<std::string(const SRing&)>& check) {
    timed(name, [&] {
      for (const auto& s : draws) {
        std::string e = check(s.ring);
        r.require(e.empty(), name + " (" + s.kind + "): " + e);
      }
      return draws.size();
    });
  };
  each("axioms", props::axioms);
  each("structure constant identities", props::tensor_identities);
  each("rational conjugacy closure", props::rational_closure);
  each("extension to <X> and rad(X)", [](const SRing& a) { return props::extension_identities(a); });
  each("2-WL stability", props::wl_stable);
  timed("cyclotomic = orbit ring", [&] {
    for (int i = 0; i < 60; ++i) {
      GroupSpec g = gen.group(16);
      auto k = gen.random_automorphisms(g, gen.uniform(1, 3));
      std::string e = props::cyclotomic_is_orbit(g, k);
      r.require(e.empty(), e);
    }
    return std::size_t{60};
  });
  timed("lift restricts to phi", [&] {
    for (int i = 0; i < 40; ++i) {
      auto ls = gen.lift();
      std::vector<int> embed;
      for (int x = 0; x < ls.b.group().order(); ++x) {
        Elem e = ls.b.group().element(x);
        e.residues.push_back(0);
        embed.push_back(ls.g.index(e));
      }
      std::string e = props::lift_properties(ls.b, ls.phi, ls.h, embed, ls.lift);
      r.require(e.empty(), e);
    }
    return std::size_t{40};
  });
  timed("normalizer identity on schurian rings", [&] {
    std::size_t done = 0;
    for (const auto& s : draws) {
      if (s.ring.group().order() > 16 || !is_schurian(s.ring).schurian) continue;
      auto out = props::normalizer_identity(s.ring);
      r.require(out.error.empty(), out.error);
      if (out.checked) ++done;
    }
    return done;
  });
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Report (*run)();
    double budget_seconds;
  };
  const Criterion criteria[] = {
      {1, "witness p=2 replication", criterion1, 60},
      {2, "witness p=3 replication", criterion2, 1800},
      {3, "exceptional S-rings over C3^3", criterion3, 8 * 3600},
      {4, "oracle equivalence at order <= 8", criterion4, 300},
      {5, "separability of small groups", criterion5, 1800},
      {6, "property suites", criterion6, 600},
  };
  bool all_ok = true;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Report r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > c.budget_seconds) r.failures.push_back("time budget exceeded");
    bool ok = r.failures.empty();
    all_ok = all_ok && ok;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << t.str() << " s)\n";
    for (const auto& n : r.notes) std::cout << "    " << n << '\n';
    std::size_t shown = 0;
    for (const auto& f : r.failures) {
      if (++shown > 10) {
        std::cout << "    ... " << r.failures.size() - 10 << " more\n";
        break;
      }
      std::cout << "    failed: " << f << '\n';
    }
    std::cout.flush();
  }
  return all_ok ? 0 : 1;
}
