#pragma once

// Brute-force reference implementations. None of these call the search
// engines they are used to check; they rely only on GroupSpec arithmetic,
// validate_sring and plain enumeration.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "schur/error.hpp"
#include "schur/group.hpp"
#include "schur/sring.hpp"

namespace oracle {

using namespace schur;

inline std::size_t at(int i) { return static_cast<std::size_t>(i); }

/// Class map induced by f : A -> B, if f maps every relation R(X) onto some
/// R(X'). Entry x is the image class of class x.
inline std::optional<std::vector<int>> class_map(const SRing& a, const SRing& b,
                                                 const std::vector<int>& f) {
  const GroupSpec& g = a.group();
  const GroupSpec& h = b.group();
  std::vector<int> m(at(a.rank()), -1);
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) {
      int c = a.class_of(g.sub(y, x));
      int d = b.class_of(h.sub(f[at(y)], f[at(x)]));
      if (m[at(c)] < 0) {
        m[at(c)] = d;
      } else if (m[at(c)] != d) {
        return std::nullopt;
      }
    }
  }
  std::vector<int> sorted = m;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < b.rank(); ++i)
    if (i >= static_cast<int>(sorted.size()) || sorted[at(i)] != i) return std::nullopt;
  if (a.rank() != b.rank()) return std::nullopt;
  return m;
}

struct ScanResult {
  long aut = 0;                          // |Aut(A)|
  long iso = 0;                          // |Iso(A, B)|
  std::set<std::vector<int>> induced;    // distinct class maps phi_f
};

/// Scans all |G|! bijections. Only sensible for |G| <= 8.
inline ScanResult scan_isomorphisms(const SRing& a, const SRing& b) {
  ScanResult r;
  const int n = a.group().order();
  if (b.group().order() != n) return r;
  std::vector<int> f(at(n));
  std::iota(f.begin(), f.end(), 0);
  std::vector<int> id(at(a.rank()));
  std::iota(id.begin(), id.end(), 0);
  do {
    auto m = class_map(a, b, f);
    if (!m) continue;
    ++r.iso;
    if (*m == id) ++r.aut;
    r.induced.insert(*m);
  } while (std::next_permutation(f.begin(), f.end()));
  return r;
}

inline ScanResult scan_isomorphisms(const SRing& a) { return scan_isomorphisms(a, a); }

/// Every S-ring over g, by testing each set partition of G \ {e}.
inline std::vector<SRing> all_partition_srings(const GroupSpec& g) {
  const int n = g.order();
  std::vector<SRing> out;
  if (n == 1) return {SRing()};
  const int m = n - 1;
  // Restricted growth strings over elements 1..n-1.
  std::vector<int> rgs(at(m), 0), mx(at(m), 0);
  for (;;) {
    std::vector<std::vector<int>> parts{{0}};
    int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    for (int b = 0; b < blocks; ++b) parts.emplace_back();
    for (int i = 0; i < m; ++i) parts[at(rgs[at(i)] + 1)].push_back(i + 1);
    try {
      out.push_back(validate_sring(g, parts));
    } catch (const Error&) {
    }
    int i = m - 1;
    while (i > 0 && rgs[at(i)] == mx[at(i - 1)] + 1) --i;
    if (i == 0) break;
    ++rgs[at(i)];
    mx[at(i)] = std::max(mx[at(i - 1)], rgs[at(i)]);
    for (int k = i + 1; k < m; ++k) {
      rgs[at(k)] = 0;
      mx[at(k)] = mx[at(k - 1)];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// c[X][Y][Z] read off the convolution of indicator vectors.
inline SCTensor convolution_constants(const SRing& a) {
  SCTensor t(a.rank());
  const GroupSpec& g = a.group();
  for (int x = 0; x < a.rank(); ++x) {
    for (int y = 0; y < a.rank(); ++y) {
      GroupRingVector prod =
          convolve(g, indicator(g, a.basic_set(x)), indicator(g, a.basic_set(y)));
      for (int z = 0; z < a.rank(); ++z) t.at(x, y, z) = static_cast<int>(prod.coeffs[at(a.basic_set(z)[0])]);
    }
  }
  return t;
}

/// Subgroups as sorted member lists, by checking closure of every subset
/// containing e. Only sensible for |G| <= 16.
inline std::set<std::vector<int>> subgroups_by_closure(const GroupSpec& g) {
  std::set<std::vector<int>> out;
  const int n = g.order();
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    std::vector<int> s{0};
    for (int i = 1; i < n; ++i)
      if (mask & (1UL << (i - 1))) s.push_back(i);
    std::vector<char> in(at(n), 0);
    for (int x : s) in[at(x)] = 1;
    bool closed = true;
    for (int x : s) {
      for (int y : s)
        if (!in[at(g.add(x, y))]) closed = false;
      if (!closed) break;
    }
    if (closed) out.insert(s);
  }
  return out;
}

/// Aut(G) by scanning all bijections fixing e. Only for |G| <= 9.
inline std::set<std::vector<int>> group_automorphisms_by_scan(const GroupSpec& g) {
  std::set<std::vector<int>> out;
  const int n = g.order();
  std::vector<int> f(at(n));
  std::iota(f.begin(), f.end(), 0);
  do {
    bool hom = true;
    for (int x = 0; x < n && hom; ++x)
      for (int y = 0; y < n && hom; ++y)
        if (f[at(g.add(x, y))] != g.add(f[at(x)], f[at(y)])) hom = false;
    if (hom) out.insert(f);
  } while (std::next_permutation(f.begin() + 1, f.end()));
  return out;
}

/// Class bijections preserving every structure constant, by scanning all
/// permutations of the non-identity classes.
inline std::set<std::vector<int>> algebraic_maps_by_scan(const SRing& a, const SRing& b) {
  std::set<std::vector<int>> out;
  if (a.rank() != b.rank()) return out;
  const SCTensor& ca = a.constants();
  const SCTensor& cb = b.constants();
  const int r = a.rank();
  std::vector<int> m(at(r));
  std::iota(m.begin(), m.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < r && ok; ++x)
      for (int y = 0; y < r && ok; ++y)
        for (int z = 0; z < r && ok; ++z)
          if (ca(x, y, z) != cb(m[at(x)], m[at(y)], m[at(z)])) ok = false;
    if (ok) out.insert(m);
  } while (std::next_permutation(m.begin() + 1, m.end()));
  return out;
}

/// {g : g + X = X} straight from the definition.
inline std::vector<int> radical_by_definition(const GroupSpec& g, const std::vector<int>& xs) {
  std::set<int> s(xs.begin(), xs.end());
  std::vector<int> out;
  for (int t = 0; t < g.order(); ++t) {
    bool fixes = true;
    for (int x : xs)
      if (!s.count(g.add(x, t))) fixes = false;
    if (fixes) out.push_back(t);
  }
  return out;
}

/// Number of abelian groups of order n: product of partition numbers of the
/// prime exponents.
inline int abelian_group_count(int n) {
  auto partitions = [](int k) {
    std::vector<int> p(at(k + 1), 0);
    p[0] = 1;
    for (int part = 1; part <= k; ++part)
      for (int s = part; s <= k; ++s) p[at(s)] += p[at(s - part)];
    return p[at(k)];
  };
  int count = 1;
  for (int p = 2; p <= n; ++p) {
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k > 0) count *= partitions(k);
  }
  return count;
}

}  // namespace oracle
