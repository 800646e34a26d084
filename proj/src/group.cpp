#include "schur/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "schur/error.hpp"

namespace schur {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::IdentityNotSingleton: return "IdentityNotSingleton";
    case ErrorKind::NotInverseClosed: return "NotInverseClosed";
    case ErrorKind::NotClosedUnderProduct: return "NotClosedUnderProduct";
    case ErrorKind::SchurViolation: return "SchurViolation";
    case ErrorKind::NotASection: return "NotASection";
    case ErrorKind::NotAnASet: return "NotAnASet";
    case ErrorKind::IncompatibleOnSection: return "IncompatibleOnSection";
    case ErrorKind::QuotientMismatch: return "QuotientMismatch";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::RightRegularNotContained: return "RightRegularNotContained";
    case ErrorKind::MapNotAlgebraic: return "MapNotAlgebraic";
    case ErrorKind::NotAnIsomorphism: return "NotAnIsomorphism";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

void check_bound(long value, long bound, std::string_view what) {
  if (value > bound)
    throw Error(ErrorKind::BoundExceeded, std::string(what) + " " + std::to_string(value) +
                                              " exceeds bound " + std::to_string(bound));
}

namespace {

constexpr int kMaxOrder = 1 << 20;
constexpr int kTableOrder = 512;

std::size_t at(int i) { return static_cast<std::size_t>(i); }

}  // namespace

GroupSpec::GroupSpec() { strides_ = {}; }

GroupSpec::GroupSpec(std::vector<int> factors) : factors_(std::move(factors)) {
  long order = 1;
  for (int f : factors_) {
    if (f < 2) throw Error(ErrorKind::InvalidInput, "cyclic factor orders must be >= 2");
    order *= f;
    if (order > kMaxOrder) throw Error(ErrorKind::BoundExceeded, "group order too large");
    exponent_ = std::lcm(exponent_, f);
  }
  order_ = static_cast<int>(order);
  strides_.assign(factors_.size(), 1);
  for (int i = num_factors() - 2; i >= 0; --i)
    strides_[at(i)] = strides_[at(i + 1)] * factors_[at(i + 1)];

  if (order_ <= kTableOrder) {
    // Built with the table pointers still empty so add/neg use residues.
    auto add = std::make_shared<std::vector<int>>(at(order_) * at(order_));
    auto neg = std::make_shared<std::vector<int>>(at(order_));
    for (int g = 0; g < order_; ++g) {
      (*neg)[at(g)] = this->neg(g);
      for (int h = 0; h < order_; ++h) (*add)[at(g) * at(order_) + at(h)] = this->add(g, h);
    }
    add_table_ = std::move(add);
    neg_table_ = std::move(neg);
  }
}

GroupSpec make_group(std::vector<int> factors) { return GroupSpec(std::move(factors)); }

Elem GroupSpec::element(int index) const {
  Elem e;
  e.residues.resize(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    e.residues[i] = (index / strides_[i]) % factors_[i];
  return e;
}

int GroupSpec::index(const Elem& e) const {
  if (e.residues.size() != factors_.size())
    throw Error(ErrorKind::InvalidInput, "element has wrong number of residues");
  int idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int r = e.residues[i];
    if (r < 0 || r >= factors_[i])
      throw Error(ErrorKind::InvalidInput, "residue out of range");
    idx += r * strides_[i];
  }
  return idx;
}

int GroupSpec::add(int g, int h) const {
  if (add_table_) return (*add_table_)[at(g) * at(order_) + at(h)];
  int idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int r = ((g / strides_[i]) % factors_[i] + (h / strides_[i]) % factors_[i]) % factors_[i];
    idx += r * strides_[i];
  }
  return idx;
}

int GroupSpec::neg(int g) const {
  if (neg_table_) return (*neg_table_)[at(g)];
  int idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int r = (factors_[i] - (g / strides_[i]) % factors_[i]) % factors_[i];
    idx += r * strides_[i];
  }
  return idx;
}

int GroupSpec::scale(int g, long m) const {
  long mm = ((m % exponent_) + exponent_) % exponent_;
  int idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long r = (g / strides_[i]) % factors_[i];
    idx += static_cast<int>((r * mm) % factors_[i]) * strides_[i];
  }
  return idx;
}

int GroupSpec::order_of(int g) const {
  int o = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int r = (g / strides_[i]) % factors_[i];
    o = std::lcm(o, factors_[i] / std::gcd(r, factors_[i]));
  }
  return o;
}

int GroupSpec::generator(int i) const { return strides_.at(at(i)); }

Elem mul(const GroupSpec& g, const Elem& x, const Elem& y) {
  return g.element(g.add(g.index(x), g.index(y)));
}

Elem inv(const GroupSpec& g, const Elem& x) { return g.element(g.neg(g.index(x))); }

int elem_order(const GroupSpec& g, const Elem& x) { return g.order_of(g.index(x)); }

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Subgroup trivial_subgroup() { return Subgroup{{0}, {}}; }

Subgroup whole_group(const GroupSpec& g) {
  std::vector<int> gens;
  for (int i = 0; i < g.num_factors(); ++i) gens.push_back(g.generator(i));
  return generated_subgroup(g, gens);
}

namespace {

// Closure of `base` (a subgroup, as a membership mask) with the extra element x.
void saturate(const GroupSpec& g, std::vector<char>& mask, std::vector<int>& members, int x) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    int y = g.add(members[i], x);
    if (!mask[at(y)]) {
      mask[at(y)] = 1;
      members.push_back(y);
    }
  }
}

}  // namespace

Subgroup generated_subgroup(const GroupSpec& g, std::span<const int> xs) {
  std::vector<char> mask(at(g.order()), 0);
  std::vector<int> members{0};
  mask[0] = 1;
  Subgroup out;
  for (int x : xs) {
    if (x < 0 || x >= g.order()) throw Error(ErrorKind::InvalidInput, "element out of range");
    if (mask[at(x)]) continue;
    out.generators.push_back(x);
    // Saturating by x alone makes the set closed under x; repeat over the
    // growing set so that it is closed under all generators so far.
    std::size_t before = 0;
    while (before != members.size()) {
      before = members.size();
      for (int gen : out.generators) saturate(g, mask, members, gen);
    }
  }
  std::sort(members.begin(), members.end());
  out.members = std::move(members);
  return out;
}

Subgroup generated_subgroup(const GroupSpec& g, std::span<const Elem> xs) {
  std::vector<int> idx;
  for (const auto& e : xs) idx.push_back(g.index(e));
  return generated_subgroup(g, idx);
}

std::vector<Subgroup> all_subgroups(const GroupSpec& g, int bound) {
  check_bound(g.order(), bound, "group order");
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> queue{trivial_subgroup()};
  seen.insert(queue[0].members);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Subgroup h = queue[qi];
    std::vector<char> inside(at(g.order()), 0);
    for (int m : h.members) inside[at(m)] = 1;
    std::vector<char> tried(at(g.order()), 0);
    for (int x = 1; x < g.order(); ++x) {
      if (inside[at(x)] || tried[at(x)]) continue;
      std::vector<int> gens = h.generators;
      gens.push_back(x);
      Subgroup k = generated_subgroup(g, gens);
      // Every element of the coset H + x yields the same join.
      for (int m : h.members) tried[at(g.add(m, x))] = 1;
      if (seen.insert(k.members).second) queue.push_back(std::move(k));
    }
  }
  out = std::move(queue);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

std::vector<int> invariant_factors(int order, const std::function<int(int)>& killed) {
  std::vector<std::pair<int, int>> primes;
  int n = order;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    primes.push_back({p, e});
  }
  if (n > 1) primes.push_back({n, 1});

  // Per prime, recover the partition from the conjugate partition
  // lambda'_k = log_p(killed(p^k)) - log_p(killed(p^{k-1})).
  std::vector<std::pair<int, std::vector<int>>> parts;
  for (auto [p, e] : primes) {
    std::vector<int> logs{0};
    long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      int c = killed(static_cast<int>(pk));
      int l = 0;
      while (c > 1) c /= p, ++l;
      logs.push_back(l);
    }
    std::vector<int> conj;
    for (int k = 1; k <= e; ++k) conj.push_back(logs[at(k)] - logs[at(k - 1)]);
    std::vector<int> lambda;  // descending
    for (int j = 1; !conj.empty() && j <= conj[0]; ++j) {
      int c = 0;
      for (int v : conj) c += v >= j;
      lambda.push_back(c);
    }
    parts.push_back({p, lambda});
  }
  std::size_t len = 0;
  for (auto& [p, l] : parts) len = std::max(len, l.size());
  std::vector<int> factors;
  for (std::size_t j = 0; j < len; ++j) {
    int d = 1;
    for (auto& [p, l] : parts)
      if (j < l.size())
        for (int k = 0; k < l[j]; ++k) d *= p;
    factors.push_back(d);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

namespace {

// Finite abelian group on 0..n-1 given by an addition table, identity 0.
struct TableGroup {
  int n = 1;
  std::vector<int> table;
  int add(int a, int b) const { return table[at(a) * at(n) + at(b)]; }
  int order_of(int a) const {
    int k = 1, x = a;
    while (x != 0) x = add(x, a), ++k;
    return k;
  }
  int killed(int m) const {
    int c = 0;
    for (int a = 0; a < n; ++a) {
      int x = 0;
      for (int k = 0; k < m; ++k) x = add(x, a);
      c += x == 0;
    }
    return c;
  }
};

// Elements x_i of `t` with |x_i| = factors[i] generating t as a direct sum.
// Returns the isomorphism from GroupSpec(factors) onto t.
std::vector<int> find_basis(const TableGroup& t, const GroupSpec& spec) {
  const auto& factors = spec.factors();
  std::size_t k = factors.size();
  std::vector<int> images(k, 0);
  std::vector<std::vector<int>> orders_ok(k);
  for (std::size_t i = 0; i < k; ++i)
    for (int a = 0; a < t.n; ++a)
      if (t.order_of(a) == factors[i]) orders_ok[i].push_back(a);

  // Largest factors first: they are the most constrained.
  std::function<bool(int, std::vector<int>)> rec = [&](int i, std::vector<int> span) -> bool {
    if (i < 0) return true;
    for (int a : orders_ok[at(i)]) {
      std::vector<char> mask(at(t.n), 0);
      for (int m : span) mask[at(m)] = 1;
      if (mask[at(a)] && a != 0) continue;
      std::vector<int> grown = span;
      for (std::size_t j = 0; j < grown.size(); ++j) {
        int y = t.add(grown[j], a);
        if (!mask[at(y)]) mask[at(y)] = 1, grown.push_back(y);
      }
      if (grown.size() != span.size() * at(factors[at(i)])) continue;
      images[at(i)] = a;
      if (rec(i - 1, std::move(grown))) return true;
    }
    return false;
  };
  if (!rec(static_cast<int>(k) - 1, {0}))
    throw Error(ErrorKind::InvalidInput, "internal: no basis for invariant factors");

  std::vector<int> iso(at(spec.order()), 0);
  for (int q = 0; q < spec.order(); ++q) {
    Elem e = spec.element(q);
    int x = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (int r = 0; r < e.residues[i]; ++r) x = t.add(x, images[i]);
    iso[at(q)] = x;
  }
  return iso;
}

}  // namespace

Section quotient_section(const GroupSpec& g, const Subgroup& upper, const Subgroup& lower) {
  for (int l : lower.members)
    if (!upper.contains(l)) throw Error(ErrorKind::NotASection, "lower subgroup not contained in upper");
  if (upper.members.empty() || lower.members.empty() || upper.order() % lower.order() != 0)
    throw Error(ErrorKind::NotASection, "malformed section");

  // Cosets of L in U, numbered by their smallest member.
  std::vector<int> coset_of(at(g.order()), -1);
  std::vector<int> reps;
  for (int u : upper.members) {
    if (coset_of[at(u)] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(u);
    for (int l : lower.members) {
      int y = g.add(u, l);
      if (!upper.contains(y)) throw Error(ErrorKind::NotASection, "upper is not closed");
      coset_of[at(y)] = id;
    }
  }
  TableGroup t;
  t.n = static_cast<int>(reps.size());
  t.table.resize(at(t.n) * at(t.n));
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b) t.table[at(a) * at(t.n) + at(b)] = coset_of[at(g.add(reps[at(a)], reps[at(b)]))];

  GroupSpec spec(invariant_factors(t.n, [&](int m) { return t.killed(m); }));
  std::vector<int> iso = find_basis(t, spec);
  std::vector<int> coset_to_q(at(t.n));
  for (int q = 0; q < spec.order(); ++q) coset_to_q[at(iso[at(q)])] = q;

  Section s{upper, lower, spec, std::vector<int>(at(g.order()), -1)};
  for (int u : upper.members) s.projection[at(u)] = coset_to_q[at(coset_of[at(u)])];
  return s;
}

std::pair<GroupSpec, std::vector<int>> normal_form(const GroupSpec& g) {
  Section s = quotient_section(g, whole_group(g), trivial_subgroup());
  std::vector<int> iso(at(g.order()));
  for (int x = 0; x < g.order(); ++x) iso[at(s.project(x))] = x;
  return {s.quotient, iso};
}

namespace {

std::vector<int> hom_images(const GroupSpec& g, std::span<const int> images) {
  std::vector<int> out(at(g.order()), 0);
  for (int x = 0; x < g.order(); ++x) {
    Elem e = g.element(x);
    int y = 0;
    for (int i = 0; i < g.num_factors(); ++i) y = g.add(y, g.scale(images[at(i)], e.residues[at(i)]));
    out[at(x)] = y;
  }
  return out;
}

}  // namespace

std::optional<GroupAutomorphism> hom_from_generator_images(const GroupSpec& g,
                                                           std::span<const int> images) {
  if (static_cast<int>(images.size()) != g.num_factors())
    throw Error(ErrorKind::InvalidInput, "need one image per canonical generator");
  for (int i = 0; i < g.num_factors(); ++i) {
    if (images[at(i)] < 0 || images[at(i)] >= g.order())
      throw Error(ErrorKind::InvalidInput, "image out of range");
    if (g.factors()[at(i)] % g.order_of(images[at(i)]) != 0) return std::nullopt;
  }
  auto map = hom_images(g, images);
  std::vector<char> hit(at(g.order()), 0);
  for (int y : map) {
    if (hit[at(y)]) return std::nullopt;
    hit[at(y)] = 1;
  }
  return GroupAutomorphism{std::move(map)};
}

std::optional<GroupAutomorphism> hom_from_generator_images(const GroupSpec& g,
                                                           std::span<const Elem> images) {
  std::vector<int> idx;
  for (const auto& e : images) idx.push_back(g.index(e));
  if (static_cast<int>(idx.size()) != g.num_factors())
    throw Error(ErrorKind::InvalidInput, "need one image per canonical generator");
  return hom_from_generator_images(g, std::span<const int>(idx));
}

bool is_group_automorphism(const GroupSpec& g, const Perm& p) {
  if (p.degree() != g.order() || p[0] != 0) return false;
  for (int i = 0; i < g.num_factors(); ++i) {
    int gen = g.generator(i);
    for (int x = 0; x < g.order(); ++x)
      if (p[g.add(x, gen)] != g.add(p[x], p[gen])) return false;
  }
  return true;
}

PermGroup automorphism_group(const GroupSpec& g, int bound) {
  check_bound(g.order(), bound, "group order");
  int k = g.num_factors();
  if (k == 0) return PermGroup(g.order());
  std::vector<int> base;
  std::vector<std::vector<int>> candidates(at(k));
  for (int i = 0; i < k; ++i) {
    base.push_back(g.generator(i));
    for (int x = 0; x < g.order(); ++x)
      if (g.order_of(x) == g.factors()[at(i)]) candidates[at(i)].push_back(x);
  }

  // Depth-first completion of generator images; |<images so far>| must equal
  // the product of the corresponding factor orders for injectivity.
  std::vector<int> images(at(k));
  std::function<bool(int, const std::vector<int>&)> extend =
      [&](int i, const std::vector<int>& span) -> bool {
    if (i == k) return true;
    for (int c : candidates[at(i)]) {
      std::vector<int> gens(images.begin(), images.begin() + i);
      gens.push_back(c);
      Subgroup s = generated_subgroup(g, gens);
      if (at(s.order()) != span.size() * at(g.factors()[at(i)])) continue;
      images[at(i)] = c;
      if (extend(i + 1, s.members)) return true;
    }
    return false;
  };

  std::vector<Perm> strong;
  for (int i = k - 1; i >= 0; --i) {
    std::vector<int> prefix(base.begin(), base.begin() + i);
    Subgroup span = generated_subgroup(g, prefix);
    std::vector<char> reached(at(g.order()), 0);
    auto mark = [&](int point) {
      for (int y : orbit_of(point, strong, g.order())) reached[at(y)] = 1;
    };
    mark(base[at(i)]);
    for (int c : candidates[at(i)]) {
      if (reached[at(c)]) continue;
      std::copy(prefix.begin(), prefix.end(), images.begin());
      images[at(i)] = c;
      std::vector<int> gens = prefix;
      gens.push_back(c);
      Subgroup s = generated_subgroup(g, gens);
      if (at(s.order()) == span.members.size() * at(g.factors()[at(i)]) && extend(i + 1, s.members)) {
        strong.push_back(Perm(hom_images(g, images)));
        mark(base[at(i)]);
      }
    }
  }
  return PermGroup::from_bsgs(g.order(), base, strong);
}

Perm translation(const GroupSpec& g, int h) {
  std::vector<int> img(at(g.order()));
  for (int x = 0; x < g.order(); ++x) img[at(x)] = g.add(x, h);
  return Perm(std::move(img));
}

std::vector<Perm> right_translations(const GroupSpec& g) {
  std::vector<Perm> out;
  for (int i = 0; i < g.num_factors(); ++i) out.push_back(translation(g, g.generator(i)));
  return out;
}

std::vector<GroupSpec> enumerate_abelian_groups(int n) {
  check_bound(n, 4096, "order");
  if (n < 1) throw Error(ErrorKind::InvalidInput, "order must be positive");
  std::vector<std::pair<int, int>> primes;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    int e = 0;
    while (m % p == 0) m /= p, ++e;
    primes.push_back({p, e});
  }
  if (m > 1) primes.push_back({m, 1});

  std::function<void(int, int, std::vector<int>&, std::vector<std::vector<int>>&)> partitions =
      [&](int rest, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
        if (rest == 0) {
          out.push_back(cur);
          return;
        }
        for (int part = std::min(rest, max_part); part >= 1; --part) {
          cur.push_back(part);
          partitions(rest - part, part, cur, out);
          cur.pop_back();
        }
      };
  std::vector<std::vector<std::vector<int>>> per_prime;
  for (auto [p, e] : primes) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions(e, e, cur, out);
    per_prime.push_back(std::move(out));
  }

  std::vector<std::vector<int>> all;
  std::function<void(std::size_t, std::vector<std::vector<int>>&)> combine =
      [&](std::size_t i, std::vector<std::vector<int>>& chosen) {
        if (i == primes.size()) {
          std::size_t len = 0;
          for (auto& l : chosen) len = std::max(len, l.size());
          std::vector<int> factors;
          for (std::size_t j = 0; j < len; ++j) {
            int d = 1;
            for (std::size_t q = 0; q < chosen.size(); ++q)
              if (j < chosen[q].size())
                for (int t = 0; t < chosen[q][j]; ++t) d *= primes[q].first;
            factors.push_back(d);
          }
          std::reverse(factors.begin(), factors.end());
          all.push_back(std::move(factors));
          return;
        }
        for (const auto& part : per_prime[i]) {
          chosen.push_back(part);
          combine(i + 1, chosen);
          chosen.pop_back();
        }
      };
  std::vector<std::vector<int>> chosen;
  combine(0, chosen);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<GroupSpec> out;
  for (auto& f : all) out.emplace_back(std::move(f));
  return out;
}

}  // namespace schur
