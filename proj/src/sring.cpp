#include "schur/sring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "schur/error.hpp"

namespace schur {

namespace {
std::size_t at(int i) { return static_cast<std::size_t>(i); }
}  // namespace

GroupRingVector indicator(const GroupSpec& g, std::span<const int> xs) {
  GroupRingVector v{std::vector<long>(at(g.order()), 0)};
  for (int x : xs) v.coeffs[at(x)] += 1;
  return v;
}

GroupRingVector convolve(const GroupSpec& g, const GroupRingVector& u, const GroupRingVector& v) {
  GroupRingVector w{std::vector<long>(at(g.order()), 0)};
  for (int x = 0; x < g.order(); ++x) {
    if (!u.coeffs[at(x)]) continue;
    for (int y = 0; y < g.order(); ++y)
      if (v.coeffs[at(y)]) w.coeffs[at(g.add(x, y))] += u.coeffs[at(x)] * v.coeffs[at(y)];
  }
  return w;
}

GroupRingVector operator+(const GroupRingVector& u, const GroupRingVector& v) {
  GroupRingVector w = u;
  for (std::size_t i = 0; i < w.coeffs.size(); ++i) w.coeffs[i] += v.coeffs[i];
  return w;
}

GroupRingVector operator*(long k, const GroupRingVector& v) {
  GroupRingVector w = v;
  for (auto& c : w.coeffs) c *= k;
  return w;
}

struct SRing::Data {
  GroupSpec group;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  std::vector<int> inverse;
  mutable std::once_flag tensor_once;
  mutable SCTensor tensor;
};

SRing::SRing() {
  auto d = std::make_shared<Data>();
  d->classes = {{0}};
  d->class_of = {0};
  d->inverse = {0};
  d_ = std::move(d);
}

const GroupSpec& SRing::group() const { return d_->group; }
int SRing::rank() const { return static_cast<int>(d_->classes.size()); }
const std::vector<std::vector<int>>& SRing::classes() const { return d_->classes; }
int SRing::class_of(int g) const { return d_->class_of[at(g)]; }
const std::vector<int>& SRing::class_index() const { return d_->class_of; }
int SRing::inverse_class(int x) const { return d_->inverse[at(x)]; }

std::vector<int> SRing::sizes() const {
  std::vector<int> s;
  for (const auto& c : d_->classes) s.push_back(static_cast<int>(c.size()));
  std::sort(s.begin(), s.end());
  return s;
}

const SCTensor& SRing::constants() const {
  std::call_once(d_->tensor_once, [this] {
    const auto& g = d_->group;
    int r = rank();
    SCTensor t(r);
    std::vector<int> coef(at(g.order()));
    for (int x = 0; x < r; ++x) {
      for (int y = 0; y < r; ++y) {
        std::fill(coef.begin(), coef.end(), 0);
        for (int a : d_->classes[at(x)])
          for (int b : d_->classes[at(y)]) ++coef[at(g.add(a, b))];
        for (int z = 0; z < r; ++z) t.at(x, y, z) = coef[at(d_->classes[at(z)][0])];
      }
    }
    d_->tensor = std::move(t);
  });
  return d_->tensor;
}

bool operator==(const SRing& a, const SRing& b) {
  return a.group() == b.group() && a.class_index() == b.class_index();
}

bool operator<(const SRing& a, const SRing& b) {
  if (a.group().factors() != b.group().factors()) return a.group().factors() < b.group().factors();
  return a.class_index() < b.class_index();
}

SRing validate_sring(const GroupSpec& g, std::vector<std::vector<int>> partition) {
  const int n = g.order();
  std::vector<int> class_of(at(n), -1);
  for (auto& cls : partition) {
    if (cls.empty()) throw Error(ErrorKind::NotAPartition, "empty class");
    std::sort(cls.begin(), cls.end());
  }
  std::sort(partition.begin(), partition.end());
  for (std::size_t ci = 0; ci < partition.size(); ++ci) {
    for (int x : partition[ci]) {
      if (x < 0 || x >= n)
        throw Error(ErrorKind::NotAPartition, "element " + std::to_string(x) + " outside group");
      if (class_of[at(x)] >= 0)
        throw Error(ErrorKind::NotAPartition, "element " + std::to_string(x) + " repeated in class " +
                                                  std::to_string(ci));
      class_of[at(x)] = static_cast<int>(ci);
    }
  }
  for (int x = 0; x < n; ++x)
    if (class_of[at(x)] < 0)
      throw Error(ErrorKind::NotAPartition, "element " + std::to_string(x) + " not covered");
  if (partition[0].size() != 1)
    throw Error(ErrorKind::IdentityNotSingleton, "identity class has size " +
                                                     std::to_string(partition[0].size()));

  const int r = static_cast<int>(partition.size());
  std::vector<int> inverse(at(r));
  for (int c = 0; c < r; ++c) {
    const auto& cls = partition[at(c)];
    int ic = class_of[at(g.neg(cls[0]))];
    for (int x : cls)
      if (class_of[at(g.neg(x))] != ic || partition[at(ic)].size() != cls.size())
        throw Error(ErrorKind::NotInverseClosed, "class " + std::to_string(c) + " has no inverse class");
    inverse[at(c)] = ic;
  }

  // Axiom (3): every product X.Y is constant on every class.
  std::vector<int> coef(at(n));
  for (int x = 0; x < r; ++x) {
    for (int y = x; y < r; ++y) {
      std::fill(coef.begin(), coef.end(), 0);
      for (int a : partition[at(x)])
        for (int b : partition[at(y)]) ++coef[at(g.add(a, b))];
      for (int z = 0; z < r; ++z) {
        const auto& cls = partition[at(z)];
        for (int w : cls) {
          if (coef[at(w)] != coef[at(cls[0])])
            throw Error(ErrorKind::NotClosedUnderProduct,
                        "product of classes " + std::to_string(x) + " and " + std::to_string(y) +
                            " has coefficients " + std::to_string(coef[at(cls[0])]) + " at " +
                            std::to_string(cls[0]) + " and " + std::to_string(coef[at(w)]) + " at " +
                            std::to_string(w));
        }
      }
    }
  }

  auto d = std::make_shared<SRing::Data>();
  d->group = g;
  d->classes = std::move(partition);
  d->class_of = std::move(class_of);
  d->inverse = std::move(inverse);
  SRing s;
  s.d_ = std::move(d);
  return s;
}

SRing validate_sring(const GroupSpec& g, const std::vector<std::vector<Elem>>& partition) {
  std::vector<std::vector<int>> idx;
  for (const auto& cls : partition) {
    std::vector<int> c;
    for (const auto& e : cls) c.push_back(g.index(e));
    idx.push_back(std::move(c));
  }
  return validate_sring(g, std::move(idx));
}

SRing sring_from_labels(const GroupSpec& g, std::span<const int> labels) {
  if (static_cast<int>(labels.size()) != g.order())
    throw Error(ErrorKind::NotAPartition, "label vector has wrong length");
  std::map<int, std::vector<int>> by_label;
  for (int x = 0; x < g.order(); ++x) by_label[labels[at(x)]].push_back(x);
  std::vector<std::vector<int>> parts;
  for (auto& [l, c] : by_label) parts.push_back(std::move(c));
  return validate_sring(g, std::move(parts));
}

SRing group_ring(const GroupSpec& g) {
  std::vector<std::vector<int>> parts;
  for (int x = 0; x < g.order(); ++x) parts.push_back({x});
  return validate_sring(g, std::move(parts));
}

SRing rank_two(const GroupSpec& g) {
  std::vector<std::vector<int>> parts{{0}};
  if (g.order() > 1) {
    parts.emplace_back(at(g.order() - 1));
    std::iota(parts[1].begin(), parts[1].end(), 1);
  }
  return validate_sring(g, std::move(parts));
}

const SCTensor& structure_constants(const SRing& a) { return a.constants(); }

std::vector<int> a_set_classes(const SRing& a, std::span<const int> xs) {
  std::vector<char> in(at(a.group().order()), 0);
  for (int x : xs) {
    if (x < 0 || x >= a.group().order()) throw Error(ErrorKind::InvalidInput, "element out of range");
    in[at(x)] = 1;
  }
  std::set<int> classes;
  for (int x : xs) classes.insert(a.class_of(x));
  for (int c : classes)
    for (int y : a.basic_set(c))
      if (!in[at(y)])
        throw Error(ErrorKind::NotAnASet, "set meets class " + std::to_string(c) + " partially");
  return {classes.begin(), classes.end()};
}

bool is_a_set(const SRing& a, std::span<const int> xs) {
  try {
    a_set_classes(a, xs);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAnASet) return false;
    throw;
  }
}

Subgroup radical(const GroupSpec& g, std::span<const int> xs) {
  if (xs.empty()) throw Error(ErrorKind::InvalidInput, "radical of the empty set");
  std::vector<char> in(at(g.order()), 0);
  for (int x : xs) in[at(x)] = 1;
  std::vector<int> members;
  for (int h = 0; h < g.order(); ++h) {
    bool fixes = true;
    for (int x : xs)
      if (!in[at(g.add(x, h))]) {
        fixes = false;
        break;
      }
    if (fixes) members.push_back(h);
  }
  return generated_subgroup(g, members);
}

int rational_conjugate(const SRing& a, int cls, long m) {
  const auto& g = a.group();
  if (cls < 0 || cls >= a.rank()) throw Error(ErrorKind::InvalidInput, "class index out of range");
  long mm = ((m % g.order()) + g.order()) % g.order();
  if (std::gcd(mm, static_cast<long>(g.order())) != 1)
    throw Error(ErrorKind::InvalidInput, "exponent not coprime to the group order");
  std::vector<int> image;
  for (int x : a.basic_set(cls)) image.push_back(g.scale(x, m));
  std::sort(image.begin(), image.end());
  int target = a.class_of(image[0]);
  if (a.basic_set(target) != image)
    throw Error(ErrorKind::SchurViolation, "X^(m) is not a basic set for class " + std::to_string(cls));
  return target;
}

std::vector<Subgroup> a_subgroups(const SRing& a) {
  const auto& g = a.group();
  // Every A-subgroup is generated by the basic sets it contains, so joining
  // basic sets one at a time reaches all of them.
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> queue{trivial_subgroup()};
  seen.insert(queue[0].members);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Subgroup h = queue[qi];
    for (int c = 1; c < a.rank(); ++c) {
      if (h.contains(a.basic_set(c)[0])) continue;
      std::vector<int> gens = h.members;
      gens.insert(gens.end(), a.basic_set(c).begin(), a.basic_set(c).end());
      Subgroup k = generated_subgroup(g, gens);
      if (seen.insert(k.members).second) queue.push_back(std::move(k));
    }
  }
  std::sort(queue.begin(), queue.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.members < y.members;
  });
  return queue;
}

SRing induced_sring(const SRing& a, const Section& s) {
  if (!is_a_set(a, s.upper.members) || !is_a_set(a, s.lower.members))
    throw Error(ErrorKind::NotASection, "section is not an A-section");
  std::set<std::vector<int>> images;
  for (const auto& cls : a.classes()) {
    if (!s.upper.contains(cls[0])) continue;
    std::set<int> img;
    for (int x : cls) img.insert(s.project(x));
    images.insert(std::vector<int>(img.begin(), img.end()));
  }
  return validate_sring(s.quotient, std::vector<std::vector<int>>(images.begin(), images.end()));
}

SRing restrict_to(const SRing& a, const Subgroup& u) {
  return induced_sring(a, quotient_section(a.group(), u, trivial_subgroup()));
}

std::vector<TensorSplit> detect_tensor(const SRing& a) {
  const auto& g = a.group();
  auto subs = a_subgroups(a);
  std::vector<TensorSplit> out;
  for (const auto& g1 : subs) {
    if (g1.order() == 1 || g1.order() == g.order()) continue;
    for (const auto& g2 : subs) {
      if (g2.order() == 1 || g1.order() * g2.order() != g.order()) continue;
      std::vector<int> common;
      std::set_intersection(g1.members.begin(), g1.members.end(), g2.members.begin(),
                            g2.members.end(), std::back_inserter(common));
      if (common.size() != 1) continue;
      std::vector<int> c1, c2;
      for (int c = 0; c < a.rank(); ++c) {
        if (g1.contains(a.basic_set(c)[0])) c1.push_back(c);
        if (g2.contains(a.basic_set(c)[0])) c2.push_back(c);
      }
      if (c1.size() * c2.size() != static_cast<std::size_t>(a.rank())) continue;
      bool ok = true;
      for (int x : c1) {
        for (int y : c2) {
          std::vector<int> prod;
          for (int u : a.basic_set(x))
            for (int v : a.basic_set(y)) prod.push_back(g.add(u, v));
          std::sort(prod.begin(), prod.end());
          if (a.basic_set(a.class_of(prod[0])) != prod) ok = false;
          if (!ok) break;
        }
        if (!ok) break;
      }
      if (ok) out.push_back({g1, g2});
    }
  }
  return out;
}

std::vector<Section> detect_s_wreath(const SRing& a) {
  const auto& g = a.group();
  auto subs = a_subgroups(a);
  std::vector<Section> out;
  for (const auto& lower : subs) {
    if (lower.order() == 1) continue;
    for (const auto& upper : subs) {
      if (upper.order() == g.order() || upper.order() % lower.order() != 0) continue;
      if (!std::includes(upper.members.begin(), upper.members.end(), lower.members.begin(),
                         lower.members.end()))
        continue;
      bool ok = true;
      for (int c = 0; c < a.rank() && ok; ++c) {
        const auto& cls = a.basic_set(c);
        if (upper.contains(cls[0])) continue;
        for (int l : lower.generators) {
          for (int x : cls)
            if (a.class_of(g.add(x, l)) != c) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
      }
      if (ok) out.push_back(quotient_section(g, upper, lower));
    }
  }
  return out;
}

}  // namespace schur
