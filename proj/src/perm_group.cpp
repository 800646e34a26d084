#include "schur/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "schur/error.hpp"

namespace schur {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
      throw Error(ErrorKind::InvalidInput, "image array is not a permutation");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Perm Perm::identity(int degree) {
  Perm p;
  p.images_.resize(static_cast<std::size_t>(degree));
  std::iota(p.images_.begin(), p.images_.end(), 0);
  return p;
}

bool Perm::is_identity() const { return first_moved() < 0; }

int Perm::first_moved() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[static_cast<std::size_t>(x)] != x) return x;
  return -1;
}

Perm Perm::inverse() const {
  Perm p;
  p.images_.resize(images_.size());
  for (int x = 0; x < degree(); ++x)
    p.images_[static_cast<std::size_t>(images_[static_cast<std::size_t>(x)])] = x;
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  Perm p;
  p.images_.resize(a.images_.size());
  for (std::size_t x = 0; x < a.images_.size(); ++x)
    p.images_[x] = b.images_[static_cast<std::size_t>(a.images_[x])];
  return p;
}

std::vector<int> orbit_of(int point, std::span<const Perm> gens, int degree) {
  std::vector<char> seen(static_cast<std::size_t>(degree), 0);
  std::vector<int> orbit{point};
  seen[static_cast<std::size_t>(point)] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Perm& g : gens) {
      int y = g[orbit[i]];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        orbit.push_back(y);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::vector<int>> orbits_of(int degree, std::span<const Perm> gens) {
  std::vector<char> done(static_cast<std::size_t>(degree), 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < degree; ++x) {
    if (done[static_cast<std::size_t>(x)]) continue;
    auto orb = orbit_of(x, gens, degree);
    for (int y : orb) done[static_cast<std::size_t>(y)] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

PermGroup::PermGroup(int degree) : degree_(degree) {}

PermGroup::PermGroup(int degree, std::vector<Perm> generators,
                     std::vector<int> base_prefix)
    : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw Error(ErrorKind::InvalidInput, "generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()),
                    generators_.end());
  for (int b : base_prefix) add_base_point(b);
  for (const Perm& g : generators_) {
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                  [&](const Level& l) { return g[l.point] == l.point; });
    if (fixes_base) add_base_point(g.first_moved());
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const Perm& g : generators_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i; ++j)
        if (g[levels_[j].point] != levels_[j].point) fixes = false;
      if (fixes) levels_[i].gens.push_back(g);
    }
    rebuild_orbit(i);
  }
  schreier_sims();
}

PermGroup PermGroup::from_bsgs(int degree, std::vector<int> base,
                               std::vector<Perm> strong_generators) {
  PermGroup g(degree);
  for (auto& s : strong_generators)
    if (!s.is_identity()) g.generators_.push_back(std::move(s));
  for (int b : base) g.add_base_point(b);
  for (std::size_t i = 0; i < g.levels_.size(); ++i) {
    for (const Perm& s : g.generators_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i; ++j)
        if (s[g.levels_[j].point] != g.levels_[j].point) fixes = false;
      if (fixes) g.levels_[i].gens.push_back(s);
    }
    g.rebuild_orbit(i);
  }
  return g;
}

void PermGroup::add_base_point(int point) {
  Level l;
  l.point = point;
  levels_.push_back(std::move(l));
  rebuild_orbit(levels_.size() - 1);
}

void PermGroup::rebuild_orbit(std::size_t level) {
  Level& l = levels_[level];
  l.transversal.assign(static_cast<std::size_t>(degree_), Perm{});
  l.transversal[static_cast<std::size_t>(l.point)] = Perm::identity(degree_);
  l.orbit = {l.point};
  for (std::size_t i = 0; i < l.orbit.size(); ++i) {
    int x = l.orbit[i];
    for (const Perm& g : l.gens) {
      int y = g[x];
      if (l.transversal[static_cast<std::size_t>(y)].degree() == 0) {
        l.transversal[static_cast<std::size_t>(y)] =
            l.transversal[static_cast<std::size_t>(x)] * g;
        l.orbit.push_back(y);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(const Perm& p, std::size_t from) const {
  Perm h = p;
  for (std::size_t i = from; i < levels_.size(); ++i) {
    int beta = h[levels_[i].point];
    const Perm& u = levels_[i].transversal[static_cast<std::size_t>(beta)];
    if (u.degree() == 0) return {h, i};
    h = h * u.inverse();
  }
  return {h, levels_.size()};
}

void PermGroup::schreier_sims() {
  if (levels_.empty()) return;
  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restart = false;
    for (std::size_t oi = 0; oi < levels_[i].orbit.size() && !restart; ++oi) {
      int beta = levels_[i].orbit[oi];
      for (std::size_t si = 0; si < levels_[i].gens.size(); ++si) {
        const Perm& s = levels_[i].gens[si];
        const Perm& u_beta = levels_[i].transversal[static_cast<std::size_t>(beta)];
        const Perm& u_img = levels_[i].transversal[static_cast<std::size_t>(s[beta])];
        Perm schreier = u_beta * s * u_img.inverse();
        if (schreier.is_identity()) continue;
        auto [residue, j] = strip(schreier, i + 1);
        if (j == levels_.size() && residue.is_identity()) continue;
        if (j == levels_.size()) add_base_point(residue.first_moved());
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          rebuild_orbit(l);
        }
        i = j + 1;  // the loop decrement resumes at level j
        restart = true;
        break;
      }
    }
  }
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const auto& l : levels_) b.push_back(l.point);
  return b;
}

BigInt PermGroup::order() const {
  BigInt n = 1;
  for (const auto& l : levels_) n *= l.orbit.size();
  return n;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.orbit.size());
  return out;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, j] = strip(p, 0);
  return j == levels_.size() && residue.is_identity();
}

std::vector<Perm> PermGroup::stabilizer_generators(std::size_t level) const {
  if (level == 0) return generators_;
  if (level >= levels_.size()) return {};
  return levels_[level].gens;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  return orbits_of(degree_, generators_);
}

std::vector<std::vector<int>> PermGroup::stabilizer_orbits() const {
  auto gens = stabilizer_generators(1);
  return orbits_of(degree_, gens);
}

std::vector<Perm> PermGroup::elements(std::size_t limit) const {
  BigInt n = order();
  if (n > limit) throw Error(ErrorKind::BoundExceeded, "group too large to enumerate");
  std::vector<Perm> out;
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t i, const Perm& acc) {
    if (i == levels_.size()) {
      out.push_back(acc);
      return;
    }
    for (int x : levels_[i].orbit)
      rec(i + 1, levels_[i].transversal[static_cast<std::size_t>(x)] * acc);
  };
  rec(0, Perm::identity(degree_));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace schur
