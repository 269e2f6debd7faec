#pragma once

// Deterministic Schreier-Sims. A StabilizerChain holds base points, per-level
// generators, basic orbits and transversals. Build is the textbook
// verify-and-repair loop: every Schreier generator of every level must sift
// to the identity; any non-trivial residue is inserted at the level where
// sifting stopped (growing that basic orbit or opening a new level), and the
// product of basic orbit lengths strictly increases, so the loop terminates.
// No randomization anywhere; identical input gives an identical chain.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "perm.hpp"

namespace gloc {

class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;
    std::vector<Point> orbit;         // discovery order, orbit[0] == base
    std::vector<std::int32_t> where;  // point -> orbit index or -1
    std::vector<Perm> transversal;    // base^transversal[k] == orbit[k]
  };

  StabilizerChain() = default;

  static StabilizerChain build(Point degree, const std::vector<Perm>& gens,
                               const std::vector<Point>& base_hint = {}) {
    if (degree > kMaxDegree)
      throw std::invalid_argument("degree guard exceeded");
    StabilizerChain c;
    c.degree_ = degree;
    for (Point p : base_hint) {
      if (p >= degree) throw std::invalid_argument("base hint out of range");
      if (c.is_base(p)) continue;
      Level l;
      l.base = p;
      c.levels_.push_back(std::move(l));
      c.recompute_orbit(c.levels_.size() - 1);
    }
    for (const Perm& g : gens) {
      if (g.degree() != degree)
        throw std::invalid_argument("generator degree mismatch");
      if (!g.is_identity()) c.insert(g);
    }
    c.verify_all();
    return c;
  }

  Point degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const Level& l : levels_) b.push_back(l.base);
    return b;
  }

  // A strong generating set: inserted generators sift to the level where
  // their residue lands, so level 0 alone need not generate the group.
  std::vector<Perm> strong_gens() const { return level_gens(0); }

  // Generators of the stabilizer of base[0..i-1].
  std::vector<Perm> level_gens(std::size_t i) const {
    std::vector<Perm> out;
    for (std::size_t j = i; j < levels_.size(); ++j)
      for (const Perm& g : levels_[j].gens) out.push_back(g);
    return out;
  }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const Level& l : levels_) {
      std::uint64_t s = l.orbit.size();
      if (o > UINT64_MAX / s) throw std::overflow_error("group order overflow");
      o *= s;
    }
    return o;
  }

  bool contains(const Perm& p) const { return sift(p).is_identity(); }

  // Residue after stripping through the chain; identity iff member.
  Perm sift(Perm g) const {
    if (g.degree() != degree_) throw std::invalid_argument("degree mismatch");
    for (const Level& l : levels_) {
      Point p = g[l.base];
      std::int32_t k = l.where[p];
      if (k < 0) return g;
      g = g * l.transversal[k].inverse();
    }
    return g;
  }

  // Transversal element u with base-prefix images matching g, or sifted out.
  // Visits every element exactly once, deterministic order.
  template <typename F>
  void for_each_element(F&& visit) const {
    enumerate(0, Perm::identity(degree_), visit);
  }

  std::vector<Perm> elements(std::uint64_t guard = 26000000ull) const {
    if (order() > guard) throw std::overflow_error("element list guard");
    std::vector<Perm> out;
    out.reserve(order());
    for_each_element([&](const Perm& p) { out.push_back(p); });
    return out;
  }

  template <typename Rng>
  Perm random_element(Rng& rng) const {
    Perm g = Perm::identity(degree_);
    for (const Level& l : levels_) {
      std::uniform_int_distribution<std::size_t> d(0, l.orbit.size() - 1);
      g = l.transversal[d(rng)] * g;
    }
    return g;
  }

  // Orbits of the group on {0..degree-1}, sorted by least point.
  std::vector<std::vector<Point>> orbits() const {
    return orbits_of(strong_gens(), degree_);
  }

  static std::vector<std::vector<Point>> orbits_of(
      const std::vector<Perm>& gens, Point degree) {
    std::vector<bool> seen(degree, false);
    std::vector<std::vector<Point>> out;
    for (Point s = 0; s < degree; ++s) {
      if (seen[s]) continue;
      std::vector<Point> orb{s};
      seen[s] = true;
      for (std::size_t k = 0; k < orb.size(); ++k)
        for (const Perm& g : gens) {
          Point q = g[orb[k]];
          if (!seen[q]) {
            seen[q] = true;
            orb.push_back(q);
          }
        }
      out.push_back(std::move(orb));
    }
    return out;
  }

 private:
  void insert(const Perm& g0) {
    Perm g = g0;
    std::size_t i = 0;
    for (; i < levels_.size(); ++i) {
      Point p = g[levels_[i].base];
      std::int32_t k = levels_[i].where[p];
      if (k < 0) break;
      g = g * levels_[i].transversal[k].inverse();
      if (g.is_identity()) return;
    }
    if (i == levels_.size()) new_level(g);
    levels_[i].gens.push_back(g);
    recompute_orbit(i);
  }

  void new_level(const Perm& residue) {
    Level l;
    l.base = degree_;
    for (Point p = 0; p < degree_; ++p)
      if (residue[p] != p && !is_base(p)) {
        l.base = p;
        break;
      }
    if (l.base == degree_) throw std::logic_error("no base point available");
    levels_.push_back(std::move(l));
    recompute_orbit(levels_.size() - 1);
  }

  bool is_base(Point p) const {
    for (const Level& l : levels_)
      if (l.base == p) return true;
    return false;
  }

  void recompute_orbit(std::size_t i) {
    Level& l = levels_[i];
    l.orbit.assign(1, l.base);
    l.where.assign(degree_, -1);
    l.where[l.base] = 0;
    l.transversal.assign(1, Perm::identity(degree_));
    std::vector<Perm> gens = level_gens(i);
    for (std::size_t k = 0; k < l.orbit.size(); ++k)
      for (const Perm& s : gens) {
        Point q = s[l.orbit[k]];
        if (l.where[q] < 0) {
          l.where[q] = static_cast<std::int32_t>(l.orbit.size());
          l.orbit.push_back(q);
          l.transversal.push_back(l.transversal[k] * s);
        }
      }
  }

  // Hint-forced singleton levels may sit above the level a residue wants to
  // join; insert() breaks at the right spot because their orbits are fixed.
  void verify_all() {
    if (levels_.empty()) return;
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = levels_.size(); i-- > 0 && !dirty;) {
        std::vector<Perm> gens = level_gens(i);
        // keep hint levels' orbits in sync with the gens seen so far
        recompute_orbit(i);
        // insert_at may grow levels_, so re-enter levels_[i] every pass
        for (std::size_t k = 0; !dirty && k < levels_[i].orbit.size(); ++k) {
          const Level& l = levels_[i];
          for (const Perm& s : gens) {
            Point q = s[l.orbit[k]];
            Perm sch =
                l.transversal[k] * s * l.transversal[l.where[q]].inverse();
            if (sch.is_identity()) continue;
            Perm res = sift_from(i + 1, sch);
            if (!res.is_identity()) {
              insert_at(i + 1, res);
              dirty = true;
              break;
            }
          }
        }
      }
    }
  }

  Perm sift_from(std::size_t start, Perm g) const {
    for (std::size_t i = start; i < levels_.size(); ++i) {
      Point p = g[levels_[i].base];
      std::int32_t k = levels_[i].where[p];
      if (k < 0) return g;
      g = g * levels_[i].transversal[k].inverse();
    }
    return g;
  }

  void insert_at(std::size_t start, const Perm& g0) {
    Perm g = g0;
    std::size_t i = start;
    for (; i < levels_.size(); ++i) {
      Point p = g[levels_[i].base];
      std::int32_t k = levels_[i].where[p];
      if (k < 0) break;
      g = g * levels_[i].transversal[k].inverse();
      if (g.is_identity()) return;
    }
    if (i == levels_.size()) new_level(g);
    levels_[i].gens.push_back(g);
    recompute_orbit(i);
  }

  // Elements factor uniquely as t_{m-1} * ... * t_1 * t_0 with t_i drawn
  // from level i's transversal; deeper factors multiply on the left.
  template <typename F>
  void enumerate(std::size_t i, const Perm& acc, F&& visit) const {
    if (i == levels_.size()) {
      visit(acc);
      return;
    }
    const Level& l = levels_[i];
    for (std::size_t k = 0; k < l.orbit.size(); ++k)
      enumerate(i + 1, l.transversal[k] * acc, visit);
  }

  Point degree_ = 0;
  std::vector<Level> levels_;
};

inline StabilizerChain symmetric_chain(Point n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<Point> t(n);
    for (Point i = 0; i < n; ++i) t[i] = i;
    t[0] = 1;
    t[1] = 0;
    gens.emplace_back(t);
  }
  if (n >= 3) {
    std::vector<Point> c(n);
    for (Point i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.emplace_back(c);
  }
  return StabilizerChain::build(n, gens);
}

inline StabilizerChain alternating_chain(Point n) {
  std::vector<Perm> gens;
  if (n >= 3) {
    std::vector<Point> c(n);
    for (Point i = 0; i < n; ++i) c[i] = i;
    c[0] = 1;
    c[1] = 2;
    c[2] = 0;
    gens.emplace_back(c);
    if (n > 3) {
      std::vector<Point> d(n);
      if (n % 2 == 1) {
        for (Point i = 0; i < n; ++i) d[i] = (i + 1) % n;
      } else {
        d[0] = 0;
        for (Point i = 1; i < n; ++i) d[i] = i % (n - 1) + 1;
      }
      gens.emplace_back(d);
    }
  }
  return StabilizerChain::build(n, gens);
}

}  // namespace gloc
