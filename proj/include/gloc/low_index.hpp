#pragma once

// Sims-style low-index subgroup search: depth-first enumeration of closed
// coset tables with at most n_max cosets, one representative per conjugacy
// class. Tables stay in standard form throughout (new cosets appear in scan
// order), which makes the first-in-class test a straight lexicographic
// comparison against the table renumbered from each alternative start coset.
// Deductions are propagated eagerly; a forced coincidence kills the branch,
// so every emitted table is collapsed by construction.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "todd_coxeter.hpp"
#include "word.hpp"

namespace gloc {

namespace detail {

class LowIndex {
 public:
  LowIndex(const Presentation& p, std::uint32_t n_max, std::uint64_t budget)
      : pres_(p), nmax_(n_max), budget_(budget) {
    if (n_max == 0 || n_max > 10000)
      throw std::invalid_argument("index bound out of range");
    ncols_ = 2 * p.n_generators;
    for (const Word& r : p.relators) {
      validate_word(r, p.n_generators);
      Word rr = free_reduce(r);
      if (rr.empty()) continue;
      Cols c;
      for (std::int32_t x : rr)
        c.push_back(x > 0 ? 2u * (x - 1) : 2u * (-x - 1) + 1u);
      rels_.push_back(std::move(c));
    }
  }

  std::vector<CosetTable> run() {
    if (pres_.n_generators == 0) {
      CosetTable t;
      t.n_cosets = 1;
      return {t};
    }
    tab_.assign(ncols_, std::vector<std::uint32_t>(nmax_ + 1, 0));
    k_ = 1;
    dfs();
    std::sort(out_.begin(), out_.end(), [](const CosetTable& a,
                                           const CosetTable& b) {
      if (a.n_cosets != b.n_cosets) return a.n_cosets < b.n_cosets;
      for (std::size_t g = 0; g < a.action.size(); ++g) {
        if (a.action[g] == b.action[g]) continue;
        return a.action[g].images() < b.action[g].images();
      }
      return false;
    });
    return out_;
  }

 private:
  using Cols = std::vector<std::uint32_t>;

  static std::uint32_t inv_col(std::uint32_t l) { return l ^ 1u; }

  std::uint32_t& at(std::uint32_t c, std::uint32_t l) { return tab_[l][c]; }

  bool first_undefined(std::uint32_t& c, std::uint32_t& l) {
    for (c = 1; c <= k_; ++c)
      for (l = 0; l < ncols_; ++l)
        if (!tab_[l][c]) return true;
    return false;
  }

  void dfs() {
    if (budget_-- == 0) throw std::overflow_error("search budget exhausted");
    std::uint32_t c, l;
    if (!first_undefined(c, l)) {
      emit();
      return;
    }
    for (std::uint32_t d = 1; d <= k_ + 1; ++d) {
      if (d > nmax_) break;
      bool fresh = d == k_ + 1;
      if (!fresh && at(d, inv_col(l))) continue;
      std::vector<Edge> trail;
      if (fresh) ++k_;
      set_edge(c, l, d, trail);
      if (propagate(trail) && !worse_than_conjugate()) dfs();
      for (auto it = trail.rbegin(); it != trail.rend(); ++it)
        tab_[it->l][it->c] = 0, tab_[inv_col(it->l)][it->d] = 0;
      if (fresh) --k_;
    }
  }

  struct Edge {
    std::uint32_t c, l, d;
  };

  void set_edge(std::uint32_t c, std::uint32_t l, std::uint32_t d,
                std::vector<Edge>& trail) {
    at(c, l) = d;
    at(d, inv_col(l)) = c;
    trail.push_back({c, l, d});
  }

  // Fill gap-of-one relator scans until stable; false on contradiction.
  bool propagate(std::vector<Edge>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t c = 1; c <= k_; ++c)
        for (const Cols& w : rels_) {
          std::uint32_t f = c;
          std::size_t i = 0, r = w.size();
          std::uint32_t b = c;
          while (i < r && at(f, w[i])) f = at(f, w[i]), ++i;
          if (i == r) {
            if (f != b) return false;
            continue;
          }
          while (r > i && at(b, inv_col(w[r - 1])))
            b = at(b, inv_col(w[r - 1])), --r;
          if (r == i) {
            if (f != b) return false;
          } else if (r == i + 1) {
            if (at(b, inv_col(w[i]))) return false;
            set_edge(f, w[i], b, trail);
            changed = true;
          }
        }
    }
    return true;
  }

  // True if renumbering from some start coset alpha > 1 yields a lex-smaller
  // table, i.e. a conjugate subgroup already emitted on another branch.
  bool worse_than_conjugate() {
    std::vector<std::uint32_t> rho(k_ + 1), rho_inv(k_ + 1);
    for (std::uint32_t alpha = 2; alpha <= k_; ++alpha) {
      std::fill(rho.begin(), rho.end(), 0u);
      std::fill(rho_inv.begin(), rho_inv.end(), 0u);
      rho[alpha] = 1;
      rho_inv[1] = alpha;
      std::uint32_t next = 1;
      bool undecided = false;
      for (std::uint32_t cn = 1; cn <= k_ && !undecided; ++cn) {
        if (!rho_inv[cn]) {
          undecided = true;  // conjugate table ran out of numbered cosets
          break;
        }
        std::uint32_t co = rho_inv[cn];
        for (std::uint32_t l = 0; l < ncols_; ++l) {
          std::uint32_t y = tab_[l][co];   // conjugate-table entry
          std::uint32_t x = tab_[l][cn];   // reference entry
          if (!y || !x) {
            undecided = true;
            break;
          }
          std::uint32_t yn = rho[y];
          if (!yn) {
            yn = ++next;
            rho[y] = yn;
            rho_inv[yn] = y;
          }
          if (yn != x) {
            if (yn < x) return true;
            undecided = true;  // strictly larger: this alpha can't win
            break;
          }
        }
      }
      (void)undecided;
    }
    return false;
  }

  void emit() {
    CosetTable t;
    t.n_cosets = k_;
    for (std::uint32_t g = 0; g < pres_.n_generators; ++g) {
      std::vector<Point> img(k_);
      for (std::uint32_t c = 1; c <= k_; ++c) img[c - 1] = tab_[2 * g][c] - 1;
      t.action.emplace_back(img);
    }
    out_.push_back(std::move(t));
  }

  Presentation pres_;
  std::uint32_t nmax_;
  std::uint64_t budget_;
  std::uint32_t ncols_ = 0;
  std::vector<Cols> rels_;
  std::vector<std::vector<std::uint32_t>> tab_;
  std::uint32_t k_ = 1;
  std::vector<CosetTable> out_;
};

}  // namespace detail

inline std::vector<CosetTable> low_index_subgroups(
    const Presentation& p, std::uint32_t n_max,
    std::uint64_t budget = 50000000ull) {
  detail::LowIndex li(p, n_max, budget);
  return li.run();
}

}  // namespace gloc
