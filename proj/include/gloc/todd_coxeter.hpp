#pragma once

// HLT coset enumeration with lookahead. Cosets are 1-based internally with 0
// as the undefined marker; coincidences run through a union-find whose merges
// always keep the smaller representative, so coset 1 survives to the end.
// Scan order is fixed (cosets ascending, relators in presentation order,
// columns generator-then-inverse), making the returned table a deterministic
// function of the input. Returned tables are standardized: cosets renumbered
// by breadth-first discovery from coset 1, so equal quotients give equal
// tables no matter what the enumeration did internally.

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

#include "perm.hpp"
#include "word.hpp"

namespace gloc {

struct CosetTable {
  std::uint32_t n_cosets = 0;
  std::vector<Perm> action;  // one permutation of cosets per generator
  std::vector<Word> subgroup_words;
};

enum class TcStatus { ok, overflow };

struct TcResult {
  TcStatus status = TcStatus::overflow;
  CosetTable table;
  std::uint64_t cosets_defined = 0;  // total ever allocated
};

// Apply a word to a coset through the table's generator action.
inline std::uint32_t table_apply(const CosetTable& t, std::uint32_t coset,
                                 const Word& w) {
  Point c = coset;
  for (std::int32_t x : w) {
    std::size_t a = static_cast<std::size_t>(x < 0 ? -x : x);
    if (a < 1 || a > t.action.size())
      throw std::invalid_argument("word letter out of range");
    const Perm& g = t.action[a - 1];
    if (x > 0) {
      c = g[c];
    } else {
      for (Point y = 0; y < g.degree(); ++y)
        if (g[y] == c) {
          c = y;
          break;
        }
    }
  }
  return c;
}

namespace detail {

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup_words,
             std::uint32_t max_cosets)
      : pres_(p), subs_(subgroup_words), max_(max_cosets) {
    ncols_ = 2 * p.n_generators;
    for (const Word& r : p.relators) {
      validate_word(r, p.n_generators);
      rel_cols_.push_back(to_cols(free_reduce(r)));
    }
    for (const Word& w : subs_) {
      validate_word(w, p.n_generators);
      sub_cols_.push_back(to_cols(free_reduce(w)));
    }
    tab_.assign(ncols_, std::vector<std::uint32_t>(1, 0));  // row 0 unused
    add_row();  // coset 1
  }

  TcResult run() {
    TcResult res;
    if (pres_.n_generators == 0) {
      res.status = TcStatus::ok;
      res.table.n_cosets = 1;
      res.table.subgroup_words = subs_;
      res.cosets_defined = 1;
      return res;
    }
    try {
      for (const auto& w : sub_cols_) scan_and_fill(1, w);
      std::uint32_t c = 1;
      while (c <= top_) {
        if (!dead(c)) {
          for (const auto& r : rel_cols_) {
            scan_and_fill(c, r);
            if (dead(c)) break;
          }
          if (!dead(c))
            for (std::uint32_t l = 0; l < ncols_; ++l)
              if (!at(c, l)) define(c, l);
        }
        ++c;
      }
    } catch (const Overflow&) {
      res.status = TcStatus::overflow;
      res.cosets_defined = defined_;
      return res;
    }
    res.status = TcStatus::ok;
    res.table = standardize();
    res.cosets_defined = defined_;
    return res;
  }

 private:
  struct Overflow {};

  using Cols = std::vector<std::uint32_t>;  // word as column indices

  Cols to_cols(const Word& w) const {
    Cols c;
    for (std::int32_t x : w)
      c.push_back(x > 0 ? 2u * (x - 1) : 2u * (-x - 1) + 1u);
    return c;
  }

  static std::uint32_t inv_col(std::uint32_t l) { return l ^ 1u; }

  std::uint32_t& at(std::uint32_t coset, std::uint32_t col) {
    return tab_[col][coset];
  }

  void add_row() {
    ++top_;
    ++live_;
    ++defined_;
    for (auto& col : tab_) col.push_back(0);
    if (parent_.size() <= top_) parent_.resize(top_ + 1);
    parent_[top_] = top_;
  }

  std::uint32_t rep(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool dead(std::uint32_t x) { return rep(x) != x; }

  void merge(std::uint32_t a, std::uint32_t b, std::deque<std::uint32_t>& q) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    q.push_back(b);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    std::deque<std::uint32_t> q;
    merge(a, b, q);
    while (!q.empty()) {
      std::uint32_t y = q.front();
      q.pop_front();
      for (std::uint32_t l = 0; l < ncols_; ++l) {
        std::uint32_t d = at(y, l);
        if (!d) continue;
        at(y, l) = 0;
        if (at(d, inv_col(l)) == y) at(d, inv_col(l)) = 0;
        std::uint32_t u = rep(y), v = rep(d);
        if (std::uint32_t e = at(u, l)) {
          merge(v, e, q);
        } else if (std::uint32_t f = at(v, inv_col(l))) {
          merge(u, f, q);
        } else {
          at(u, l) = v;
          at(v, inv_col(l)) = u;
        }
      }
    }
  }

  void define(std::uint32_t c, std::uint32_t l) {
    if (live_ >= max_) {
      lookahead();  // merges only; numbering stays valid for callers
      if (live_ >= max_) throw Overflow{};
    }
    c = rep(c);
    if (at(c, l)) return;  // lookahead may have filled the slot
    if (defined_ >= 4ull * max_ + 1000) throw Overflow{};
    add_row();
    at(c, l) = top_;
    at(top_, inv_col(l)) = c;
  }

  // Scan relator word w from coset c, filling gaps. Standard two-pointer
  // scan: forward while defined, backward while defined, then either a
  // coincidence (pointers crossed), a deduction (gap of one), or a fresh
  // coset at the forward frontier.
  void scan_and_fill(std::uint32_t c, const Cols& w) {
    if (w.empty()) return;
    while (true) {
      std::uint32_t f = rep(c);
      if (f != c) return;  // c died while filling
      std::size_t i = 0;
      std::size_t r = w.size();
      std::uint32_t b = c;
      while (i < r && at(f, w[i])) f = at(f, w[i]), ++i;
      if (i == r) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (r > i && at(b, inv_col(w[r - 1]))) b = at(b, inv_col(w[r - 1])), --r;
      if (r == i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (r == i + 1) {
        at(f, w[i]) = b;
        at(b, inv_col(w[i])) = f;
        return;
      }
      define(f, w[i]);
      if (dead(c)) return;
    }
  }

  // Scan every relator over every live coset without defining anything,
  // harvesting deductions and coincidences. No renumbering here: callers
  // hold coset numbers across this call.
  void lookahead() {
    for (std::uint32_t c = 1; c <= top_; ++c) {
      if (dead(c)) continue;
      for (const auto& w : rel_cols_) {
        scan_only(c, w);
        if (dead(c)) break;
      }
    }
  }

  void scan_only(std::uint32_t c, const Cols& w) {
    if (w.empty()) return;
    std::uint32_t f = c;
    std::size_t i = 0;
    std::size_t r = w.size();
    std::uint32_t b = c;
    while (i < r && at(f, w[i])) f = at(f, w[i]), ++i;
    if (i == r) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (r > i && at(b, inv_col(w[r - 1]))) b = at(b, inv_col(w[r - 1])), --r;
    if (r == i) {
      if (f != b) coincidence(f, b);
    } else if (r == i + 1) {
      at(f, w[i]) = b;
      at(b, inv_col(w[i])) = f;
    }
  }

  void compact() {
    std::vector<std::uint32_t> map(top_ + 1, 0);
    std::uint32_t n = 0;
    for (std::uint32_t c = 1; c <= top_; ++c)
      if (!dead(c)) map[c] = ++n;
    for (std::uint32_t c = 1; c <= top_; ++c) {
      if (!map[c]) continue;
      for (std::uint32_t l = 0; l < ncols_; ++l) {
        std::uint32_t d = tab_[l][c];
        tab_[l][map[c]] = d ? map[rep(d)] : 0;
      }
    }
    for (auto& col : tab_) col.resize(n + 1);
    top_ = n;
    live_ = n;
    parent_.resize(n + 1);
    for (std::uint32_t c = 0; c <= n; ++c) parent_[c] = c;
  }

  CosetTable standardize() {
    compact();
    std::vector<std::uint32_t> order(top_ + 1, 0);  // old -> new, 1-based
    std::vector<std::uint32_t> bfs{1};
    order[1] = 1;
    std::uint32_t next = 1;
    for (std::size_t k = 0; k < bfs.size(); ++k)
      for (std::uint32_t l = 0; l < ncols_; ++l) {
        std::uint32_t d = tab_[l][bfs[k]];
        if (d && !order[d]) {
          order[d] = ++next;
          bfs.push_back(d);
        }
      }
    if (next != top_) throw std::logic_error("coset table not transitive");
    CosetTable out;
    out.n_cosets = top_;
    out.subgroup_words = subs_;
    for (std::uint32_t g = 0; g < pres_.n_generators; ++g) {
      std::vector<Point> img(top_);
      for (std::uint32_t c = 1; c <= top_; ++c) {
        std::uint32_t d = tab_[2 * g][c];
        if (!d) throw std::logic_error("coset table not closed");
        img[order[c] - 1] = order[d] - 1;
      }
      out.action.emplace_back(img);
    }
    return out;
  }

  Presentation pres_;
  std::vector<Word> subs_;
  std::uint32_t max_;
  std::uint32_t ncols_ = 0;
  std::vector<Cols> rel_cols_, sub_cols_;
  std::vector<std::vector<std::uint32_t>> tab_;  // [col][coset]
  std::vector<std::uint32_t> parent_;
  std::uint32_t top_ = 0;   // highest coset number in use
  std::uint32_t live_ = 0;  // live cosets
  std::uint64_t defined_ = 0;
};

}  // namespace detail

inline TcResult coset_enumerate(const Presentation& p,
                                const std::vector<Word>& subgroup_words,
                                std::uint32_t max_cosets = 1000000) {
  detail::Enumerator e(p, subgroup_words, max_cosets);
  return e.run();
}

// Closure, inverse coherence and transitivity are already enforced
// structurally; this re-checks a finished table against its presentation.
inline bool table_satisfies(const CosetTable& t, const Presentation& p) {
  if (t.action.size() != p.n_generators) return false;
  for (const Perm& g : t.action)
    if (g.degree() != t.n_cosets) return false;
  for (const Word& r : p.relators)
    for (std::uint32_t c = 0; c < t.n_cosets; ++c)
      if (table_apply(t, c, r) != c) return false;
  for (const Word& w : t.subgroup_words)
    if (table_apply(t, 0, w) != 0) return false;
  return true;
}

}  // namespace gloc
