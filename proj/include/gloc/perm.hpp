#pragma once

// Permutations on {0, ..., n-1} stored as image vectors.
// Products compose left to right: (p * q) maps x to q[p[x]].
// Text form is 1-based disjoint cycle notation, e.g. "(1 2)(3 4)".

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gloc {

using Point = std::uint32_t;

constexpr Point kMaxDegree = 1u << 20;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (Point x : img_) {
      if (x >= img_.size() || seen[x])
        throw std::invalid_argument("not a permutation");
      seen[x] = true;
    }
  }

  static Perm identity(Point n) {
    Perm p;
    p.img_.resize(n);
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
  }

  Point degree() const { return static_cast<Point>(img_.size()); }

  Point operator[](Point x) const { return img_[x]; }

  bool is_identity() const {
    for (Point i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Perm operator*(const Perm& q) const {
    check_degree(q);
    Perm r;
    r.img_.resize(img_.size());
    for (Point i = 0; i < degree(); ++i) r.img_[i] = q.img_[img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (Point i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  // g^-1 * p * g, so that orbits transport along g.
  Perm conj(const Perm& g) const { return g.inverse() * (*this) * g; }

  Perm comm(const Perm& q) const {
    return inverse() * q.inverse() * (*this) * q;
  }

  std::uint64_t order() const {
    std::uint64_t ord = 1;
    std::vector<bool> seen(img_.size(), false);
    for (Point i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (Point j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      std::uint64_t g = std::gcd(ord, len);
      if (ord / g > UINT64_MAX / len)
        throw std::overflow_error("element order overflow");
      ord = ord / g * len;
    }
    return ord;
  }

  bool is_even() const {
    std::vector<bool> seen(img_.size(), false);
    std::uint32_t transpositions = 0;
    for (Point i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::uint32_t len = 0;
      for (Point j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0;
  }

  // Reinterpret on a larger point set (new points fixed).
  Perm extended(Point n) const {
    if (n < degree()) throw std::invalid_argument("extended: smaller degree");
    Perm r = *this;
    r.img_.reserve(n);
    for (Point i = degree(); i < n; ++i) r.img_.push_back(i);
    return r;
  }

  const std::vector<Point>& images() const { return img_; }

  auto operator<=>(const Perm&) const = default;

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : img_) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  void check_degree(const Perm& q) const {
    if (q.degree() != degree()) throw std::invalid_argument("degree mismatch");
  }

  std::vector<Point> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

// Canonical printer: cycles ordered by smallest moved point, each cycle
// starting at its smallest point; fixed points omitted; identity is "()".
inline std::string to_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    bool first = true;
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

inline Perm parse_cycles(const std::string& text, Point degree) {
  if (degree > kMaxDegree) throw std::invalid_argument("degree guard exceeded");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      if (i >= text.size() || text[i] < '0' || text[i] > '9')
        throw ParseError("expected point number", i);
      std::uint64_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        if (v > kMaxDegree) throw ParseError("point out of range", start);
        ++i;
      }
      if (v < 1 || v > degree) throw ParseError("point out of range", start);
      Point pt = static_cast<Point>(v - 1);
      if (used[pt]) throw ParseError("repeated point", start);
      used[pt] = true;
      cyc.push_back(pt);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;  // tolerate comma separators
    }
    if (cyc.size() == 1) throw ParseError("singleton cycle", i);
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    any = true;
    skip_ws();
  }
  if (!any && text.find('(') == std::string::npos)
    throw ParseError("empty input", 0);
  return Perm(std::move(img));
}

}  // namespace gloc
