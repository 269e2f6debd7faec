#pragma once

// Backtrack searches inside permutation groups: centralizer, normalizer,
// transporter elements, complete monomorphism enumeration from a presented
// group, and conjugacy classes of the embedded images.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gloc/atlas.hpp"
#include "gloc/bsgs.hpp"
#include "gloc/perm.hpp"
#include "gloc/word.hpp"

namespace gloc {

// Desk-scale guards. Exceeding one raises GuardError; callers surface that
// as an undecided outcome, never as a verdict.
inline constexpr std::uint64_t kChainSearchOrderGuard = 25000000ull;
inline constexpr std::uint64_t kMonoSourceOrderGuard = 10000ull;
inline constexpr Point kMonoTargetDegreeGuard = 30;
inline constexpr std::uint64_t kMonoTargetOrderGuard = 1000000ull;
inline constexpr std::uint64_t kSubgroupStorageGuard = 5000000ull;

class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& m) : std::runtime_error(m) {}
};

struct Embedding {
  std::vector<Perm> gen_images;  // one image per source generator
  bool certified = false;        // relators hold and image order is |H|
};

namespace detail {

inline void require_members(const StabilizerChain& G,
                            const std::vector<Perm>& gens, const char* what) {
  for (const Perm& g : gens) {
    if (g.degree() != G.degree())
      throw std::invalid_argument(std::string(what) + ": degree mismatch");
    if (!G.contains(g))
      throw std::invalid_argument(std::string(what) +
                                  ": generator outside the ambient group");
  }
}

inline std::vector<Perm> drop_identities(const std::vector<Perm>& gens) {
  std::vector<Perm> out;
  for (const Perm& g : gens)
    if (!g.is_identity()) out.push_back(g);
  return out;
}

// g(p) = q constraint store for centralizer search. Recording one image
// forces the whole <H>-orbit of the pair via g(h(p)) = h(g(p)).
class CentralizeProp {
 public:
  CentralizeProp(const std::vector<Perm>& h_gens, Point degree)
      : gens_(&h_gens), img_(degree, -1), pre_(degree, -1) {}

  std::size_t mark() const { return trail_.size(); }

  bool assign(Point p, Point q) {
    std::vector<std::pair<Point, Point>> queue{{p, q}};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      auto [a, b] = queue[k];
      if (img_[a] >= 0) {
        if (img_[a] != static_cast<std::int32_t>(b)) return false;
        continue;
      }
      if (pre_[b] >= 0) return false;
      img_[a] = static_cast<std::int32_t>(b);
      pre_[b] = static_cast<std::int32_t>(a);
      trail_.push_back(a);
      for (const Perm& h : *gens_) queue.emplace_back(h[a], h[b]);
    }
    return true;
  }

  void rewind(std::size_t m) {
    while (trail_.size() > m) {
      Point a = trail_.back();
      trail_.pop_back();
      pre_[img_[a]] = -1;
      img_[a] = -1;
    }
  }

  std::int32_t forced(Point p) const { return img_[p]; }

  bool leaf(const Perm& g) const {
    for (const Perm& h : *gens_)
      if (g * h != h * g) return false;
    return true;
  }

 private:
  const std::vector<Perm>* gens_;
  std::vector<std::int32_t> img_, pre_;
  std::vector<Point> trail_;
};

// Orbit bookkeeping shared by normalizer and transporter searches: a
// partial bijection between source orbits and target orbits, consistent
// with orbit sizes.
class OrbitMapProp {
 public:
  OrbitMapProp(const std::vector<std::vector<Point>>& src_orbits,
               const std::vector<std::vector<Point>>& dst_orbits, Point degree,
               const std::vector<Perm>& conj_gens,
               const StabilizerChain* membership)
      : conj_gens_(&conj_gens), membership_(membership) {
    index_orbits(src_orbits, degree, src_of_, src_size_);
    index_orbits(dst_orbits, degree, dst_of_, dst_size_);
    map_.assign(src_size_.size(), -1);
    rmap_.assign(dst_size_.size(), -1);
  }

  std::size_t mark() const { return trail_.size(); }

  bool assign(Point p, Point q) {
    std::uint32_t a = src_of_[p], b = dst_of_[q];
    if (src_size_[a] != dst_size_[b]) return false;
    if (map_[a] >= 0) return map_[a] == static_cast<std::int32_t>(b);
    if (rmap_[b] >= 0) return false;
    map_[a] = static_cast<std::int32_t>(b);
    rmap_[b] = static_cast<std::int32_t>(a);
    trail_.push_back(a);
    return true;
  }

  void rewind(std::size_t m) {
    while (trail_.size() > m) {
      std::uint32_t a = trail_.back();
      trail_.pop_back();
      rmap_[map_[a]] = -1;
      map_[a] = -1;
    }
  }

  std::int32_t forced(Point) const { return -1; }

  bool leaf(const Perm& g) const {
    for (const Perm& h : *conj_gens_)
      if (!membership_->contains(h.conj(g))) return false;
    return true;
  }

 private:
  static void index_orbits(const std::vector<std::vector<Point>>& orbits,
                           Point degree, std::vector<std::uint32_t>& of,
                           std::vector<std::uint32_t>& size) {
    of.assign(degree, 0);
    size.clear();
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      for (Point p : orbits[i]) of[p] = static_cast<std::uint32_t>(i);
      size.push_back(static_cast<std::uint32_t>(orbits[i].size()));
    }
  }

  const std::vector<Perm>* conj_gens_;
  const StabilizerChain* membership_;
  std::vector<std::uint32_t> src_of_, dst_of_, src_size_, dst_size_;
  std::vector<std::int32_t> map_, rmap_;
  std::vector<std::uint32_t> trail_;
};

// Depth-first search over base images of the ambient chain. An element at
// the leaf is the product of one transversal representative per level,
// deeper factors on the left, so the image of base[j] is frozen once
// levels up to j are chosen.
template <class Prop>
class BaseImageSearch {
 public:
  BaseImageSearch(const StabilizerChain& G, Prop& prop)
      : G_(&G), prop_(&prop) {}

  // All elements of G satisfying the property, which must be closed under
  // products and inverses. Levels are solved bottom-up; at each level one
  // representative per covered-orbit escape suffices, because elements
  // sharing a base image differ by an already-known stabilizer element.
  std::vector<Perm> subgroup() {
    const auto& lv = G_->levels();
    std::vector<Perm> found;
    for (std::size_t i = lv.size(); i-- > 0;) {
      std::vector<bool> covered = orbit_cover(lv[i].base, found);
      for (std::size_t k = 0; k < lv[i].orbit.size(); ++k) {
        Point beta = lv[i].orbit[k];
        if (covered[beta]) continue;
        std::size_t m = prop_->mark();
        std::optional<Perm> g;
        if (prop_->assign(lv[i].base, beta))
          g = dfs(i + 1, lv[i].transversal[k],
                  lv[i].transversal[k].inverse());
        prop_->rewind(m);
        if (g) {
          found.push_back(*g);
          covered = orbit_cover(lv[i].base, found);
        }
      }
    }
    return found;
  }

  std::optional<Perm> find_any() {
    return dfs(0, Perm::identity(G_->degree()),
               Perm::identity(G_->degree()));
  }

 private:
  std::vector<bool> orbit_cover(Point start, const std::vector<Perm>& gens) {
    std::vector<bool> seen(G_->degree(), false);
    std::vector<Point> queue{start};
    seen[start] = true;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const Perm& g : gens) {
        Point q = g[queue[k]];
        if (!seen[q]) {
          seen[q] = true;
          queue.push_back(q);
        }
      }
    return seen;
  }

  std::optional<Perm> dfs(std::size_t j, const Perm& acc,
                          const Perm& acc_inv) {
    const auto& lv = G_->levels();
    if (j == lv.size()) {
      if (prop_->leaf(acc)) return acc;
      return std::nullopt;
    }
    const auto& l = lv[j];
    std::int32_t want = prop_->forced(l.base);
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      Point image = acc[l.orbit[k]];
      if (want >= 0 && image != static_cast<Point>(want)) continue;
      std::size_t m = prop_->mark();
      if (prop_->assign(l.base, image)) {
        auto r = dfs(j + 1, l.transversal[k] * acc,
                     acc_inv * l.transversal[k].inverse());
        if (r) {
          prop_->rewind(m);
          return r;
        }
      }
      prop_->rewind(m);
    }
    return std::nullopt;
  }

  const StabilizerChain* G_;
  Prop* prop_;
};

}  // namespace detail

// C_G(<h_gens>): the largest subgroup of G commuting with every generator.
inline StabilizerChain centralizer(const StabilizerChain& G,
                                   const std::vector<Perm>& h_gens) {
  detail::require_members(G, h_gens, "centralizer");
  if (G.order() > kChainSearchOrderGuard)
    throw GuardError("centralizer: ambient order exceeds " +
                     std::to_string(kChainSearchOrderGuard));
  std::vector<Perm> gens = detail::drop_identities(h_gens);
  if (gens.empty()) return G;
  detail::CentralizeProp prop(gens, G.degree());
  detail::BaseImageSearch search(G, prop);
  return StabilizerChain::build(G.degree(), search.subgroup());
}

// N_G(<h_gens>): conjugation by every returned element maps the generated
// subgroup onto itself.
inline StabilizerChain normalizer(const StabilizerChain& G,
                                  const std::vector<Perm>& h_gens) {
  detail::require_members(G, h_gens, "normalizer");
  if (G.order() > kChainSearchOrderGuard)
    throw GuardError("normalizer: ambient order exceeds " +
                     std::to_string(kChainSearchOrderGuard));
  std::vector<Perm> gens = detail::drop_identities(h_gens);
  if (gens.empty()) return G;
  StabilizerChain H = StabilizerChain::build(G.degree(), gens);
  auto orbits = StabilizerChain::orbits_of(gens, G.degree());
  detail::OrbitMapProp prop(orbits, orbits, G.degree(), gens, &H);
  detail::BaseImageSearch search(G, prop);
  return StabilizerChain::build(G.degree(), search.subgroup());
}

// An element g of G with <a_gens>^g = <b_gens>, or nothing; the search is
// complete, so nothing means no such element exists in G.
inline std::optional<Perm> transporter(const StabilizerChain& G,
                                       const std::vector<Perm>& a_gens,
                                       const std::vector<Perm>& b_gens) {
  detail::require_members(G, a_gens, "transporter");
  detail::require_members(G, b_gens, "transporter");
  if (G.order() > kChainSearchOrderGuard)
    throw GuardError("transporter: ambient order exceeds " +
                     std::to_string(kChainSearchOrderGuard));
  std::vector<Perm> ag = detail::drop_identities(a_gens);
  std::vector<Perm> bg = detail::drop_identities(b_gens);
  Perm id = Perm::identity(G.degree());
  if (ag.empty() || bg.empty())
    return (ag.empty() && bg.empty()) ? std::optional<Perm>(id) : std::nullopt;
  StabilizerChain A = StabilizerChain::build(G.degree(), ag);
  StabilizerChain B = StabilizerChain::build(G.degree(), bg);
  if (A.order() != B.order()) return std::nullopt;
  bool same = true;
  for (const Perm& g : ag)
    if (!B.contains(g)) {
      same = false;
      break;
    }
  if (same) return id;
  auto a_orbits = A.orbits();
  auto b_orbits = B.orbits();
  std::vector<std::size_t> as, bs;
  for (const auto& o : a_orbits) as.push_back(o.size());
  for (const auto& o : b_orbits) bs.push_back(o.size());
  std::sort(as.begin(), as.end());
  std::sort(bs.begin(), bs.end());
  if (as != bs) return std::nullopt;
  detail::OrbitMapProp prop(a_orbits, b_orbits, G.degree(), ag, &B);
  detail::BaseImageSearch search(G, prop);
  return search.find_any();
}

// The complete, duplicate-free list of injective homomorphisms H -> G,
// ordered by generator images. Candidates are bucketed by exact element
// order; cycle type is deliberately not used, since only order survives
// arbitrary isomorphisms. A nontrivial homomorphism from a simple group is
// injective, and every result is certified by rebuilding the image.
inline std::vector<Embedding> monomorphisms(const GroupRecord& H,
                                            const StabilizerChain& G) {
  if (H.is_stub())
    throw GuardError("monomorphisms: source '" + H.name +
                     "' is a stub record");
  if (H.simplicity != GroupRecord::Simplicity::verified)
    throw std::invalid_argument(
        "monomorphisms: source simplicity is not verified: " + H.name);
  const std::uint64_t h_order = H.order_u64();
  if (h_order > kMonoSourceOrderGuard)
    throw GuardError("monomorphisms: source order " +
                     std::to_string(h_order) + " exceeds " +
                     std::to_string(kMonoSourceOrderGuard));
  if (G.degree() > kMonoTargetDegreeGuard)
    throw GuardError("monomorphisms: target degree " +
                     std::to_string(G.degree()) + " exceeds " +
                     std::to_string(kMonoTargetDegreeGuard));
  const std::uint64_t g_order = G.order();
  if (g_order > kMonoTargetOrderGuard)
    throw GuardError("monomorphisms: target order " +
                     std::to_string(g_order) + " exceeds " +
                     std::to_string(kMonoTargetOrderGuard));
  if (H.presentation.relators.empty())
    throw GuardError("monomorphisms: source '" + H.name +
                     "' has no presentation");
  if (g_order % h_order != 0) return {};  // Lagrange

  const std::size_t ng = H.generators.size();
  std::vector<std::uint64_t> gen_order(ng);
  for (std::size_t i = 0; i < ng; ++i) gen_order[i] = H.generators[i].order();

  // Rarest-first: assign generators of large element order early.
  std::vector<std::size_t> gen_at(ng);
  for (std::size_t i = 0; i < ng; ++i) gen_at[i] = i;
  std::stable_sort(gen_at.begin(), gen_at.end(),
                   [&](std::size_t x, std::size_t y) {
                     return gen_order[x] > gen_order[y];
                   });
  std::vector<std::size_t> depth_of(ng);
  for (std::size_t d = 0; d < ng; ++d) depth_of[gen_at[d]] = d;

  // Each relator is checked at the first depth where all its generators
  // have images.
  std::vector<std::vector<const Word*>> due(ng);
  for (const Word& w : H.presentation.relators) {
    std::size_t depth = 0;
    for (std::int32_t letter : w) {
      std::size_t g = static_cast<std::size_t>(std::abs(letter)) - 1;
      depth = std::max(depth, depth_of[g]);
    }
    if (!w.empty()) due[depth].push_back(&w);
  }

  std::unordered_map<std::uint64_t, std::vector<Perm>> bucket;
  for (std::uint64_t o : gen_order) bucket.emplace(o, std::vector<Perm>{});
  G.for_each_element([&](const Perm& p) {
    auto it = bucket.find(p.order());
    if (it != bucket.end()) it->second.push_back(p);
  });

  std::vector<Embedding> out;
  std::vector<Perm> images(ng, Perm::identity(G.degree()));
  auto rec = [&](auto&& self, std::size_t d) -> void {
    if (d == ng) {
      StabilizerChain image = StabilizerChain::build(G.degree(), images);
      if (image.order() != h_order)
        throw std::logic_error("monomorphisms: uncertifiable image");
      out.push_back(Embedding{images, true});
      return;
    }
    std::size_t g = gen_at[d];
    for (const Perm& c : bucket.at(gen_order[g])) {
      images[g] = c;
      bool ok = true;
      for (const Word* w : due[d])
        if (!evaluate(*w, images).is_identity()) {
          ok = false;
          break;
        }
      if (ok) self(self, d + 1);
    }
    images[g] = Perm::identity(G.degree());
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const Embedding& a, const Embedding& b) {
              return a.gen_images < b.gen_images;
            });
  return out;
}

struct SubgroupClass {
  std::vector<Perm> rep_gens;          // generators of one class member
  std::uint64_t n_subgroups = 0;       // conjugation orbit length
  std::uint64_t normalizer_order = 0;  // |G| / n_subgroups
  std::uint64_t monos = 0;             // monomorphisms landing in the class
  std::uint32_t ambient_class = 0;     // fused class id
};

struct ClassPartition {
  std::vector<SubgroupClass> classes;
  std::uint64_t n_subgroups = 0;
  std::uint32_t n_ambient_classes = 0;
};

// An automorphism of the target group given as a map on its elements.
using GroupAutomorphism = std::function<Perm(const Perm&)>;

// Partition the images of a complete monomorphism list into conjugacy
// classes under G, then fuse classes under the supplied automorphisms.
inline ClassPartition subgroup_classes(
    const std::vector<Embedding>& monos, const StabilizerChain& G,
    const std::vector<GroupAutomorphism>& ambient = {}) {
  ClassPartition part;
  if (monos.empty()) return part;

  struct ElemsHash {
    std::size_t operator()(const std::vector<Perm>& v) const {
      std::size_t h = 1469598103934665603ull;
      PermHash ph;
      for (const Perm& p : v) h = (h ^ ph(p)) * 1099511628211ull;
      return h;
    }
  };
  std::unordered_map<std::vector<Perm>, std::uint32_t, ElemsHash> sub_id;
  std::vector<const std::vector<Perm>*> sub_elems;
  std::unordered_map<Perm, std::vector<std::uint32_t>, PermHash> elem_to_subs;
  std::vector<std::uint32_t> class_of_sub;
  std::uint64_t stored = 0;

  auto register_sub = [&](std::vector<Perm> elems,
                          std::uint32_t cls) -> std::uint32_t {
    stored += elems.size();
    if (stored > kSubgroupStorageGuard)
      throw GuardError("subgroup_classes: stored elements exceed " +
                       std::to_string(kSubgroupStorageGuard));
    auto [it, fresh] =
        sub_id.emplace(std::move(elems), static_cast<std::uint32_t>(
                                             sub_elems.size()));
    if (!fresh) throw std::logic_error("subgroup_classes: duplicate seed");
    sub_elems.push_back(&it->first);
    class_of_sub.push_back(cls);
    for (const Perm& p : it->first) elem_to_subs[p].push_back(it->second);
    return it->second;
  };

  auto find_sub = [&](const std::vector<Perm>& gens) -> std::int64_t {
    auto it = elem_to_subs.find(gens[0]);
    if (it == elem_to_subs.end()) return -1;
    for (std::uint32_t id : it->second) {
      const std::vector<Perm>& elems = *sub_elems[id];
      bool all = true;
      for (const Perm& g : gens)
        if (!std::binary_search(elems.begin(), elems.end(), g)) {
          all = false;
          break;
        }
      if (all) return id;
    }
    return -1;
  };

  const std::uint64_t g_order = G.order();
  const std::vector<Perm> g_gens = G.strong_gens();
  for (const Embedding& e : monos) {
    std::int64_t id = find_sub(e.gen_images);
    if (id >= 0) {
      ++part.classes[class_of_sub[id]].monos;
      continue;
    }
    // New conjugacy class: walk the orbit of the image under conjugation.
    std::uint32_t cls = static_cast<std::uint32_t>(part.classes.size());
    StabilizerChain seed = StabilizerChain::build(G.degree(), e.gen_images);
    std::vector<Perm> elems = seed.elements();
    std::sort(elems.begin(), elems.end());
    std::vector<std::uint32_t> queue{register_sub(std::move(elems), cls)};
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const Perm& g : g_gens) {
        std::vector<Perm> conj;
        conj.reserve(sub_elems[queue[k]]->size());
        for (const Perm& x : *sub_elems[queue[k]]) conj.push_back(x.conj(g));
        std::sort(conj.begin(), conj.end());
        if (sub_id.find(conj) == sub_id.end())
          queue.push_back(register_sub(std::move(conj), cls));
      }
    SubgroupClass rec;
    rec.rep_gens = e.gen_images;
    rec.n_subgroups = queue.size();
    if (g_order % rec.n_subgroups != 0)
      throw std::logic_error("subgroup_classes: orbit does not divide order");
    rec.normalizer_order = g_order / rec.n_subgroups;
    rec.monos = 1;
    part.classes.push_back(std::move(rec));
  }
  part.n_subgroups = sub_elems.size();

  // Fuse under the ambient automorphisms (union-find over classes).
  std::vector<std::uint32_t> parent(part.classes.size());
  for (std::uint32_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto root = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t c = 0; c < part.classes.size(); ++c) {
    // Class representative: the seed subgroup registered first for c.
    std::uint32_t rep_id = 0;
    while (class_of_sub[rep_id] != c) ++rep_id;
    for (const GroupAutomorphism& alpha : ambient) {
      std::vector<Perm> image;
      image.reserve(sub_elems[rep_id]->size());
      for (const Perm& x : *sub_elems[rep_id]) image.push_back(alpha(x));
      std::sort(image.begin(), image.end());
      auto it = sub_id.find(image);
      if (it == sub_id.end())
        throw std::logic_error(
            "subgroup_classes: automorphism image is not a known subgroup");
      std::uint32_t a = root(c), b = root(class_of_sub[it->second]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::unordered_map<std::uint32_t, std::uint32_t> compress;
  for (std::uint32_t c = 0; c < part.classes.size(); ++c) {
    std::uint32_t r = root(c);
    auto [it, fresh] =
        compress.emplace(r, static_cast<std::uint32_t>(compress.size()));
    part.classes[c].ambient_class = it->second;
  }
  part.n_ambient_classes = static_cast<std::uint32_t>(compress.size());
  return part;
}

}  // namespace gloc
