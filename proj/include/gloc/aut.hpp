#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gloc/atlas.hpp"
#include "gloc/bsgs.hpp"
#include "gloc/perm.hpp"
#include "gloc/search.hpp"

namespace gloc {

// Largest group order for which Aut(G) is counted and realized by brute
// enumeration of self-monomorphisms.
inline constexpr std::uint64_t kAutBruteOrderGuard = 20000ull;

enum class AutMode { normalizer_in_symmetric, action_on_elements };

inline const char* to_string(AutMode m) {
  return m == AutMode::normalizer_in_symmetric ? "normalizer-in-symmetric"
                                               : "action-on-elements";
}

struct AutOrderValue {
  std::uint64_t value = 0;
  Provenance provenance = Provenance::derived;
};

struct AutCertificate {
  bool order_matches = false;
  bool centralizer_trivial = false;
  // recorded whenever the N_{S_n}(G) route was attempted, certified or not
  std::optional<std::uint64_t> symmetric_normalizer_order;
  Provenance order_provenance = Provenance::derived;
};

// A permutation group isomorphic to Aut(G), with the conjugation copy of G
// inside it. Two realizations exist: the normalizer of G in the symmetric
// group of its natural degree (when that normalizer has full automorphism
// order), and the action of Aut(G) on the element set of G.
struct AutRep {
  const GroupRecord* base = nullptr;
  AutMode mode = AutMode::normalizer_in_symmetric;
  StabilizerChain realization;
  std::uint64_t aut_order = 0;
  AutCertificate certificate;
  // action_on_elements only: the sorted element list of G and its index
  std::shared_ptr<const std::vector<Perm>> elements;
  std::shared_ptr<const std::unordered_map<Perm, Point, PermHash>>
      element_index;
  std::vector<Perm> inner_gen_images;

  bool certified() const {
    return certificate.order_matches && certificate.centralizer_trivial;
  }
};

// |Aut(G)|: counted as the number of self-monomorphisms when the order guard
// allows, otherwise taken from the outer-order metadata.
inline AutOrderValue aut_order(const GroupRecord& G) {
  if (G.is_stub())
    throw GuardError("aut_order: '" + G.name + "' is a stub record");
  const std::uint64_t n = G.order_u64();
  if (n <= kAutBruteOrderGuard) {
    try {
      StabilizerChain chain = build_chain(G);
      return {static_cast<std::uint64_t>(monomorphisms(G, chain).size()),
              Provenance::derived};
    } catch (const GuardError&) {
      // fall through to metadata
    }
  }
  std::uint64_t out = 0;
  if (G.meta_out && G.meta_out->as_u64(out))
    return {n * out, Provenance::asserted};
  throw GuardError("aut_order: '" + G.name + "' order " + std::to_string(n) +
                   " exceeds the enumeration guard and no outer-order "
                   "metadata is present");
}

namespace detail {

inline std::optional<std::uint64_t> symmetric_order_within(Point degree,
                                                           std::uint64_t cap) {
  std::uint64_t f = 1;
  for (Point i = 2; i <= degree; ++i) {
    f *= i;
    if (f > cap) return std::nullopt;
  }
  return f;
}

using ElementIndex = std::unordered_map<Perm, Point, PermHash>;

inline Point element_at(const ElementIndex& index, const Perm& g,
                        const char* who) {
  auto it = index.find(g);
  if (it == index.end())
    throw std::invalid_argument(std::string(who) +
                                ": permutation is not a group element");
  return it->second;
}

// x |-> g^-1 x g as a permutation of the element list.
inline Perm conjugation_permutation(const std::vector<Perm>& elems,
                                    const ElementIndex& index, const Perm& g) {
  std::vector<Point> img(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    img[i] = element_at(index, elems[i].conj(g), "conjugation_permutation");
  return Perm(img);
}

// The automorphism sending the generators to the given images, as a
// permutation of the element list. Images spread along the Cayley graph.
inline Perm automorphism_permutation(const std::vector<Perm>& elems,
                                     const ElementIndex& index,
                                     const std::vector<Perm>& gens,
                                     const std::vector<Perm>& images) {
  const std::size_t m = elems.size();
  const Point unset = static_cast<Point>(m);
  std::vector<Point> img(m, unset);
  const Point id = element_at(index, Perm::identity(elems[0].degree()),
                              "automorphism_permutation");
  img[id] = id;
  std::vector<Point> stack{id};
  while (!stack.empty()) {
    Point x = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Point y = element_at(index, elems[x] * gens[j],
                           "automorphism_permutation");
      if (img[y] != unset) continue;
      img[y] = element_at(index, elems[img[x]] * images[j],
                          "automorphism_permutation");
      stack.push_back(y);
    }
  }
  return Perm(img);
}

}  // namespace detail

// Map an element of G into the realization's coordinates.
inline Perm to_realization(const AutRep& rep, const Perm& g) {
  if (rep.mode == AutMode::normalizer_in_symmetric) {
    if (g.degree() != rep.realization.degree())
      throw std::invalid_argument("to_realization: degree mismatch");
    return g;
  }
  return detail::conjugation_permutation(*rep.elements, *rep.element_index,
                                         g);
}

inline std::vector<Perm> to_realization(const AutRep& rep,
                                        const std::vector<Perm>& gs) {
  std::vector<Perm> out;
  out.reserve(gs.size());
  for (const Perm& g : gs) out.push_back(to_realization(rep, g));
  return out;
}

// The image of the element g of G under the automorphism alpha, where alpha
// is given in realization coordinates.
inline Perm apply_automorphism(const AutRep& rep, const Perm& alpha,
                               const Perm& g) {
  if (alpha.degree() != rep.realization.degree())
    throw std::invalid_argument("apply_automorphism: degree mismatch");
  if (rep.mode == AutMode::normalizer_in_symmetric) return g.conj(alpha);
  Point gi =
      detail::element_at(*rep.element_index, g, "apply_automorphism");
  return (*rep.elements)[alpha[gi]];
}

// conj(c(g), alpha) = c(alpha(g)): conjugating the inner automorphism of g
// by alpha gives the inner automorphism of the image of g.
inline bool inner_square_commutes(const AutRep& rep, const Perm& alpha,
                                  const Perm& g) {
  return to_realization(rep, apply_automorphism(rep, alpha, g)) ==
         to_realization(rep, g).conj(alpha);
}

// Automorphism callbacks for one generating set of the realization; class
// fusion under the full automorphism group follows from closing under these.
inline std::vector<GroupAutomorphism> automorphism_action(const AutRep& rep) {
  std::vector<GroupAutomorphism> out;
  if (rep.mode == AutMode::normalizer_in_symmetric) {
    for (const Perm& s : rep.realization.strong_gens())
      out.push_back([s](const Perm& x) { return x.conj(s); });
    return out;
  }
  auto elems = rep.elements;
  auto index = rep.element_index;
  for (const Perm& s : rep.realization.strong_gens())
    out.push_back([elems, index, s](const Perm& x) {
      return (*elems)[s[detail::element_at(*index, x, "automorphism_action")]];
    });
  return out;
}

// The conjugation embedding of G into its automorphism group, in realization
// coordinates. Certified by faithfulness and the homomorphism property.
inline Embedding inner_embedding(const GroupRecord& G, const AutRep& rep) {
  Embedding e;
  e.gen_images = rep.inner_gen_images;
  for (const Perm& p : e.gen_images)
    if (!rep.realization.contains(p))
      throw std::logic_error(
          "inner_embedding: conjugation image escapes the realization");
  StabilizerChain img =
      StabilizerChain::build(rep.realization.degree(), e.gen_images);
  if (img.order() != G.order_u64())
    throw std::logic_error("inner_embedding: conjugation image of '" +
                           G.name + "' is not faithful");
  for (std::size_t i = 0; i < G.generators.size(); ++i)
    for (std::size_t j = 0; j < G.generators.size(); ++j) {
      Perm prod = to_realization(rep, G.generators[i] * G.generators[j]);
      if (prod != e.gen_images[i] * e.gen_images[j])
        throw std::logic_error(
            "inner_embedding: conjugation map is not a homomorphism");
    }
  e.certified = true;
  return e;
}

// Build a working realization of Aut(G). The normalizer route is preferred;
// the element action is the fallback (and the only option for groups whose
// outer automorphisms are not visible in the natural symmetric group).
inline AutRep aut_realization(const GroupRecord& G,
                              bool force_element_action = false) {
  if (G.is_stub())
    throw GuardError("aut_realization: '" + G.name + "' is a stub record");
  AutOrderValue ao = aut_order(G);
  AutRep rep;
  rep.base = &G;
  rep.aut_order = ao.value;
  rep.certificate.order_provenance = ao.provenance;

  if (!force_element_action &&
      detail::symmetric_order_within(G.degree, kChainSearchOrderGuard)) {
    StabilizerChain sym = symmetric_chain(G.degree);
    StabilizerChain N = normalizer(sym, G.generators);
    rep.certificate.symmetric_normalizer_order = N.order();
    if (N.order() == ao.value &&
        centralizer(N, G.generators).order() == 1) {
      rep.mode = AutMode::normalizer_in_symmetric;
      rep.realization = std::move(N);
      rep.inner_gen_images = G.generators;
      rep.certificate.order_matches = true;
      rep.certificate.centralizer_trivial = true;
      return rep;
    }
  }

  const std::uint64_t n = G.order_u64();
  if (n > kAutBruteOrderGuard)
    throw GuardError("aut_realization: no feasible realization for '" +
                     G.name + "'");
  StabilizerChain g_chain = build_chain(G);
  std::vector<Embedding> monos = monomorphisms(G, g_chain);
  if (monos.size() != ao.value)
    throw std::logic_error(
        "aut_realization: self-monomorphism recount mismatch for '" + G.name +
        "'");

  auto elems = std::make_shared<std::vector<Perm>>(g_chain.elements());
  std::sort(elems->begin(), elems->end());
  auto index = std::make_shared<detail::ElementIndex>();
  index->reserve(elems->size());
  for (std::size_t i = 0; i < elems->size(); ++i)
    (*index)[(*elems)[i]] = static_cast<Point>(i);
  const Point m = static_cast<Point>(elems->size());

  rep.inner_gen_images.clear();
  for (const Perm& g : G.generators)
    rep.inner_gen_images.push_back(
        detail::conjugation_permutation(*elems, *index, g));
  std::vector<Perm> rgens = rep.inner_gen_images;
  StabilizerChain real = StabilizerChain::build(m, rgens);
  if (real.order() != n)
    throw std::logic_error(
        "aut_realization: conjugation action of '" + G.name +
        "' is not faithful");

  // The inner copy is dense in the monomorphism list (index = outer order),
  // so a few random probes almost always complete the generating set; the
  // ordered sweep is the deterministic safety net.
  std::mt19937_64 rng(0x6175746full);
  for (int t = 0; t < 256 && real.order() < ao.value; ++t) {
    const Embedding& e = monos[rng() % monos.size()];
    Perm alpha = detail::automorphism_permutation(*elems, *index,
                                                  G.generators, e.gen_images);
    if (!real.contains(alpha)) {
      rgens.push_back(std::move(alpha));
      real = StabilizerChain::build(m, rgens);
    }
  }
  for (std::size_t k = 0; real.order() < ao.value && k < monos.size(); ++k) {
    Perm alpha = detail::automorphism_permutation(
        *elems, *index, G.generators, monos[k].gen_images);
    if (!real.contains(alpha)) {
      rgens.push_back(std::move(alpha));
      real = StabilizerChain::build(m, rgens);
    }
  }
  if (real.order() != ao.value)
    throw std::logic_error(
        "aut_realization: element action realization order mismatch for '" +
        G.name + "'");

  rep.mode = AutMode::action_on_elements;
  rep.realization = std::move(real);
  rep.elements = elems;
  rep.element_index = index;
  rep.certificate.order_matches = true;
  rep.certificate.centralizer_trivial =
      centralizer(rep.realization, rep.inner_gen_images).order() == 1;
  if (!rep.certificate.centralizer_trivial)
    throw std::logic_error(
        "aut_realization: inner image has a nontrivial centralizer");
  return rep;
}

}  // namespace gloc
