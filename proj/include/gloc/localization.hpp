#pragma once

// Decides whether an inclusion H <= G of finite simple groups is a
// localization: every homomorphism H -> G must extend uniquely along it to
// an endomorphism of G. For simple groups that reduces to two independent
// computations, which cross-check each other:
//
//  * the counting route: restriction Aut(G) -> {monomorphisms H -> G} is a
//    bijection, i.e. the mono count equals |Aut(G)| and no nontrivial
//    automorphism fixes H pointwise;
//  * the criterion route: (1) every automorphism of H is induced from
//    Aut(G), (2) all subgroups isomorphic to H are conjugate under Aut(G),
//    (3) the centralizer of H in Aut(G) is trivial.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gloc/atlas.hpp"
#include "gloc/aut.hpp"
#include "gloc/bsgs.hpp"
#include "gloc/perm.hpp"
#include "gloc/search.hpp"

namespace gloc {

inline constexpr std::uint64_t kCosetActionIndexGuard = 1000ull;

enum class VerdictValue { Localization, NotLocalization, Undecided };

enum class Route {
  main_criterion,    // the three-condition test in Aut(G)
  complete_pair,     // both groups complete: conditions collapse into G
  maximal_subgroup,  // H maximal in G: N_G(H) = H comes for free
  oracle,            // mono count against |Aut(G)| plus injectivity
  coset_embedding    // H -> A_n through the cosets of a largest maximal
};

enum class ConditionStatus { pass, fail, undecided };

enum class ReportProvenance { derived, mixed };

inline const char* to_string(VerdictValue v) {
  switch (v) {
    case VerdictValue::Localization: return "Localization";
    case VerdictValue::NotLocalization: return "NotLocalization";
    default: return "Undecided";
  }
}

inline const char* to_string(Route r) {
  switch (r) {
    case Route::main_criterion: return "main-criterion";
    case Route::complete_pair: return "complete-pair";
    case Route::maximal_subgroup: return "maximal-subgroup";
    case Route::oracle: return "oracle";
    default: return "coset-embedding";
  }
}

inline const char* to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::pass: return "pass";
    case ConditionStatus::fail: return "fail";
    default: return "undecided";
  }
}

inline const char* to_string(ReportProvenance p) {
  return p == ReportProvenance::derived ? "derived" : "mixed";
}

struct Condition {
  ConditionStatus status = ConditionStatus::undecided;
  std::string witness;
};

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Rational reduced() const {
    std::uint64_t g = std::gcd(num, den);
    return g ? Rational{num / g, den / g} : *this;
  }
  bool integral() const { return reduced().den == 1; }
  bool operator==(const Rational& o) const {
    Rational a = reduced(), b = o.reduced();
    return a.num == b.num && a.den == b.den;
  }
  std::string str() const {
    Rational r = reduced();
    return r.den == 1 ? std::to_string(r.num)
                      : std::to_string(r.num) + "/" + std::to_string(r.den);
  }
};

struct CriterionReport {
  std::string sub, sup;
  Route route = Route::main_criterion;
  ReportProvenance provenance = ReportProvenance::derived;
  Condition cond_extension, cond_fusion, cond_centralizer;
  std::uint64_t mono_count = 0;
  std::uint64_t aut_order_sub = 0;  // 0 when unavailable
  std::uint64_t aut_order_sup = 0;
  std::uint64_t n_subgroups = 0;
  std::uint64_t normalizer_order = 0;  // |N_G(H)| for the canonical copy
  std::uint64_t class_count_observed = 0;
  std::optional<Rational> class_count_expected;
};

struct Verdict {
  VerdictValue value = VerdictValue::Undecided;
  std::string reason;
  CriterionReport report;
};

// Stable text form, used verbatim by the command line tool; identical
// inputs must serialize to identical bytes.
inline std::string to_text(const Verdict& v) {
  const CriterionReport& r = v.report;
  std::ostringstream os;
  os << "pair: " << r.sub << " -> " << r.sup << '\n';
  os << "verdict: " << to_string(v.value) << '\n';
  os << "route: " << to_string(r.route) << '\n';
  os << "provenance: " << to_string(r.provenance) << '\n';
  os << "reason: " << v.reason << '\n';
  os << "monomorphisms: " << r.mono_count << '\n';
  os << "aut order sub: " << r.aut_order_sub << '\n';
  os << "aut order sup: " << r.aut_order_sup << '\n';
  os << "subgroup copies: " << r.n_subgroups << '\n';
  os << "normalizer order: " << r.normalizer_order << '\n';
  os << "classes observed: " << r.class_count_observed << '\n';
  os << "classes expected: "
     << (r.class_count_expected ? r.class_count_expected->str() : "-") << '\n';
  os << "condition extension: " << to_string(r.cond_extension.status) << "; "
     << r.cond_extension.witness << '\n';
  os << "condition fusion: " << to_string(r.cond_fusion.status) << "; "
     << r.cond_fusion.witness << '\n';
  os << "condition centralizer: " << to_string(r.cond_centralizer.status)
     << "; " << r.cond_centralizer.witness << '\n';
  return os.str();
}

// Permutations of the right cosets of <h_gens> induced by the strong
// generators of G, in strong-generator order.
inline std::vector<Perm> coset_action(const StabilizerChain& G,
                                      const std::vector<Perm>& h_gens,
                                      std::uint64_t max_index =
                                          kCosetActionIndexGuard) {
  detail::require_members(G, h_gens, "coset_action");
  StabilizerChain H = StabilizerChain::build(G.degree(), h_gens);
  const std::uint64_t index = G.order() / H.order();
  if (index > max_index)
    throw GuardError("coset_action: index " + std::to_string(index) +
                     " exceeds " + std::to_string(max_index));
  std::vector<Perm> gens = G.strong_gens();
  std::vector<Perm> reps{Perm::identity(G.degree())};
  auto coset_of = [&](const Perm& x) -> std::int64_t {
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (H.contains(x * reps[j].inverse())) return static_cast<std::int64_t>(j);
    return -1;
  };
  for (std::size_t k = 0; k < reps.size(); ++k)
    for (const Perm& g : gens) {
      Perm x = reps[k] * g;
      if (coset_of(x) < 0) reps.push_back(std::move(x));
    }
  if (reps.size() != index)
    throw std::logic_error("coset_action: transversal size mismatch");
  std::vector<Perm> out;
  out.reserve(gens.size());
  for (const Perm& g : gens) {
    std::vector<Point> img(reps.size());
    for (std::size_t k = 0; k < reps.size(); ++k) {
      std::int64_t j = coset_of(reps[k] * g);
      if (j < 0) throw std::logic_error("coset_action: lost coset");
      img[k] = static_cast<Point>(j);
    }
    out.emplace_back(img);
  }
  return out;
}

// Minimal-block test on a transitive action: the action is primitive when
// no pair of points generates a proper nontrivial block.
inline bool is_primitive(Point degree, const std::vector<Perm>& gens) {
  if (degree <= 2) return true;
  std::vector<bool> seen(degree, false);
  std::vector<Point> orbit{0};
  seen[0] = true;
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const Perm& g : gens) {
      Point q = g[orbit[k]];
      if (!seen[q]) {
        seen[q] = true;
        orbit.push_back(q);
      }
    }
  if (orbit.size() != degree)
    throw std::invalid_argument("is_primitive: action is not transitive");

  std::vector<Point> parent(degree);
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Point b = 1; b < degree; ++b) {
    for (Point i = 0; i < degree; ++i) parent[i] = i;
    std::vector<std::pair<Point, Point>> work{{0, b}};
    parent[find(b)] = find(0);
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      for (const Perm& g : gens) {
        Point rx = find(g[x]), ry = find(g[y]);
        if (rx != ry) {
          parent[std::max(rx, ry)] = std::min(rx, ry);
          work.emplace_back(g[x], g[y]);
        }
      }
    }
    Point block = 0;
    Point root0 = find(0);
    for (Point i = 0; i < degree; ++i)
      if (find(i) == root0) ++block;
    if (block != degree) return false;
  }
  return true;
}

namespace detail {

inline bool asserted_tag(const GroupRecord& r) {
  return r.meta_order.tag == Provenance::asserted;
}

inline Verdict undecided(CriterionReport r, std::string reason) {
  Verdict v;
  v.value = VerdictValue::Undecided;
  v.reason = std::move(reason);
  v.report = std::move(r);
  return v;
}

}  // namespace detail

// The three-condition test, run inside a realization of Aut(G). All
// subgroups isomorphic to H are enumerated, classified up to conjugacy in
// G, and fused under the full automorphism group; the canonical copy is
// the lexicographically least monomorphism image.
inline Verdict check_criterion(const GroupRecord& H, const GroupRecord& G) {
  CriterionReport r;
  r.sub = H.name;
  r.sup = G.name;
  if (H.is_stub() || G.is_stub())
    return detail::undecided(
        std::move(r), "asserted metadata only: no generators for '" +
                          (H.is_stub() ? H.name : G.name) + "'");
  bool any_asserted = detail::asserted_tag(H) || detail::asserted_tag(G);

  StabilizerChain chainG = build_chain(G);
  std::vector<Embedding> monos;
  try {
    monos = monomorphisms(H, chainG);
  } catch (const GuardError& e) {
    return detail::undecided(std::move(r), e.what());
  }
  if (monos.empty())
    throw std::invalid_argument("check_criterion: '" + H.name +
                                "' has no embedding into '" + G.name + "'");
  r.mono_count = monos.size();

  AutRep rep;
  try {
    rep = aut_realization(G);
  } catch (const GuardError& e) {
    return detail::undecided(std::move(r), e.what());
  }
  r.aut_order_sup = rep.aut_order;
  any_asserted |= rep.certificate.order_provenance == Provenance::asserted;

  std::optional<AutOrderValue> autH;
  try {
    autH = aut_order(H);
    r.aut_order_sub = autH->value;
    any_asserted |= autH->provenance == Provenance::asserted;
  } catch (const GuardError&) {
  }

  ClassPartition part;
  try {
    part = subgroup_classes(monos, chainG, automorphism_action(rep));
  } catch (const GuardError& e) {
    return detail::undecided(std::move(r), e.what());
  }
  r.n_subgroups = part.n_subgroups;
  r.class_count_observed = part.classes.size();
  r.normalizer_order = part.classes[0].normalizer_order;

  if (part.n_ambient_classes == 1) {
    r.cond_fusion = {ConditionStatus::pass,
                     "single class under the full automorphism group"};
  } else {
    r.cond_fusion = {ConditionStatus::fail,
                     std::to_string(part.n_ambient_classes) +
                         " classes under the full automorphism group"};
  }

  std::vector<Perm> img = to_realization(rep, monos.front().gen_images);
  const std::uint64_t c_order = centralizer(rep.realization, img).order();
  if (c_order == 1) {
    r.cond_centralizer = {ConditionStatus::pass,
                          "trivial centralizer in the automorphism group"};
  } else {
    r.cond_centralizer = {ConditionStatus::fail,
                          "centralizer of order " + std::to_string(c_order) +
                              " in the automorphism group"};
  }

  const std::uint64_t n_order = normalizer(rep.realization, img).order();
  if (!autH) {
    r.cond_extension = {ConditionStatus::undecided,
                        "automorphism order of " + H.name + " unavailable"};
  } else {
    std::uint64_t induced = n_order / c_order;
    std::string w = "induced automorphisms " + std::to_string(induced) +
                    " of " + std::to_string(autH->value);
    r.cond_extension = {induced == autH->value ? ConditionStatus::pass
                                               : ConditionStatus::fail,
                        std::move(w)};
  }

  if (autH) {
    std::uint64_t out_sup = rep.aut_order / G.order_u64();
    std::uint64_t out_sub = autH->value / H.order_u64();
    r.class_count_expected =
        Rational{out_sup * r.normalizer_order, out_sub * H.order_u64()}
            .reduced();
  }

  // Route refinement: name the strongest premise that holds.
  if (autH && autH->value == H.order_u64() &&
      rep.aut_order == G.order_u64()) {
    r.route = Route::complete_pair;
  } else if (G.order_u64() / H.order_u64() > 1) {
    try {
      std::vector<Perm> action =
          coset_action(chainG, monos.front().gen_images);
      if (is_primitive(
              static_cast<Point>(G.order_u64() / H.order_u64()), action))
        r.route = Route::maximal_subgroup;
    } catch (const GuardError&) {
    }
  }
  r.provenance =
      any_asserted ? ReportProvenance::mixed : ReportProvenance::derived;

  Verdict v;
  v.report = std::move(r);
  const CriterionReport& rr = v.report;

  // A mono count different from |Aut(G)| already refutes the bijection,
  // whatever the conditions say.
  if (rr.mono_count != rr.aut_order_sup) {
    v.value = VerdictValue::NotLocalization;
    v.reason = "counted " + std::to_string(rr.mono_count) +
               " monomorphisms, automorphism order is " +
               std::to_string(rr.aut_order_sup);
    return v;
  }
  for (const Condition* c :
       {&rr.cond_extension, &rr.cond_fusion, &rr.cond_centralizer}) {
    if (c->status == ConditionStatus::fail) {
      v.value = VerdictValue::NotLocalization;
      v.reason = c->witness;
      return v;
    }
  }
  for (const Condition* c :
       {&rr.cond_extension, &rr.cond_fusion, &rr.cond_centralizer}) {
    if (c->status == ConditionStatus::undecided) {
      v.value = VerdictValue::Undecided;
      v.reason = c->witness;
      return v;
    }
  }
  if (rr.class_count_expected &&
      !(*rr.class_count_expected == Rational{rr.class_count_observed, 1}))
    throw std::logic_error(
        "check_criterion: class count violates the orbit formula");
  v.value = VerdictValue::Localization;
  v.reason = "all conditions hold";
  return v;
}

// The counting route: the inclusion is a localization exactly when the
// number of monomorphisms H -> G equals |Aut(G)| and restriction to H is
// injective on Aut(G), which is the triviality of the centralizer.
inline Verdict oracle_bijection(const GroupRecord& H, const GroupRecord& G) {
  CriterionReport r;
  r.sub = H.name;
  r.sup = G.name;
  r.route = Route::oracle;
  if (H.is_stub() || G.is_stub())
    return detail::undecided(
        std::move(r), "asserted metadata only: no generators for '" +
                          (H.is_stub() ? H.name : G.name) + "'");
  bool any_asserted = detail::asserted_tag(H) || detail::asserted_tag(G);

  StabilizerChain chainG = build_chain(G);
  std::vector<Embedding> monos;
  try {
    monos = monomorphisms(H, chainG);
  } catch (const GuardError& e) {
    return detail::undecided(std::move(r), e.what());
  }
  if (monos.empty())
    throw std::invalid_argument("oracle_bijection: '" + H.name +
                                "' has no embedding into '" + G.name + "'");
  r.mono_count = monos.size();

  AutOrderValue autG;
  try {
    autG = aut_order(G);
  } catch (const GuardError& e) {
    return detail::undecided(std::move(r), e.what());
  }
  r.aut_order_sup = autG.value;
  any_asserted |= autG.provenance == Provenance::asserted;
  r.cond_extension = {ConditionStatus::undecided,
                      "not evaluated by the counting route"};
  r.cond_fusion = {ConditionStatus::undecided,
                   "not evaluated by the counting route"};
  r.provenance =
      any_asserted ? ReportProvenance::mixed : ReportProvenance::derived;

  Verdict v;
  if (monos.size() != autG.value) {
    r.cond_centralizer = {ConditionStatus::undecided,
                          "not evaluated by the counting route"};
    v.value = VerdictValue::NotLocalization;
    v.reason = "counted " + std::to_string(monos.size()) +
               " monomorphisms, automorphism order is " +
               std::to_string(autG.value);
    v.report = std::move(r);
    return v;
  }

  AutRep rep;
  try {
    rep = aut_realization(G);
  } catch (const GuardError& e) {
    return detail::undecided(
        std::move(r),
        std::string("counts agree but the injectivity check needs a "
                    "realization: ") +
            e.what());
  }
  std::vector<Perm> img = to_realization(rep, monos.front().gen_images);
  const std::uint64_t c_order = centralizer(rep.realization, img).order();
  if (c_order == 1) {
    r.cond_centralizer = {ConditionStatus::pass,
                          "trivial centralizer in the automorphism group"};
    v.value = VerdictValue::Localization;
    v.reason = "monomorphism count " + std::to_string(monos.size()) +
               " matches the automorphism order and restriction is injective";
  } else {
    r.cond_centralizer = {ConditionStatus::fail,
                          "centralizer of order " + std::to_string(c_order) +
                              " in the automorphism group"};
    v.value = VerdictValue::NotLocalization;
    v.reason = "restriction to " + H.name +
               " is not injective: centralizer order " +
               std::to_string(c_order);
  }
  v.report = std::move(r);
  return v;
}

}  // namespace gloc
