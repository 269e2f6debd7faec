#pragma once
// Route dispatcher. Tries the cheapest route first: the coset route runs
// entirely inside H, the counting route needs the monomorphisms into G,
// and the full criterion adds the subgroup class analysis on top of that.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gloc/atlas.hpp"
#include "gloc/embed.hpp"
#include "gloc/localization.hpp"

namespace gloc {

struct VerifyOptions {
  bool cross_check = false;  // run every feasible route, demand agreement
  std::uint32_t max_cosets = 1000000;
  std::uint64_t low_index_budget = 50000000ull;
  // Bounds on the target for the in-target routes; tighter values skip the
  // counting work early, looser ones defer to the module guards.
  std::uint64_t max_order = kMonoTargetOrderGuard;
  Point max_degree = kMonoTargetDegreeGuard;
};

struct VerifyOutcome {
  Verdict verdict;
  std::vector<Route> decisive;  // routes that reached a decisive verdict
};

namespace detail {

// Degree n when the record names an alternating group A_n, n >= 5, in its
// natural action. Stub records match on the name alone: the coset route
// needs nothing from the target beyond knowing which A_n it is.
inline std::optional<std::uint64_t> alternating_degree(const GroupRecord& g) {
  if (g.name.size() < 2 || g.name[0] != 'A') return std::nullopt;
  std::uint64_t n = 0;
  for (std::size_t i = 1; i < g.name.size(); ++i) {
    char c = g.name[i];
    if (c < '0' || c > '9') return std::nullopt;
    if (n > 100000000ull) return std::nullopt;
    n = n * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (n < 5) return std::nullopt;
  if (!g.is_stub() && g.degree != n) return std::nullopt;
  return n;
}

inline bool decisive(const std::optional<Verdict>& v) {
  return v && v->value != VerdictValue::Undecided;
}

// Reason text when the target record lies outside the configured bounds for
// the in-target routes. The coset route never looks at the target's
// generators, so it is exempt.
inline std::optional<std::string> target_bound_breach(
    const GroupRecord& g, const VerifyOptions& opt) {
  if (g.is_stub()) return std::nullopt;
  if (g.degree > opt.max_degree)
    return "target degree " + std::to_string(g.degree) +
           " exceeds configured bound " + std::to_string(opt.max_degree);
  std::uint64_t n = 0;
  if (g.meta_order.as_u64(n) && n > opt.max_order)
    return "target order " + std::to_string(n) +
           " exceeds configured bound " + std::to_string(opt.max_order);
  return std::nullopt;
}

}  // namespace detail

inline VerifyOutcome is_localization(const GroupRecord& H,
                                     const GroupRecord& G,
                                     const VerifyOptions& opt = {}) {
  std::optional<Verdict> coset, oracle, criterion;

  if (detail::alternating_degree(G)) {
    for (const auto& [sname, words] : H.subgroups) {
      Verdict v;
      try {
        v = verify_coset_edge(H, words, opt.max_cosets,
                              opt.low_index_budget);
      } catch (const std::invalid_argument&) {
        continue;  // this subgroup entry does not give a coset embedding
      }
      if (v.report.sup != G.name) continue;  // lands in a different A_n
      coset = std::move(v);
      break;
    }
  }

  std::optional<Verdict> bound_verdict;
  if (const auto bound = detail::target_bound_breach(G, opt)) {
    CriterionReport r;
    r.sub = H.name;
    r.sup = G.name;
    bound_verdict = detail::undecided(std::move(r), *bound);
  }

  if (!opt.cross_check) {
    if (detail::decisive(coset))
      return {*coset, {coset->report.route}};
    if (bound_verdict) return {*bound_verdict, {}};
    oracle = oracle_bijection(H, G);
    if (detail::decisive(oracle))
      return {*oracle, {oracle->report.route}};
    criterion = check_criterion(H, G);
    if (detail::decisive(criterion))
      return {*criterion, {criterion->report.route}};
    // Nothing decided. The criterion report is the most complete record of
    // what was attempted; fall back to the coset reason when the criterion
    // never got past the target's metadata.
    if (coset && criterion->reason.rfind("asserted metadata only", 0) == 0)
      return {*coset, {}};
    return {*criterion, {}};
  }

  if (!bound_verdict) {
    oracle = oracle_bijection(H, G);
    criterion = check_criterion(H, G);
  }

  VerifyOutcome out;
  std::optional<VerdictValue> agreed;
  for (const std::optional<Verdict>* v : {&criterion, &oracle, &coset}) {
    if (!detail::decisive(*v)) continue;
    const Verdict& d = **v;
    if (agreed && *agreed != d.value)
      throw std::logic_error(
          "routes disagree on " + H.name + " -> " + G.name + ": " +
          to_string(out.verdict.report.route) + " says " +
          to_string(out.verdict.value) + ", " + to_string(d.report.route) +
          " says " + to_string(d.value));
    if (!agreed) {
      agreed = d.value;
      out.verdict = d;
    }
    out.decisive.push_back(d.report.route);
  }
  if (!agreed) {
    if (bound_verdict)
      out.verdict = *bound_verdict;
    else
      out.verdict = (coset && criterion->reason.rfind(
                                  "asserted metadata only", 0) == 0)
                        ? *coset
                        : *criterion;
  }
  return out;
}

}  // namespace gloc
