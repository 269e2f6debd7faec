// Acceptance gate: ten end-to-end checks against the verification engine,
// one pass/fail line each. Exit status 0 only when every check passes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "gloc/aut.hpp"
#include "gloc/rigid_graph.hpp"
#include "gloc/verify.hpp"

using namespace gloc;

namespace {

using Clock = std::chrono::steady_clock;

const Atlas& atlas() {
  static Atlas a = load_atlas(std::string(GLOC_DATA_DIR) + "/groups.atlas");
  return a;
}

std::vector<std::string> notes;

bool expect(bool ok, std::string what) {
  if (!ok) notes.push_back(std::move(what));
  return ok;
}

Perm random_relabel(Point n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

// The same abstract group on shuffled points: generators conjugated by a
// random element of the full symmetric group. Presentation, subgroup words
// and metadata stay valid under relabeling.
GroupRecord relabeled(const GroupRecord& r, std::mt19937_64& rng) {
  GroupRecord out = r;
  Perm s = random_relabel(r.degree, rng);
  for (Perm& g : out.generators) g = g.conj(s);
  return out;
}

std::optional<std::vector<Perm>> closure(const std::vector<Perm>& gens,
                                         std::size_t cap) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> frontier{Perm::identity(gens[0].degree())};
  seen.insert(frontier[0]);
  for (std::size_t k = 0; k < frontier.size(); ++k)
    for (const Perm& g : gens) {
      Perm p = frontier[k] * g;
      if (seen.insert(p).second) {
        if (seen.size() > cap) return std::nullopt;
        frontier.push_back(p);
      }
    }
  return frontier;
}

std::uint64_t aut_of(const std::string& name) {
  static std::map<std::string, std::uint64_t> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, aut_order(atlas().get(name)).value).first;
  return it->second;
}

bool criterion_family(Route r) {
  return r != Route::oracle && r != Route::coset_embedding;
}

// 1: A5 -> A6 decided by the subgroup criterion and the counting oracle.
bool check_1() {
  VerifyOptions cc;
  cc.cross_check = true;
  VerifyOutcome out = is_localization(atlas().get("A5"), atlas().get("A6"), cc);
  const CriterionReport& r = out.verdict.report;
  bool ok = expect(out.verdict.value == VerdictValue::Localization,
                   "verdict is not Localization");
  bool crit = false, oracle = false;
  for (Route x : out.decisive) {
    oracle = oracle || x == Route::oracle;
    crit = crit || criterion_family(x);
  }
  ok &= expect(crit && oracle, "criterion and oracle must both decide");
  ok &= expect(r.mono_count == 1440, "monomorphism count is not 1440");
  ok &= expect(r.aut_order_sup == 1440, "automorphism order is not 1440");
  ok &= expect(r.class_count_observed == 2, "expected 2 subgroup classes");
  ok &= expect(r.cond_fusion.status == ConditionStatus::pass,
               "classes do not fuse to one");
  ok &= expect(r.cond_centralizer.status == ConditionStatus::pass,
               "centralizer is not trivial");
  return ok;
}

// 2: A6 -> A7 refuted by the count 10080 against 5040.
bool check_2() {
  VerifyOutcome out = is_localization(atlas().get("A6"), atlas().get("A7"));
  const CriterionReport& r = out.verdict.report;
  bool ok = expect(out.verdict.value == VerdictValue::NotLocalization,
                   "verdict is not NotLocalization");
  ok &= expect(r.route == Route::oracle, "route is not the counting oracle");
  ok &= expect(r.mono_count == 10080, "monomorphism count is not 10080");
  ok &= expect(r.aut_order_sup == 5040, "automorphism order is not 5040");
  return ok;
}

// 3: A7 -> A8 through the maximal-subgroup shortcut, cross-checked by the
// class and fusion computation and by the counting oracle.
bool check_3() {
  VerifyOptions cc;
  cc.cross_check = true;
  VerifyOutcome out = is_localization(atlas().get("A7"), atlas().get("A8"), cc);
  const CriterionReport& r = out.verdict.report;
  bool ok = expect(out.verdict.value == VerdictValue::Localization,
                   "verdict is not Localization");
  ok &= expect(r.route == Route::maximal_subgroup,
               "route is not maximal-subgroup");
  bool crit = false, oracle = false;
  for (Route x : out.decisive) {
    oracle = oracle || x == Route::oracle;
    crit = crit || criterion_family(x);
  }
  ok &= expect(crit && oracle, "criterion and oracle must both decide");
  ok &= expect(r.aut_order_sub == 5040, "outer order of the source is not 2");
  ok &= expect(r.aut_order_sup == 40320, "outer order of the target is not 2");
  ok &= expect(r.mono_count == 40320, "monomorphism count is not 40320");
  ok &= expect(r.class_count_observed == 1, "expected a single class");
  ok &= expect(r.provenance == ReportProvenance::mixed,
               "target outer order comes from metadata, not derivation");
  return ok;
}

// 4: L2_8 -> A9 by the coset route and by the in-target criterion.
bool check_4() {
  const GroupRecord& h = atlas().get("L2_8");
  Verdict coset = verify_coset_edge(h, h.subgroups.front().second);
  bool ok = expect(coset.value == VerdictValue::Localization,
                   "coset route did not decide");
  ok &= expect(coset.report.sup == "A9", "coset route landed outside A9");
  Verdict crit = check_criterion(h, atlas().get("A9"));
  ok &= expect(crit.value == VerdictValue::Localization,
               "in-target criterion did not decide");
  ok &= expect(coset.value == crit.value, "the two routes disagree");
  return ok;
}

// 5: the Borel coset action of L2_7 lands in A8 but fails the least-index
// condition, with the index-7 point stabilizer as the witness.
bool check_5() {
  const GroupRecord& h = atlas().get("L2_7");
  CosetEmbedding e = coset_embedding(h, h.subgroups.front().second);
  bool ok = expect(e.degree == 8, "Borel subgroup does not have index 8");
  ok &= expect(e.even, "coset action is not even");
  check_largest_maximal(h, e);
  ok &= expect(e.order_maximal.status == ConditionStatus::fail,
               "least-index condition unexpectedly holds");
  ok &= expect(e.order_maximal.witness == "proper subgroup of index 7",
               "witness does not name the index-7 subgroup");
  Verdict v = verify_coset_edge(h, h.subgroups.front().second);
  ok &= expect(v.value == VerdictValue::Undecided,
               "a failed sufficient condition must stay undecided");
  return ok;
}

// 6: L2_13 -> A14 and M11 -> A11 decided entirely inside the source group.
bool check_6() {
  const GroupRecord& l = atlas().get("L2_13");
  Verdict a = verify_coset_edge(l, l.subgroups.front().second);
  bool ok = expect(a.value == VerdictValue::Localization,
                   "L2_13 coset route did not decide");
  ok &= expect(a.report.sup == "A14", "L2_13 does not land in A14");
  const GroupRecord& m = atlas().get("M11");
  Verdict b = verify_coset_edge(m, m.subgroups.front().second);
  ok &= expect(b.value == VerdictValue::Localization,
               "M11 coset route did not decide");
  ok &= expect(b.report.sup == "A11", "M11 does not land in A11");
  return ok;
}

// 7: coset enumeration of A5 is exact and bit-for-bit deterministic.
bool check_7() {
  const GroupRecord& a5 = atlas().get("A5");
  const std::vector<Word>& stab = a5.subgroups.front().second;
  bool ok = true;
  std::optional<CosetTable> whole, point;
  for (int run = 0; run < 3; ++run) {
    TcResult r = coset_enumerate(a5.presentation, {});
    ok &= expect(r.status == TcStatus::ok, "regular enumeration failed");
    ok &= expect(r.table.n_cosets == 60, "regular enumeration is not 60");
    ok &= expect(table_satisfies(r.table, a5.presentation),
                 "regular table violates a relator");
    if (!whole) whole = r.table;
    ok &= expect(whole->action == r.table.action,
                 "regular enumeration is not deterministic");
    TcResult s = coset_enumerate(a5.presentation, stab);
    ok &= expect(s.status == TcStatus::ok, "stabilizer enumeration failed");
    ok &= expect(s.table.n_cosets == 5, "stabilizer index is not 5");
    if (!point) point = s.table;
    ok &= expect(point->action == s.table.action,
                 "stabilizer enumeration is not deterministic");
  }
  return ok;
}

// 8a: stabilizer chain order equals both the product of its fundamental
// orbit lengths and an independent closure count.
bool suite_chain_order(std::mt19937_64& rng) {
  const char* pool[] = {"A5", "A6", "A7", "L2_7", "L2_8", "M11"};
  bool ok = true;
  for (int t = 0; t < 100; ++t) {
    std::vector<Perm> gens;
    if (t % 5 == 0) {
      gens = relabeled(atlas().get(pool[(t / 5) % 6]), rng).generators;
    } else {
      Point d = static_cast<Point>(4 + rng() % 5);
      for (int attempts = 0;; ++attempts) {
        gens = {random_relabel(d, rng), random_relabel(d, rng)};
        if (closure(gens, 50000)) break;
        if (!expect(attempts < 200, "no closable generators found")) return ok;
      }
    }
    StabilizerChain c = StabilizerChain::build(gens[0].degree(), gens);
    std::uint64_t prod = 1;
    for (const auto& level : c.levels()) prod *= level.orbit.size();
    ok &= expect(prod == c.order(), "order is not the orbit product");
    auto elems = closure(gens, 50000);
    ok &= expect(elems && elems->size() == c.order(),
                 "order disagrees with the closure count at case " +
                     std::to_string(t));
    for (int i = 0; i < 5 && elems; ++i) {
      std::uniform_int_distribution<std::size_t> d(0, elems->size() - 1);
      ok &= expect(c.contains((*elems)[d(rng)]),
                   "chain rejects a closure element");
    }
    if (!ok) return ok;
  }
  return ok;
}

// 8b: the monomorphism count factors through the subgroup classes:
// #monos = (number of copies) x |Aut(source)|, class by class.
bool suite_mono_identity(std::mt19937_64& rng) {
  struct Pick {
    const char *h, *g;
    int weight;
    std::uint64_t expect_total;  // 0 = identity check only
  };
  const Pick picks[] = {
      {"A5", "A5", 18, 120},    {"A5", "A6", 18, 1440},
      {"A5", "A7", 14, 7560},   {"A6", "A6", 14, 1440},
      {"L2_7", "L2_7", 12, 336}, {"L2_8", "L2_8", 12, 1512},
      {"A5", "A8", 6, 26880},   {"A6", "A7", 6, 10080},
  };
  bool ok = true;
  int done = 0;
  for (const Pick& p : picks) {
    const std::uint64_t aut_h = aut_of(p.h);
    for (int t = 0; t < p.weight; ++t, ++done) {
      GroupRecord h = relabeled(atlas().get(p.h), rng);
      GroupRecord g = relabeled(atlas().get(p.g), rng);
      StabilizerChain cg = build_chain(g);
      std::vector<Embedding> monos = monomorphisms(h, cg);
      if (p.expect_total)
        ok &= expect(monos.size() == p.expect_total,
                     std::string(p.h) + " -> " + p.g +
                         ": mono total changed under relabeling");
      ClassPartition part = subgroup_classes(monos, cg);
      ok &= expect(monos.size() == part.n_subgroups * aut_h,
                   std::string(p.h) + " -> " + p.g +
                       ": total is not copies x |Aut|");
      for (const SubgroupClass& cls : part.classes) {
        ok &= expect(cls.monos == cls.n_subgroups * aut_h,
                     "class mono count is not copies x |Aut|");
        ok &= expect(cls.normalizer_order * cls.n_subgroups == cg.order(),
                     "normalizer order violates orbit-stabilizer");
      }
      if (!ok) return ok;
    }
  }
  return expect(done >= 100, "fewer than 100 cases ran");
}

// 8c: conjugation restricted to a subgroup separates group elements exactly
// when the subgroup's centralizer is trivial.
bool suite_restriction(std::mt19937_64& rng) {
  const char* pool[] = {"A5", "A6", "L2_7", "L2_8"};
  bool ok = true;
  for (int t = 0; t < 100; ++t) {
    GroupRecord g = relabeled(atlas().get(pool[t % 4]), rng);
    StabilizerChain cg = build_chain(g);
    std::vector<Perm> h_gens;
    for (std::uint64_t i = 0, n = 1 + rng() % 2; i < n; ++i)
      h_gens.push_back(cg.random_element(rng));
    std::vector<Perm> elems = cg.elements();
    std::unordered_set<std::string> images;
    for (const Perm& x : elems) {
      std::string key;
      for (const Perm& h : h_gens)
        for (Point p = 0; p < g.degree; ++p)
          key += static_cast<char>(h.conj(x)[p]);
      images.insert(std::move(key));
    }
    std::uint64_t c_order = centralizer(cg, h_gens).order();
    ok &= expect(images.size() * c_order == elems.size(),
                 "restriction fibers violate orbit-stabilizer at case " +
                     std::to_string(t));
    ok &= expect((images.size() == elems.size()) == (c_order == 1),
                 "injectivity does not match centralizer triviality");
    if (!ok) return ok;
  }
  return ok;
}

// 8d: whenever all three conditions pass, the observed class count equals
// the outer-order ratio times the relative normalizer index, exactly.
bool suite_class_formula(std::mt19937_64& rng) {
  struct Pick {
    const char *h, *g;
    int weight;
  };
  const Pick picks[] = {{"A5", "A6", 55}, {"A6", "A7", 20}, {"A5", "A7", 15},
                        {"A5", "A5", 5},  {"L2_7", "A8", 4}, {"L2_8", "A9", 1}};
  bool ok = true;
  int done = 0, passed_cases = 0;
  for (const Pick& p : picks)
    for (int t = 0; t < p.weight; ++t, ++done) {
      GroupRecord h = relabeled(atlas().get(p.h), rng);
      GroupRecord g = relabeled(atlas().get(p.g), rng);
      Verdict v = check_criterion(h, g);
      const CriterionReport& r = v.report;
      bool all_pass = r.cond_extension.status == ConditionStatus::pass &&
                      r.cond_fusion.status == ConditionStatus::pass &&
                      r.cond_centralizer.status == ConditionStatus::pass;
      if (all_pass) {
        ++passed_cases;
        ok &= expect(r.class_count_expected.has_value(),
                     "no expected class count despite full pass");
        if (r.class_count_expected) {
          Rational e = r.class_count_expected->reduced();
          ok &= expect(e.den == 1 && e.num == r.class_count_observed,
                       std::string(p.h) + " -> " + p.g +
                           ": class formula is not exact");
        }
        ok &= expect(v.value == VerdictValue::Localization,
                     "full pass must yield Localization");
      }
      if (std::string(p.h) == "A5" && std::string(p.g) == "A6")
        ok &= expect(all_pass && r.class_count_observed == 2,
                     "A5 -> A6 must pass with two classes");
      if (std::string(p.h) == "A6" && std::string(p.g) == "A7") {
        ok &= expect(!all_pass, "A6 -> A7 must not pass all conditions");
        Rational e = r.class_count_expected
                         ? r.class_count_expected->reduced()
                         : Rational{0, 1};
        ok &= expect(e.num == 1 && e.den == 2,
                     "A6 -> A7 expected class count is not 1/2");
      }
      if (!ok) return ok;
    }
  ok &= expect(done >= 100, "fewer than 100 cases ran");
  return ok & expect(passed_cases >= 60, "too few full-pass cases");
}

// 8e: conjugating an inner automorphism by any automorphism gives the inner
// automorphism of the image element, in the element-action realization.
bool suite_inner_square(std::mt19937_64& rng) {
  bool ok = true;
  for (const char* name : {"A5", "A6"}) {
    const GroupRecord& g = atlas().get(name);
    AutRep rep = aut_realization(g, true);
    ok &= expect(rep.mode == AutMode::action_on_elements,
                 "element action was not built");
    StabilizerChain cg = build_chain(g);
    for (int t = 0; t < 50; ++t) {
      Perm alpha = rep.realization.random_element(rng);
      Perm x = cg.random_element(rng);
      ok &= expect(inner_square_commutes(rep, alpha, x),
                   std::string("square fails on ") + name + " at case " +
                       std::to_string(t));
      if (!ok) return ok;
    }
  }
  return ok;
}

bool check_8() {
  std::mt19937_64 rng(0x676c6f63);
  bool ok = suite_chain_order(rng);
  ok = suite_mono_identity(rng) && ok;
  ok = suite_restriction(rng) && ok;
  ok = suite_class_formula(rng) && ok;
  ok = suite_inner_square(rng) && ok;
  return ok;
}

// 9: the bundled graph has one main component holding every group of the
// connectivity statement, the Monster is isolated, and the recorded zigzag
// runs through T, Ru, L2_13 and A14.
bool check_9() {
  const RigidGraph& g = bundled_graph();
  auto comps = g.components();
  bool ok = expect(!comps.empty(), "no components");
  const auto& main = comps.front();
  for (const char* name :
       {"A5",    "A6",    "A7",    "A14",   "A173067389", "L2_7",  "L2_8",
        "L2_11", "L2_13", "L2_32", "U3_3",  "U3_5",       "G2_3",  "G2_4",
        "G2_5",  "G2_11", "M11",   "M12",   "M22",        "M23",   "M24",
        "J1",    "J2",    "J3",    "J4",    "HS",         "McL",   "Co1",
        "Co2",   "Co3",   "Suz",   "He",    "Ru",         "Fi22",  "Fi23",
        "Fi24'", "HN",    "Ly",    "Th",    "B",          "ON",    "T",
        "L3_3",  "L3_5",  "L3_11", "L4_3",  "U4_2",       "U4_3",  "U5_2",
        "U6_2",  "S4_4",  "S6_2",  "S8_2",  "D4_2",       "D4_3",  "2D4_2",
        "2D5_2", "3D4_2", "F4_2",  "E6_4"}) {
    ok &= expect(std::binary_search(main.begin(), main.end(), name),
                 std::string("main component misses ") + name);
  }
  ok &= expect(g.component_of("M") == std::vector<std::string>{"M"},
               "the Monster is not isolated");
  auto z = g.path("A6", "A7");
  ok &= expect(z.has_value(), "no zigzag between A6 and A7");
  if (z)
    for (const char* stop : {"T", "Ru", "L2_13", "A14"})
      ok &= expect(std::find(z->nodes.begin(), z->nodes.end(), stop) !=
                       z->nodes.end(),
                   std::string("zigzag misses ") + stop);
  return ok;
}

// 10: stub pairs stay undecided with the metadata reason, with or without
// cross-checking; no route fabricates a verdict.
bool check_10() {
  const GroupRecord& he = atlas().get("He");
  const GroupRecord& fi = atlas().get("Fi24'");
  VerifyOutcome plain = is_localization(he, fi);
  bool ok = expect(plain.verdict.value == VerdictValue::Undecided,
                   "stub pair did not stay undecided");
  ok &= expect(plain.decisive.empty(), "a route claimed to decide");
  ok &= expect(
      plain.verdict.reason.find("asserted metadata") != std::string::npos,
      "reason does not mention asserted metadata");
  VerifyOptions cc;
  cc.cross_check = true;
  VerifyOutcome crossed = is_localization(he, fi, cc);
  ok &= expect(crossed.verdict.value == VerdictValue::Undecided,
               "cross-check fabricated a verdict");
  ok &= expect(crossed.decisive.empty(), "cross-check claimed a route");
  return ok;
}

struct Check {
  int id;
  const char* label;
  double budget_s;  // 0 = no explicit budget
  bool (*fn)();
};

const Check kChecks[] = {
    {1, "A5 -> A6 localization by the subgroup criterion and the counting oracle", 10, check_1},
    {2, "A6 -> A7 refuted with counting witness 10080 vs 5040", 60, check_2},
    {3, "A7 -> A8 localization via the maximal-subgroup route, cross-checked", 600, check_3},
    {4, "L2_8 -> A9: coset route and in-target criterion agree", 0, check_4},
    {5, "L2_7 Borel action into A8 fails least-index with an index-7 witness", 0, check_5},
    {6, "L2_13 -> A14 and M11 -> A11 decided inside the source group", 0, check_6},
    {7, "coset enumeration of A5: 60 and 5 cosets, deterministic across runs", 0, check_7},
    {8, "randomized property suites, 100 cases each (5 suites)", 0, check_8},
    {9, "bundled graph: one main component, Monster isolated, A6-A7 zigzag", 0, check_9},
    {10, "guarded stub pair He -> Fi24' stays undecided", 0, check_10},
};

}  // namespace

int main() {
  int failures = 0;
  for (const Check& c : kChecks) {
    notes.clear();
    bool ok = false;
    std::string error;
    auto t0 = Clock::now();
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      ok = false;
      notes.push_back("exceeded the " + std::to_string(c.budget_s) +
                      "s budget");
    }
    std::printf("%s %2d  %s  (%.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.label,
                secs);
    if (!error.empty()) std::printf("      threw: %s\n", error.c_str());
    for (const std::string& n : notes)
      std::printf("      %s\n", n.c_str());
    if (!ok) ++failures;
  }
  if (failures) {
    std::printf("acceptance: %d of 10 checks failed\n", failures);
    return 1;
  }
  std::printf("acceptance: 10/10 passed\n");
  return 0;
}
