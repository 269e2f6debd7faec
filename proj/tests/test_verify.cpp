#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "gloc/verify.hpp"

using namespace gloc;

namespace {

const Atlas& atlas() {
  static Atlas a = load_atlas(std::string(GLOC_DATA_DIR) + "/groups.atlas");
  return a;
}

GroupRecord stub(const char* name, const char* order) {
  GroupRecord g;
  g.name = name;
  g.meta_order = {order, Provenance::asserted};
  return g;
}

}  // namespace

TEST_CASE("alternating targets take the coset route") {
  VerifyOutcome m11 = is_localization(atlas().get("M11"), atlas().get("A11"));
  CHECK(m11.verdict.value == VerdictValue::Localization);
  CHECK(m11.verdict.report.route == Route::coset_embedding);
  CHECK(m11.verdict.report.sup == "A11");
  REQUIRE(m11.decisive.size() == 1);
  CHECK(m11.decisive[0] == Route::coset_embedding);

  VerifyOutcome l28 = is_localization(atlas().get("L2_8"), atlas().get("A9"));
  CHECK(l28.verdict.value == VerdictValue::Localization);
  CHECK(l28.verdict.report.route == Route::coset_embedding);

  VerifyOutcome l213 =
      is_localization(atlas().get("L2_13"), atlas().get("A14"));
  CHECK(l213.verdict.value == VerdictValue::Localization);
  CHECK(l213.verdict.report.route == Route::coset_embedding);
  CHECK(l213.verdict.report.provenance == ReportProvenance::derived);
}

TEST_CASE("the counting route decides pairs the coset route cannot") {
  // A5's recorded stabilizer has index 5, so no coset route lands in A6.
  VerifyOutcome a5 = is_localization(atlas().get("A5"), atlas().get("A6"));
  CHECK(a5.verdict.value == VerdictValue::Localization);
  CHECK(a5.verdict.report.route == Route::oracle);
  CHECK(a5.verdict.report.mono_count == 1440);
  REQUIRE(a5.decisive.size() == 1);
  CHECK(a5.decisive[0] == Route::oracle);

  VerifyOutcome a6 = is_localization(atlas().get("A6"), atlas().get("A7"));
  CHECK(a6.verdict.value == VerdictValue::NotLocalization);
  CHECK(a6.verdict.report.route == Route::oracle);
  CHECK(a6.verdict.reason ==
        "counted 10080 monomorphisms, automorphism order is 5040");
}

TEST_CASE("the counting route overrides a failed coset attempt") {
  // The Borel route out of L2(7) stalls on the index 7 subgroup, but the
  // pair is small enough to count directly: 240 copies fixing a point and
  // 120 transitive ones give 360 * 336 monomorphisms against |Aut| 40320.
  VerifyOutcome v = is_localization(atlas().get("L2_7"), atlas().get("A8"));
  CHECK(v.verdict.value == VerdictValue::NotLocalization);
  CHECK(v.verdict.report.route == Route::oracle);
  CHECK(v.verdict.report.mono_count == 120960);
  CHECK(v.verdict.report.aut_order_sup == 40320);
}

TEST_CASE("cross-check requires every decisive route to agree") {
  VerifyOptions opt;
  opt.cross_check = true;
  VerifyOutcome v =
      is_localization(atlas().get("A5"), atlas().get("A6"), opt);
  CHECK(v.verdict.value == VerdictValue::Localization);
  CHECK(v.verdict.report.route == Route::maximal_subgroup);
  CHECK(v.verdict.report.class_count_observed == 2);
  REQUIRE(v.decisive.size() == 2);
  CHECK(v.decisive[0] == Route::maximal_subgroup);
  CHECK(v.decisive[1] == Route::oracle);
}

TEST_CASE("cross-check keeps the coset verdict when guards stop the rest") {
  VerifyOptions opt;
  opt.cross_check = true;
  VerifyOutcome v =
      is_localization(atlas().get("L2_13"), atlas().get("A14"), opt);
  CHECK(v.verdict.value == VerdictValue::Localization);
  CHECK(v.verdict.report.route == Route::coset_embedding);
  REQUIRE(v.decisive.size() == 1);
  CHECK(v.decisive[0] == Route::coset_embedding);
}

TEST_CASE("pairs beyond every guard come back undecided") {
  VerifyOutcome v = is_localization(atlas().get("A5"), atlas().get("A11"));
  CHECK(v.verdict.value == VerdictValue::Undecided);
  CHECK(v.decisive.empty());
  CHECK(v.verdict.reason.find("exceeds") != std::string::npos);
}

TEST_CASE("a stub alternating target still reports the coset failure") {
  GroupRecord a8 = stub("A8", "20160");
  VerifyOutcome v = is_localization(atlas().get("L2_7"), a8);
  CHECK(v.verdict.value == VerdictValue::Undecided);
  CHECK(v.verdict.report.route == Route::coset_embedding);
  CHECK(v.verdict.reason == "proper subgroup of index 7");
  CHECK(v.decisive.empty());

  // A stub that matches the coset degree is decided without touching it.
  GroupRecord a14 = stub("A14", "43589145600");
  VerifyOutcome ok = is_localization(atlas().get("L2_13"), a14);
  CHECK(ok.verdict.value == VerdictValue::Localization);
  CHECK(ok.verdict.report.route == Route::coset_embedding);
}

TEST_CASE("stub pairs stay undecided with the metadata reason") {
  GroupRecord he = stub("He", "4030387200");
  GroupRecord fi = stub("Fi24'", "1255205709190661721292800");
  VerifyOutcome v = is_localization(he, fi);
  CHECK(v.verdict.value == VerdictValue::Undecided);
  CHECK(v.decisive.empty());
  CHECK(v.verdict.reason.rfind("asserted metadata only", 0) == 0);
}

TEST_CASE("option budgets reach the coset route") {
  VerifyOptions opt;
  opt.max_cosets = 4;
  VerifyOutcome v =
      is_localization(atlas().get("M11"), atlas().get("A11"), opt);
  CHECK(v.verdict.value == VerdictValue::Undecided);
  CHECK(v.decisive.empty());
}

TEST_CASE("target bounds gate the in-target routes") {
  // A6 in its natural degree-6 action is pushed out of reach.
  VerifyOptions tight;
  tight.max_degree = 5;
  VerifyOutcome v = is_localization(atlas().get("A5"), atlas().get("A6"), tight);
  CHECK(v.verdict.value == VerdictValue::Undecided);
  CHECK(v.decisive.empty());
  CHECK(v.verdict.reason ==
        "target degree 6 exceeds configured bound 5");

  VerifyOptions small;
  small.max_order = 100;
  VerifyOutcome w =
      is_localization(atlas().get("A5"), atlas().get("A6"), small);
  CHECK(w.verdict.value == VerdictValue::Undecided);
  CHECK(w.verdict.reason ==
        "target order 360 exceeds configured bound 100");

  // The coset route never inspects the target, so it still decides.
  VerifyOutcome c =
      is_localization(atlas().get("L2_13"), atlas().get("A14"), tight);
  CHECK(c.verdict.value == VerdictValue::Localization);
  CHECK(c.verdict.report.route == Route::coset_embedding);

  // Cross-check under a breached bound keeps the coset verdict alone.
  VerifyOptions both = tight;
  both.cross_check = true;
  VerifyOutcome x =
      is_localization(atlas().get("L2_13"), atlas().get("A14"), both);
  CHECK(x.verdict.value == VerdictValue::Localization);
  REQUIRE(x.decisive.size() == 1);
  CHECK(x.decisive[0] == Route::coset_embedding);
}
