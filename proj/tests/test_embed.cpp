#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "gloc/embed.hpp"

using namespace gloc;

namespace {

const Atlas& atlas() {
  static Atlas a = load_atlas(std::string(GLOC_DATA_DIR) + "/groups.atlas");
  return a;
}

const std::vector<Word>& stab_words(const char* name) {
  const GroupRecord& r = atlas().get(name);
  for (const auto& [sub_name, words] : r.subgroups)
    if (sub_name == "stab") return words;
  throw std::runtime_error("no stab subgroup recorded");
}

}  // namespace

TEST_CASE("the A5 point stabilizer gives the natural action") {
  const GroupRecord& H = atlas().get("A5");
  CosetEmbedding e = coset_embedding(H, stab_words("A5"));
  CHECK(e.degree == 5);
  CHECK(e.even);
  CHECK(e.images.size() == 2);
  CHECK(StabilizerChain::build(5, e.images).order() == 60);

  // Degree 5 is below the alternating threshold for the coset route.
  CHECK_THROWS_AS(check_largest_maximal(H, e), std::invalid_argument);
  Verdict v = verify_coset_edge(H, stab_words("A5"));
  CHECK(v.value == VerdictValue::Undecided);
  CHECK(v.report.sup == "A5");
  CHECK(v.report.route == Route::coset_embedding);
  CHECK(v.reason.find("below the alternating threshold") !=
        std::string::npos);
}

TEST_CASE("L2(13) on its Borel cosets passes both conditions") {
  const GroupRecord& H = atlas().get("L2_13");
  CosetEmbedding e = coset_embedding(H, stab_words("L2_13"));
  CHECK(e.degree == 14);
  CHECK(e.even);
  CHECK(StabilizerChain::build(14, e.images).order() == 1092);
  check_largest_maximal(H, e);
  CHECK(e.order_maximal.status == ConditionStatus::pass);
  CHECK(e.unique_index_class.status == ConditionStatus::pass);

  Verdict v = verify_coset_edge(H, stab_words("L2_13"));
  CHECK(v.value == VerdictValue::Localization);
  CHECK(v.report.sup == "A14");
  CHECK(v.report.provenance == ReportProvenance::derived);
  CHECK(v.reason == "cosets of a largest maximal subgroup, unique at index 14");
}

TEST_CASE("M11 on its smallest cosets passes both conditions") {
  const GroupRecord& H = atlas().get("M11");
  CosetEmbedding e = coset_embedding(H, stab_words("M11"));
  CHECK(e.degree == 11);
  CHECK(e.even);
  check_largest_maximal(H, e);
  CHECK(e.order_maximal.status == ConditionStatus::pass);
  CHECK(e.unique_index_class.status == ConditionStatus::pass);

  Verdict v = verify_coset_edge(H, stab_words("M11"));
  CHECK(v.value == VerdictValue::Localization);
  CHECK(v.report.sup == "A11");
}

TEST_CASE("L2(7) on its Borel cosets fails the least-index condition") {
  const GroupRecord& H = atlas().get("L2_7");
  CosetEmbedding e = coset_embedding(H, stab_words("L2_7"));
  CHECK(e.degree == 8);
  check_largest_maximal(H, e);
  CHECK(e.order_maximal.status == ConditionStatus::fail);
  CHECK(e.order_maximal.witness == "proper subgroup of index 7");
  CHECK(e.unique_index_class.status == ConditionStatus::pass);

  Verdict v = verify_coset_edge(H, stab_words("L2_7"));
  CHECK(v.value == VerdictValue::Undecided);
  CHECK(v.value != VerdictValue::NotLocalization);
  CHECK(v.reason == "proper subgroup of index 7");
}

TEST_CASE("L2(11) on its Borel cosets fails the least-index condition") {
  const GroupRecord& H = atlas().get("L2_11");
  CosetEmbedding e = coset_embedding(H, stab_words("L2_11"));
  CHECK(e.degree == 12);
  check_largest_maximal(H, e);
  CHECK(e.order_maximal.status == ConditionStatus::fail);
  CHECK(e.order_maximal.witness == "proper subgroup of index 11");

  Verdict v = verify_coset_edge(H, stab_words("L2_11"));
  CHECK(v.value == VerdictValue::Undecided);
}

TEST_CASE("L2(8) on its Borel cosets is accepted") {
  Verdict v = verify_coset_edge(atlas().get("L2_8"), stab_words("L2_8"));
  CHECK(v.value == VerdictValue::Localization);
  CHECK(v.report.sup == "A9");
  CHECK(v.report.provenance == ReportProvenance::derived);
}

TEST_CASE("U3(3) on its isotropic point cosets is accepted") {
  const GroupRecord& H = atlas().get("U3_3");
  CosetEmbedding e = coset_embedding(H, stab_words("U3_3"));
  CHECK(e.degree == 28);
  CHECK(e.even);
  check_largest_maximal(H, e);
  CHECK(e.order_maximal.status == ConditionStatus::pass);
  CHECK(e.unique_index_class.status == ConditionStatus::pass);

  Verdict v = verify_coset_edge(H, stab_words("U3_3"));
  CHECK(v.value == VerdictValue::Localization);
  CHECK(v.report.sup == "A28");
}

TEST_CASE("canonical relabeling identifies equivalent actions") {
  const std::vector<Perm>& nat = atlas().get("A5").generators;
  std::mt19937_64 rng(7);
  StabilizerChain s5 = symmetric_chain(5);
  for (int t = 0; t < 10; ++t) {
    Perm sigma = s5.random_element(rng);
    std::vector<Perm> moved;
    for (const Perm& g : nat) moved.push_back(g.conj(sigma));
    CHECK(detail::canonical_action(moved) == detail::canonical_action(nat));
  }

  // L2(7) has two inequivalent degree-7 actions, one per S4 class.
  auto tables = low_index_subgroups(atlas().get("L2_7").presentation, 7);
  std::vector<const CosetTable*> deg7;
  for (const auto& t : tables)
    if (t.n_cosets == 7) deg7.push_back(&t);
  REQUIRE(deg7.size() == 2);
  CHECK(detail::canonical_action(deg7[0]->action) !=
        detail::canonical_action(deg7[1]->action));
}

TEST_CASE("exhausted budgets come back undecided") {
  const GroupRecord& H = atlas().get("L2_13");
  CosetEmbedding e = coset_embedding(H, stab_words("L2_13"));
  check_largest_maximal(H, e, 5);
  CHECK(e.order_maximal.status == ConditionStatus::undecided);
  CHECK(e.unique_index_class.status == ConditionStatus::undecided);

  CHECK_THROWS_AS(coset_embedding(H, stab_words("L2_13"), 4), GuardError);
  Verdict v = verify_coset_edge(H, stab_words("L2_13"), 4);
  CHECK(v.value == VerdictValue::Undecided);
  CHECK(v.report.sup == "?");

  // Stub records cannot drive an enumeration.
  GroupRecord stub;
  stub.name = "ghost";
  stub.degree = 0;
  CHECK_THROWS_AS(coset_embedding(stub, {}), GuardError);
}
