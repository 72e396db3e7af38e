#include <gtest/gtest.h>

#include <set>

#include "ecn/verify.hpp"

using namespace ecn;
using F = PredicateFamily;

TEST(VerifyPredicate, Ecn612_3PassesAtBoundFive) {
  const auto r = verify_predicate(Ruleset::ecn(6, {1, 2}, 3), PredicateId(F::ecn6123), 5);
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_EQ(r.positions_checked, 46656U);
  EXPECT_EQ(r.mismatch_count, 0U);
  EXPECT_EQ(r.method, "ECN6123");
  EXPECT_EQ(r.mode, "raw");
}

TEST(VerifyPredicate, BoundZeroChecksOnlyTheTerminal) {
  const auto r = verify_predicate(Ruleset::ecn(4, {1}, 2), PredicateId(F::cn42), 0);
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_EQ(r.positions_checked, 1U);
}

TEST(VerifyClaim, AlwaysPFailsWithTheSingleTokenPosition) {
  TableCache cache;
  const auto r = verify_claim(Ruleset::ecn(6, {1, 2}, 3), [](const Position&) { return Outcome::P; }, 1, "always P",
                              cache);
  EXPECT_EQ(r.status, Status::fail);
  EXPECT_EQ(r.positions_checked, 64U);
  EXPECT_EQ(r.mismatch_count, 56U);  // 0/1 positions: 8 P, e.g. {0,3} and {0,1,3,4} are not faces
  bool found = false;
  for (const auto& mm : r.mismatches) {
    found = found || mm.position == Position{1, 0, 0, 0, 0, 0};
    EXPECT_EQ(mm.claimed, Outcome::P);
    EXPECT_EQ(mm.truth, Outcome::N);
  }
  EXPECT_TRUE(found);
}

TEST(VerifyClaim, MismatchCapLimitsTheListNotTheCount) {
  TableCache cache;
  VerifyOptions opts;
  opts.mismatch_cap = 5;
  const auto r = verify_claim(Ruleset::ecn(6, {1, 2}, 3), [](const Position&) { return Outcome::N; }, 2, "always N",
                              cache, opts);
  EXPECT_EQ(r.mismatches.size(), 5U);
  EXPECT_GT(r.mismatch_count, 5U);
  // Sweep order is lexicographic, so the terminal position comes first.
  EXPECT_EQ(r.mismatches.front().position, Position::zeros(6));
}

TEST(VerifyClaim, CapacityProblemsAreIncompleteNotTruncated) {
  VerifyOptions opts;
  opts.solver.max_entries = 1000;
  TableCache cache(opts.solver);
  const auto r = verify_predicate(Ruleset::ecn(6, {1, 2}, 3), Predicate(PredicateId(F::ecn6123)), 5, cache, opts);
  EXPECT_EQ(r.status, Status::incomplete);
  EXPECT_EQ(r.positions_checked, 0U);
  EXPECT_FALSE(r.note.empty());
  EXPECT_FALSE(r.passed());
}

TEST(VerifyClaim, ThreadCountDoesNotChangeTheReport) {
  VerifyOptions one, four;
  one.solver.threads = 1;
  four.solver.threads = 4;
  const auto wrong = [](const Position& p) { return p.total() % 3 == 0 ? Outcome::P : Outcome::N; };
  TableCache c1(one.solver), c4(four.solver);
  const auto a = verify_claim(Ruleset::ecn(7, {1, 2}, 4), wrong, 3, "mod 3", c1, one);
  const auto b = verify_claim(Ruleset::ecn(7, {1, 2}, 4), wrong, 3, "mod 3", c4, four);
  EXPECT_EQ(a.to_json(false), b.to_json(false));
}

TEST(VerifyReduction, AuditsTheClassifiedChain) {
  TableCache cache;
  const auto r = verify_reduction(Ruleset::ecn(7, {2}, 4), 2, cache);
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_EQ(r.kind, "reduction");
  EXPECT_EQ(r.row, "Table 4: ECN(7_{2},i) (2<=i<=5)");
  EXPECT_EQ(r.method, "IsomorphicTo(ECN(7_{1},4), i -> 4i mod 7)");
}

TEST(VerifyEquivalence, GeneralizationInstances) {
  for (const auto& [gen, small] : generalization_instances()) {
    const auto r = verify_equivalence(gen, small, ruleset_for(small).piles(), 3);
    EXPECT_EQ(r.status, Status::pass) << r.method;
    EXPECT_EQ(r.kind, "generalization");
  }
  // Different sets are told apart.
  const auto bad = verify_equivalence(PredicateId(F::cn42), PredicateId(F::moore, 2), 4, 2);
  EXPECT_EQ(bad.status, Status::fail);
}

TEST(SumLaws, AllFourDecompositionsHoldAtBoundThree) {
  TableCache cache;
  const auto reports = verify_sum_laws(3, cache);
  ASSERT_EQ(reports.size(), 4U);
  for (const auto& r : reports) {
    EXPECT_EQ(r.status, Status::pass) << r.ruleset << " " << r.method;
    EXPECT_EQ(r.kind, "sum-law");
    EXPECT_GT(r.positions_checked, 0U);
  }
}

TEST(SumLaws, WrongDecompositionIsCaught) {
  TableCache cache;
  const Ruleset nim3 = Ruleset::moore(3, 1);
  // ECN(6_{1,2},2) is not a selective sum of its even and odd piles.
  const auto r =
      verify_selective_sum(Ruleset::ecn(6, {1, 2}, 2), {{{0, 2, 4}, nim3}, {{1, 3, 5}, nim3}}, 2, cache);
  EXPECT_EQ(r.status, Status::fail);
}

TEST(SelfConsistency, PassesOnBuiltTables) {
  TableCache cache;
  const auto r = verify_self_consistency(Ruleset::ecn(6, {1, 2}, 4), 3, cache, 2000);
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_EQ(r.positions_checked, 4096U + 2000U);
}

TEST(OrbitMode, AgreesWithRawModeAtBoundTwo) {
  VerifyOptions orbit;
  orbit.orbit = true;
  for (const auto& id : theorem_predicates()) {
    const Ruleset rules = ruleset_for(id);
    TableCache cache;
    const auto raw = verify_predicate(rules, Predicate(id), 2, cache);
    const auto orb = verify_predicate(rules, Predicate(id), 2, cache, orbit);
    EXPECT_EQ(raw.status, orb.status) << id.name();
    EXPECT_EQ(orb.mode, "orbit");
    EXPECT_LT(orb.positions_checked, raw.positions_checked);
    // The orbit sweep visits one position per dihedral orbit.
    std::set<Position> canon;
    const Box box = Box::cube(rules.piles(), 2);
    for (std::size_t i = 0; i < box.size(); ++i) canon.insert(canonical(box.position_at(i)));
    EXPECT_EQ(orb.positions_checked, canon.size()) << id.name();
    // Mutants of cyclic predicates stay dihedrally symmetric, so both modes must agree on them.
    if (!id.cyclic()) continue;
    for (const auto& mu : mutants_of(id)) {
      const auto a = verify_predicate(rules, mu.predicate, 2, cache);
      const auto b = verify_predicate(rules, mu.predicate, 2, cache, orbit);
      EXPECT_EQ(a.status, b.status) << mu.description;
    }
  }
}

TEST(OrbitMode, RejectsNonCircularRulesets) {
  VerifyOptions orbit;
  orbit.orbit = true;
  TableCache cache;
  EXPECT_THROW(verify_predicate(Ruleset::moore(4, 2), Predicate(PredicateId(F::moore, 2)), 1, cache, orbit),
               ValidationError);
}

TEST(Mutations, EveryNegatedClauseIsKilledAtBoundTwo) {
  TableCache cache;
  const auto s = run_mutations(MutationOperator::negate, 2, cache);
  EXPECT_EQ(s.total, 81U);
  EXPECT_EQ(s.killed, s.total);
  EXPECT_TRUE(s.survivors.empty());
}

TEST(Mutations, OneMutantPerClause) {
  for (const auto& id : theorem_predicates()) {
    std::size_t clauses = 0;
    for (const auto& alt : base_set(id).alternatives) clauses += alt.size();
    EXPECT_EQ(mutants_of(id).size(), clauses) << id.name();
    EXPECT_EQ(mutants_of(id, MutationOperator::drop).size(), clauses) << id.name();
  }
}

// Suite runs

TEST(VerifyAll, BoundZeroEverywherePasses) {
  SuiteOptions opts;
  opts.all_bounds = 0;
  const auto suite = verify_all(opts);
  EXPECT_TRUE(suite.passed());
  EXPECT_EQ(suite.count(Status::fail), 0U);
  EXPECT_GT(suite.count(Status::skipped), 0U);
}

TEST(VerifyAll, OneNegatedPredicateGivesExactlyOneFail) {
  SuiteOptions opts;
  opts.all_bounds = 2;
  const PredicateId id(F::ecn6132);
  const Predicate q(id);
  opts.claim_overrides["ECN(6_{1,3},2)"] = [q](const Position& p) { return q(p).is_p ? Outcome::N : Outcome::P; };
  const auto suite = verify_all(opts);
  EXPECT_FALSE(suite.passed());
  ASSERT_EQ(suite.count(Status::fail), 1U);
  for (const auto& r : suite.items)
    if (r.status == Status::fail) EXPECT_EQ(r.ruleset, "ECN(6_{1,3},2)");
}

TEST(VerifyAll, CoverageListsEveryRowOnceWithATag) {
  SuiteOptions opts;
  opts.all_bounds = 1;
  opts.generalizations = false;
  opts.sum_laws = false;
  const auto suite = verify_all(opts);
  std::set<std::string> seen;
  for (const auto& c : suite.coverage) {
    EXPECT_TRUE(seen.insert(c.row).second) << "row listed twice: " << c.row;
    EXPECT_TRUE(c.tag == "verified" || c.tag == "reduced" || c.tag == "unsolved-skipped") << c.tag;
    EXPECT_GT(c.items, 0U);
  }
  const auto labels = all_row_labels();
  EXPECT_EQ(seen, std::set<std::string>(labels.begin(), labels.end()));
  // One item per (m, S, k) with 4 <= m <= 8.
  std::size_t expected = 0;
  for (int m = 4; m <= 8; ++m) expected += step_sets(m).size() * static_cast<std::size_t>(m);
  EXPECT_EQ(suite.items.size(), expected);
}

TEST(VerifyAll, DeterministicModuloTiming) {
  SuiteOptions opts;
  opts.all_bounds = 2;
  opts.max_piles = 6;
  const auto a = verify_all(opts);
  const auto b = verify_all(opts);
  EXPECT_EQ(suite_to_json(a, false).dump(), suite_to_json(b, false).dump());
  EXPECT_EQ(export_report(a.items, ReportFormat::csv, false), export_report(b.items, ReportFormat::csv, false));
  EXPECT_EQ(export_report(a.items, ReportFormat::json, false), export_report(b.items, ReportFormat::json, false));
}

// Export

TEST(Export, JsonPassReport) {
  const auto r = verify_predicate(Ruleset::ecn(4, {1}, 2), PredicateId(F::cn42), 2);
  const auto doc = nlohmann::json::parse(export_report({r}, ReportFormat::json));
  ASSERT_TRUE(doc.is_array());
  ASSERT_EQ(doc.size(), 1U);
  EXPECT_EQ(doc[0].at("status"), "PASS");
  EXPECT_EQ(doc[0].at("positions_checked"), 81);
  // Stable field order.
  std::vector<std::string> keys;
  const auto json = r.to_json();
  for (auto it = json.begin(); it != json.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"ruleset", "method", "kind", "row", "bound", "mode", "positions_checked",
                                            "mismatch_count", "mismatches", "status", "wall_time"}));
}

TEST(Export, CsvRowCarriesMismatchPositions) {
  TableCache cache;
  const auto r = verify_claim(Ruleset::ecn(6, {1, 2}, 3), [](const Position&) { return Outcome::P; }, 1, "always P",
                              cache);
  const std::string csv = export_report({r}, ReportFormat::csv);
  EXPECT_EQ(csv.rfind("ruleset,method,kind,row,bound,mode,positions_checked,mismatch_count,status,wall_time,mismatches\n",
                      0),
            0U);
  EXPECT_NE(csv.find("0,1,0,0,0,0"), std::string::npos);
  EXPECT_NE(csv.find("\"ECN(6_{1,2},3)\""), std::string::npos);
  EXPECT_NE(csv.find(",FAIL,"), std::string::npos);
}

TEST(Export, EmptyListGivesEmptyArrayAndHeaderOnlyCsv) {
  EXPECT_EQ(nlohmann::json::parse(export_report({}, ReportFormat::json)), nlohmann::json::array());
  EXPECT_EQ(export_report({}, ReportFormat::csv),
            "ruleset,method,kind,row,bound,mode,positions_checked,mismatch_count,status,wall_time,mismatches\n");
}

TEST(Export, JsonMismatchEntries) {
  TableCache cache;
  const auto r = verify_claim(Ruleset::ecn(4, {1}, 2), [](const Position&) { return Outcome::N; }, 0, "always N",
                              cache);
  const auto j = r.to_json();
  ASSERT_EQ(j.at("mismatches").size(), 1U);
  EXPECT_EQ(j.at("mismatches")[0].at("position"), "0,0,0,0");
  EXPECT_EQ(j.at("mismatches")[0].at("claim"), "N");
  EXPECT_EQ(j.at("mismatches")[0].at("oracle"), "P");
  EXPECT_EQ(j.at("status"), "FAIL");
}
