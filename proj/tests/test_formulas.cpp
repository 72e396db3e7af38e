#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ecn/formulas.hpp"
#include "ecn/solver.hpp"
#include "ecn/verify.hpp"
#include "oracle.hpp"

using namespace ecn;
using F = PredicateFamily;

namespace {

oracle::Heights heights(const Position& p) { return oracle::Heights(p.begin(), p.end()); }

Position random_position(std::mt19937& rng, int m, Height bound) {
  std::uniform_int_distribution<Height> h(0, bound);
  Position p = Position::zeros(m);
  for (int i = 0; i < m; ++i) p[i] = h(rng);
  return p;
}

int arity_of(const PredicateId& id) { return id.arity().value_or(5); }

}  // namespace

TEST(PredicateId, ParseAndName) {
  EXPECT_EQ(PredicateId::parse("ECN7125").family(), F::ecn7125);
  EXPECT_EQ(PredicateId::parse("MOORE(3)").param(), 3);
  EXPECT_EQ(PredicateId::parse(" GEN_EVEN_K2( 4 ) ").name(), "GEN_EVEN_K2(4)");
  for (const auto& id : theorem_predicates()) EXPECT_EQ(PredicateId::parse(id.name()), id);
  EXPECT_THROW(PredicateId::parse("ECN9999"), ValidationError);
  EXPECT_THROW(PredicateId::parse("MOORE"), ValidationError);
  EXPECT_THROW(PredicateId::parse("CN42(2)"), ValidationError);
  EXPECT_THROW(PredicateId::parse("GEN_ODD_PRIME(4)"), ValidationError);  // 9 is not prime
  EXPECT_THROW(PredicateId::parse("MOORE(x)"), ValidationError);
}

TEST(PredicateId, PlainAndCyclicFamilies) {
  for (auto f : {F::ecn6122, F::ecn6123, F::ecn6132, F::ecn8132, F::ecn8134, F::ecn8136, F::nim_xor})
    EXPECT_FALSE(PredicateId(f).cyclic());
  EXPECT_FALSE(PredicateId(F::moore, 2).cyclic());
  for (auto f : {F::cn42, F::cn52, F::cn53, F::cn63, F::cn64, F::cn74, F::cn86, F::ecn6124, F::ecn6233, F::ecn7124,
                 F::ecn7125, F::ecn81236})
    EXPECT_TRUE(PredicateId(f).cyclic());
}

TEST(CyclicClosure, Cn53ExampleAlignsTheZero) {
  const BaseSet base = base_set(PredicateId(F::cn53));
  const auto r = cyclic_closure([&](Piles n) { return base.contains(n); }, Position{3, 0, 3, 2, 1});
  EXPECT_TRUE(r.is_p);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(base.contains(dihedral_images(Position{3, 0, 3, 2, 1})[static_cast<std::size_t>(*r.witness)].piles()));
  EXPECT_FALSE(base.contains(Position{3, 0, 3, 2, 1}.piles()));
}

TEST(CyclicClosure, AllZeroMatchesIffBaseAcceptsIt) {
  for (const auto& id : theorem_predicates()) {
    const BaseSet base = base_set(id);
    const Position zero = Position::zeros(arity_of(id));
    EXPECT_EQ(cyclic_closure([&](Piles n) { return base.contains(n); }, zero).is_p, base.contains(zero.piles()));
    EXPECT_TRUE(eval_predicate(id, zero).is_p) << id.name() << ": terminal position must be P";
  }
}

TEST(CyclicClosure, Cn52ExampleAgreesWithOracle) {
  const Position p{4, 1, 2, 3, 1};
  oracle::Solver o(oracle::ecn(5, {1}, 2));
  const bool truth = o.is_p(heights(p));
  EXPECT_TRUE(truth);  // frozen from the oracle
  EXPECT_EQ(eval_predicate(PredicateId(F::cn52), p).is_p, truth);
}

TEST(EvalPredicate, Examples) {
  EXPECT_TRUE(eval_predicate(PredicateId(F::ecn7125), Position{0, 4, 4, 1, 3, 4, 4}).is_p);
  EXPECT_TRUE(eval_predicate(PredicateId(F::ecn6122), Position{5, 6, 3, 1, 2, 7}).is_p);
  EXPECT_TRUE(eval_predicate(PredicateId(F::moore, 3), Position{2, 2, 2, 2}).is_p);
  EXPECT_FALSE(eval_predicate(PredicateId(F::moore, 3), Position{2, 2, 2, 0}).is_p);
  EXPECT_TRUE(eval_predicate(PredicateId(F::nim_xor), Position{1, 2, 3}).is_p);
  EXPECT_FALSE(eval_predicate(PredicateId(F::nim_xor), Position{1, 2, 2}).is_p);
  EXPECT_TRUE(eval_predicate(PredicateId(F::cn42), Position{2, 3, 2, 3}).is_p);
  EXPECT_TRUE(eval_predicate(PredicateId(F::ecn6132), Position{1, 2, 3, 1, 2, 3}).is_p);
}

TEST(EvalPredicate, Ecn81236ExcludesAllEqualPairs) {
  for (Height c = 1; c <= 5; ++c) {
    EXPECT_FALSE(eval_predicate(PredicateId(F::ecn81236), Position{c, c, c, c, c, c, c, c}).is_p) << c;
    // n_0 = n_2 = n_4 = n_6 = 4c with c on one odd pile is in the set.
    EXPECT_TRUE(eval_predicate(PredicateId(F::ecn81236), Position{c, 0, c, 0, c, 0, c, c}).is_p) << c;
  }
}

TEST(EvalPredicate, ExamplesAgreeWithOracle) {
  struct Case {
    F family;
    oracle::Game game;
    Position pos;
  };
  const std::vector<Case> cases = {
      {F::ecn7125, oracle::ecn(7, {1, 2}, 5), Position{0, 4, 4, 1, 3, 4, 4}},
      {F::ecn6122, oracle::ecn(6, {1, 2}, 2), Position{5, 6, 3, 1, 2, 7}},
      {F::cn74, oracle::ecn(7, {1}, 4), Position{1, 1, 2, 2, 3, 2, 2}},
      {F::ecn6132, oracle::ecn(6, {1, 3}, 2), Position{1, 2, 3, 1, 2, 3}},
  };
  for (const auto& c : cases) {
    oracle::Solver o(c.game);
    EXPECT_EQ(eval_predicate(PredicateId(c.family), c.pos).is_p, o.is_p(heights(c.pos)))
        << PredicateId(c.family).name() << " " << c.pos.to_string();
  }
}

TEST(EvalPredicate, Cn74AgreesWithOracleAtBoundThree) {
  oracle::Solver o(oracle::ecn(7, {1}, 4));
  const Predicate q(PredicateId(F::cn74));
  oracle::for_each_position(7, 3, [&](const oracle::Heights& h) {
    const Position p(std::vector<Height>(h.begin(), h.end()));
    ASSERT_EQ(q(p).is_p, o.is_p(h)) << p.to_string();
  });
}

TEST(EvalPredicate, ArityMismatchIsAValidationError) {
  EXPECT_THROW(eval_predicate(PredicateId(F::ecn7125), Position{1, 2, 3}), ValidationError);
  EXPECT_THROW(eval_predicate(PredicateId(F::gen_even_k2, 3), Position{1, 2, 3, 4}), ValidationError);
  EXPECT_NO_THROW(eval_predicate(PredicateId(F::nim_xor), Position{1, 2, 3, 4, 5}));
}

TEST(PredicateFor, Examples) {
  EXPECT_EQ(predicate_for(Ruleset::ecn(6, {1, 2}, 2)), PredicateId(F::ecn6122));
  EXPECT_FALSE(predicate_for(Ruleset::ecn(8, {1, 2}, 3)));
  EXPECT_EQ(predicate_for(Ruleset::ecn(7, {1, 2}, 5)), PredicateId(F::ecn7125));
  EXPECT_EQ(predicate_for(Ruleset::ecn(11, {1, 2, 3, 4}, 9)), PredicateId(F::gen_odd_prime, 5));
  EXPECT_EQ(predicate_for(Ruleset::ecn(10, {1, 3, 5}, 2)), PredicateId(F::gen_even_k2, 5));
  EXPECT_EQ(predicate_for(Ruleset::ecn(12, {1, 3, 5}, 2)), PredicateId(F::gen_even_k2, 6));
  EXPECT_EQ(predicate_for(Ruleset::ecn(16, {1, 3, 5, 7}, 14)), PredicateId(F::gen_pow2, 4));
  EXPECT_FALSE(predicate_for(Ruleset::ecn(9, {1, 2, 3}, 7)));  // 9 is not prime
}

TEST(PredicateFor, RulesetForIsItsInverse) {
  for (const auto& id : theorem_predicates()) EXPECT_EQ(predicate_for(ruleset_for(id)), id) << id.name();
}

// Properties

TEST(Properties, ClosureSoundness) {
  std::mt19937 rng(17);
  for (const auto& id : theorem_predicates()) {
    if (!id.cyclic()) continue;
    const BaseSet base = base_set(id);
    const int m = arity_of(id);
    for (int trial = 0; trial < 3000; ++trial) {
      // Small heights make P-positions common enough to exercise both directions.
      const Position p = random_position(rng, m, trial % 2 ? 2 : 4);
      bool any = false;
      for (const auto& img : dihedral_images(p)) any = any || base.contains(img.piles());
      ASSERT_EQ(eval_predicate(id, p).is_p, any) << id.name() << " " << p.to_string();
    }
  }
}

TEST(Properties, WitnessValidity) {
  for (const auto& id : theorem_predicates()) {
    if (!id.cyclic()) continue;
    const BaseSet base = base_set(id);
    const int m = arity_of(id);
    const Predicate q(id);
    std::size_t witnessed = 0;
    oracle::for_each_position(m, m <= 6 ? 3 : 2, [&](const oracle::Heights& h) {
      const Position p(std::vector<Height>(h.begin(), h.end()));
      const auto r = q(p);
      ASSERT_EQ(r.is_p, r.witness.has_value()) << id.name();
      if (!r.witness) return;
      const auto imgs = dihedral_images(p);
      ASSERT_TRUE(base.contains(imgs.at(static_cast<std::size_t>(*r.witness)).piles())) << id.name() << p.to_string();
      // The witness is the first accepting image in scan order.
      for (int i = 0; i < *r.witness; ++i) ASSERT_FALSE(base.contains(imgs[static_cast<std::size_t>(i)].piles()));
      ++witnessed;
    });
    EXPECT_GT(witnessed, 0U) << id.name();
  }
}

TEST(Properties, GeneralizationConsistencyAtBoundThree) {
  for (const auto& [gen, specific] : generalization_instances()) {
    const int m = *gen.arity();
    const Predicate a(gen);
    const Predicate b(specific);
    std::size_t n = 0;
    oracle::for_each_position(m, 3, [&](const oracle::Heights& h) {
      const Position p(std::vector<Height>(h.begin(), h.end()));
      ASSERT_EQ(a(p).is_p, b(p).is_p) << gen.name() << " vs " << specific.name() << " at " << p.to_string();
      ++n;
    });
    EXPECT_EQ(n, static_cast<std::size_t>(std::pow(4, m)));
  }
}

TEST(Properties, GeneralizationsBeyondTheTablesAgreeWithOracle) {
  // Instances with no tabulated counterpart, checked directly against the reference solver.
  struct Case {
    PredicateId id;
    int bound;
  };
  for (const auto& c : {Case{PredicateId(F::gen_odd_prime, 3), 3}, Case{PredicateId(F::gen_even_k2, 5), 2},
                        Case{PredicateId(F::gen_odd_prime, 5), 1}}) {
    const Ruleset r = ruleset_for(c.id);
    oracle::Solver o(oracle::ecn(r.piles(), r.steps(), r.max_select()));
    const Predicate q(c.id);
    oracle::for_each_position(r.piles(), c.bound, [&](const oracle::Heights& h) {
      const Position p(std::vector<Height>(h.begin(), h.end()));
      ASSERT_EQ(q(p).is_p, o.is_p(h)) << c.id.name() << " " << p.to_string();
    });
  }
}

TEST(Properties, OracleEquivalenceAtReducedBounds) {
  // The full-bound run is part of the acceptance binary; this keeps a fast copy in the unit suite.
  for (const auto& id : theorem_predicates()) {
    const Ruleset r = ruleset_for(id);
    const auto t = build_tables(r, r.piles() <= 6 ? 3 : 2);
    const Predicate q(id);
    for (std::size_t i = 0; i < t.outcomes.size(); ++i) {
      const Position p = t.outcomes.box().position_at(i);
      ASSERT_EQ(q(p).is_p, t.outcomes.at_index(i) == Outcome::P) << id.name() << " " << p.to_string();
    }
  }
}
