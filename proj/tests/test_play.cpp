#include <gtest/gtest.h>

#include <random>

#include "ecn/play.hpp"

using namespace ecn;

namespace {

Position random_position(std::mt19937& rng, int m, Height bound) {
  std::uniform_int_distribution<Height> h(0, bound);
  Position p = Position::zeros(m);
  for (int i = 0; i < m; ++i) p[i] = h(rng);
  return p;
}

}  // namespace

TEST(BestMove, MatchesTheTableChoice) {
  TableCache cache;
  Resolver resolver(cache, 3);
  for (const auto& r : {Ruleset::ecn(6, {1, 2}, 3), Ruleset::ecn(5, {1}, 2), Ruleset::ecn(6, {1, 2, 3}, 3)}) {
    const auto t = build_tables(r, 2);
    for (std::size_t i = 0; i < t.outcomes.size(); ++i) {
      const Position p = t.outcomes.box().position_at(i);
      EXPECT_EQ(best_move(resolver, r, p), winning_move(t.outcomes, p)) << r.to_string() << " " << p.to_string();
    }
  }
}

TEST(BestMove, WorksOnTallPositionsThroughClosedForms) {
  TableCache cache;
  Resolver resolver(cache, 2);
  const auto r = Ruleset::ecn(6, {1, 2}, 3);
  const Position p{20, 3, 7, 19, 3, 7};
  auto mv = best_move(resolver, r, p);
  ASSERT_TRUE(mv);
  EXPECT_EQ(apply_move(p, *mv), (Position{19, 3, 7, 19, 3, 7}));
}

TEST(BestMove, SuccessorBudget) {
  TableCache cache;
  Resolver resolver(cache, 2);
  PlayOptions tight;
  tight.max_successors = 10;
  EXPECT_THROW(best_move(resolver, Ruleset::ecn(6, {1, 2}, 3), Position{20, 3, 7, 19, 3, 8}, tight), BudgetExceeded);
}

TEST(EngineMove, WinsFromEveryNPosition) {
  std::mt19937 rng(99);
  TableCache cache;
  Resolver resolver(cache, 4);
  for (const auto& r : {Ruleset::ecn(6, {1, 2}, 3), Ruleset::ecn(7, {1, 2}, 5)}) {
    for (int game = 0; game < 30; ++game) {
      Position p = random_position(rng, r.piles(), 3);
      if (resolver.resolve(r, p).outcome == Outcome::P) continue;
      // Engine to move from N; the human answers with random legal moves.
      while (!p.is_terminal()) {
        ASSERT_EQ(resolver.resolve(r, p).outcome, Outcome::N);
        p = apply_move(p, engine_move(resolver, r, p));
        ASSERT_EQ(resolver.resolve(r, p).outcome, Outcome::P) << r.to_string();
        if (p.is_terminal()) break;
        const auto moves = legal_moves(r, p);
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        p = apply_move(p, moves[pick(rng)]);
      }
    }
  }
}

TEST(EngineMove, BestResistanceFromAPPosition) {
  TableCache cache;
  Resolver resolver(cache, 3);
  const auto r = Ruleset::ecn(4, {1}, 2);
  const Position p{1, 1, 1, 1};  // P: n_0 = n_2 and n_1 = n_3
  ASSERT_EQ(resolver.resolve(r, p).outcome, Outcome::P);
  const Move mv = engine_move(resolver, r, p);
  const Position chosen = apply_move(p, mv);
  std::size_t seen = 0;
  const std::size_t chosen_count = winning_reply_count(resolver, r, chosen, seen, {});
  for (const auto& q : successors(r, p)) {
    const std::size_t n = winning_reply_count(resolver, r, q, seen, {});
    EXPECT_TRUE(n > chosen_count || (n == chosen_count && !(q < chosen))) << q.to_string();
  }
}

TEST(EngineMove, TerminalPositionIsIllegal) {
  TableCache cache;
  Resolver resolver(cache, 3);
  EXPECT_THROW(engine_move(resolver, Ruleset::ecn(4, {1}, 2), Position::zeros(4)), IllegalMove);
}
