// Move choice for an engine that plays through the reduction layer rather than a table, so
// it works at any height the closed forms cover.
#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ecn/errors.hpp"
#include "ecn/moves.hpp"
#include "ecn/position.hpp"
#include "ecn/reductions.hpp"
#include "ecn/ruleset.hpp"

namespace ecn {

struct PlayOptions {
  /// Refuse (with BudgetExceeded) to scan more successor positions than this per query.
  std::size_t max_successors = 2'000'000;
};

namespace detail {

inline void count_successor(std::size_t& seen, const PlayOptions& opts) {
  if (++seen > opts.max_successors)
    throw BudgetExceeded("more than " + std::to_string(opts.max_successors) + " successor positions to examine");
}

}  // namespace detail

/// From an N-position, the move to the lexicographically smallest P successor (the same choice
/// as the table-based winning_move); nothing from a P-position.
inline std::optional<Move> best_move(Resolver& resolver, const Ruleset& rules, const Position& pos,
                                     const PlayOptions& opts = {}) {
  if (resolver.resolve(rules, pos).outcome == Outcome::P) return std::nullopt;
  std::optional<Position> best;
  std::size_t seen = 0;
  for_each_move(rules, pos, [&](const Move& mv) {
    detail::count_successor(seen, opts);
    Position next = apply_move(pos, mv);
    if ((!best || next < *best) && resolver.resolve(rules, next).outcome == Outcome::P) best = std::move(next);
    return true;
  });
  if (!best) throw std::logic_error("N-position without a P successor at " + pos.to_string());
  return move_between(pos, *best);
}

/// Number of winning replies available to the player who moves from `pos`.
inline std::size_t winning_reply_count(Resolver& resolver, const Ruleset& rules, const Position& pos,
                                       std::size_t& seen, const PlayOptions& opts) {
  std::size_t n = 0;
  for_each_move(rules, pos, [&](const Move& mv) {
    detail::count_successor(seen, opts);
    if (resolver.resolve(rules, apply_move(pos, mv)).outcome == Outcome::P) ++n;
    return true;
  });
  return n;
}

/// The engine's move: a winning move when one exists; otherwise the legal move that leaves the
/// opponent the fewest winning replies, ties going to the lexicographically smallest result.
/// Throws IllegalMove from a terminal position.
inline Move engine_move(Resolver& resolver, const Ruleset& rules, const Position& pos, const PlayOptions& opts = {}) {
  if (pos.is_terminal()) throw IllegalMove("no legal moves: the position is terminal");
  if (auto mv = best_move(resolver, rules, pos, opts)) return *mv;
  std::optional<Position> best;
  std::size_t best_count = 0;
  std::size_t seen = 0;
  for_each_move(rules, pos, [&](const Move& mv) {
    detail::count_successor(seen, opts);
    Position next = apply_move(pos, mv);
    const std::size_t n = winning_reply_count(resolver, rules, next, seen, opts);
    if (!best || n < best_count || (n == best_count && next < *best)) {
      best = std::move(next);
      best_count = n;
    }
    return true;
  });
  return move_between(pos, *best);
}

}  // namespace ecn
