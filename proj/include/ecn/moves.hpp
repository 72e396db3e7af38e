// Move generation.
#pragma once

#include <cstdint>
#include <vector>

#include "ecn/position.hpp"
#include "ecn/ruleset.hpp"

namespace ecn {

/// Streams every legal move from `pos`. Each face of the complex is visited once, in mask
/// order, and every supported pile loses between 1 and its height, so no move (and no
/// successor position) is produced twice. `visit(const Move&)` returns false to stop early;
/// the function returns false iff it was stopped.
template <class Visit>
bool for_each_move(const Ruleset& rules, const Position& pos, Visit&& visit) {
  check_position(rules, pos);
  const auto m = static_cast<std::size_t>(pos.size());
  Move mv;
  mv.amounts.assign(m, 0);
  std::vector<int> idx;
  for (Face face : rules.faces()) {
    idx = face.indices();
    bool playable = true;
    for (int i : idx) playable = playable && pos[i] > 0;
    if (!playable) continue;
    mv.support = face;
    for (int i : idx) mv.amounts[static_cast<std::size_t>(i)] = 1;
    while (true) {
      if (!visit(static_cast<const Move&>(mv))) {
        return false;
      }
      // Odometer over the supported piles, last index fastest.
      std::size_t d = idx.size();
      while (d > 0) {
        auto i = static_cast<std::size_t>(idx[d - 1]);
        if (mv.amounts[i] < pos[idx[d - 1]]) {
          ++mv.amounts[i];
          break;
        }
        mv.amounts[i] = 1;
        --d;
      }
      if (d == 0) break;
    }
    for (int i : idx) mv.amounts[static_cast<std::size_t>(i)] = 0;
  }
  return true;
}

inline std::vector<Move> legal_moves(const Ruleset& rules, const Position& pos) {
  std::vector<Move> out;
  for_each_move(rules, pos, [&](const Move& mv) {
    out.push_back(mv);
    return true;
  });
  return out;
}

/// Every successor position, in the same order as `for_each_move`.
inline std::vector<Position> successors(const Ruleset& rules, const Position& pos) {
  std::vector<Position> out;
  for_each_move(rules, pos, [&](const Move& mv) {
    out.push_back(apply_move(pos, mv));
    return true;
  });
  return out;
}

}  // namespace ecn
