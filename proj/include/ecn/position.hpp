// Positions, moves, and the dihedral symmetry of a circle of piles.
#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecn/errors.hpp"
#include "ecn/ruleset.hpp"

namespace ecn {

using Height = std::uint64_t;

/// Heights are capped so that the sum of up to kMaxPiles piles cannot overflow 64 bits.
inline constexpr Height kMaxHeight = Height{1} << 56;

/// Token counts (n_0, ..., n_{m-1}).
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<Height> piles) : piles_(piles) {}
  explicit Position(std::vector<Height> piles) : piles_(std::move(piles)) {}
  static Position zeros(int m) { return Position(std::vector<Height>(static_cast<std::size_t>(m), 0)); }

  int size() const noexcept { return static_cast<int>(piles_.size()); }
  Height operator[](int i) const { return piles_[static_cast<std::size_t>(i)]; }
  Height& operator[](int i) { return piles_[static_cast<std::size_t>(i)]; }
  std::span<const Height> piles() const noexcept { return piles_; }
  auto begin() const noexcept { return piles_.begin(); }
  auto end() const noexcept { return piles_.end(); }

  Height total() const noexcept { return std::accumulate(piles_.begin(), piles_.end(), Height{0}); }
  Height max() const noexcept { return piles_.empty() ? 0 : *std::max_element(piles_.begin(), piles_.end()); }
  bool is_terminal() const noexcept {
    return std::all_of(piles_.begin(), piles_.end(), [](Height h) { return h == 0; });
  }

  /// Comma-separated heights, e.g. "0,4,4,1,3,4,4".
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < piles_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(piles_[i]);
    }
    return s;
  }

  friend auto operator<=>(const Position&, const Position&) = default;

 private:
  std::vector<Height> piles_;
};

/// Parses "3, 4,5" style positions. Whitespace is ignored.
inline Position parse_position(std::string_view text) {
  std::string buf;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') buf += c;
  if (buf.empty()) throw ValidationError("empty position");
  std::vector<Height> piles;
  std::size_t pos = 0;
  while (true) {
    Height value = 0;
    auto begin = buf.data() + pos;
    auto [ptr, ec] = std::from_chars(begin, buf.data() + buf.size(), value);
    if (ec != std::errc{} || ptr == begin)
      throw ValidationError("cannot parse position \"" + buf + "\": expected a nonnegative integer at offset " +
                            std::to_string(pos));
    if (value >= kMaxHeight) throw ValidationError("pile height " + std::to_string(value) + " is too large");
    piles.push_back(value);
    pos = static_cast<std::size_t>(ptr - buf.data());
    if (pos == buf.size()) break;
    if (buf[pos] != ',') throw ValidationError("cannot parse position \"" + buf + "\": expected ','");
    ++pos;
  }
  return Position(std::move(piles));
}

inline void check_position(const Ruleset& rules, const Position& pos) {
  if (pos.size() != rules.piles())
    throw ValidationError("position has " + std::to_string(pos.size()) + " piles but " + rules.to_string() +
                          " has " + std::to_string(rules.piles()));
  for (Height h : pos)
    if (h >= kMaxHeight) throw ValidationError("pile height " + std::to_string(h) + " is too large");
}

/// Removal of `amounts[i]` tokens from pile i for every i in `support`.
struct Move {
  Face support;
  std::vector<Height> amounts;  // one entry per pile; zero outside the support

  /// "{0,1}:2,2" style rendering: support, then the removal on each supported pile.
  std::string to_string() const {
    std::string s = support.to_string() + ":";
    bool first = true;
    for (int i : support.indices()) {
      if (!first) s += ',';
      s += std::to_string(amounts[static_cast<std::size_t>(i)]);
      first = false;
    }
    return s;
  }

  friend bool operator==(const Move&, const Move&) = default;
};

/// Parses "{0,1}:2,3" (support, then one removal per supported pile, in index order) into a
/// move on m piles. Piles whose removal is 0 are dropped from the support, matching the rule
/// that a move may leave some piles of its face untouched.
inline Move parse_move(std::string_view text, int piles) {
  std::string buf;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') buf += c;
  const auto colon = buf.find(':');
  if (buf.empty() || buf.front() != '{' || colon == std::string::npos || colon == 0 || buf[colon - 1] != '}')
    throw ValidationError("cannot parse move \"" + buf + "\": expected {i,j,...}:a,b,...");
  std::vector<int> idx;
  const std::string inner = buf.substr(1, colon - 2);
  if (!inner.empty()) {
    for (Height v : parse_position(inner)) {
      if (v >= static_cast<Height>(piles))
        throw ValidationError("move names pile " + std::to_string(v) + " but there are " + std::to_string(piles));
      idx.push_back(static_cast<int>(v));
    }
  }
  const std::string rest = buf.substr(colon + 1);
  const Position amounts = rest.empty() ? Position() : parse_position(rest);
  if (amounts.size() != static_cast<int>(idx.size()))
    throw ValidationError("move lists " + std::to_string(idx.size()) + " piles but " + std::to_string(amounts.size()) +
                          " removals");
  Move mv;
  mv.amounts.assign(static_cast<std::size_t>(piles), 0);
  Face seen;
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (seen.contains(idx[j])) throw ValidationError("move names pile " + std::to_string(idx[j]) + " twice");
    seen = seen.with(idx[j]);
    if (amounts[static_cast<int>(j)] == 0) continue;
    mv.amounts[static_cast<std::size_t>(idx[j])] = amounts[static_cast<int>(j)];
    mv.support = mv.support.with(idx[j]);
  }
  return mv;
}

/// Builds the move that turns `from` into `to`. Throws IllegalMove if `to` is not reachable by
/// lowering piles.
inline Move move_between(const Position& from, const Position& to) {
  if (from.size() != to.size()) throw IllegalMove("positions have different pile counts");
  Move mv;
  mv.amounts.assign(static_cast<std::size_t>(from.size()), 0);
  for (int i = 0; i < from.size(); ++i) {
    if (to[i] > from[i]) throw IllegalMove("pile " + std::to_string(i) + " would grow");
    if (to[i] < from[i]) {
      mv.support = mv.support.with(i);
      mv.amounts[static_cast<std::size_t>(i)] = from[i] - to[i];
    }
  }
  return mv;
}

/// Subtracts the move from the position. Only the arithmetic is checked here; face legality is
/// the ruleset's concern (see `check_move`).
inline Position apply_move(const Position& pos, const Move& mv) {
  if (static_cast<int>(mv.amounts.size()) != pos.size())
    throw IllegalMove("move covers " + std::to_string(mv.amounts.size()) + " piles, position has " +
                      std::to_string(pos.size()));
  if (mv.support.empty()) throw IllegalMove("a move must remove at least one token");
  Position next = pos;
  for (int i = 0; i < pos.size(); ++i) {
    Height amount = mv.amounts[static_cast<std::size_t>(i)];
    if (mv.support.contains(i)) {
      if (amount == 0) throw IllegalMove("supported pile " + std::to_string(i) + " has a zero removal");
      if (amount > pos[i])
        throw IllegalMove("removing " + std::to_string(amount) + " from pile " + std::to_string(i) + " of height " +
                          std::to_string(pos[i]));
      next[i] -= amount;
    } else if (amount != 0) {
      throw IllegalMove("pile " + std::to_string(i) + " is outside the move's support");
    }
  }
  return next;
}

/// Throws IllegalMove naming the violated constraint unless `mv` is legal from `pos`.
inline void check_move(const Ruleset& rules, const Position& pos, const Move& mv) {
  check_position(rules, pos);
  if (mv.support.empty()) throw IllegalMove("a move must remove at least one token in total");
  if (!rules.is_face(mv.support))
    throw IllegalMove("piles " + mv.support.to_string() + " are not a face of " + rules.to_string());
  apply_move(pos, mv);
}

/// All rotations of `pos`, followed by all rotations of its reversal. Image r < m reads
/// n_r, n_{r+1}, ...; image m + r reads n_r, n_{r-1}, ... (indices mod m).
inline std::vector<Position> dihedral_images(const Position& pos) {
  const int m = pos.size();
  std::vector<Position> out;
  out.reserve(static_cast<std::size_t>(2 * m));
  for (int dir = 0; dir < 2; ++dir) {
    for (int r = 0; r < m; ++r) {
      Position img = Position::zeros(m);
      for (int j = 0; j < m; ++j) img[j] = pos[dir == 0 ? (r + j) % m : ((r - j) % m + m) % m];
      out.push_back(std::move(img));
    }
  }
  return out;
}

/// Lexicographically smallest dihedral image.
inline Position canonical(const Position& pos) {
  if (pos.size() == 0) return pos;
  auto images = dihedral_images(pos);
  return *std::min_element(images.begin(), images.end());
}

}  // namespace ecn
