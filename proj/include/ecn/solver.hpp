// Brute-force ground truth: outcome classes and Grundy values over bounded position spaces.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "ecn/errors.hpp"
#include "ecn/moves.hpp"
#include "ecn/position.hpp"
#include "ecn/ruleset.hpp"

namespace ecn {

enum class Outcome : std::uint8_t { P, N };

inline std::string_view to_string(Outcome o) { return o == Outcome::P ? "P" : "N"; }

struct SolverOptions {
  std::size_t max_entries = std::size_t{1} << 26;
  /// Worker count for table construction; 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Also compute Grundy values (a second, independent pass).
  bool grundy = true;
};

/// Mixed-radix index space of all positions with pile i at most limits[i]. Pile 0 is the most
/// significant digit, so index order is lexicographic order and every option of a position
/// has a strictly smaller index.
class Box {
 public:
  Box() = default;
  explicit Box(std::vector<Height> limits) : limits_(std::move(limits)) {
    strides_.assign(limits_.size(), 1);
    std::size_t size = 1;
    bool overflow = false;
    for (std::size_t i = limits_.size(); i-- > 0;) {
      strides_[i] = size;
      const Height radix = limits_[i] + 1;
      if (radix == 0 || size > std::numeric_limits<std::size_t>::max() / radix) {
        overflow = true;
        size = std::numeric_limits<std::size_t>::max();
      } else if (!overflow) {
        size *= radix;
      }
    }
    size_ = size;
  }

  static Box cube(int piles, Height bound) {
    return Box(std::vector<Height>(static_cast<std::size_t>(piles), bound));
  }

  int piles() const noexcept { return static_cast<int>(limits_.size()); }
  std::size_t size() const noexcept { return size_; }
  std::span<const Height> limits() const noexcept { return limits_; }
  std::span<const std::size_t> strides() const noexcept { return strides_; }
  Height bound() const noexcept { return limits_.empty() ? 0 : *std::max_element(limits_.begin(), limits_.end()); }
  bool is_cube() const noexcept {
    return std::all_of(limits_.begin(), limits_.end(), [&](Height h) { return h == bound(); });
  }

  bool contains(const Position& pos) const noexcept {
    if (pos.size() != piles()) return false;
    for (int i = 0; i < pos.size(); ++i)
      if (pos[i] > limits_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  std::size_t index_of(const Position& pos) const {
    std::size_t idx = 0;
    for (int i = 0; i < pos.size(); ++i) idx += static_cast<std::size_t>(pos[i]) * strides_[static_cast<std::size_t>(i)];
    return idx;
  }

  Position position_at(std::size_t idx) const {
    Position pos = Position::zeros(piles());
    for (int i = 0; i < piles(); ++i) {
      const auto s = strides_[static_cast<std::size_t>(i)];
      pos[i] = static_cast<Height>(idx / s);
      idx %= s;
    }
    return pos;
  }

 private:
  std::vector<Height> limits_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// P/N class of every position in a box.
class OutcomeTable {
 public:
  OutcomeTable(Ruleset rules, Box box, std::vector<std::uint8_t> is_p)
      : rules_(std::move(rules)), box_(std::move(box)), is_p_(std::move(is_p)) {}

  const Ruleset& ruleset() const noexcept { return rules_; }
  const Box& box() const noexcept { return box_; }
  Height bound() const noexcept { return box_.bound(); }
  std::size_t size() const noexcept { return is_p_.size(); }
  bool contains(const Position& pos) const noexcept { return box_.contains(pos); }

  Outcome at_index(std::size_t idx) const noexcept { return is_p_[idx] ? Outcome::P : Outcome::N; }

  Outcome at(const Position& pos) const {
    if (!contains(pos)) throw ValidationError("position " + pos.to_string() + " lies outside the table");
    return at_index(box_.index_of(pos));
  }

  std::size_t count_p() const noexcept {
    return static_cast<std::size_t>(std::count(is_p_.begin(), is_p_.end(), std::uint8_t{1}));
  }

 private:
  Ruleset rules_;
  Box box_;
  std::vector<std::uint8_t> is_p_;
};

/// Grundy value of every position in a box.
class GrundyTable {
 public:
  GrundyTable(Ruleset rules, Box box, std::vector<std::uint32_t> values)
      : rules_(std::move(rules)), box_(std::move(box)), values_(std::move(values)) {}

  const Ruleset& ruleset() const noexcept { return rules_; }
  const Box& box() const noexcept { return box_; }
  Height bound() const noexcept { return box_.bound(); }
  std::size_t size() const noexcept { return values_.size(); }
  bool contains(const Position& pos) const noexcept { return box_.contains(pos); }
  std::span<const std::uint32_t> values() const noexcept { return values_; }

  std::uint32_t at_index(std::size_t idx) const noexcept { return values_[idx]; }

  std::uint32_t at(const Position& pos) const {
    if (!contains(pos)) throw ValidationError("position " + pos.to_string() + " lies outside the table");
    return at_index(box_.index_of(pos));
  }

 private:
  Ruleset rules_;
  Box box_;
  std::vector<std::uint32_t> values_;
};

struct Tables {
  OutcomeTable outcomes;
  std::optional<GrundyTable> grundy;
};

namespace detail {

/// Face index lists, precomputed for the option walk.
struct FaceWalk {
  std::vector<std::vector<int>> piles;
  std::vector<std::vector<std::size_t>> strides;

  FaceWalk(const Ruleset& rules, const Box& box) {
    for (Face f : rules.faces()) {
      auto idx = f.indices();
      std::vector<std::size_t> st;
      st.reserve(idx.size());
      for (int i : idx) st.push_back(box.strides()[static_cast<std::size_t>(i)]);
      piles.push_back(std::move(idx));
      strides.push_back(std::move(st));
    }
  }

  /// Calls visit(option_index) for every option of the position with digits `digits` at
  /// index `idx`; stops early when visit returns false.
  template <class Visit>
  bool for_each_option(std::size_t idx, std::span<const Height> digits, std::vector<Height>& scratch,
                       Visit&& visit) const {
    for (std::size_t f = 0; f < piles.size(); ++f) {
      const auto& fp = piles[f];
      const auto& fs = strides[f];
      const std::size_t n = fp.size();
      bool playable = true;
      for (int i : fp) playable = playable && digits[static_cast<std::size_t>(i)] > 0;
      if (!playable) continue;
      scratch.assign(n, 1);
      std::size_t off = 0;
      for (std::size_t j = 0; j < n; ++j) off += fs[j];
      while (true) {
        if (!visit(idx - off)) return false;
        std::size_t j = n;
        while (j > 0) {
          --j;
          if (scratch[j] < digits[static_cast<std::size_t>(fp[j])]) {
            ++scratch[j];
            off += fs[j];
            goto next;
          }
          off -= static_cast<std::size_t>(scratch[j] - 1) * fs[j];
          scratch[j] = 1;
        }
        break;
      next:;
      }
    }
    return true;
  }
};

inline unsigned worker_count(const SolverOptions& opts) {
  unsigned t = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
  return std::max(1U, t);
}

/// Runs `work(idx, digits, scratch)` over every index so that all options of a position are
/// finished before the position itself. Single-threaded runs walk the indices in order;
/// parallel runs process one token-total level at a time and shard each level across workers.
template <class Work>
void retrograde_sweep(const Box& box, unsigned threads, Work&& work) {
  const std::size_t n = box.size();
  const int m = box.piles();
  if (threads <= 1 || n < 4096) {
    std::vector<Height> digits(static_cast<std::size_t>(m), 0);
    std::vector<Height> scratch;
    for (std::size_t idx = 0; idx < n; ++idx) {
      work(idx, std::span<const Height>(digits), scratch);
      for (int i = m; i-- > 0;) {
        auto& d = digits[static_cast<std::size_t>(i)];
        if (d < box.limits()[static_cast<std::size_t>(i)]) {
          ++d;
          break;
        }
        d = 0;
      }
    }
    return;
  }

  // Bucket indices by token total.
  Height max_total = 0;
  for (Height h : box.limits()) max_total += h;
  std::vector<std::size_t> level_start(static_cast<std::size_t>(max_total) + 2, 0);
  std::vector<std::uint32_t> totals(n);
  {
    std::vector<Height> digits(static_cast<std::size_t>(m), 0);
    Height total = 0;
    for (std::size_t idx = 0; idx < n; ++idx) {
      totals[idx] = static_cast<std::uint32_t>(total);
      ++level_start[static_cast<std::size_t>(total) + 1];
      for (int i = m; i-- > 0;) {
        auto& d = digits[static_cast<std::size_t>(i)];
        if (d < box.limits()[static_cast<std::size_t>(i)]) {
          ++d;
          ++total;
          break;
        }
        total -= d;
        d = 0;
      }
    }
  }
  for (std::size_t t = 1; t < level_start.size(); ++t) level_start[t] += level_start[t - 1];
  std::vector<std::size_t> order(n);
  {
    auto fill = level_start;
    for (std::size_t idx = 0; idx < n; ++idx) order[fill[totals[idx]]++] = idx;
  }
  totals.clear();
  totals.shrink_to_fit();

  for (std::size_t level = 0; level + 1 < level_start.size(); ++level) {
    const std::size_t begin = level_start[level];
    const std::size_t end = level_start[level + 1];
    if (begin == end) continue;
    const std::size_t count = end - begin;
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    auto run = [&](unsigned w) {
      std::vector<Height> digits(static_cast<std::size_t>(m));
      std::vector<Height> scratch;
      for (std::size_t k = begin + w; k < end; k += workers) {
        std::size_t idx = order[k];
        std::size_t rest = idx;
        for (int i = 0; i < m; ++i) {
          const auto s = box.strides()[static_cast<std::size_t>(i)];
          digits[static_cast<std::size_t>(i)] = static_cast<Height>(rest / s);
          rest %= s;
        }
        work(idx, std::span<const Height>(digits), scratch);
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
  }
}

}  // namespace detail

inline void check_capacity(const Box& box, const SolverOptions& opts) {
  if (box.size() > opts.max_entries) throw CapacityError(box.size(), opts.max_entries);
}

/// Outcome classes over a box: P iff no option is P.
inline OutcomeTable build_outcome_table(const Ruleset& rules, const Box& box, const SolverOptions& opts = {}) {
  if (box.piles() != rules.piles()) throw ValidationError("table shape does not match the ruleset");
  check_capacity(box, opts);
  detail::FaceWalk walk(rules, box);
  std::vector<std::uint8_t> is_p(box.size(), 0);
  detail::retrograde_sweep(box, detail::worker_count(opts),
                           [&](std::size_t idx, std::span<const Height> digits, std::vector<Height>& scratch) {
                             bool has_p_option = !walk.for_each_option(
                                 idx, digits, scratch, [&](std::size_t opt) { return is_p[opt] == 0; });
                             is_p[idx] = has_p_option ? 0 : 1;
                           });
  return OutcomeTable(rules, box, std::move(is_p));
}

/// Grundy values over a box: mex of the option values. A value never exceeds the token total,
/// since a position of value g has a chain of g options with strictly decreasing totals.
inline GrundyTable build_grundy_table(const Ruleset& rules, const Box& box, const SolverOptions& opts = {}) {
  if (box.piles() != rules.piles()) throw ValidationError("table shape does not match the ruleset");
  check_capacity(box, opts);
  Height max_total = 0;
  for (Height h : box.limits()) max_total += h;
  if (max_total >= std::numeric_limits<std::uint32_t>::max())
    throw CapacityError(static_cast<std::size_t>(max_total), std::numeric_limits<std::uint32_t>::max());
  const std::size_t words = static_cast<std::size_t>(max_total / 64 + 1);

  detail::FaceWalk walk(rules, box);
  std::vector<std::uint32_t> values(box.size(), 0);
  detail::retrograde_sweep(box, detail::worker_count(opts),
                           [&](std::size_t idx, std::span<const Height> digits, std::vector<Height>& scratch) {
                             thread_local std::vector<std::uint64_t> seen;
                             seen.assign(words, 0);
                             walk.for_each_option(idx, digits, scratch, [&](std::size_t opt) {
                               const std::uint32_t g = values[opt];
                               seen[g >> 6] |= std::uint64_t{1} << (g & 63);
                               return true;
                             });
                             std::uint32_t mex = 0;
                             for (std::size_t w = 0; w < words; ++w) {
                               if (~seen[w] != 0) {
                                 mex = static_cast<std::uint32_t>(w * 64 + std::countr_one(seen[w]));
                                 break;
                               }
                             }
                             values[idx] = mex;
                           });
  return GrundyTable(rules, box, std::move(values));
}

inline Tables build_box_tables(const Ruleset& rules, const Box& box, const SolverOptions& opts = {}) {
  Tables t{build_outcome_table(rules, box, opts), std::nullopt};
  if (opts.grundy) t.grundy = build_grundy_table(rules, box, opts);
  return t;
}

/// Outcome and Grundy tables for every position with all piles at most `bound`.
inline Tables build_tables(const Ruleset& rules, Height bound, const SolverOptions& opts = {}) {
  return build_box_tables(rules, Box::cube(rules.piles(), bound), opts);
}

/// The smallest box containing `pos`; it is closed under taking options.
inline Box box_below(const Position& pos) { return Box(std::vector<Height>(pos.begin(), pos.end())); }

inline Outcome outcome(const Ruleset& rules, const Position& pos, const SolverOptions& opts = {}) {
  check_position(rules, pos);
  return build_outcome_table(rules, box_below(pos), opts).at(pos);
}

inline std::uint32_t grundy(const Ruleset& rules, const Position& pos, const SolverOptions& opts = {}) {
  check_position(rules, pos);
  return build_grundy_table(rules, box_below(pos), opts).at(pos);
}

/// From an N-position, the move to the lexicographically smallest P successor; nothing from a
/// P-position. `table` must contain `pos` (and hence all of its successors).
inline std::optional<Move> winning_move(const OutcomeTable& table, const Position& pos) {
  if (table.at(pos) == Outcome::P) return std::nullopt;
  const Ruleset& rules = table.ruleset();
  std::optional<Position> best;
  for_each_move(rules, pos, [&](const Move& mv) {
    Position next = apply_move(pos, mv);
    if (table.at(next) == Outcome::P && (!best || next < *best)) best = std::move(next);
    return true;
  });
  return move_between(pos, *best);
}

inline std::optional<Move> winning_move(const Ruleset& rules, const Position& pos, const SolverOptions& opts = {}) {
  check_position(rules, pos);
  return winning_move(build_outcome_table(rules, box_below(pos), opts), pos);
}

/// Outcome of a disjunctive sum from its component Grundy values: P iff their XOR is zero.
inline Outcome disjunctive_outcome(std::span<const std::uint32_t> grundies) {
  std::uint32_t x = 0;
  for (auto g : grundies) x ^= g;
  return x == 0 ? Outcome::P : Outcome::N;
}

/// Outcome of a selective sum: P iff every component is P.
inline Outcome selective_outcome(std::span<const Outcome> outcomes) {
  return std::all_of(outcomes.begin(), outcomes.end(), [](Outcome o) { return o == Outcome::P; }) ? Outcome::P
                                                                                                  : Outcome::N;
}

/// Shared, thread-safe cache of solver tables keyed by ruleset and box.
class TableCache {
 public:
  explicit TableCache(SolverOptions opts = {}) : opts_(opts) {}

  const SolverOptions& options() const noexcept { return opts_; }

  /// A table whose box contains `pos`: a cached one if available, else the box below `pos`.
  std::shared_ptr<const Tables> covering(const Ruleset& rules, const Position& pos) {
    check_position(rules, pos);
    {
      std::lock_guard lock(mu_);
      for (auto& [key, tables] : entries_)
        if (key.first == rules.to_string() && tables->outcomes.contains(pos)) return tables;
    }
    return get(rules, box_below(pos));
  }

  std::shared_ptr<const Tables> cube(const Ruleset& rules, Height bound) {
    return get(rules, Box::cube(rules.piles(), bound));
  }

  std::shared_ptr<const Tables> get(const Ruleset& rules, const Box& box) {
    Key key{rules.to_string(), std::vector<Height>(box.limits().begin(), box.limits().end())};
    {
      std::lock_guard lock(mu_);
      if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    auto built = std::make_shared<const Tables>(build_box_tables(rules, box, opts_));
    std::lock_guard lock(mu_);
    return entries_.emplace(std::move(key), std::move(built)).first->second;
  }

  void clear() {
    std::lock_guard lock(mu_);
    entries_.clear();
  }

 private:
  using Key = std::pair<std::string, std::vector<Height>>;
  SolverOptions opts_;
  std::mutex mu_;
  std::map<Key, std::shared_ptr<const Tables>> entries_;
};

}  // namespace ecn
