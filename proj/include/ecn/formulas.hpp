// Closed-form P-position predicates and the rotation/reflection closure.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecn/errors.hpp"
#include "ecn/position.hpp"
#include "ecn/ruleset.hpp"

namespace ecn {

using Piles = std::span<const Height>;

enum class PredicateFamily {
  nim_xor,
  moore,
  cn42,
  cn52,
  cn53,
  cn63,
  cn64,
  cn74,
  cn86,
  ecn6122,
  ecn6123,
  ecn6124,
  ecn6132,
  ecn6233,
  ecn7124,
  ecn7125,
  ecn8132,
  ecn8134,
  ecn8136,
  ecn81236,
  gen_odd_prime,
  gen_even_k2,
  gen_pow2,
};

namespace detail {

struct FamilyInfo {
  PredicateFamily family;
  std::string_view name;
  int arity;  // 0: any arity, -1: depends on the parameter
  bool parameterized;
  bool cyclic;
};

inline constexpr std::array<FamilyInfo, 23> kFamilies{{
    {PredicateFamily::nim_xor, "NIM_XOR", 0, false, false},
    {PredicateFamily::moore, "MOORE", 0, true, false},
    {PredicateFamily::cn42, "CN42", 4, false, true},
    {PredicateFamily::cn52, "CN52", 5, false, true},
    {PredicateFamily::cn53, "CN53", 5, false, true},
    {PredicateFamily::cn63, "CN63", 6, false, true},
    {PredicateFamily::cn64, "CN64", 6, false, true},
    {PredicateFamily::cn74, "CN74", 7, false, true},
    {PredicateFamily::cn86, "CN86", 8, false, true},
    {PredicateFamily::ecn6122, "ECN6122", 6, false, false},
    {PredicateFamily::ecn6123, "ECN6123", 6, false, false},
    {PredicateFamily::ecn6124, "ECN6124", 6, false, true},
    {PredicateFamily::ecn6132, "ECN6132", 6, false, false},
    {PredicateFamily::ecn6233, "ECN6233", 6, false, true},
    {PredicateFamily::ecn7124, "ECN7124", 7, false, true},
    {PredicateFamily::ecn7125, "ECN7125", 7, false, true},
    {PredicateFamily::ecn8132, "ECN8132", 8, false, false},
    {PredicateFamily::ecn8134, "ECN8134", 8, false, false},
    {PredicateFamily::ecn8136, "ECN8136", 8, false, false},
    {PredicateFamily::ecn81236, "ECN81236", 8, false, true},
    {PredicateFamily::gen_odd_prime, "GEN_ODD_PRIME", -1, true, true},
    {PredicateFamily::gen_even_k2, "GEN_EVEN_K2", -1, true, false},
    {PredicateFamily::gen_pow2, "GEN_POW2", -1, true, false},
}};

inline const FamilyInfo& info(PredicateFamily f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw ValidationError("unknown predicate family");
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

/// Stable identifier of one closed-form characterization, e.g. "ECN7125" or "MOORE(3)".
class PredicateId {
 public:
  /// Throws ValidationError for a missing or invalid parameter (for GEN_ODD_PRIME, 2m+1 must
  /// be prime).
  explicit PredicateId(PredicateFamily family, int param = 0) : family_(family), param_(param) {
    const auto& i = detail::info(family);
    if (!i.parameterized) {
      param_ = 0;
      return;
    }
    switch (family) {
      case PredicateFamily::moore:
        if (param < 1) throw ValidationError("MOORE(k) needs k >= 1");
        break;
      case PredicateFamily::gen_odd_prime:
        if (param <= 1) throw ValidationError("GEN_ODD_PRIME(m) needs m > 1");
        if (!detail::is_prime(2LL * param + 1))
          throw ValidationError("GEN_ODD_PRIME(" + std::to_string(param) + ") needs 2m+1 = " +
                                std::to_string(2 * param + 1) + " to be prime");
        if (2 * param + 1 > kMaxPiles) throw ValidationError("GEN_ODD_PRIME parameter too large");
        break;
      case PredicateFamily::gen_even_k2:
        if (param <= 1) throw ValidationError("GEN_EVEN_K2(m) needs m > 1");
        if (2 * param > kMaxPiles) throw ValidationError("GEN_EVEN_K2 parameter too large");
        break;
      case PredicateFamily::gen_pow2:
        if (param <= 1) throw ValidationError("GEN_POW2(m) needs m > 1");
        if (param > 5) throw ValidationError("GEN_POW2 parameter too large");
        break;
      default:
        break;
    }
  }

  static PredicateId parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ') s += c;
    std::string head = s;
    std::optional<int> param;
    if (auto open = s.find('('); open != std::string::npos) {
      if (s.back() != ')') throw ValidationError("bad predicate id \"" + s + "\"");
      head = s.substr(0, open);
      try {
        std::size_t used = 0;
        std::string inner = s.substr(open + 1, s.size() - open - 2);
        param = std::stoi(inner, &used);
        if (used != inner.size()) throw ValidationError("bad predicate parameter");
      } catch (const std::logic_error&) {
        throw ValidationError("bad predicate parameter in \"" + s + "\"");
      }
    }
    for (const auto& i : detail::kFamilies) {
      if (i.name != head) continue;
      if (i.parameterized != param.has_value())
        throw ValidationError("predicate " + head + (i.parameterized ? " needs" : " takes no") + " parameter");
      return PredicateId(i.family, param.value_or(0));
    }
    throw ValidationError("unknown predicate id \"" + s + "\"");
  }

  PredicateFamily family() const noexcept { return family_; }
  int param() const noexcept { return param_; }

  std::string name() const {
    const auto& i = detail::info(family_);
    std::string s(i.name);
    if (i.parameterized) s += "(" + std::to_string(param_) + ")";
    return s;
  }

  /// Whether membership is tested up to rotation and reflection.
  bool cyclic() const { return detail::info(family_).cyclic; }

  /// Required pile count, or nullopt when any count is accepted.
  std::optional<int> arity() const {
    const auto& i = detail::info(family_);
    if (i.arity > 0) return i.arity;
    switch (family_) {
      case PredicateFamily::gen_odd_prime:
        return 2 * param_ + 1;
      case PredicateFamily::gen_even_k2:
        return 2 * param_;
      case PredicateFamily::gen_pow2:
        return 1 << param_;
      default:
        return std::nullopt;
    }
  }

  friend bool operator==(const PredicateId&, const PredicateId&) = default;

 private:
  PredicateFamily family_;
  int param_ = 0;
};

/// One named condition of a base set.
struct Clause {
  std::string name;
  std::function<bool(Piles)> test;
};

/// A union of conjunctions of clauses. A sequence belongs to the set iff some alternative has
/// every clause true.
struct BaseSet {
  std::vector<std::vector<Clause>> alternatives;

  bool contains(Piles n) const {
    for (const auto& alt : alternatives) {
      bool all = true;
      for (const auto& c : alt) {
        if (!c.test(n)) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  }
};

struct PredicateResult {
  bool is_p = false;
  /// Index of the first dihedral image (see dihedral_images) that lies in the base set. Only
  /// present for cyclic predicates that hold.
  std::optional<int> witness;
};

/// Membership up to rotation and reflection: scans rotations 0..m-1 of `pos`, then rotations
/// of its reversal, and reports the first image accepted by `base`.
template <class Base>
PredicateResult cyclic_closure(Base&& base, const Position& pos) {
  const int m = pos.size();
  std::vector<Height> img(static_cast<std::size_t>(m));
  for (int dir = 0; dir < 2; ++dir) {
    for (int r = 0; r < m; ++r) {
      for (int j = 0; j < m; ++j) img[static_cast<std::size_t>(j)] = pos[dir == 0 ? (r + j) % m : ((r - j) % m + m) % m];
      if (base(Piles(img))) return {true, dir * m + r};
    }
  }
  return {false, std::nullopt};
}

namespace detail {

inline Height xor_of(Piles n, int first, int step) {
  Height x = 0;
  for (std::size_t i = static_cast<std::size_t>(first); i < n.size(); i += static_cast<std::size_t>(step)) x ^= n[i];
  return x;
}

inline Height min_of(Piles n) { return *std::min_element(n.begin(), n.end()); }
inline Height max_of(Piles n) { return *std::max_element(n.begin(), n.end()); }

inline bool all_equal(Piles n, int first, int step) {
  for (std::size_t i = static_cast<std::size_t>(first + step); i < n.size(); i += static_cast<std::size_t>(step))
    if (n[i] != n[static_cast<std::size_t>(first)]) return false;
  return true;
}

/// For every binary digit, the number of piles with that digit set.
inline bool digit_counts(Piles n, const std::function<bool(std::uint64_t ones_mask)>& ok) {
  Height any = 0;
  for (Height h : n) any |= h;
  for (int bit = 0; (any >> bit) != 0; ++bit) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n.size(); ++i)
      if ((n[i] >> bit) & 1U) mask |= std::uint64_t{1} << i;
    if (!ok(mask)) return false;
  }
  return true;
}

inline Clause clause(std::string name, std::function<bool(Piles)> test) { return {std::move(name), std::move(test)}; }

}  // namespace detail

/// The base set of a predicate as named clauses, indexed n[0..m-1].
inline BaseSet base_set(const PredicateId& id) {
  using detail::clause;
  using detail::max_of;
  using detail::min_of;
  using detail::xor_of;
  BaseSet b;
  auto& alts = b.alternatives;
  switch (id.family()) {
    case PredicateFamily::nim_xor:
      alts = {{clause("n_0 ^ ... ^ n_{m-1} = 0", [](Piles n) { return xor_of(n, 0, 1) == 0; })}};
      break;
    case PredicateFamily::moore: {
      const int k = id.param();
      alts = {{clause("each digit has a multiple of k+1 ones", [k](Piles n) {
        return detail::digit_counts(n, [k](std::uint64_t ones) { return std::popcount(ones) % (k + 1) == 0; });
      })}};
      break;
    }
    case PredicateFamily::cn42:
      alts = {{clause("n0 = n2", [](Piles n) { return n[0] == n[2]; }),
               clause("n1 = n3", [](Piles n) { return n[1] == n[3]; })}};
      break;
    case PredicateFamily::cn52:
      alts = {{clause("n0 = max", [](Piles n) { return n[0] == max_of(n); }),
               clause("n0 + n1 = n2 + n3", [](Piles n) { return n[0] + n[1] == n[2] + n[3]; }),
               clause("n1 = n4", [](Piles n) { return n[1] == n[4]; })}};
      break;
    case PredicateFamily::cn53:
      alts = {{clause("n0 = 0", [](Piles n) { return n[0] == 0; }),
               clause("n1 = n2 + n3", [](Piles n) { return n[1] == n[2] + n[3]; }),
               clause("n2 + n3 = n4", [](Piles n) { return n[2] + n[3] == n[4]; })}};
      break;
    case PredicateFamily::cn63:
      alts = {{clause("n0 + n1 = n3 + n4", [](Piles n) { return n[0] + n[1] == n[3] + n[4]; }),
               clause("n1 + n2 = n4 + n5", [](Piles n) { return n[1] + n[2] == n[4] + n[5]; })}};
      break;
    case PredicateFamily::cn64:
      alts = {{clause("n0 = min", [](Piles n) { return n[0] == min_of(n); }),
               clause("n0 + n1 = n3 + n4", [](Piles n) { return n[0] + n[1] == n[3] + n[4]; }),
               clause("n1 + n2 = n4 + n5", [](Piles n) { return n[1] + n[2] == n[4] + n[5]; }),
               clause("n0 ^ n2 ^ n4 = 0", [](Piles n) { return (n[0] ^ n[2] ^ n[4]) == 0; })}};
      break;
    case PredicateFamily::cn74:
      alts = {
          {clause("P1: n0 = 0", [](Piles n) { return n[0] == 0; }),
           clause("P1: n1 = 0", [](Piles n) { return n[1] == 0; }),
           clause("P1: n3 + n4 + n5 = n2", [](Piles n) { return n[3] + n[4] + n[5] == n[2]; }),
           clause("P1: n2 = n6", [](Piles n) { return n[2] == n[6]; }),
           clause("P1: n6 > 0", [](Piles n) { return n[6] > 0; })},
          {clause("P2: all piles equal", [](Piles n) { return detail::all_equal(n, 0, 1); })},
          {clause("P3: n0 = n1", [](Piles n) { return n[0] == n[1]; }),
           clause("P3: n2 = n6", [](Piles n) { return n[2] == n[6]; }),
           clause("P3: n3 = n5", [](Piles n) { return n[3] == n[5]; }),
           clause("P3: n0 + n2 = n3 + n4", [](Piles n) { return n[0] + n[2] == n[3] + n[4]; }),
           clause("P3: 0 < n0", [](Piles n) { return 0 < n[0]; }),
           clause("P3: n0 < n4", [](Piles n) { return n[0] < n[4]; }),
           clause("P3: n0 = min", [](Piles n) { return n[0] == min_of(n); })},
          {clause("P4: n0 = n5", [](Piles n) { return n[0] == n[5]; }),
           clause("P4: n1 + n2 = n3 + n4", [](Piles n) { return n[1] + n[2] == n[3] + n[4]; }),
           clause("P4: n3 + n4 = n6 + n0", [](Piles n) { return n[3] + n[4] == n[6] + n[0]; }),
           clause("P4: n0 = min", [](Piles n) { return n[0] == min_of(n); }),
           clause("P4: n0 < n1", [](Piles n) { return n[0] < n[1]; }),
           clause("P4: n0 < n4", [](Piles n) { return n[0] < n[4]; }),
           clause("P4: n0 < max(n2, n3)", [](Piles n) { return n[0] < std::max(n[2], n[3]); })},
      };
      break;
    case PredicateFamily::cn86:
      alts = {{clause("n0 = 0", [](Piles n) { return n[0] == 0; }),
               clause("n1 = n2 + n3", [](Piles n) { return n[1] == n[2] + n[3]; }),
               clause("n2 + n3 = n5 + n6", [](Piles n) { return n[2] + n[3] == n[5] + n[6]; }),
               clause("n5 + n6 = n7", [](Piles n) { return n[5] + n[6] == n[7]; }),
               clause("n4 = min(n1, n2 + n6)", [](Piles n) { return n[4] == std::min(n[1], n[2] + n[6]); })}};
      break;
    case PredicateFamily::ecn6122:
      alts = {{clause("n0 ^ n3 = n1 ^ n4", [](Piles n) { return (n[0] ^ n[3]) == (n[1] ^ n[4]); }),
               clause("n1 ^ n4 = n2 ^ n5", [](Piles n) { return (n[1] ^ n[4]) == (n[2] ^ n[5]); })}};
      break;
    case PredicateFamily::ecn6123:
      alts = {{clause("n0 = n3", [](Piles n) { return n[0] == n[3]; }),
               clause("n1 = n4", [](Piles n) { return n[1] == n[4]; }),
               clause("n2 = n5", [](Piles n) { return n[2] == n[5]; })}};
      break;
    case PredicateFamily::ecn6124: {
      // Digit patterns {0,1,3,4} and {0,1,2,4}, each taken up to rotation and reflection of the
      // circle independently per digit.
      static const std::vector<std::uint64_t> patterns = [] {
        std::vector<std::uint64_t> out;
        for (std::uint64_t base : {std::uint64_t{0b011011}, std::uint64_t{0b010111}}) {
          for (int dir = 0; dir < 2; ++dir) {
            for (int r = 0; r < 6; ++r) {
              std::uint64_t img = 0;
              for (int j = 0; j < 6; ++j)
                if ((base >> j) & 1U) img |= std::uint64_t{1} << (dir == 0 ? (j + r) % 6 : ((r - j) % 6 + 6) % 6);
              out.push_back(img);
            }
          }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      }();
      alts = {{clause("each digit has zero or four ones", [](Piles n) {
                 return detail::digit_counts(n, [](std::uint64_t ones) {
                   int k = std::popcount(ones);
                   return k == 0 || k == 4;
                 });
               }),
               clause("four-one digits sit on {0,1,3,4} or {0,1,2,4} up to symmetry", [](Piles n) {
                 return detail::digit_counts(n, [](std::uint64_t ones) {
                   return std::popcount(ones) != 4 || std::binary_search(patterns.begin(), patterns.end(), ones);
                 });
               })}};
      break;
    }
    case PredicateFamily::ecn6132:
      alts = {{clause("n0 ^ n2 ^ n4 = 0", [](Piles n) { return (n[0] ^ n[2] ^ n[4]) == 0; }),
               clause("n1 ^ n3 ^ n5 = 0", [](Piles n) { return (n[1] ^ n[3] ^ n[5]) == 0; })}};
      break;
    case PredicateFamily::ecn6233:
      alts = {{clause("n0 + n2 + n4 = n1 + n3 + n5", [](Piles n) { return n[0] + n[2] + n[4] == n[1] + n[3] + n[5]; }),
               clause("n0 ^ n1 ^ n2 = 0", [](Piles n) { return (n[0] ^ n[1] ^ n[2]) == 0; }),
               clause("n0 <= n3", [](Piles n) { return n[0] <= n[3]; }),
               clause("n1 <= n4", [](Piles n) { return n[1] <= n[4]; }),
               clause("n2 <= n5", [](Piles n) { return n[2] <= n[5]; })}};
      break;
    case PredicateFamily::ecn7124:
      alts = {{clause("n0 = n1", [](Piles n) { return n[0] == n[1]; }),
               clause("n1 = n4", [](Piles n) { return n[1] == n[4]; }),
               clause("n2 = n6", [](Piles n) { return n[2] == n[6]; }),
               clause("n3 + n5 = n0 + n2", [](Piles n) { return n[3] + n[5] == n[0] + n[2]; }),
               clause("n0 = min", [](Piles n) { return n[0] == min_of(n); })}};
      break;
    case PredicateFamily::ecn7125:
      alts = {{clause("n0 = 0", [](Piles n) { return n[0] == 0; }),
               clause("n1 = n2", [](Piles n) { return n[1] == n[2]; }),
               clause("n2 = n3 + n4", [](Piles n) { return n[2] == n[3] + n[4]; }),
               clause("n3 + n4 = n5", [](Piles n) { return n[3] + n[4] == n[5]; }),
               clause("n5 = n6", [](Piles n) { return n[5] == n[6]; })}};
      break;
    case PredicateFamily::ecn8132:
      alts = {{clause("n0 ^ n2 ^ n4 ^ n6 = 0", [](Piles n) { return xor_of(n, 0, 2) == 0; }),
               clause("n1 ^ n3 ^ n5 ^ n7 = 0", [](Piles n) { return xor_of(n, 1, 2) == 0; })}};
      break;
    case PredicateFamily::ecn8134:
      alts = {{clause("n0 = n4", [](Piles n) { return n[0] == n[4]; }),
               clause("n1 = n5", [](Piles n) { return n[1] == n[5]; }),
               clause("n2 = n6", [](Piles n) { return n[2] == n[6]; }),
               clause("n3 = n7", [](Piles n) { return n[3] == n[7]; })}};
      break;
    case PredicateFamily::ecn8136:
      alts = {{clause("n0 = n2", [](Piles n) { return n[0] == n[2]; }),
               clause("n2 = n4", [](Piles n) { return n[2] == n[4]; }),
               clause("n4 = n6", [](Piles n) { return n[4] == n[6]; }),
               clause("n1 = n3", [](Piles n) { return n[1] == n[3]; }),
               clause("n3 = n5", [](Piles n) { return n[3] == n[5]; }),
               clause("n5 = n7", [](Piles n) { return n[5] == n[7]; })}};
      break;
    case PredicateFamily::ecn81236:
      alts = {
          {clause("n0 = n2", [](Piles n) { return n[0] == n[2]; }),
           clause("n2 = n4", [](Piles n) { return n[2] == n[4]; }),
           clause("n4 = n6", [](Piles n) { return n[4] == n[6]; }),
           clause("n6 = n1 + n3 + n5 + n7", [](Piles n) { return n[6] == n[1] + n[3] + n[5] + n[7]; }),
           clause("not (n1 = n3 = n5 = n7)", [](Piles n) { return !detail::all_equal(n, 1, 2); })},
          {clause("terminal", [](Piles n) { return detail::max_of(n) == 0; })},
      };
      break;
    case PredicateFamily::gen_odd_prime: {
      const int h = id.param();
      alts = {{clause("n0 = 0", [](Piles n) { return n[0] == 0; }),
               clause("n1 = ... = n_{m-1} = n_m + n_{m+1}",
                      [h](Piles n) {
                        const Height mid = n[static_cast<std::size_t>(h)] + n[static_cast<std::size_t>(h) + 1];
                        for (int i = 1; i < h; ++i)
                          if (n[static_cast<std::size_t>(i)] != mid) return false;
                        return true;
                      }),
               clause("n_m + n_{m+1} = n_{m+2} = ... = n_{2m}", [h](Piles n) {
                 const Height mid = n[static_cast<std::size_t>(h)] + n[static_cast<std::size_t>(h) + 1];
                 for (int i = h + 2; i <= 2 * h; ++i)
                   if (n[static_cast<std::size_t>(i)] != mid) return false;
                 return true;
               })}};
      break;
    }
    case PredicateFamily::gen_even_k2:
      alts = {{clause("xor of even piles = 0", [](Piles n) { return xor_of(n, 0, 2) == 0; }),
               clause("xor of odd piles = 0", [](Piles n) { return xor_of(n, 1, 2) == 0; })}};
      break;
    case PredicateFamily::gen_pow2:
      alts = {{clause("even piles equal", [](Piles n) { return detail::all_equal(n, 0, 2); }),
               clause("odd piles equal", [](Piles n) { return detail::all_equal(n, 1, 2); })}};
      break;
  }
  return b;
}

inline void check_arity(const PredicateId& id, const Position& pos) {
  if (auto a = id.arity(); a && *a != pos.size())
    throw ValidationError(id.name() + " expects " + std::to_string(*a) + " piles, got " + std::to_string(pos.size()));
  if (pos.size() == 0) throw ValidationError("empty position");
}

/// Membership of `pos` in `base`, closed under rotation and reflection when `cyclic`.
inline PredicateResult eval_base_set(const BaseSet& base, bool cyclic, const Position& pos) {
  if (cyclic) return cyclic_closure([&](Piles n) { return base.contains(n); }, pos);
  return {base.contains(pos.piles()), std::nullopt};
}

inline PredicateResult eval_predicate(const PredicateId& id, const Position& pos) {
  check_arity(id, pos);
  return eval_base_set(base_set(id), id.cyclic(), pos);
}

/// Reusable evaluator: builds the clause set once.
class Predicate {
 public:
  explicit Predicate(PredicateId id) : id_(id), base_(base_set(id)), cyclic_(id.cyclic()) {}
  Predicate(PredicateId id, BaseSet base) : id_(id), base_(std::move(base)), cyclic_(id.cyclic()) {}

  const PredicateId& id() const noexcept { return id_; }
  const BaseSet& base() const noexcept { return base_; }
  bool cyclic() const noexcept { return cyclic_; }

  PredicateResult operator()(const Position& pos) const {
    check_arity(id_, pos);
    return eval_base_set(base_, cyclic_, pos);
  }

 private:
  PredicateId id_;
  BaseSet base_;
  bool cyclic_;
};

/// The predicate of the theorem that solves exactly this ruleset, if any.
inline std::optional<PredicateId> predicate_for(const Ruleset& rules) {
  if (!rules.is_ecn()) return std::nullopt;
  using F = PredicateFamily;
  const int m = rules.piles();
  const int k = rules.max_select();
  const auto& s = rules.steps();
  auto steps_are = [&](const std::vector<int>& want) { return want == s; };
  struct Entry {
    int m;
    std::vector<int> steps;
    int k;
    F family;
  };
  static const std::vector<Entry> table = {
      {4, {1}, 2, F::cn42},          {5, {1}, 2, F::cn52},          {5, {1}, 3, F::cn53},
      {6, {1}, 3, F::cn63},          {6, {1}, 4, F::cn64},          {7, {1}, 4, F::cn74},
      {8, {1}, 6, F::cn86},          {6, {1, 2}, 2, F::ecn6122},    {6, {1, 2}, 3, F::ecn6123},
      {6, {1, 2}, 4, F::ecn6124},    {6, {1, 3}, 2, F::ecn6132},    {6, {2, 3}, 3, F::ecn6233},
      {7, {1, 2}, 4, F::ecn7124},    {7, {1, 2}, 5, F::ecn7125},    {8, {1, 3}, 2, F::ecn8132},
      {8, {1, 3}, 4, F::ecn8134},    {8, {1, 3}, 6, F::ecn8136},    {8, {1, 2, 3}, 6, F::ecn81236},
  };
  for (const auto& e : table)
    if (e.m == m && e.k == k && steps_are(e.steps)) return PredicateId(e.family);

  if (m <= 8) return std::nullopt;
  auto range = [](int first, int last, int step) {
    std::vector<int> v;
    for (int i = first; i <= last; i += step) v.push_back(i);
    return v;
  };
  if (m % 2 == 1 && detail::is_prime(m)) {
    const int h = (m - 1) / 2;
    if (k == 2 * h - 1 && s == range(1, h - 1, 1)) return PredicateId(F::gen_odd_prime, h);
  }
  if (m % 2 == 0) {
    const int h = m / 2;
    const int top = h % 2 == 1 ? h : h - 1;
    if (k == 2 && s == range(1, top, 2)) return PredicateId(F::gen_even_k2, h);
    if (std::has_single_bit(static_cast<unsigned>(m))) {
      const int q = std::countr_zero(static_cast<unsigned>(m));
      if (k == m - 2 && s == range(1, (1 << (q - 1)) - 1, 2)) return PredicateId(F::gen_pow2, q);
    }
  }
  return std::nullopt;
}

/// The ruleset a predicate characterizes. NIM_XOR and MOORE(k) need the pile count.
inline Ruleset ruleset_for(const PredicateId& id, int piles = 0) {
  using F = PredicateFamily;
  switch (id.family()) {
    case F::nim_xor:
      return Ruleset::moore(piles, 1);
    case F::moore:
      return Ruleset::moore(piles, id.param());
    case F::cn42:
      return Ruleset::ecn(4, {1}, 2);
    case F::cn52:
      return Ruleset::ecn(5, {1}, 2);
    case F::cn53:
      return Ruleset::ecn(5, {1}, 3);
    case F::cn63:
      return Ruleset::ecn(6, {1}, 3);
    case F::cn64:
      return Ruleset::ecn(6, {1}, 4);
    case F::cn74:
      return Ruleset::ecn(7, {1}, 4);
    case F::cn86:
      return Ruleset::ecn(8, {1}, 6);
    case F::ecn6122:
      return Ruleset::ecn(6, {1, 2}, 2);
    case F::ecn6123:
      return Ruleset::ecn(6, {1, 2}, 3);
    case F::ecn6124:
      return Ruleset::ecn(6, {1, 2}, 4);
    case F::ecn6132:
      return Ruleset::ecn(6, {1, 3}, 2);
    case F::ecn6233:
      return Ruleset::ecn(6, {2, 3}, 3);
    case F::ecn7124:
      return Ruleset::ecn(7, {1, 2}, 4);
    case F::ecn7125:
      return Ruleset::ecn(7, {1, 2}, 5);
    case F::ecn8132:
      return Ruleset::ecn(8, {1, 3}, 2);
    case F::ecn8134:
      return Ruleset::ecn(8, {1, 3}, 4);
    case F::ecn8136:
      return Ruleset::ecn(8, {1, 3}, 6);
    case F::ecn81236:
      return Ruleset::ecn(8, {1, 2, 3}, 6);
    case F::gen_odd_prime: {
      const int h = id.param();
      std::vector<int> steps;
      for (int i = 1; i <= h - 1; ++i) steps.push_back(i);
      return Ruleset::ecn(2 * h + 1, steps, 2 * h - 1);
    }
    case F::gen_even_k2: {
      const int h = id.param();
      std::vector<int> steps;
      for (int i = 1; i <= h; i += 2) steps.push_back(i);
      return Ruleset::ecn(2 * h, steps, 2);
    }
    case F::gen_pow2: {
      const int q = id.param();
      std::vector<int> steps;
      for (int i = 1; i <= (1 << (q - 1)) - 1; i += 2) steps.push_back(i);
      return Ruleset::ecn(1 << q, steps, (1 << q) - 2);
    }
  }
  throw ValidationError("unknown predicate family");
}

}  // namespace ecn
