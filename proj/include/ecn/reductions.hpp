// Classification of ECN rulesets into solved forms, relabelings between isomorphic rulesets,
// and outcome resolution through those reductions.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ecn/classification_fixture.hpp"
#include "ecn/errors.hpp"
#include "ecn/formulas.hpp"
#include "ecn/position.hpp"
#include "ecn/ruleset.hpp"
#include "ecn/solver.hpp"

namespace ecn {

/// Pile relabeling i -> (multiplier * i + offset) mod m.
class RelabelMap {
 public:
  RelabelMap() = default;
  RelabelMap(int piles, int multiplier, int offset) : piles_(piles), mul_(mod(multiplier, piles)), off_(mod(offset, piles)) {
    if (piles < 1) throw ValidationError("relabeling needs at least one pile");
    if (std::gcd(mul_, piles) != 1)
      throw ValidationError("multiplier " + std::to_string(multiplier) + " is not a unit mod " + std::to_string(piles));
  }
  static RelabelMap identity(int piles) { return RelabelMap(piles, 1, 0); }

  int piles() const noexcept { return piles_; }
  int multiplier() const noexcept { return mul_; }
  int offset() const noexcept { return off_; }

  int operator()(int i) const { return mod(mul_ * i + off_, piles_); }

  Face operator()(Face f) const {
    Face out;
    for (int i : f.indices()) out = out.with((*this)(i));
    return out;
  }

  /// Moves pile i's tokens to pile f(i).
  Position apply(const Position& pos) const {
    if (pos.size() != piles_) throw ValidationError("relabeling of " + std::to_string(piles_) + " piles applied to " +
                                                    std::to_string(pos.size()));
    Position out = Position::zeros(piles_);
    for (int i = 0; i < piles_; ++i) out[(*this)(i)] = pos[i];
    return out;
  }

  RelabelMap inverse() const {
    int inv = 1;
    while (mod(inv * mul_, piles_) != mod(1, piles_)) ++inv;
    return RelabelMap(piles_, inv, -inv * off_);
  }

  /// g after this map.
  RelabelMap then(const RelabelMap& g) const {
    if (g.piles_ != piles_) throw ValidationError("cannot compose relabelings of different sizes");
    return RelabelMap(piles_, g.mul_ * mul_, g.mul_ * off_ + g.off_);
  }

  /// "i -> 3i+1 mod 8"
  std::string to_string() const {
    std::string s = "i -> " + (mul_ == 1 ? std::string() : std::to_string(mul_)) + "i";
    if (off_) s += "+" + std::to_string(off_);
    return s + " mod " + std::to_string(piles_);
  }

  friend bool operator==(const RelabelMap&, const RelabelMap&) = default;

 private:
  static int mod(int a, int m) { return m <= 0 ? 0 : ((a % m) + m) % m; }
  int piles_ = 1;
  int mul_ = 1;
  int off_ = 0;
};

/// Whether f carries the faces of `from` exactly onto the faces of `to`.
inline bool is_isomorphism(const RelabelMap& f, const Ruleset& from, const Ruleset& to) {
  if (from.piles() != to.piles() || f.piles() != from.piles()) return false;
  const auto& a = from.faces();
  const auto& b = to.faces();
  if (a.size() != b.size()) return false;
  std::vector<Face> image;
  image.reserve(a.size());
  for (Face face : a) image.push_back(f(face));
  std::sort(image.begin(), image.end());
  return image == b;
}

namespace detail {

inline std::optional<RelabelMap> search_isomorphism(const Ruleset& from, const Ruleset& to) {
  const int m = from.piles();
  for (int c = 1; c < std::max(m, 2); ++c) {
    if (std::gcd(c, m) != 1) continue;
    for (int d = 0; d < m; ++d) {
      RelabelMap f(m, c, d);
      if (is_isomorphism(f, from, to)) return f;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// An affine relabeling i -> c*i + d (c a unit mod m, so reflections are included) carrying
/// the faces of `a` onto those of `b`, or nothing. Candidates are tried with c ascending, then d.
/// The search always runs from the ruleset with the smaller name and the result is inverted
/// when needed, so find_isomorphism(b, a) is the inverse of find_isomorphism(a, b).
inline std::optional<RelabelMap> find_isomorphism(const Ruleset& a, const Ruleset& b) {
  if (a.piles() != b.piles()) return std::nullopt;
  if (a.to_string() <= b.to_string()) return detail::search_isomorphism(a, b);
  auto g = detail::search_isomorphism(b, a);
  if (!g) return std::nullopt;
  return g->inverse();
}

struct ResolvedByPredicate {
  PredicateId id;
};
struct IsomorphicTo {
  Ruleset target;
  RelabelMap map;
};
struct PileMerge {
  std::vector<std::vector<int>> groups;
  Ruleset target;
};
struct SumComponent {
  std::vector<int> piles;
  Ruleset ruleset;
};
struct DisjunctiveSum {
  std::vector<SumComponent> components;
};
struct MooreEquivalent {
  int piles;
  int max_select;
};
struct SinglePile {};
struct Unsolved {};

/// How a ruleset is solved, and the table row (or rule) that says so.
struct Resolution {
  std::variant<Unsolved, ResolvedByPredicate, IsomorphicTo, PileMerge, DisjunctiveSum, MooreEquivalent, SinglePile> how;
  std::string row;

  std::string_view kind() const {
    static constexpr std::string_view names[] = {"Unsolved",       "Predicate",       "IsomorphicTo", "PileMerge",
                                                 "DisjunctiveSum", "MooreEquivalent", "SinglePile"};
    return names[how.index()];
  }
  bool unsolved() const noexcept { return std::holds_alternative<Unsolved>(how); }

  /// One-line rendering, e.g. "IsomorphicTo(ECN(7_{1},4), i -> 4i mod 7)".
  std::string to_string() const {
    return std::visit(
        [&](const auto& r) -> std::string {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, ResolvedByPredicate>) {
            return "Predicate(" + r.id.name() + ")";
          } else if constexpr (std::is_same_v<T, IsomorphicTo>) {
            return "IsomorphicTo(" + r.target.to_string() + ", " + r.map.to_string() + ")";
          } else if constexpr (std::is_same_v<T, PileMerge>) {
            std::string s = "PileMerge(";
            for (const auto& g : r.groups) s += Face::from_indices(g).to_string();
            return s + " -> " + r.target.to_string() + ")";
          } else if constexpr (std::is_same_v<T, DisjunctiveSum>) {
            std::string s = "DisjunctiveSum(";
            for (std::size_t i = 0; i < r.components.size(); ++i) {
              if (i) s += " + ";
              s += r.components[i].ruleset.to_string() + " on " + Face::from_indices(r.components[i].piles).to_string();
            }
            return s + ")";
          } else if constexpr (std::is_same_v<T, MooreEquivalent>) {
            return "MooreEquivalent(MN(" + std::to_string(r.piles) + "," + std::to_string(r.max_select) + "))";
          } else if constexpr (std::is_same_v<T, SinglePile>) {
            return "SinglePile";
          } else {
            return "Unsolved";
          }
        },
        how);
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = kind();
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, ResolvedByPredicate>) {
            j["predicate"] = r.id.name();
          } else if constexpr (std::is_same_v<T, IsomorphicTo>) {
            j["target"] = r.target.to_string();
            j["map"] = {{"multiplier", r.map.multiplier()}, {"offset", r.map.offset()}, {"text", r.map.to_string()}};
          } else if constexpr (std::is_same_v<T, PileMerge>) {
            j["groups"] = r.groups;
            j["target"] = r.target.to_string();
          } else if constexpr (std::is_same_v<T, DisjunctiveSum>) {
            j["components"] = nlohmann::ordered_json::array();
            for (const auto& c : r.components)
              j["components"].push_back({{"piles", c.piles}, {"ruleset", c.ruleset.to_string()}});
          } else if constexpr (std::is_same_v<T, MooreEquivalent>) {
            j["target"] = "MN(" + std::to_string(r.piles) + "," + std::to_string(r.max_select) + ")";
          }
        },
        how);
    j["row"] = row;
    return j;
  }
};

/// Row labels of the three generic rules that apply to every pile count.
inline constexpr std::string_view kRowSingletons = "Table 1: ECN(a_S,1)";
inline constexpr std::string_view kRowAllButOne = "Table 1: ECN(a_S,a-1)";
inline constexpr std::string_view kRowAll = "Table 1: ECN(a_S,a)";

/// One parsed entry of the classification fixture: a k-range of one (m, S) pair.
struct FixtureRow {
  int piles;
  std::vector<int> steps;
  int k_min;
  int k_max;
  std::string row;
  nlohmann::json resolution;
};

namespace detail {

inline std::string substitute_k(std::string text, int k) {
  auto replace = [&](std::string_view key, int value) {
    for (auto at = text.find(key); at != std::string::npos; at = text.find(key))
      text.replace(at, key.size(), std::to_string(value));
  };
  replace("$k4", std::min(4, k));
  replace("$k", k);
  return text;
}

inline std::vector<std::vector<int>> read_groups(const nlohmann::json& j) {
  return j.get<std::vector<std::vector<int>>>();
}

inline Resolution resolution_from_fixture(const FixtureRow& r, int k) {
  const auto& j = r.resolution;
  const std::string kind = j.at("kind").get<std::string>();
  Resolution out;
  out.row = r.row;
  if (kind == "Predicate") {
    out.how = ResolvedByPredicate{PredicateId::parse(j.at("id").get<std::string>())};
  } else if (kind == "IsomorphicTo") {
    out.how = IsomorphicTo{parse_ruleset(substitute_k(j.at("target").get<std::string>(), k)),
                           RelabelMap(r.piles, j.at("multiplier").get<int>(), j.at("offset").get<int>())};
  } else if (kind == "PileMerge") {
    out.how = PileMerge{read_groups(j.at("groups")), parse_ruleset(substitute_k(j.at("target").get<std::string>(), k))};
  } else if (kind == "DisjunctiveSum") {
    DisjunctiveSum sum;
    for (const auto& c : j.at("components"))
      sum.components.push_back(
          {c.at("piles").get<std::vector<int>>(), parse_ruleset(substitute_k(c.at("ruleset").get<std::string>(), k))});
    out.how = std::move(sum);
  } else if (kind == "MooreEquivalent") {
    out.how = MooreEquivalent{r.piles, k};
  } else if (kind == "SinglePile") {
    out.how = SinglePile{};
  } else if (kind == "Unsolved") {
    out.how = Unsolved{};
  } else {
    throw ValidationError("unknown resolution kind \"" + kind + "\" in row " + r.row);
  }
  return out;
}

}  // namespace detail

/// The rows of the embedded classification fixture, in file order.
inline const std::vector<FixtureRow>& fixture_rows() {
  static const std::vector<FixtureRow> rows = [] {
    std::vector<FixtureRow> out;
    auto doc = nlohmann::json::parse(kClassificationFixture);
    for (const auto& r : doc.at("rows")) {
      const auto k = r.at("k").get<std::vector<int>>();
      if (k.size() != 2 || k[0] > k[1]) throw ValidationError("bad k range in fixture row " + r.dump());
      out.push_back({r.at("m").get<int>(), r.at("steps").get<std::vector<int>>(), k[0], k[1],
                     r.at("row").get<std::string>(), r.at("resolution")});
    }
    return out;
  }();
  return rows;
}

/// Every row label a full classification can produce: the fixture rows plus the generic rules.
inline std::vector<std::string> all_row_labels() {
  std::vector<std::string> out{std::string(kRowSingletons), std::string(kRowAllButOne), std::string(kRowAll)};
  for (const auto& r : fixture_rows()) out.push_back(r.row);
  return out;
}

/// The solved form of an ECN ruleset. Rules for k = 1 and k >= m - 1 come first; pile counts 4
/// to 8 with 2 <= k <= m - 2 are looked up in the fixture; larger circles are matched against
/// the general families. Anything else is Unsolved.
inline Resolution classify(const Ruleset& rules) {
  const int m = rules.piles();
  if (!rules.is_ecn()) {
    if (auto k = rules.moore_degree()) return {MooreEquivalent{m, *k}, "Moore's nim"};
    return {Unsolved{}, "simplicial ruleset"};
  }
  const int k = rules.max_select();
  const auto& steps = rules.steps();

  if (k == 1) {
    DisjunctiveSum sum;
    for (int i = 0; i < m; ++i) sum.components.push_back({{i}, Ruleset::moore(1, 1)});
    return {std::move(sum), std::string(kRowSingletons)};
  }
  if (m >= 4 && k >= m - 1) {
    const bool coprime = std::any_of(steps.begin(), steps.end(), [&](int s) { return std::gcd(s, m) == 1; });
    const std::string row(k == m ? kRowAll : kRowAllButOne);
    if (!coprime) return {IsomorphicTo{Ruleset::ecn(m, steps, m - 2), RelabelMap::identity(m)}, row};
    if (k == m) return {SinglePile{}, row};
    return {MooreEquivalent{m, m - 1}, row};
  }
  if (m >= 4 && m <= 8) {
    for (const auto& r : fixture_rows())
      if (r.piles == m && r.steps == steps && r.k_min <= k && k <= r.k_max) return detail::resolution_from_fixture(r, k);
    throw ValidationError("no classification row for " + rules.to_string());
  }
  if (m > 8) {
    if (auto id = predicate_for(rules)) return {ResolvedByPredicate{*id}, "general family " + id->name()};
    return {Unsolved{}, "beyond the tables"};
  }
  return {Unsolved{}, "small circle"};
}

/// An outcome with the chain of reductions that produced it.
struct Resolved {
  Outcome outcome = Outcome::P;
  std::vector<std::string> steps;
  std::optional<int> witness;
  std::optional<std::uint32_t> grundy;

  /// "IsomorphicTo(...) -> CN74" style description.
  std::string method() const {
    std::string s;
    for (std::size_t i = 0; i < steps.size(); ++i) s += (i ? " -> " : "") + steps[i];
    return s;
  }
};

/// Resolves outcomes through classify(). Unsolved rulesets fall back to the brute-force
/// solver, but only for positions whose piles are all at most `budget`; beyond that the
/// resolver refuses with BudgetExceeded rather than guess.
class Resolver {
 public:
  explicit Resolver(TableCache& cache, Height budget = 4) : cache_(cache), budget_(budget) {}

  Height budget() const noexcept { return budget_; }

  Resolved resolve(const Ruleset& rules, const Position& pos) {
    check_position(rules, pos);
    Resolved out;
    if (pos.is_terminal()) {
      out.steps.push_back("direct");
      out.grundy = 0;
      return out;
    }
    step(rules, pos, out, 0);
    return out;
  }

 private:
  void step(const Ruleset& rules, const Position& pos, Resolved& out, int depth) {
    if (depth > 8) throw ValidationError("reduction chain too long at " + rules.to_string());
    const Resolution res = classify(rules);
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, ResolvedByPredicate>) {
            auto result = eval_predicate(r.id, pos);
            out.steps.push_back(r.id.name());
            out.outcome = result.is_p ? Outcome::P : Outcome::N;
            out.witness = result.witness;
          } else if constexpr (std::is_same_v<T, IsomorphicTo>) {
            out.steps.push_back(res.to_string());
            step(r.target, r.map.apply(pos), out, depth + 1);
          } else if constexpr (std::is_same_v<T, PileMerge>) {
            Position merged = Position::zeros(static_cast<int>(r.groups.size()));
            for (std::size_t g = 0; g < r.groups.size(); ++g)
              for (int i : r.groups[g]) merged[static_cast<int>(g)] += pos[i];
            out.steps.push_back(res.to_string());
            step(r.target, merged, out, depth + 1);
          } else if constexpr (std::is_same_v<T, DisjunctiveSum>) {
            std::uint32_t x = 0;
            bool used_oracle = false;
            for (const auto& c : r.components) {
              Position part = Position::zeros(static_cast<int>(c.piles.size()));
              for (std::size_t i = 0; i < c.piles.size(); ++i) part[static_cast<int>(i)] = pos[c.piles[i]];
              if (c.ruleset.piles() == 1) {
                x ^= static_cast<std::uint32_t>(part[0]);
              } else {
                x ^= component_grundy(c.ruleset, part);
                used_oracle = true;
              }
            }
            out.steps.push_back(res.to_string());
            if (used_oracle) out.steps.push_back("grundy oracle(bound=" + std::to_string(budget_) + ")");
            out.outcome = x == 0 ? Outcome::P : Outcome::N;
            out.grundy = x;
          } else if constexpr (std::is_same_v<T, MooreEquivalent>) {
            PredicateId id = r.max_select == 1 ? PredicateId(PredicateFamily::nim_xor)
                                               : PredicateId(PredicateFamily::moore, r.max_select);
            out.steps.push_back(res.to_string());
            out.steps.push_back(id.name());
            out.outcome = eval_predicate(id, pos).is_p ? Outcome::P : Outcome::N;
          } else if constexpr (std::is_same_v<T, SinglePile>) {
            out.steps.push_back("SinglePile");
            out.outcome = pos.is_terminal() ? Outcome::P : Outcome::N;
          } else {
            if (pos.max() > budget_)
              throw BudgetExceeded(rules.to_string() + " has no closed form and position " + pos.to_string() +
                                   " exceeds the oracle budget " + std::to_string(budget_));
            auto tables = oracle_tables(rules, pos);
            out.steps.push_back("oracle(bound=" + std::to_string(budget_) + ")");
            out.outcome = tables->outcomes.at(pos);
            if (tables->grundy) out.grundy = tables->grundy->at(pos);
          }
        },
        res.how);
  }

  std::shared_ptr<const Tables> oracle_tables(const Ruleset& rules, const Position& pos) {
    if (pos.max() <= budget_) return cache_.cube(rules, budget_);
    return cache_.covering(rules, pos);
  }

  std::uint32_t component_grundy(const Ruleset& rules, const Position& part) {
    if (part.max() > budget_)
      throw BudgetExceeded("component " + rules.to_string() + " at " + part.to_string() +
                           " exceeds the oracle budget " + std::to_string(budget_));
    auto tables = oracle_tables(rules, part);
    if (!tables->grundy) throw ValidationError("component tables were built without Grundy values");
    return tables->grundy->at(part);
  }

  TableCache& cache_;
  Height budget_;
};

/// Convenience wrapper around a one-off Resolver.
inline Resolved resolve_outcome(const Ruleset& rules, const Position& pos, Height budget = 4) {
  TableCache cache;
  return Resolver(cache, budget).resolve(rules, pos);
}

}  // namespace ecn
