// Exhaustive checks of closed-form claims against the brute-force solver, and report export.
#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "ecn/errors.hpp"
#include "ecn/formulas.hpp"
#include "ecn/position.hpp"
#include "ecn/reductions.hpp"
#include "ecn/ruleset.hpp"
#include "ecn/solver.hpp"

namespace ecn {

enum class Status { pass, fail, incomplete, skipped };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::incomplete:
      return "INCOMPLETE";
    case Status::skipped:
      return "SKIPPED";
  }
  return "?";
}

struct Mismatch {
  Position position;
  Outcome claimed;
  Outcome truth;
};

struct VerificationReport {
  std::string ruleset;
  std::string method;  // predicate name or resolution tag
  std::string kind;    // predicate, reduction, generalization, sum-law, consistency, unsolved
  std::string row;
  Height bound = 0;
  std::string mode = "raw";
  std::uint64_t positions_checked = 0;
  std::uint64_t mismatch_count = 0;
  std::vector<Mismatch> mismatches;  // the first `mismatch_cap` of them, in sweep order
  double wall_time = 0;
  Status status = Status::pass;
  std::string note;

  bool passed() const noexcept { return status == Status::pass || status == Status::skipped; }

  nlohmann::ordered_json to_json(bool with_timing = true) const {
    nlohmann::ordered_json j;
    j["ruleset"] = ruleset;
    j["method"] = method;
    j["kind"] = kind;
    j["row"] = row;
    j["bound"] = bound;
    j["mode"] = mode;
    j["positions_checked"] = positions_checked;
    j["mismatch_count"] = mismatch_count;
    j["mismatches"] = nlohmann::ordered_json::array();
    for (const auto& mm : mismatches)
      j["mismatches"].push_back(
          {{"position", mm.position.to_string()}, {"claim", to_string(mm.claimed)}, {"oracle", to_string(mm.truth)}});
    j["status"] = to_string(status);
    if (!note.empty()) j["note"] = note;
    j["wall_time"] = with_timing ? wall_time : 0.0;
    return j;
  }
};

struct VerifyOptions {
  std::size_t mismatch_cap = 100;
  /// Sweep one representative per dihedral orbit (the lexicographically smallest image)
  /// instead of every position.
  bool orbit = false;
  SolverOptions solver;
};

/// A claimed outcome for each position.
using Claim = std::function<Outcome(const Position&)>;

namespace detail {

struct SweepResult {
  std::uint64_t checked = 0;
  std::uint64_t mismatch_count = 0;
  std::vector<Mismatch> mismatches;
};

/// Compares `claim` with `truth(idx)` over every index of `box`. Workers take contiguous
/// index ranges (i.e. position prefixes) and the partial results are merged in range order,
/// so the outcome does not depend on the thread count.
template <class Truth>
SweepResult sweep(const Box& box, const Claim& claim, Truth&& truth, const VerifyOptions& opts) {
  const std::size_t n = box.size();
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(opts.solver), std::max<std::size_t>(1, n / 4096)));
  std::vector<SweepResult> parts(workers);
  auto run = [&](unsigned w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    SweepResult& out = parts[w];
    for (std::size_t idx = begin; idx < end; ++idx) {
      Position pos = box.position_at(idx);
      if (opts.orbit && canonical(pos) != pos) continue;
      ++out.checked;
      const Outcome expected = truth(idx);
      const Outcome claimed = claim(pos);
      if (claimed != expected) {
        ++out.mismatch_count;
        if (out.mismatches.size() < opts.mismatch_cap) out.mismatches.push_back({std::move(pos), claimed, expected});
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
  }
  SweepResult total;
  for (auto& p : parts) {
    total.checked += p.checked;
    total.mismatch_count += p.mismatch_count;
    for (auto& mm : p.mismatches)
      if (total.mismatches.size() < opts.mismatch_cap) total.mismatches.push_back(std::move(mm));
  }
  return total;
}

inline void finish(VerificationReport& r, SweepResult&& s, std::chrono::steady_clock::time_point start) {
  r.positions_checked = s.checked;
  r.mismatch_count = s.mismatch_count;
  r.mismatches = std::move(s.mismatches);
  r.status = r.mismatch_count == 0 ? Status::pass : Status::fail;
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

inline Claim claim_of(const Predicate& p) {
  return [p](const Position& pos) { return p(pos).is_p ? Outcome::P : Outcome::N; };
}

}  // namespace detail

/// Checks `claim` against the solver on every position of `rules` with all heights at most B.
/// A table that does not fit yields an INCOMPLETE report instead of a partial sweep.
inline VerificationReport verify_claim(const Ruleset& rules, const Claim& claim, Height bound, std::string method,
                                       TableCache& cache, const VerifyOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.ruleset = rules.to_string();
  r.method = std::move(method);
  r.kind = "predicate";
  r.bound = bound;
  r.mode = opts.orbit ? "orbit" : "raw";
  if (opts.orbit && !rules.is_ecn()) throw ValidationError("orbit sweeps need a rotation-invariant (ECN) ruleset");
  std::shared_ptr<const Tables> tables;
  try {
    check_capacity(Box::cube(rules.piles(), bound), cache.options());
    tables = cache.cube(rules, bound);
  } catch (const CapacityError& e) {
    r.status = Status::incomplete;
    r.note = e.what();
    return r;
  }
  const OutcomeTable& truth = tables->outcomes;
  detail::finish(r, detail::sweep(truth.box(), claim, [&](std::size_t idx) { return truth.at_index(idx); }, opts),
                 start);
  return r;
}

inline VerificationReport verify_predicate(const Ruleset& rules, const Predicate& pred, Height bound,
                                           TableCache& cache, const VerifyOptions& opts = {}) {
  return verify_claim(rules, detail::claim_of(pred), bound, pred.id().name(), cache, opts);
}

inline VerificationReport verify_predicate(const Ruleset& rules, const PredicateId& id, Height bound,
                                           TableCache& cache, const VerifyOptions& opts = {}) {
  return verify_predicate(rules, Predicate(id), bound, cache, opts);
}

inline VerificationReport verify_predicate(const Ruleset& rules, const PredicateId& id, Height bound,
                                           const VerifyOptions& opts = {}) {
  TableCache cache(opts.solver);
  return verify_predicate(rules, id, bound, cache, opts);
}

/// Audits classify(rules) by resolving every position with heights at most B through the
/// reduction chain and comparing with the solver on `rules` itself.
inline VerificationReport verify_reduction(const Ruleset& rules, Height bound, TableCache& cache,
                                           const VerifyOptions& opts = {}) {
  const Resolution res = classify(rules);
  Resolver resolver(cache, bound);
  VerificationReport r = verify_claim(
      rules, [&](const Position& pos) { return resolver.resolve(rules, pos).outcome; }, bound, res.to_string(), cache,
      opts);
  r.kind = "reduction";
  r.row = res.row;
  return r;
}

/// Set equality of two predicates on every position of `piles` piles with heights at most B.
/// Mismatches record the first predicate's claim against the second's.
inline VerificationReport verify_equivalence(const PredicateId& a, const PredicateId& b, int piles, Height bound,
                                             const VerifyOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.ruleset = ruleset_for(b, piles).to_string();
  r.method = a.name() + " == " + b.name();
  r.kind = "generalization";
  r.bound = bound;
  const Box box = Box::cube(piles, bound);
  check_capacity(box, opts.solver);
  const Predicate pa(a);
  const Predicate pb(b);
  detail::finish(
      r, detail::sweep(box, detail::claim_of(pa), [&](std::size_t idx) { return detail::claim_of(pb)(box.position_at(idx)); }, opts),
      start);
  return r;
}

/// Piles of one component of a compound game, with that component's ruleset.
struct Component {
  std::vector<int> piles;
  Ruleset ruleset;
};

namespace detail {

inline Position restrict_to(const Position& pos, const std::vector<int>& piles) {
  Position part = Position::zeros(static_cast<int>(piles.size()));
  for (std::size_t i = 0; i < piles.size(); ++i) part[static_cast<int>(i)] = pos[piles[i]];
  return part;
}

inline std::string describe(const std::vector<Component>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += (i ? " + " : "") + parts[i].ruleset.to_string() + " on " + Face::from_indices(parts[i].piles).to_string();
  return s;
}

}  // namespace detail

/// Checks that `rules` behaves as the disjunctive sum of `parts`: the XOR of component Grundy
/// values (each from its own solver table) decides the outcome.
inline VerificationReport verify_disjunctive_sum(const Ruleset& rules, const std::vector<Component>& parts,
                                                 Height bound, TableCache& cache, const VerifyOptions& opts = {}) {
  std::vector<std::shared_ptr<const Tables>> tables;
  for (const auto& p : parts) tables.push_back(cache.cube(p.ruleset, bound));
  auto r = verify_claim(
      rules,
      [&](const Position& pos) {
        std::vector<std::uint32_t> g;
        for (std::size_t i = 0; i < parts.size(); ++i) g.push_back(tables[i]->grundy->at(detail::restrict_to(pos, parts[i].piles)));
        return disjunctive_outcome(g);
      },
      bound, "disjunctive_outcome(" + detail::describe(parts) + ")", cache, opts);
  r.kind = "sum-law";
  return r;
}

/// Checks that `rules` behaves as the selective sum of `parts`: P iff every component is P.
inline VerificationReport verify_selective_sum(const Ruleset& rules, const std::vector<Component>& parts,
                                               Height bound, TableCache& cache, const VerifyOptions& opts = {}) {
  std::vector<std::shared_ptr<const Tables>> tables;
  for (const auto& p : parts) tables.push_back(cache.cube(p.ruleset, bound));
  auto r = verify_claim(
      rules,
      [&](const Position& pos) {
        std::vector<Outcome> o;
        for (std::size_t i = 0; i < parts.size(); ++i) o.push_back(tables[i]->outcomes.at(detail::restrict_to(pos, parts[i].piles)));
        return selective_outcome(o);
      },
      bound, "selective_outcome(" + detail::describe(parts) + ")", cache, opts);
  r.kind = "sum-law";
  return r;
}

/// Internal consistency of one solver table: Grundy value 0 exactly on P-positions over the
/// whole table, and equal outcomes across all dihedral images of `samples` random positions.
/// Mismatch entries name the offending position; `claimed` is the value that disagreed.
inline VerificationReport verify_self_consistency(const Ruleset& rules, Height bound, TableCache& cache,
                                                  std::size_t samples = 10000, std::uint64_t seed = 1,
                                                  const VerifyOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.ruleset = rules.to_string();
  r.method = "grundy-outcome agreement + dihedral invariance";
  r.kind = "consistency";
  r.bound = bound;
  auto tables = cache.cube(rules, bound);
  const auto& out = tables->outcomes;
  auto record = [&](Position pos, Outcome claimed, Outcome truth) {
    ++r.mismatch_count;
    if (r.mismatches.size() < opts.mismatch_cap) r.mismatches.push_back({std::move(pos), claimed, truth});
  };
  if (tables->grundy) {
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
      ++r.positions_checked;
      const Outcome from_grundy = tables->grundy->at_index(idx) == 0 ? Outcome::P : Outcome::N;
      if (from_grundy != out.at_index(idx)) record(out.box().position_at(idx), from_grundy, out.at_index(idx));
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Height> height(0, bound);
  if (rules.is_ecn()) {
    for (std::size_t s = 0; s < samples; ++s) {
      Position pos = Position::zeros(rules.piles());
      for (int i = 0; i < rules.piles(); ++i) pos[i] = height(rng);
      ++r.positions_checked;
      const Outcome o = out.at(pos);
      for (const auto& img : dihedral_images(pos))
        if (out.at(img) != o) record(img, out.at(img), o);
    }
  }
  r.status = r.mismatch_count == 0 ? Status::pass : Status::fail;
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// The predicates a full run checks directly, each on the ruleset it characterizes.
inline std::vector<PredicateId> theorem_predicates() {
  using F = PredicateFamily;
  std::vector<PredicateId> out;
  for (F f : {F::cn42, F::cn52, F::cn53, F::cn63, F::cn64, F::ecn6122, F::ecn6123, F::ecn6124, F::ecn6132,
              F::ecn6233, F::cn74, F::ecn7124, F::ecn7125, F::cn86, F::ecn8132, F::ecn8134, F::ecn8136, F::ecn81236})
    out.emplace_back(f);
  return out;
}

enum class MutationOperator { negate, drop };

/// A single-clause mutation of a predicate's base set.
struct Mutant {
  std::string description;  // e.g. "CN52 alt 0 negate n1 = n4"
  Predicate predicate;
};

/// One mutant per (alternative, clause): the clause replaced by its negation, or removed.
inline std::vector<Mutant> mutants_of(const PredicateId& id, MutationOperator op = MutationOperator::negate) {
  const BaseSet base = base_set(id);
  std::vector<Mutant> out;
  for (std::size_t a = 0; a < base.alternatives.size(); ++a) {
    for (std::size_t c = 0; c < base.alternatives[a].size(); ++c) {
      const Clause& clause = base.alternatives[a][c];
      BaseSet mutated = base;
      auto& alt = mutated.alternatives[a];
      if (op == MutationOperator::drop)
        alt.erase(alt.begin() + static_cast<std::ptrdiff_t>(c));
      else
        alt[c] = {"not(" + clause.name + ")", [t = clause.test](Piles n) { return !t(n); }};
      out.push_back({id.name() + " alt " + std::to_string(a) + (op == MutationOperator::drop ? " drop " : " negate ") +
                         clause.name,
                     Predicate(id, std::move(mutated))});
    }
  }
  return out;
}

struct MutationSummary {
  std::size_t total = 0;
  std::size_t killed = 0;
  std::vector<std::string> survivors;
};

/// Runs every mutant of every theorem predicate against the solver at bound B.
inline MutationSummary run_mutations(MutationOperator op, Height bound, TableCache& cache,
                                     const VerifyOptions& opts = {}) {
  MutationSummary out;
  for (const auto& id : theorem_predicates()) {
    const Ruleset rules = ruleset_for(id);
    for (const auto& mu : mutants_of(id, op)) {
      ++out.total;
      if (verify_predicate(rules, mu.predicate, bound, cache, opts).mismatch_count > 0)
        ++out.killed;
      else
        out.survivors.push_back(mu.description);
    }
  }
  return out;
}

/// Default sweep bounds: 5 for m <= 6, 4 for m = 7, 3 for m = 8 and beyond.
inline Height default_bound(int piles) { return piles <= 6 ? 5 : piles == 7 ? 4 : 3; }

/// Default reduction-audit bounds: 3 for m <= 6, 2 beyond.
inline Height default_reduction_bound(int piles) { return piles <= 6 ? 3 : 2; }

struct SuiteOptions {
  /// Per-ruleset bound overrides keyed by ruleset text, e.g. "ECN(6_{1,2},3)".
  std::map<std::string, Height> bounds;
  /// Bound for every item that has no per-ruleset override.
  std::optional<Height> all_bounds;
  /// Replacement claims for directly-solved rows, keyed by ruleset text.
  std::map<std::string, Claim> claim_overrides;
  bool generalizations = true;
  bool sum_laws = true;
  int min_piles = 4;
  int max_piles = 8;
  VerifyOptions verify;
};

struct RowCoverage {
  std::string row;
  std::string tag;  // verified, reduced, unsolved-skipped
  std::size_t items = 0;
  Status status = Status::pass;
};

struct SuiteReport {
  std::vector<VerificationReport> items;
  std::vector<RowCoverage> coverage;

  bool passed() const {
    return std::all_of(items.begin(), items.end(), [](const auto& r) { return r.passed(); });
  }
  std::size_t count(Status s) const {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [s](const auto& r) { return r.status == s; }));
  }
};

/// All nonempty step sets for m piles, ordered by size and then lexicographically.
inline std::vector<std::vector<int>> step_sets(int piles) {
  std::vector<std::vector<int>> out;
  const int h = piles / 2;
  for (unsigned mask = 1; mask < (1U << h); ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= h; ++i)
      if ((mask >> (i - 1)) & 1U) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// The generalization instances checked by a full run: family member vs. the small-case
/// predicate it should coincide with.
inline std::vector<std::pair<PredicateId, PredicateId>> generalization_instances() {
  using F = PredicateFamily;
  return {{PredicateId(F::gen_odd_prime, 2), PredicateId(F::cn53)},
          {PredicateId(F::gen_even_k2, 2), PredicateId(F::cn42)},
          {PredicateId(F::gen_even_k2, 3), PredicateId(F::ecn6132)},
          {PredicateId(F::gen_even_k2, 4), PredicateId(F::ecn8132)},
          {PredicateId(F::gen_pow2, 2), PredicateId(F::cn42)},
          {PredicateId(F::gen_pow2, 3), PredicateId(F::ecn8136)}};
}

/// Sum-law checks: two disjunctive and two selective decompositions.
inline std::vector<VerificationReport> verify_sum_laws(Height bound, TableCache& cache, const VerifyOptions& opts = {}) {
  const std::vector<int> even4{0, 2, 4, 6}, odd4{1, 3, 5, 7};
  std::vector<VerificationReport> out;
  for (int k : {2, 3}) {
    const Ruleset part = Ruleset::ecn(4, {1}, k);
    out.push_back(verify_disjunctive_sum(Ruleset::ecn(8, {2}, k), {{even4, part}, {odd4, part}}, bound, cache, opts));
  }
  const Ruleset nim3 = Ruleset::moore(3, 1);
  out.push_back(verify_selective_sum(Ruleset::ecn(6, {1, 3}, 2), {{{0, 2, 4}, nim3}, {{1, 3, 5}, nim3}}, bound, cache, opts));
  const Ruleset nim2 = Ruleset::moore(2, 1);
  out.push_back(verify_selective_sum(Ruleset::ecn(8, {1, 3}, 4),
                                     {{{0, 4}, nim2}, {{1, 5}, nim2}, {{2, 6}, nim2}, {{3, 7}, nim2}}, bound, cache, opts));
  return out;
}

/// Every classified ruleset with min_piles <= m <= max_piles and 1 <= k <= m: directly-solved
/// rows against their predicate, reduced rows through the reduction chain, unsolved rows as
/// explicit skips; then the generalization and sum-law checks.
inline SuiteReport verify_all(const SuiteOptions& opts = {}) {
  TableCache cache(opts.verify.solver);
  SuiteReport suite;
  auto bound_for = [&](const std::string& name, Height fallback) {
    if (auto it = opts.bounds.find(name); it != opts.bounds.end()) return it->second;
    return opts.all_bounds.value_or(fallback);
  };
  std::map<std::string, RowCoverage> rows;
  for (int m = opts.min_piles; m <= opts.max_piles; ++m) {
    for (const auto& steps : step_sets(m)) {
      for (int k = 1; k <= m; ++k) {
        const Ruleset rules = Ruleset::ecn(m, steps, k);
        const std::string name = rules.to_string();
        const Resolution res = classify(rules);
        VerificationReport r;
        std::string tag;
        if (res.unsolved()) {
          r.ruleset = name;
          r.method = "Unsolved";
          r.kind = "unsolved";
          r.status = Status::skipped;
          r.note = "no closed form; skipped";
          r.mode = "none";
          tag = "unsolved-skipped";
        } else if (const auto* p = std::get_if<ResolvedByPredicate>(&res.how)) {
          const Height b = bound_for(name, default_bound(m));
          if (auto it = opts.claim_overrides.find(name); it != opts.claim_overrides.end())
            r = verify_claim(rules, it->second, b, p->id.name() + " (override)", cache, opts.verify);
          else
            r = verify_predicate(rules, p->id, b, cache, opts.verify);
          tag = "verified";
        } else {
          r = verify_reduction(rules, bound_for(name, default_reduction_bound(m)), cache, opts.verify);
          tag = "reduced";
        }
        r.row = res.row;
        auto& cov = rows[res.row];
        cov.row = res.row;
        cov.tag = tag;
        ++cov.items;
        if (!r.passed()) cov.status = r.status;
        suite.items.push_back(std::move(r));
      }
    }
    // Reduction tables are only reused within one pile count.
    cache.clear();
  }
  for (const auto& label : all_row_labels())
    if (auto it = rows.find(label); it != rows.end()) suite.coverage.push_back(it->second);

  if (opts.generalizations) {
    for (const auto& [gen, small] : generalization_instances()) {
      const int piles = ruleset_for(small).piles();
      auto r = verify_equivalence(gen, small, piles, opts.all_bounds.value_or(3), opts.verify);
      suite.items.push_back(std::move(r));
    }
  }
  if (opts.sum_laws) {
    for (auto& r : verify_sum_laws(opts.all_bounds.value_or(3), cache, opts.verify)) suite.items.push_back(std::move(r));
  }
  return suite;
}

enum class ReportFormat { json, csv };

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// JSON array (one object per report, fixed field order) or CSV with a header row. Mismatch
/// positions use the usual "0,1,0" text; in CSV they are joined with ';'.
inline std::string export_report(const std::vector<VerificationReport>& reports, ReportFormat format,
                                 bool with_timing = true) {
  if (format == ReportFormat::json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(r.to_json(with_timing));
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "ruleset,method,kind,row,bound,mode,positions_checked,mismatch_count,status,wall_time,mismatches\n";
  for (const auto& r : reports) {
    std::string mm;
    for (std::size_t i = 0; i < r.mismatches.size(); ++i) mm += (i ? ";" : "") + r.mismatches[i].position.to_string();
    std::ostringstream t;
    t << (with_timing ? r.wall_time : 0.0);
    out << detail::csv_field(r.ruleset) << ',' << detail::csv_field(r.method) << ',' << r.kind << ','
        << detail::csv_field(r.row) << ',' << r.bound << ',' << r.mode << ',' << r.positions_checked << ','
        << r.mismatch_count << ',' << to_string(r.status) << ',' << t.str() << ',' << detail::csv_field(mm) << '\n';
  }
  return out.str();
}

/// Suite report with its coverage table, as JSON.
inline nlohmann::ordered_json suite_to_json(const SuiteReport& suite, bool with_timing = true) {
  nlohmann::ordered_json j;
  j["status"] = suite.passed() ? "PASS" : "FAIL";
  j["counts"] = {{"pass", suite.count(Status::pass)},
                 {"fail", suite.count(Status::fail)},
                 {"incomplete", suite.count(Status::incomplete)},
                 {"skipped", suite.count(Status::skipped)}};
  j["coverage"] = nlohmann::ordered_json::array();
  for (const auto& c : suite.coverage)
    j["coverage"].push_back({{"row", c.row}, {"tag", c.tag}, {"items", c.items}, {"status", to_string(c.status)}});
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : suite.items) j["reports"].push_back(r.to_json(with_timing));
  return j;
}

}  // namespace ecn
