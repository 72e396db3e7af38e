// Command-line front end: classify, eval, moves, best, grundy, table, verify, serve.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ecn/formulas.hpp"
#include "ecn/play.hpp"
#include "ecn/reductions.hpp"
#include "ecn/service.hpp"
#include "ecn/solver.hpp"
#include "ecn/table_io.hpp"
#include "ecn/verify.hpp"

namespace {

using ecn::Json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Common {
  std::string ruleset;
  std::string position;
  bool json = false;
  unsigned threads = 0;
  ecn::Height budget = 4;
};

void emit(const Json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text << '\n';
}

void write_out(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << data;
}

int run_classify(const Common& c) {
  const auto rules = ecn::parse_ruleset(c.ruleset);
  const auto res = ecn::classify(rules);
  Json j = {{"ruleset", rules.to_string()}, {"resolution", res.to_json()}};
  emit(j, c.json, rules.to_string() + ": " + res.to_string() + "  [" + res.row + "]");
  return 0;
}

int run_eval(const Common& c) {
  const auto rules = ecn::parse_ruleset(c.ruleset);
  const auto pos = ecn::parse_position(c.position);
  ecn::TableCache cache(ecn::SolverOptions{.threads = c.threads});
  const auto r = ecn::Resolver(cache, c.budget).resolve(rules, pos);
  Json j = {{"ruleset", rules.to_string()}, {"position", pos.to_string()}, {"outcome", ecn::to_string(r.outcome)},
            {"method", r.method()}};
  if (r.witness) j["witness"] = *r.witness;
  if (r.grundy) j["grundy"] = *r.grundy;
  emit(j, c.json, std::string(ecn::to_string(r.outcome)) + "  method=" + r.method());
  return 0;
}

int run_moves(const Common& c, std::size_t limit) {
  const auto rules = ecn::parse_ruleset(c.ruleset);
  const auto pos = ecn::parse_position(c.position);
  Json list = Json::array();
  std::ostringstream text;
  std::size_t count = 0;
  bool truncated = false;
  ecn::for_each_move(rules, pos, [&](const ecn::Move& mv) {
    if (limit != 0 && count == limit) {
      truncated = true;
      return false;
    }
    ++count;
    const auto next = ecn::apply_move(pos, mv);
    list.push_back({{"move", mv.to_string()}, {"position", next.to_string()}});
    text << mv.to_string() << " -> " << next.to_string() << '\n';
    return true;
  });
  if (truncated) text << "... (stopped after " << limit << " moves)\n";
  emit({{"ruleset", rules.to_string()}, {"position", pos.to_string()}, {"moves", list}, {"truncated", truncated}},
       c.json, text.str() + std::to_string(count) + " moves");
  return 0;
}

int run_best(const Common& c) {
  const auto rules = ecn::parse_ruleset(c.ruleset);
  const auto pos = ecn::parse_position(c.position);
  ecn::TableCache cache(ecn::SolverOptions{.threads = c.threads});
  ecn::Resolver resolver(cache, c.budget);
  const auto mv = ecn::best_move(resolver, rules, pos);
  if (!mv) {
    emit({{"outcome", "P"}}, c.json, "position is P");
    return 0;
  }
  const auto next = ecn::apply_move(pos, *mv);
  emit({{"outcome", "N"}, {"move", mv->to_string()}, {"position", next.to_string()}}, c.json,
       mv->to_string() + " -> " + next.to_string());
  return 0;
}

int run_grundy(const Common& c) {
  const auto rules = ecn::parse_ruleset(c.ruleset);
  const auto pos = ecn::parse_position(c.position);
  const auto g = ecn::grundy(rules, pos, ecn::SolverOptions{.threads = c.threads});
  emit({{"ruleset", rules.to_string()}, {"position", pos.to_string()}, {"grundy", g}}, c.json, std::to_string(g));
  return 0;
}

int run_table(const Common& c, ecn::Height bound, const std::string& format, const std::string& out_path) {
  const auto rules = ecn::parse_ruleset(c.ruleset);
  const ecn::SolverOptions opts{.threads = c.threads};
  const auto dir = ecn::default_cache_dir();
  const ecn::Tables t = dir ? ecn::load_or_build(rules, bound, *dir, opts) : ecn::build_tables(rules, bound, opts);
  std::ostringstream buf;
  if (format == "csv") {
    ecn::write_tables_csv(buf, t);
  } else {
    if (out_path.empty() || out_path == "-") throw ecn::ValidationError("binary tables need --out PATH");
    ecn::write_tables(buf, t);
  }
  write_out(out_path, buf.str());
  if (!out_path.empty() && out_path != "-")
    std::cerr << rules.to_string() << " B=" << bound << ": " << t.outcomes.size() << " positions, "
              << t.outcomes.count_p() << " P\n";
  return 0;
}

struct VerifyArgs {
  bool all = false;
  std::optional<ecn::Height> bound;
  std::string predicate;
  std::string format = "json";
  std::string out;
  bool orbit = false;
  bool mutations = false;
};

int run_verify(const Common& c, const VerifyArgs& v) {
  ecn::VerifyOptions opts;
  opts.orbit = v.orbit;
  opts.solver.threads = c.threads;
  const auto fmt = v.format == "csv" ? ecn::ReportFormat::csv : ecn::ReportFormat::json;
  if (v.mutations) {
    ecn::TableCache cache(opts.solver);
    const ecn::Height b = v.bound.value_or(2);
    Json j = Json::object();
    bool all_killed = true;
    for (auto op : {ecn::MutationOperator::negate, ecn::MutationOperator::drop}) {
      const auto s = ecn::run_mutations(op, b, cache, opts);
      const char* name = op == ecn::MutationOperator::negate ? "negate" : "drop";
      j[name] = {{"total", s.total}, {"killed", s.killed}, {"survivors", s.survivors}};
      if (op == ecn::MutationOperator::negate) all_killed = s.killed == s.total;
    }
    write_out(v.out, j.dump(2) + "\n");
    return all_killed ? 0 : kExitFail;
  }
  if (v.all) {
    ecn::SuiteOptions sopts;
    sopts.verify = opts;
    sopts.all_bounds = v.bound;
    const auto suite = ecn::verify_all(sopts);
    if (fmt == ecn::ReportFormat::json)
      write_out(v.out, ecn::suite_to_json(suite).dump(2) + "\n");
    else
      write_out(v.out, ecn::export_report(suite.items, fmt));
    std::cerr << "verify --all: " << suite.count(ecn::Status::pass) << " PASS, " << suite.count(ecn::Status::fail)
              << " FAIL, " << suite.count(ecn::Status::incomplete) << " INCOMPLETE, "
              << suite.count(ecn::Status::skipped) << " SKIPPED\n";
    return suite.passed() ? 0 : kExitFail;
  }
  if (c.ruleset.empty()) throw ecn::ValidationError("verify needs --ruleset or --all");
  const auto rules = ecn::parse_ruleset(c.ruleset);
  ecn::TableCache cache(opts.solver);
  ecn::VerificationReport r;
  const auto res = ecn::classify(rules);
  if (!v.predicate.empty()) {
    r = ecn::verify_predicate(rules, ecn::PredicateId::parse(v.predicate), v.bound.value_or(ecn::default_bound(rules.piles())), cache, opts);
  } else if (const auto* p = std::get_if<ecn::ResolvedByPredicate>(&res.how)) {
    r = ecn::verify_predicate(rules, p->id, v.bound.value_or(ecn::default_bound(rules.piles())), cache, opts);
    r.row = res.row;
  } else if (res.unsolved()) {
    r.ruleset = rules.to_string();
    r.method = "Unsolved";
    r.kind = "unsolved";
    r.mode = "none";
    r.row = res.row;
    r.status = ecn::Status::skipped;
    r.note = "no closed form; skipped";
  } else {
    r = ecn::verify_reduction(rules, v.bound.value_or(ecn::default_reduction_bound(rules.piles())), cache, opts);
  }
  write_out(v.out, ecn::export_report({r}, fmt));
  std::cerr << r.ruleset << " " << r.method << " B=" << r.bound << ": " << ecn::to_string(r.status) << " ("
            << r.positions_checked << " positions, " << r.mismatch_count << " mismatches)\n";
  return r.passed() ? 0 : kExitFail;
}

int run_serve(const Common& c, const std::string& host, int port) {
  ecn::ServiceOptions opts;
  opts.budget = c.budget;
  opts.solver.threads = c.threads;
  ecn::Service service(opts);
  httplib::Server server;
  service.bind(server);
  std::cerr << "listening on " << host << ":" << port << '\n';
  return server.listen(host, port) ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended circular nim: evaluation, solving, and theorem verification"};
  app.require_subcommand(1, 1);
  Common c;
  app.add_option("--threads", c.threads, "Worker threads for table builds (0 = all cores)");

  auto game_opts = [&](CLI::App* sub, bool needs_pos) {
    sub->add_option("-r,--ruleset", c.ruleset, "Ruleset, e.g. \"ECN(6_{1,2},3)\"")->required();
    if (needs_pos) sub->add_option("-p,--pos", c.position, "Position, e.g. \"1,2,3,1,2,3\"")->required();
    sub->add_flag("--json", c.json, "Machine-readable output");
  };
  auto budget_opt = [&](CLI::App* sub) {
    sub->add_option("--budget", c.budget, "Largest height the oracle handles for unsolved rulesets")
        ->capture_default_str();
  };

  auto* classify = app.add_subcommand("classify", "Show how a ruleset is solved");
  game_opts(classify, false);
  auto* eval = app.add_subcommand("eval", "Outcome class of a position");
  game_opts(eval, true);
  budget_opt(eval);
  std::size_t limit = 0;
  auto* moves = app.add_subcommand("moves", "List legal moves");
  game_opts(moves, true);
  moves->add_option("--limit", limit, "Stop after this many moves (0 = all)");
  auto* best = app.add_subcommand("best", "A winning move, if any");
  game_opts(best, true);
  budget_opt(best);
  auto* grundy = app.add_subcommand("grundy", "Grundy value by exhaustive search");
  game_opts(grundy, true);

  ecn::Height bound = 0;
  std::string table_format = "bin";
  std::string table_out;
  auto* table = app.add_subcommand("table", "Build the table of all positions with heights <= B");
  table->add_option("-r,--ruleset", c.ruleset, "Ruleset")->required();
  table->add_option("-B,--bound", bound, "Height bound")->required();
  table->add_option("--format", table_format, "bin or csv")->check(CLI::IsMember({"bin", "csv"}))->capture_default_str();
  table->add_option("-o,--out", table_out, "Output file (csv defaults to stdout)");

  VerifyArgs v;
  auto* verify = app.add_subcommand("verify", "Check closed forms against the solver");
  verify->add_option("-r,--ruleset", c.ruleset, "Ruleset to verify");
  verify->add_flag("--all", v.all, "Run every row of the classification, plus generalization and sum-law checks");
  verify->add_option("-B,--bound", v.bound, "Height bound (default depends on m)");
  verify->add_option("--predicate", v.predicate, "Check this predicate instead of the classified one");
  verify->add_option("--format", v.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  verify->add_option("-o,--out", v.out, "Output file (default stdout)");
  verify->add_flag("--orbit", v.orbit, "Sweep one position per dihedral orbit");
  verify->add_flag("--mutations", v.mutations, "Run the clause-mutation sensitivity check");

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Start the HTTP API");
  serve->add_option("--host", host, "Bind address")->capture_default_str();
  serve->add_option("--port", port, "Port")->capture_default_str();
  budget_opt(serve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify) return run_classify(c);
    if (*eval) return run_eval(c);
    if (*moves) return run_moves(c, limit);
    if (*best) return run_best(c);
    if (*grundy) return run_grundy(c);
    if (*table) return run_table(c, bound, table_format, table_out);
    if (*verify) return run_verify(c, v);
    if (*serve) return run_serve(c, host, port);
  } catch (const ecn::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const ecn::BudgetExceeded& e) {
    std::cerr << "budget exceeded, unsolved ruleset: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ecn::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
