// HTTP/JSON facade: stateless evaluation endpoints plus in-memory play sessions.
#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "ecn/errors.hpp"
#include "ecn/moves.hpp"
#include "ecn/play.hpp"
#include "ecn/position.hpp"
#include "ecn/reductions.hpp"
#include "ecn/ruleset.hpp"
#include "ecn/solver.hpp"
#include "ecn/verify.hpp"

namespace ecn {

using Json = nlohmann::ordered_json;

struct ServiceOptions {
  /// Height budget for rulesets without a closed form.
  Height budget = 4;
  std::chrono::seconds session_ttl{3600};
  std::size_t page_size = 500;
  std::string cors_origin = "*";
  SolverOptions solver;
  PlayOptions play;
  /// Clock used for session expiry; replaceable in tests.
  std::function<std::chrono::steady_clock::time_point()> now = [] { return std::chrono::steady_clock::now(); };
};

struct HttpResponse {
  int status = 200;
  Json body;
};

/// An error that maps to a specific HTTP status.
class HttpError : public std::runtime_error {
 public:
  HttpError(int status, const std::string& what) : std::runtime_error(what), status_(status) {}
  int status() const noexcept { return status_; }

 private:
  int status_;
};

/// A game in progress. History entries are the moves played, in order, from `initial`.
struct GameSession {
  GameSession(std::string id, Ruleset rules, Position start, std::chrono::steady_clock::time_point now)
      : id(std::move(id)), ruleset(std::move(rules)), initial(start), current(std::move(start)), last_used(now) {}

  std::string id;
  Ruleset ruleset;
  Position initial;
  Position current;
  std::vector<Move> history;
  std::chrono::steady_clock::time_point last_used;
  std::mutex mu;
};

class Service {
 public:
  explicit Service(ServiceOptions opts = {}) : opts_(std::move(opts)), cache_(opts_.solver), rng_(std::random_device{}()) {}

  const ServiceOptions& options() const noexcept { return opts_; }

  /// Dispatches one request. Never throws: every failure becomes an error status with
  /// {"error": message}.
  HttpResponse handle(std::string_view method, std::string_view path, std::string_view body) {
    try {
      return route(method, path, body);
    } catch (const HttpError& e) {
      return {e.status(), Json{{"error", e.what()}}};
    } catch (const IllegalMove& e) {
      return {409, Json{{"error", e.what()}}};
    } catch (const BudgetExceeded& e) {
      return {422, Json{{"error", std::string("budget exceeded, unsolved ruleset: ") + e.what()}}};
    } catch (const CapacityError& e) {
      return {422, Json{{"error", e.what()}}};
    } catch (const ValidationError& e) {
      return {400, Json{{"error", e.what()}}};
    } catch (const nlohmann::json::exception& e) {
      return {400, Json{{"error", std::string("malformed JSON: ") + e.what()}}};
    } catch (const std::exception& e) {
      return {500, Json{{"error", e.what()}}};
    }
  }

  /// Registers every route on `server`, with CORS headers and preflight support.
  void bind(httplib::Server& server) {
    server.set_default_headers(httplib::Headers{{"Access-Control-Allow-Origin", opts_.cors_origin},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    auto forward = [this](const httplib::Request& req, httplib::Response& res) {
      HttpResponse out = handle(req.method, req.path, req.body);
      res.status = out.status;
      res.set_content(out.body.dump(), "application/json");
    };
    server.Get(".*", forward);
    server.Post(".*", forward);
    server.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  }

  std::size_t session_count() {
    std::lock_guard lock(mu_);
    evict_expired();
    return sessions_.size();
  }

 private:
  HttpResponse route(std::string_view method, std::string_view path, std::string_view body) {
    auto parts = split_path(path);
    if (method == "GET" && parts == std::vector<std::string>{"rulesets"}) return {200, rulesets()};
    if (method == "GET" && parts == std::vector<std::string>{"schema"}) return {200, schema()};
    if (method == "POST" && parts == std::vector<std::string>{"evaluate"}) return {200, evaluate(parse_body(body))};
    if (method == "POST" && parts == std::vector<std::string>{"moves"}) return {200, moves(parse_body(body))};
    if (method == "POST" && parts == std::vector<std::string>{"bestmove"}) return {200, bestmove(parse_body(body))};
    if (!parts.empty() && parts[0] == "sessions") {
      if (method == "POST" && parts.size() == 1) return {201, create_session(parse_body(body))};
      if (parts.size() >= 2) {
        auto session = find_session(parts[1]);
        if (method == "GET" && parts.size() == 2) return {200, with_lock(*session, [&] { return describe(*session); })};
        if (method == "POST" && parts.size() == 3 && parts[2] == "move")
          return {200, with_lock(*session, [&] { return human_move(*session, parse_body(body)); })};
        if (method == "POST" && parts.size() == 3 && parts[2] == "engine-move")
          return {200, with_lock(*session, [&] { return engine_reply(*session); })};
      }
    }
    throw HttpError(404, "no route for " + std::string(method) + " " + std::string(path));
  }

  static std::vector<std::string> split_path(std::string_view path) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < path.size()) {
      while (i < path.size() && path[i] == '/') ++i;
      std::size_t j = i;
      while (j < path.size() && path[j] != '/') ++j;
      if (j > i) out.emplace_back(path.substr(i, j - i));
      i = j;
    }
    return out;
  }

  static nlohmann::json parse_body(std::string_view body) {
    auto j = nlohmann::json::parse(body.empty() ? std::string_view("{}") : body);
    if (!j.is_object()) throw ValidationError("request body must be a JSON object");
    return j;
  }

  static std::string field(const nlohmann::json& j, const char* name) {
    if (!j.contains(name) || !j.at(name).is_string())
      throw ValidationError(std::string("missing string field \"") + name + "\"");
    return j.at(name).get<std::string>();
  }

  static std::pair<Ruleset, Position> game_of(const nlohmann::json& j) {
    Ruleset rules = parse_ruleset(field(j, "ruleset"));
    Position pos = parse_position(field(j, "position"));
    check_position(rules, pos);
    return {std::move(rules), std::move(pos)};
  }

  template <class F>
  static Json with_lock(GameSession& s, F&& f) {
    std::lock_guard lock(s.mu);
    return f();
  }

  Json rulesets() {
    std::lock_guard lock(mu_);
    if (catalog_.is_null()) {
      catalog_ = Json::array();
      for (int m = 4; m <= 8; ++m)
        for (const auto& steps : step_sets(m))
          for (int k = 1; k <= m; ++k) {
            const Ruleset r = Ruleset::ecn(m, steps, k);
            catalog_.push_back({{"ruleset", r.to_string()}, {"resolution", classify(r).to_json()}});
          }
    }
    return catalog_;
  }

  static Json schema() {
    auto str = [](const char* example) { return Json{{"type", "string"}, {"example", example}}; };
    auto object = [](Json properties) { return Json{{"type", "object"}, {"properties", std::move(properties)}}; };
    const Json ruleset = str("ECN(6_{1,2},3)");
    const Json position = str("1,2,3,1,2,3");
    const Json move = str("{0,1}:1,2");
    const Json outcome = Json{{"enum", Json::array({"P", "N"})}};
    Json game = object({{"ruleset", ruleset}, {"position", position}});
    game["required"] = Json::array({"ruleset", "position"});
    Json moves_req = game;
    moves_req["properties"]["cursor"] = Json{{"type", "string"}};
    const Json session = object({{"id", Json{{"type", "string"}}},
                                 {"ruleset", ruleset},
                                 {"initial", position},
                                 {"position", position},
                                 {"history", Json{{"type", "array"}, {"items", move}}},
                                 {"outcome", outcome},
                                 {"method", Json{{"type", "string"}}},
                                 {"engine_move", move}});
    Json out;
    out["GET /rulesets"]["response"] = Json{{"type", "array"}};
    out["POST /evaluate"]["request"] = game;
    out["POST /evaluate"]["response"] = object({{"outcome", outcome},
                                                {"method", Json{{"type", "string"}}},
                                                {"steps", Json{{"type", "array"}}},
                                                {"witness", Json{{"type", "integer"}}},
                                                {"grundy", Json{{"type", "integer"}}}});
    out["POST /moves"]["request"] = moves_req;
    out["POST /moves"]["response"] =
        object({{"moves", Json{{"type", "array"}}}, {"next", Json{{"type", Json::array({"string", "null"})}}}});
    out["POST /bestmove"]["request"] = game;
    out["POST /bestmove"]["response"] = object({{"outcome", outcome}, {"move", move}, {"position", position}});
    out["POST /sessions"]["request"] = game;
    out["POST /sessions"]["response"] = session;
    out["POST /sessions/{id}/move"]["request"] = object({{"move", move}, {"position", position}});
    out["POST /sessions/{id}/move"]["response"] = session;
    out["POST /sessions/{id}/engine-move"]["response"] = session;
    out["GET /sessions/{id}"]["response"] = session;
    out["errors"] = Json{{"400", "malformed request"},
                         {"404", "unknown session or route"},
                         {"409", "illegal move"},
                         {"422", "budget exceeded"}};
    return out;
  }

  Resolved resolve(const Ruleset& rules, const Position& pos) {
    Resolver resolver(cache_, opts_.budget);
    return resolver.resolve(rules, pos);
  }

  Json evaluation(const Ruleset& rules, const Position& pos) {
    const Resolved r = resolve(rules, pos);
    Json out = {{"ruleset", rules.to_string()},
                {"position", pos.to_string()},
                {"outcome", to_string(r.outcome)},
                {"method", r.method()},
                {"steps", r.steps}};
    if (r.witness) out["witness"] = *r.witness;
    if (r.grundy) out["grundy"] = *r.grundy;
    return out;
  }

  Json evaluate(const nlohmann::json& req) {
    auto [rules, pos] = game_of(req);
    return evaluation(rules, pos);
  }

  static std::string token_for(const Ruleset& rules, const Position& pos, std::size_t offset) {
    const auto h = std::hash<std::string>{}(rules.to_string() + "|" + pos.to_string());
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::to_string(offset) + "." + buf;
  }

  Json moves(const nlohmann::json& req) {
    auto [rules, pos] = game_of(req);
    std::size_t offset = 0;
    if (req.contains("cursor") && !req.at("cursor").is_null()) {
      const std::string cursor = req.at("cursor").get<std::string>();
      const auto dot = cursor.find('.');
      std::size_t parsed = 0;
      try {
        parsed = dot == std::string::npos ? 0 : std::stoull(cursor.substr(0, dot));
      } catch (const std::exception&) {
        throw ValidationError("malformed cursor");
      }
      if (dot == std::string::npos || token_for(rules, pos, parsed) != cursor)
        throw ValidationError("cursor does not belong to this ruleset and position");
      offset = parsed;
    }
    Json list = Json::array();
    std::size_t index = 0;
    bool more = false;
    for_each_move(rules, pos, [&](const Move& mv) {
      if (index++ < offset) return true;
      if (list.size() == opts_.page_size) {
        more = true;
        return false;
      }
      list.push_back({{"move", mv.to_string()}, {"position", apply_move(pos, mv).to_string()}});
      return true;
    });
    return {{"ruleset", rules.to_string()},
            {"position", pos.to_string()},
            {"offset", offset},
            {"moves", list},
            {"next", more ? Json(token_for(rules, pos, offset + list.size())) : Json(nullptr)}};
  }

  Json bestmove(const nlohmann::json& req) {
    auto [rules, pos] = game_of(req);
    Resolver resolver(cache_, opts_.budget);
    auto mv = best_move(resolver, rules, pos, opts_.play);
    if (!mv) return {{"outcome", "P"}};
    return {{"outcome", "N"}, {"move", mv->to_string()}, {"position", apply_move(pos, *mv).to_string()}};
  }

  std::string new_id() {
    static constexpr char hex[] = "0123456789abcdef";
    std::string id;
    for (int i = 0; i < 16; ++i) id += hex[rng_() % 16];
    return id;
  }

  void evict_expired() {
    const auto now = opts_.now();
    for (auto it = sessions_.begin(); it != sessions_.end();) {
      std::unique_lock slock(it->second->mu, std::try_to_lock);
      if (slock.owns_lock() && now - it->second->last_used > opts_.session_ttl)
        it = sessions_.erase(it);
      else
        ++it;
    }
  }

  std::shared_ptr<GameSession> find_session(const std::string& id) {
    std::lock_guard lock(mu_);
    evict_expired();
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw HttpError(404, "unknown session " + id);
    std::lock_guard slock(it->second->mu);
    it->second->last_used = opts_.now();
    return it->second;
  }

  Json create_session(const nlohmann::json& req) {
    auto [rules, pos] = game_of(req);
    auto s = std::make_shared<GameSession>("", rules, pos, opts_.now());
    {
      std::lock_guard lock(mu_);
      evict_expired();
      do s->id = new_id();
      while (sessions_.count(s->id));
      sessions_.emplace(s->id, s);
    }
    std::lock_guard slock(s->mu);
    return describe(*s);
  }

  Json describe(GameSession& s) {
    Json history = Json::array();
    for (const auto& mv : s.history) history.push_back(mv.to_string());
    Json out = {{"id", s.id},
                {"ruleset", s.ruleset.to_string()},
                {"initial", s.initial.to_string()},
                {"position", s.current.to_string()},
                {"history", history}};
    try {
      const Resolved r = resolve(s.ruleset, s.current);
      out["outcome"] = to_string(r.outcome);
      out["method"] = r.method();
    } catch (const BudgetExceeded&) {
      out["outcome"] = nullptr;
      out["method"] = "budget exceeded";
    }
    return out;
  }

  Json human_move(GameSession& s, const nlohmann::json& req) {
    Move mv;
    if (req.contains("move"))
      mv = parse_move(field(req, "move"), s.ruleset.piles());
    else if (req.contains("position"))
      mv = move_between(s.current, parse_position(field(req, "position")));
    else
      throw ValidationError("expected \"move\" or \"position\"");
    check_move(s.ruleset, s.current, mv);
    s.current = apply_move(s.current, mv);
    s.history.push_back(std::move(mv));
    return describe(s);
  }

  Json engine_reply(GameSession& s) {
    Resolver resolver(cache_, opts_.budget);
    const Outcome before = resolver.resolve(s.ruleset, s.current).outcome;
    Move mv = engine_move(resolver, s.ruleset, s.current, opts_.play);
    Position next = apply_move(s.current, mv);
    if (before == Outcome::N && resolver.resolve(s.ruleset, next).outcome != Outcome::P)
      throw std::logic_error("engine left an N-position without reaching P");
    s.current = std::move(next);
    s.history.push_back(mv);
    Json out = describe(s);
    out["engine_move"] = mv.to_string();
    return out;
  }

  ServiceOptions opts_;
  TableCache cache_;
  std::mutex mu_;
  std::mt19937_64 rng_;
  std::map<std::string, std::shared_ptr<GameSession>> sessions_;
  Json catalog_;
};

}  // namespace ecn
