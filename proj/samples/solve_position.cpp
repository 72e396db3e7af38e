// Classify a ruleset, decide a position and print a winning move if there is one.
#include <cstdio>

#include "ecn/play.hpp"

int main() {
  using namespace ecn;
  const Ruleset rules = parse_ruleset("ECN(7_{1,2},5)");
  const Position pos = parse_position("0,4,4,1,3,4,5");

  std::printf("%s: %s\n", rules.to_string().c_str(), classify(rules).to_string().c_str());

  TableCache cache;
  Resolver resolver(cache, 4);
  const auto r = resolver.resolve(rules, pos);
  std::printf("%s is %s  (%s)\n", pos.to_string().c_str(), r.outcome == Outcome::P ? "P" : "N", r.method().c_str());

  if (const auto mv = best_move(resolver, rules, pos))
    std::printf("play %s -> %s\n", mv->to_string().c_str(), apply_move(pos, *mv).to_string().c_str());
}
