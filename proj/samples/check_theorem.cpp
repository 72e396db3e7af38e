// Check one closed-form predicate against the exhaustive solver and print the report.
#include <cstdio>

#include "ecn/verify.hpp"

int main() {
  using namespace ecn;
  TableCache cache;
  const PredicateId id(PredicateFamily::ecn6124);
  const auto report = verify_predicate(ruleset_for(id), id, 5, cache);
  std::printf("%s\n", report.to_json().dump(2).c_str());
  return report.status == Status::pass ? 0 : 1;
}
