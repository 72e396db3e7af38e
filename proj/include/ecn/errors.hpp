// Exception types shared by every layer of the engine.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ecn {

/// Malformed input: bad ruleset parameters, bad text syntax, arity mismatch.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A move that is not legal from the position it was applied to.
class IllegalMove : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table would not fit in the configured entry budget.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::size_t required, std::size_t available)
      : std::runtime_error("table capacity exceeded: requires " + std::to_string(required) +
                           " entries, budget allows " + std::to_string(available)),
        required_(required),
        available_(available) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

/// An unsolved ruleset was queried outside the oracle's height budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ecn
