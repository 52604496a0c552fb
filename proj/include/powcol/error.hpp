#pragma once

#include <stdexcept>
#include <string>

namespace powcol {

// Malformed input: bad indices, unparsable files, unsatisfiable parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A move that breaks the rules of the marking game. The engine rejects, it never repairs.
class RuleViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An operation invoked on a game state that does not satisfy its precondition.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A strategy produced an illegal move.
class StrategyFault : public std::runtime_error {
 public:
  StrategyFault(std::string strategy, const std::string& what)
      : std::runtime_error("strategy '" + strategy + "': " + what), strategy_(std::move(strategy)) {}

  const std::string& strategy() const noexcept { return strategy_; }

 private:
  std::string strategy_;
};

// Instance too large for an exhaustive routine.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Bound formula evaluated outside its domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace powcol
