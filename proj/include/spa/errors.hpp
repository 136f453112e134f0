#pragma once

#include <stdexcept>

namespace spa {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text; the message carries the offending line number.
struct ParseError : Error {
  using Error::Error;
};

// Structurally readable data that breaks a model invariant.
struct ValidationError : Error {
  using Error::Error;
};

// An operation was called outside its contract (wrong dimension, rank out of
// range, unacceptable pair, wrong solver variant, invalid augmenting path).
struct ContractError : Error {
  using Error::Error;
};

// Generator or benchmark configuration that cannot be satisfied.
struct ConfigError : Error {
  using Error::Error;
};

// Exhaustive enumeration exceeded the oracle budget.
struct BudgetError : Error {
  using Error::Error;
};

// A "cannot happen" condition; indicates a bug rather than bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace spa
