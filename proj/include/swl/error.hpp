#pragma once

#include <stdexcept>
#include <string>

namespace swl {

// Violated precondition or failed domain check. The CLI maps this to exit 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rewrite or reduction loop ran out of its step budget.
class FuelExhausted : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed input text (expressions, fixtures, command-line vectors). Exit 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Step budget for rewriting loops; honours the SWL_FUEL environment variable.
long long fuel_budget(long long fallback);

}  // namespace swl
