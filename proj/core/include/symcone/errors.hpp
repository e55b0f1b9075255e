#pragma once

#include <stdexcept>
#include <string>

namespace symcone {

// Raised when an operation requiring a pointed cone (e.g. a Hilbert basis)
// receives a non-pointed one; callers should route such inputs through the
// non-pointed/non-positive classification instead.
class NonPointedError : public std::runtime_error {
 public:
  explicit NonPointedError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a computation exceeds its configured budget. Distinct from a
// wrong answer: the caller learns that the result is unknown, never a guess.
class BudgetExhaustedError : public std::runtime_error {
 public:
  explicit BudgetExhaustedError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace symcone
