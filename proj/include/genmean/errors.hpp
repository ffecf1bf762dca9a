#pragma once

#include <stdexcept>
#include <string>

namespace genmean {

// Input outside an operation's domain (n = 0, b = 0, s at a pole, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact result or intermediate does not fit the 64/128-bit representation.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A work or memory budget would be exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace genmean
