#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace binlr {

/// Shapes or indices that do not conform.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed .bmx / .smx input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search refused to start because its size exceeds the budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what + ": search space " + std::to_string(required) +
                           " exceeds budget " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  /// Saturates at UINT64_MAX when the true size overflows.
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace binlr
