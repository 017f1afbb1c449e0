#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyred {

enum class ErrorKind {
  Parse,
  NotPrime,
  OddCharRequired,
  NoPair,
  BadIdeal,
  BadSymbol,
  LabelViolation,
  NoEmbedding,
  NotApplicable,
  BudgetExceeded,
  NotInvariant,
  Char2Unsupported,
  Unsupported,
  IsotropicRoot,
  DiscriminantPrime,
  HypothesisNotMet,
  NotCGroup,
  NotCorankOne,
  RelationFailure,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a closure would grow past its element budget. Carries the
/// number of distinct elements found before stopping.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t budget, std::size_t partial)
      : Error(ErrorKind::BudgetExceeded,
              "closure exceeded budget " + std::to_string(budget) + " (" +
                  std::to_string(partial) + " elements found)"),
        budget_(budget),
        partial_(partial) {}

  std::size_t budget() const noexcept { return budget_; }
  std::size_t partial_count() const noexcept { return partial_; }

 private:
  std::size_t budget_;
  std::size_t partial_;
};

}  // namespace polyred
