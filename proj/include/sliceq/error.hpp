#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sliceq {

enum class ErrorKind {
  ZeroDivision,
  ZeroConstantTerm,
  ZeroDenominator,
  NearZeroSet,
  ResidualTooLarge,
  ParameterOutOfBall,
  RealPoint,
  NotReal,
  VanishingHypothesisViolated,
  FixedPointViolated,
  PoleAtMinusOne,
  RejectionBudgetExceeded,
  DivergentAlpha,
  HypothesisViolated,
  ModeHypothesisViolated,
  RangeHypothesisViolated,
  InvalidArgument,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// True for the kinds that signal a violated theorem hypothesis rather than a
// numerical failure; the CLI maps these to exit code 2.
bool is_hypothesis_error(ErrorKind kind) noexcept;

class SliceError : public std::runtime_error {
 public:
  SliceError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sliceq
