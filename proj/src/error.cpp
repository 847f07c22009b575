#include "sliceq/error.hpp"

namespace sliceq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroDivision: return "ZeroDivision";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NearZeroSet: return "NearZeroSet";
    case ErrorKind::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorKind::ParameterOutOfBall: return "ParameterOutOfBall";
    case ErrorKind::RealPoint: return "RealPoint";
    case ErrorKind::NotReal: return "NotReal";
    case ErrorKind::VanishingHypothesisViolated: return "VanishingHypothesisViolated";
    case ErrorKind::FixedPointViolated: return "FixedPointViolated";
    case ErrorKind::PoleAtMinusOne: return "PoleAtMinusOne";
    case ErrorKind::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case ErrorKind::DivergentAlpha: return "DivergentAlpha";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::ModeHypothesisViolated: return "ModeHypothesisViolated";
    case ErrorKind::RangeHypothesisViolated: return "RangeHypothesisViolated";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_hypothesis_error(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::VanishingHypothesisViolated:
    case ErrorKind::FixedPointViolated:
    case ErrorKind::HypothesisViolated:
    case ErrorKind::ModeHypothesisViolated:
    case ErrorKind::RangeHypothesisViolated:
    case ErrorKind::NotReal:
      return true;
    default:
      return false;
  }
}

}  // namespace sliceq
