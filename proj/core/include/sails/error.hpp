#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sails {

enum class ErrorKind {
  // input / precondition failures
  InvalidArgument,
  ZeroDenominator,
  RationalValue,
  RadicandMismatch,
  DivisionByZero,
  NotUnimodular,
  InvalidPeriod,
  NotPurelyPeriodic,
  NotEquivalent,
  DegenerateSegment,
  DegenerateAngle,
  NotUnimodularArms,
  OriginSprout,
  BadSeed,
  NotAdjacent,
  PreconditionViolated,
  NotHyperbolic,
  IncompatibleCenter,
  ParseError,
  // broken invariants: a checked mathematical fact failed, so the library has a bug
  NonConvergence,
  ShapeViolation,
  InvariantViolation,
};

inline std::string_view to_string(ErrorKind kind) noexcept;

/// True for kinds that signal a falsified invariant rather than bad input.
constexpr bool is_internal(ErrorKind kind) noexcept {
  return kind == ErrorKind::NonConvergence || kind == ErrorKind::ShapeViolation ||
         kind == ErrorKind::InvariantViolation;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::RationalValue: return "RationalValue";
    case ErrorKind::RadicandMismatch: return "RadicandMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::InvalidPeriod: return "InvalidPeriod";
    case ErrorKind::NotPurelyPeriodic: return "NotPurelyPeriodic";
    case ErrorKind::NotEquivalent: return "NotEquivalent";
    case ErrorKind::DegenerateSegment: return "DegenerateSegment";
    case ErrorKind::DegenerateAngle: return "DegenerateAngle";
    case ErrorKind::NotUnimodularArms: return "NotUnimodularArms";
    case ErrorKind::OriginSprout: return "OriginSprout";
    case ErrorKind::BadSeed: return "BadSeed";
    case ErrorKind::NotAdjacent: return "NotAdjacent";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::IncompatibleCenter: return "IncompatibleCenter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace sails
