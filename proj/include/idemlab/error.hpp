#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idemlab {

enum class ErrorKind {
  WellDefinednessViolation,
  AssociativityViolation,
  UnitViolation,
  ShapeMismatch,
  CapExceeded,
  NotAnIdeal,
  NotIdempotent,
  ZeroIdempotent,
  NotInvertible,
  RingMismatch,
  WitnessInvalid,
  NotSemicentral,
  NotIsomorphic,
  PipelineAssertionFailed,
  IllFormedModule,
  ParseError,
  CoordinateOutOfRange,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::WellDefinednessViolation: return "WellDefinednessViolation";
    case ErrorKind::AssociativityViolation: return "AssociativityViolation";
    case ErrorKind::UnitViolation: return "UnitViolation";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::ZeroIdempotent: return "ZeroIdempotent";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::WitnessInvalid: return "WitnessInvalid";
    case ErrorKind::NotSemicentral: return "NotSemicentral";
    case ErrorKind::NotIsomorphic: return "NotIsomorphic";
    case ErrorKind::PipelineAssertionFailed: return "PipelineAssertionFailed";
    case ErrorKind::IllFormedModule: return "IllFormedModule";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CoordinateOutOfRange: return "CoordinateOutOfRange";
  }
  return "Unknown";
}

// All library failures are reported through this one exception type; the
// kind is the machine-readable part, the message names offending indices.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the conjugator pipeline; any such failure on a finite ring
// contradicts the conjugacy result for that input.
class PipelineAssertionFailed : public AlgebraError {
 public:
  PipelineAssertionFailed(std::string stage, const std::string& detail)
      : AlgebraError(ErrorKind::PipelineAssertionFailed,
                     "stage '" + stage + "': " + detail),
        stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace idemlab
