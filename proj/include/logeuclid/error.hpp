#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logeuclid {

enum class ErrorCode {
  InvalidInput,
  ApexHasNoChart,
  ParameterOutOfRange,
  IdenticalPoints,
  ApexOrigin,
  MissingExtensionChoice,
  StraightOrNullAngle,
  ResultWouldBeStraight,
  DegenerateTriangle,
  InvalidResolution,
  OutOfMeshRange,
  NonLocalStep,
  UnsupportedAxiom,
  InsufficientParallels,
  PreconditionViolation,
  MalformedWitness,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (CLI, bindings, harness) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ApexHasNoChart: return "ApexHasNoChart";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::IdenticalPoints: return "IdenticalPoints";
    case ErrorCode::ApexOrigin: return "ApexOrigin";
    case ErrorCode::MissingExtensionChoice: return "MissingExtensionChoice";
    case ErrorCode::StraightOrNullAngle: return "StraightOrNullAngle";
    case ErrorCode::ResultWouldBeStraight: return "ResultWouldBeStraight";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::InvalidResolution: return "InvalidResolution";
    case ErrorCode::OutOfMeshRange: return "OutOfMeshRange";
    case ErrorCode::NonLocalStep: return "NonLocalStep";
    case ErrorCode::UnsupportedAxiom: return "UnsupportedAxiom";
    case ErrorCode::InsufficientParallels: return "InsufficientParallels";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::MalformedWitness: return "MalformedWitness";
  }
  return "Unknown";
}

}  // namespace logeuclid
