#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shiftlab {

enum class ErrorKind {
  InvalidParameters,
  OverlappingGroundSets,
  VoidComplex,
  FaceNotInComplex,
  VertexNotPresent,
  WrongCardinality,
  LinkConditionViolated,
  DegreeTooLarge,
  SupportOutOfRange,
  InvalidOrderIdeal,
  NotAPseudomanifoldWithBoundary,
  GinUnavailable,
  NonTerminating,
  HypothesesViolated,
  SingularMatrix,
  RandomnessSuspect,
  DegreeBoundTooSmall,
  PhiNotSquarefree,
  IdentityViolated,
  DimensionMismatch,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit code and a JSON report.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::OverlappingGroundSets: return "OverlappingGroundSets";
    case ErrorKind::VoidComplex: return "VoidComplex";
    case ErrorKind::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorKind::VertexNotPresent: return "VertexNotPresent";
    case ErrorKind::WrongCardinality: return "WrongCardinality";
    case ErrorKind::LinkConditionViolated: return "LinkConditionViolated";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::SupportOutOfRange: return "SupportOutOfRange";
    case ErrorKind::InvalidOrderIdeal: return "InvalidOrderIdeal";
    case ErrorKind::NotAPseudomanifoldWithBoundary: return "NotAPseudomanifoldWithBoundary";
    case ErrorKind::GinUnavailable: return "GinUnavailable";
    case ErrorKind::NonTerminating: return "NonTerminating";
    case ErrorKind::HypothesesViolated: return "HypothesesViolated";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::RandomnessSuspect: return "RandomnessSuspect";
    case ErrorKind::DegreeBoundTooSmall: return "DegreeBoundTooSmall";
    case ErrorKind::PhiNotSquarefree: return "PhiNotSquarefree";
    case ErrorKind::IdentityViolated: return "IdentityViolated";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace shiftlab
