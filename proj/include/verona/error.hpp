#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace verona {

enum class ErrorKind {
  EmptyAmbient,
  DimensionMismatch,
  DegenerateEvaluation,
  SingularMap,
  DuplicateParameter,
  GeneralPositionViolation,
  NotNormalized,
  NotCodimOne,
  NoConic,
  CoframeDegenerate,
  RankDrop,
  DegenerateFrame,
  NotEnoughSamples,
  NotDirectSum,
  SingularOperator,
  ParseError,
  ValidationError,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyAmbient: return "EmptyAmbient";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateEvaluation: return "DegenerateEvaluation";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::DuplicateParameter: return "DuplicateParameter";
    case ErrorKind::GeneralPositionViolation: return "GeneralPositionViolation";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotCodimOne: return "NotCodimOne";
    case ErrorKind::NoConic: return "NoConic";
    case ErrorKind::CoframeDegenerate: return "CoframeDegenerate";
    case ErrorKind::RankDrop: return "RankDrop";
    case ErrorKind::DegenerateFrame: return "DegenerateFrame";
    case ErrorKind::NotEnoughSamples: return "NotEnoughSamples";
    case ErrorKind::NotDirectSum: return "NotDirectSum";
    case ErrorKind::SingularOperator: return "SingularOperator";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& context)
      : std::runtime_error(std::string(error_name(kind)) + ": " + context),
        kind_(kind),
        context_(context) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }
  const std::string& context() const noexcept { return context_; }

 private:
  ErrorKind kind_;
  std::string context_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& context) {
  throw Error(kind, context);
}

inline void require(bool condition, ErrorKind kind, const std::string& context) {
  if (!condition) fail(kind, context);
}

}  // namespace verona
