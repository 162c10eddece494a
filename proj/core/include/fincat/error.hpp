#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fincat {

enum class ErrorCode {
  OutOfRange,
  DomainMismatch,
  NotAProductDomain,
  NotParallel,
  NotMono,
  CodomainMismatch,
  UnknownKind,
  InvalidInput,
  NotAdjoint,
  PointwiseKanMissing,
  NotEndofunctor,
  MalformedConstraint,
  UnknownName,
  UnknownTheorem,
  SignatureKindMismatch,
  DuplicateLabel,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the engine is reported as an Error carrying
/// a machine-readable code. Absence of a limit or a failed law check is a
/// value, never an Error.
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
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotAProductDomain: return "NotAProductDomain";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::NotMono: return "NotMono";
    case ErrorCode::CodomainMismatch: return "CodomainMismatch";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotAdjoint: return "NotAdjoint";
    case ErrorCode::PointwiseKanMissing: return "PointwiseKanMissing";
    case ErrorCode::NotEndofunctor: return "NotEndofunctor";
    case ErrorCode::MalformedConstraint: return "MalformedConstraint";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::SignatureKindMismatch: return "SignatureKindMismatch";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
  }
  return "Unknown";
}

}  // namespace fincat
