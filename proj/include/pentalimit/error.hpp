#pragma once

#include <stdexcept>
#include <string>

namespace pentalimit {

// Stable error codes. The CLI maps categories of these onto its exit codes.
enum class ErrorCode {
  PointAtInfinity,
  DegenerateJoin,
  DegenerateMeet,
  DegenerateTriple,
  DegenerateOutput,
  NotConvex,
  InvalidInput,
  IterationLimitExceeded,
  NonSimpleEigenvalue,
  EigenvectorAtInfinity,
  NoCandidateInHull,
  AmbiguousSelection,
  SingularTransform,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::PointAtInfinity: return "PointAtInfinity";
    case ErrorCode::DegenerateJoin: return "DegenerateJoin";
    case ErrorCode::DegenerateMeet: return "DegenerateMeet";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::DegenerateOutput: return "DegenerateOutput";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::IterationLimitExceeded: return "IterationLimitExceeded";
    case ErrorCode::NonSimpleEigenvalue: return "NonSimpleEigenvalue";
    case ErrorCode::EigenvectorAtInfinity: return "EigenvectorAtInfinity";
    case ErrorCode::NoCandidateInHull: return "NoCandidateInHull";
    case ErrorCode::AmbiguousSelection: return "AmbiguousSelection";
    case ErrorCode::SingularTransform: return "SingularTransform";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code),
        index_(-1) {}

  // Some failures carry the offending index (vertex/triple/iteration step).
  Error(ErrorCode code, const std::string& what, long index)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what +
                           " (index " + std::to_string(index) + ")"),
        code_(code),
        index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  long index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  long index_;
};

}  // namespace pentalimit
