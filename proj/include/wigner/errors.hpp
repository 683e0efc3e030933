#pragma once

#include <stdexcept>
#include <string>

namespace wigner {

enum class ErrorCode {
  NonUnitVector,
  NegativeMass,
  ZeroEnergy,
  BelowThreshold,
  NoSolution,
  WrongChannel,
  ChannelMismatch,
  BadQuantumNumbers,
  OutOfRangeCorrelator,
  EmptyGrid,
  NoConvergence,
  BracketFailure,
  SameAxis,
  InvalidDistribution,
  QuadratureUnderResolved,
  DegenerateFit,
  NonPositiveInput,
  UsageError,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonUnitVector: return "NonUnitVector";
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::ZeroEnergy: return "ZeroEnergy";
    case ErrorCode::BelowThreshold: return "BelowThreshold";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::WrongChannel: return "WrongChannel";
    case ErrorCode::ChannelMismatch: return "ChannelMismatch";
    case ErrorCode::BadQuantumNumbers: return "BadQuantumNumbers";
    case ErrorCode::OutOfRangeCorrelator: return "OutOfRangeCorrelator";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BracketFailure: return "BracketFailure";
    case ErrorCode::SameAxis: return "SameAxis";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::QuadratureUnderResolved: return "QuadratureUnderResolved";
    case ErrorCode::DegenerateFit: return "DegenerateFit";
    case ErrorCode::NonPositiveInput: return "NonPositiveInput";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what_arg)
      : std::runtime_error(std::string(error_name(code)) + ": " + what_arg),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace wigner
