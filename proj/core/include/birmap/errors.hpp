#pragma once

#include <stdexcept>
#include <string>

namespace birmap {

enum class ErrorCode {
  ZeroInverse,
  ReducibleModulus,
  NotDivisible,
  DegreeMismatch,
  InvalidParameter,
  ResourceLimit,
  NonLinearFactor,
  NotCollapsed,
  NoInverseAvailable,
  ExtensionNeeded,
  TowerTooDeep,
  NotOnCollapsedCurve,
  IndeterminateJet,
  InconsistentChain,
  UnsupportedListSize,
  UnclassifiableSpectrum,
  DegenerateSolutionSpace,
  NotFiniteOrder,
  FieldMismatch,
  ParseError,
  ValidationError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NonLinearFactor: return "NonLinearFactor";
    case ErrorCode::NotCollapsed: return "NotCollapsed";
    case ErrorCode::NoInverseAvailable: return "NoInverseAvailable";
    case ErrorCode::ExtensionNeeded: return "ExtensionNeeded";
    case ErrorCode::TowerTooDeep: return "TowerTooDeep";
    case ErrorCode::NotOnCollapsedCurve: return "NotOnCollapsedCurve";
    case ErrorCode::IndeterminateJet: return "IndeterminateJet";
    case ErrorCode::InconsistentChain: return "InconsistentChain";
    case ErrorCode::UnsupportedListSize: return "UnsupportedListSize";
    case ErrorCode::UnclassifiableSpectrum: return "UnclassifiableSpectrum";
    case ErrorCode::DegenerateSolutionSpace: return "DegenerateSolutionSpace";
    case ErrorCode::NotFiniteOrder: return "NotFiniteOrder";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Error";
}

}  // namespace birmap
