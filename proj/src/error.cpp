#include "bqf/error.hpp"

namespace bqf {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::InvalidForm: return "invalid-form";
    case ErrorCode::ReducibleForm: return "reducible-form";
    case ErrorCode::DegenerateForm: return "degenerate-form";
    case ErrorCode::DegenerateParameter: return "degenerate-parameter";
    case ErrorCode::BasePoint: return "base-point";
    case ErrorCode::ConicMismatch: return "conic-mismatch";
    case ErrorCode::NotOnConic: return "not-on-conic";
    case ErrorCode::Singular: return "singular";
    case ErrorCode::ZeroValue: return "zero-value";
    case ErrorCode::ValueMismatch: return "value-mismatch";
    case ErrorCode::DegenerateWitness: return "degenerate-witness";
    case ErrorCode::WrongClass: return "wrong-class";
    case ErrorCode::SignMismatch: return "sign-mismatch";
    case ErrorCode::MissingBox: return "missing-box";
    case ErrorCode::ZeroPoint: return "zero-point";
    case ErrorCode::NotOnQuadric: return "not-on-quadric";
    case ErrorCode::VerificationFailure: return "verification-failure";
  }
  return "unknown";
}

}  // namespace bqf
