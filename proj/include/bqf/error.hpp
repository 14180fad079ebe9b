#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bqf {

enum class ErrorCode {
  InvalidArgument,
  InvalidForm,
  ReducibleForm,
  DegenerateForm,
  DegenerateParameter,
  BasePoint,
  ConicMismatch,
  NotOnConic,
  Singular,
  ZeroValue,
  ValueMismatch,
  DegenerateWitness,
  WrongClass,
  SignMismatch,
  MissingBox,
  ZeroPoint,
  NotOnQuadric,
  VerificationFailure,
};

/// Kebab-case name used in CLI error payloads, e.g. "reducible-form".
std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bqf
