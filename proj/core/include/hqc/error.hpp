#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hqc {

enum class ErrorCode {
  InvalidPoint,
  NonFiniteDerivative,
  SingularDenominator,
  TooFewSamples,
  NotHorizontal,
  LeftHalfPlaneViolation,
  NotClosed,
  ZeroImage,
  OrientationReversed,
  DegenerateMap,
  QuadratureNonConvergence,
  NotSymplectic,
  DeterminantViolation,
  DomainViolation,
  MalformedInput,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (notably the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace hqc
