#include "hqc/error.hpp"

namespace hqc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::NonFiniteDerivative: return "NonFiniteDerivative";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::NotHorizontal: return "NotHorizontal";
    case ErrorCode::LeftHalfPlaneViolation: return "LeftHalfPlaneViolation";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::ZeroImage: return "ZeroImage";
    case ErrorCode::OrientationReversed: return "OrientationReversed";
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::DeterminantViolation: return "DeterminantViolation";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace hqc
