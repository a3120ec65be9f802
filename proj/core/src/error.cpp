#include "gperiod/error.hpp"

#include <sstream>

namespace gperiod {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidMetric: return "InvalidMetric";
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::GammaOutOfRange: return "GammaOutOfRange";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::ToleranceAmbiguity: return "ToleranceAmbiguity";
    case ErrorCode::ConsistencyViolation: return "ConsistencyViolation";
  }
  return "Unknown";
}

namespace {

std::string not_converged_message(std::size_t residue, double last_step, double gamma_hat) {
  std::ostringstream os;
  os << "subsequence " << residue << " did not converge (last step " << last_step
     << ", gamma estimate " << gamma_hat << ")";
  return os.str();
}

}  // namespace

NotConvergedError::NotConvergedError(std::size_t residue, double last_step, double gamma_hat)
    : Error(ErrorCode::NotConverged, not_converged_message(residue, last_step, gamma_hat)),
      residue_(residue),
      last_step_(last_step),
      gamma_hat_(gamma_hat) {}

}  // namespace gperiod
