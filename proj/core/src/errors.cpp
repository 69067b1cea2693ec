#include "shadowlab/errors.hpp"

namespace shadowlab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::InvalidTarget: return "invalid-target";
    case ErrorKind::Overlap: return "overlap";
    case ErrorKind::Uniformity: return "uniformity";
    case ErrorKind::Order: return "order";
    case ErrorKind::Range: return "range";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::LimitExceeded: return "limit-exceeded";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(int line, const std::string& message)
    : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace shadowlab
