#include "semihilbert/errors.hpp"

namespace semihilbert {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotABounded: return "NotABounded";
    case ErrorKind::NotAdjointable: return "NotAdjointable";
    case ErrorKind::RankZero: return "RankZero";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::GeneratorFailed: return "GeneratorFailed";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ShapeError: return "ShapeError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

}  // namespace semihilbert
