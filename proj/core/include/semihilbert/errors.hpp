#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semihilbert {

enum class ErrorKind {
  NotHermitian,
  NotPSD,
  NoConvergence,
  NegativeEntry,
  DimensionMismatch,
  NotABounded,
  NotAdjointable,
  RankZero,
  PreconditionFailed,
  GeneratorFailed,
  ConfigError,
  ParseError,
  ShapeError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library; the message is prefixed with the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace semihilbert
