// Error kinds shared across the library. Each kind maps to one failure
// condition named in a module contract; the CLI maps kinds to exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace pansharp {

enum class ErrorKind {
  NegativeValue,
  DepthOverflow,
  StratumTooSmall,
  SizeNotDivisible,
  BadWeights,
  TileTooLarge,
  ShapeMismatch,
  TooSmall,
  AllBandsDegenerate,
  BadShape,
  BadMode,
  EmptySplit,
  Divergence,
  ConfigMismatch,
  CorruptCheckpoint,
  IoFailure,
  BadConfig,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace pansharp
