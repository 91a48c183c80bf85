#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clonedl {

enum class ErrorKind {
  SyntaxError,
  UnknownConnective,
  ArityMismatch,
  UnboundVariable,
  TooManyVariables,
  EmptyArgs,
  ArityUnsupported,
  UnknownClone,
  NotAffine,
  ShapeMismatch,
  EngineCloneMismatch,
  DefaultCountTooLarge,
  NotThreeCnf,
  MalformedChain,
  EmptyDisjunction,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` identifies the failure.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures caused by a size cap rather than malformed input.
  bool is_cap_exceeded() const noexcept {
    return kind_ == ErrorKind::TooManyVariables || kind_ == ErrorKind::DefaultCountTooLarge;
  }

private:
  ErrorKind kind_;
};

}  // namespace clonedl
