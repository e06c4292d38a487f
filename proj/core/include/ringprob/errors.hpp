#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringprob {

enum class ErrorKind {
  InvalidArgument,
  NotAbelianGroup,
  NotAssociative,
  NotDistributive,
  ZeroNotAbsorbing,
  IllDefinedBilinearity,
  RingMismatch,
  CapExceeded,
  NotClosed,
  NotAnIdeal,
  NotASubgroup,
  NotNested,
  NotContained,
  InvalidWitness,
  IllDefinedAMap,
  SquareDoesNotCommute,
  UnknownBuiltin,
  ParseError,
  CrossCheckFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this type; `kind()` is stable,
// `what()` carries the offending tuple or line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ringprob
