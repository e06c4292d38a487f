#include "ringprob/errors.hpp"

namespace ringprob {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAbelianGroup: return "NotAbelianGroup";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::ZeroNotAbsorbing: return "ZeroNotAbsorbing";
    case ErrorKind::IllDefinedBilinearity: return "IllDefinedBilinearity";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::IllDefinedAMap: return "IllDefinedAMap";
    case ErrorKind::SquareDoesNotCommute: return "SquareDoesNotCommute";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CrossCheckFailed: return "CrossCheckFailed";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace ringprob
