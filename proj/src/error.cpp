#include "symdiv/error.hpp"

namespace symdiv {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPositive: return "RejectNonPositive";
    case ErrorKind::Length: return "RejectLength";
    case ErrorKind::Sum: return "RejectSum";
    case ErrorKind::NonFinite: return "RejectNonFinite";
    case ErrorKind::ZeroWithNoSmoothing: return "RejectZeroWithNoSmoothing";
    case ErrorKind::AllZero: return "RejectAllZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::NonFiniteRatio: return "NonFiniteRatio";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace symdiv
