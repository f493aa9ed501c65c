#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symdiv {

enum class ErrorKind {
  NonPositive,
  Length,
  Sum,
  NonFinite,
  ZeroWithNoSmoothing,
  AllZero,
  DimensionMismatch,
  Domain,
  DenominatorVanishes,
  NonFiniteRatio,
  UnknownId,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` tells callers which
/// contract was broken without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace symdiv
