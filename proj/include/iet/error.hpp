#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iet {

enum class ErrorKind {
  NotABijection,
  InvalidSize,
  EmptyResult,
  InvalidInput,
  NonPositiveLength,
  DimensionMismatch,
  OutOfDomain,
  InvalidBound,
  DegenerateSegment,
  ReduciblePermutation,
  NonPositiveParameter,
  DomainViolation,
  LemmaViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace iet
