#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace convdiff {

enum class ErrorCode {
  MalformedTable,
  NoIdentity,
  NoInverse,
  NotAssociative,
  SizeGuardExceeded,
  NotGenerating,
  Redundant,
  NotReflexive,
  EmptyFilter,
  NotContinuous,
  NotCayley,
  HypothesisViolated,
  PreconditionViolated,
  WindowTooSmall,
  DimMismatch,
  NotDifferentiable,
  ParseError,
  InvalidArgument,
  // Two independent routes to the same theorem disagreed. Always a bug.
  CrossCheckFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace convdiff
