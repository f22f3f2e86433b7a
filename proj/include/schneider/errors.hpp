#pragma once

#include <stdexcept>
#include <string>

namespace schneider {

enum class Errc {
  ZeroArgument,
  DenominatorDivisible,
  NegativeValuation,
  NotAUnit,
  PrimeMismatch,
  NotInDomain,
  NotInPZp,
  EmptyInput,
  InsufficientPrecision,
  BadAlpha,
  BadLevel,
  BadLevels,
  UnspecifiedCase,
  UnclassifiedPsi,
  EmptyGrid,
  TooLarge,
  BudgetExceeded,
  InvalidSpec,
};

/// Precondition violations carry a code so callers (and the CLI) can map
/// them to exit statuses without string matching.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace schneider
