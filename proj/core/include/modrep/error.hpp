#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modrep {

/// Every failure the library reports carries one of these codes.
enum class Errc {
  NonPrimeP,
  ReducibleModulus,
  OrderTooLarge,
  DimensionMismatch,
  NotSquare,
  FieldMismatch,
  BadIndex,
  MixedParents,
  SearchBudgetExceeded,
  NotNormal,
  GroupTooLarge,
  InvalidGroupMap,
  GroupMismatch,
  InvalidModule,
  IsoUndecided,
  NotIndecomposable,
  TooLarge,
  NotHEquivariant,
  CriteriaDisagree,
  IndexDivisibleByP,
  NoSourceFound,
  LevelMismatch,
  MonotonicityViolated,
  IncompatibleSubgroupTower,
  HypothesisViolated,
  NotIndecomposableAtLevel,
  InternalAssertion,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Internal consistency trap. Firing means a bug, never bad input.
inline void check(bool condition, const char* what) {
  if (!condition) fail(Errc::InternalAssertion, what);
}

}  // namespace modrep
