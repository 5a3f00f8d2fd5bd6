#pragma once

#include <stdexcept>
#include <string>

namespace gradsk {

// Every failure the library reports deliberately.  The CLI maps these to
// exit codes: schema errors -> 1, case/precondition errors -> 2,
// internal invariant breaches -> 3.
enum class Errc {
  // generic / fgab
  InfiniteGroup,
  ElementNotInGroup,
  NotASubgroup,
  HypothesisViolated,
  DimensionMismatch,
  SolveFailed,
  // grading
  NotASublattice,
  InfiniteIndex,
  RankMismatch,
  // algebra
  InconsistentCommutation,
  NonCentralPower,
  InfiniteRamification,
  InsufficientResidueData,
  ResidueTorsionUnknown,
  NotTotallyRamified,
  DegeneratePairing,
  CaseMismatch,
  // involution
  NotAnInvolution,
  KindMismatch,
  CommutationIncompatible,
  InvalidDescriptor,
  NotCentralRatio,
  NoSymmetricElement,
  // sk1
  EEqualsT,
  MuEViolation,
  NotCyclicRamification,
  MissingSubgroupData,
  ModelViolation,
  InternalInvariant,
  // valued
  NotStronglyTame,
  BadRootOrder,
  // cli
  SchemaError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace gradsk
