#pragma once

#include <stdexcept>
#include <string>

namespace mwc {

// Structural problems in user-supplied input. The CLI maps these to exit code 2.
enum class ValidationKind {
  NoVoters,
  TooManyVoters,
  EmptyVoterName,
  DuplicateVoterName,
  EmptyFamily,
  EmptyCoalitionMember,
  DuplicateMember,
  NotAntichain,
  CoalitionOutOfRange,
  ZeroDenominator,
  BadNumber,
  BadWeight,
  BadQuota,
  UnknownVoter,
  BadDocument,
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationKind kind, std::string msg, int first = -1, int second = -1)
      : std::runtime_error(std::move(msg)), kind_(kind), first_(first), second_(second) {}

  ValidationKind kind() const noexcept { return kind_; }
  // Offending member positions for DuplicateMember / NotAntichain, -1 otherwise.
  int first() const noexcept { return first_; }
  int second() const noexcept { return second_; }

 private:
  ValidationKind kind_;
  int first_;
  int second_;
};

// Work would exceed a hard cap on exhaustive computation. Exit code 3 in the CLI.
enum class LimitKind {
  SubfamilyBudgetExceeded,
  TooManyVotersForOracle,
  TooManyVotersForDerivation,
  AtlasSizeExceeded,
};

class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(LimitKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}

  LimitKind kind() const noexcept { return kind_; }

 private:
  LimitKind kind_;
};

}  // namespace mwc
