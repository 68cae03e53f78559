#pragma once

#include <vector>

#include "mwc/coalition.hpp"
#include "mwc/rational.hpp"

namespace mwc {

class MwcSet;

namespace detail {
// Construction bypassing the antichain check, for producers that guarantee it
// (weighted-game derivation, exhaustive enumeration). User input always goes
// through validate_mwc_set.
MwcSet make_unchecked(VoterSet voters, std::vector<Coalition> members);
}  // namespace detail

// A voting system given by its minimal winning coalitions: a non-empty
// antichain of non-empty coalitions. Member order is preserved from input.
class MwcSet {
 public:
  const VoterSet& voters() const { return voters_; }
  int voter_count() const { return voters_.size(); }
  int size() const { return static_cast<int>(members_.size()); }
  Coalition member(int i) const { return members_[i]; }
  const std::vector<Coalition>& members() const { return members_; }

 private:
  MwcSet(VoterSet voters, std::vector<Coalition> members)
      : voters_(std::move(voters)), members_(std::move(members)) {}

  friend MwcSet validate_mwc_set(VoterSet voters, std::vector<Coalition> candidates);
  friend MwcSet detail::make_unchecked(VoterSet voters, std::vector<Coalition> members);

  VoterSet voters_;
  std::vector<Coalition> members_;
};

// Establishes the MwcSet invariants on a candidate family, preserving input
// order. Throws ValidationError: EmptyFamily, EmptyCoalitionMember,
// CoalitionOutOfRange, DuplicateMember(i,j), NotAntichain(i,j).
MwcSet validate_mwc_set(VoterSet voters, std::vector<Coalition> candidates);

// A voting system given by per-voter nonnegative weights and a quota: a
// coalition wins iff its weight meets or exceeds the quota. Requires
// 0 < quota <= total weight so the empty coalition loses and the grand
// coalition wins.
class WeightedGame {
 public:
  WeightedGame(VoterSet voters, std::vector<Rational> weights, Rational quota);

  const VoterSet& voters() const { return voters_; }
  int voter_count() const { return voters_.size(); }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& quota() const { return quota_; }

  Rational coalition_weight(Coalition a) const;
  bool meets_quota(Coalition a) const;

 private:
  VoterSet voters_;
  std::vector<Rational> weights_;
  Rational quota_;
};

}  // namespace mwc
