#include "mwc/mwc_set.hpp"

#include <cassert>

#include "mwc/errors.hpp"

namespace mwc {

namespace detail {
MwcSet make_unchecked(VoterSet voters, std::vector<Coalition> members) {
  return MwcSet(std::move(voters), std::move(members));
}
}  // namespace detail

MwcSet validate_mwc_set(VoterSet voters, std::vector<Coalition> candidates) {
  if (candidates.empty()) {
    throw ValidationError(ValidationKind::EmptyFamily,
                          "a voting system needs at least one minimal winning coalition");
  }
  const Coalition grand = voters.grand();
  const int m = static_cast<int>(candidates.size());
  for (int i = 0; i < m; ++i) {
    if (candidates[i].empty()) {
      throw ValidationError(ValidationKind::EmptyCoalitionMember,
                            "the empty coalition cannot be a minimal winning coalition", i);
    }
    if (!candidates[i].subset_of(grand)) {
      throw ValidationError(ValidationKind::CoalitionOutOfRange,
                            "coalition " + std::to_string(i) + " uses voters beyond index " +
                                std::to_string(voters.size() - 1),
                            i);
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (candidates[i] == candidates[j]) {
        throw ValidationError(ValidationKind::DuplicateMember,
                              "coalitions " + std::to_string(i) + " and " + std::to_string(j) +
                                  " are identical",
                              i, j);
      }
      if (candidates[i].subset_of(candidates[j]) || candidates[j].subset_of(candidates[i])) {
        throw ValidationError(ValidationKind::NotAntichain,
                              "coalitions " + std::to_string(i) + " and " + std::to_string(j) +
                                  " are nested; minimal winning coalitions must be incomparable",
                              i, j);
      }
    }
  }
  // Sperner: an antichain over n voters cannot exceed C(n, n/2).
  assert(BigInt(m) <= binomial(voters.size(), voters.size() / 2));
  return MwcSet(std::move(voters), std::move(candidates));
}

WeightedGame::WeightedGame(VoterSet voters, std::vector<Rational> weights, Rational quota)
    : voters_(std::move(voters)), weights_(std::move(weights)), quota_(std::move(quota)) {
  if (weights_.size() != static_cast<std::size_t>(voters_.size())) {
    throw ValidationError(ValidationKind::BadWeight,
                          "expected one weight per voter, got " + std::to_string(weights_.size()) +
                              " for " + std::to_string(voters_.size()) + " voters");
  }
  Rational total;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].sign() < 0) {
      throw ValidationError(ValidationKind::BadWeight,
                            "weight of voter " + voters_.name(static_cast<int>(i)) +
                                " is negative; weights must be nonnegative");
    }
    total += weights_[i];
  }
  if (quota_.sign() <= 0) {
    throw ValidationError(ValidationKind::BadQuota,
                          "quota must be positive, otherwise the empty coalition would win");
  }
  if (quota_ > total) {
    throw ValidationError(ValidationKind::BadQuota,
                          "quota exceeds the total weight, so no coalition could win");
  }
}

Rational WeightedGame::coalition_weight(Coalition a) const {
  Rational sum;
  for_each_voter(a, [&](int v) { sum += weights_[v]; });
  return sum;
}

bool WeightedGame::meets_quota(Coalition a) const { return coalition_weight(a) >= quota_; }

}  // namespace mwc
