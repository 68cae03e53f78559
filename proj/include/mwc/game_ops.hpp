#pragma once

#include <cstdint>

#include "mwc/mwc_set.hpp"

namespace mwc {

// Folds over all 2^m - 1 non-empty sub-families of minimal winning coalitions
// are exponential in m. Rather than silently grinding, they refuse to start
// when the term count would exceed this (overridable) budget.
inline constexpr std::uint64_t kDefaultSubfamilyBudget = std::uint64_t{1} << 30;

// Throws ResourceLimitError(SubfamilyBudgetExceeded) if 2^m - 1 > budget.
// budget must be in [1, 2^62]: sub-family tallies live in signed 64-bit words.
void check_subfamily_budget(int m, std::uint64_t budget);

inline constexpr int kDeriveMaxVoters = 24;

// A coalition wins iff it contains some minimal winning coalition.
bool is_winning(const MwcSet& system, Coalition a);

// Voter w is decisive for a iff w is in a, a wins, and a minus w loses.
bool is_decisive(const MwcSet& system, int voter, Coalition a);

// The minimal winning coalitions of a weighted game: every coalition meeting
// the quota whose single-voter removals all fall below it. Exhaustive over the
// 2^n subsets; throws TooManyVotersForDerivation for n > 24. Output is sorted
// by (cardinality, bitmask value).
MwcSet derive_mwc(const WeightedGame& game);

// True iff no coalition and its complement are both winning, tested as
// pairwise non-disjointness of the minimal winning coalitions.
bool is_proper(const MwcSet& system);

// Number of winning coalitions, computed by inclusion-exclusion over
// sub-families: sum over unions U of sign * 2^(n - #U).
BigInt count_winning(const MwcSet& system, std::uint64_t budget = kDefaultSubfamilyBudget);

}  // namespace mwc
