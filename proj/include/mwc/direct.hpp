#pragma once

#include <cstdint>
#include <vector>

#include "mwc/game_ops.hpp"

namespace mwc {

struct FoldOptions {
  std::uint64_t budget = kDefaultSubfamilyBudget;  // cap on the 2^m - 1 sub-family terms
  int threads = 0;                                 // 0 = all hardware threads, 1 = serial
};

// Banzhaf scores of all voters from one traversal of the non-empty
// sub-families of minimal winning coalitions:
//   BS_w = sum over sub-families F with w in union(F) of sign(F) * 2^(n - #union(F)),
// sign(F) = +1 for odd |F|, -1 for even. Exact; results are bit-identical for
// any thread count.
std::vector<BigInt> banzhaf_scores(const MwcSet& system, const FoldOptions& opts = {});

// Shapley-Shubik indices, same traversal with per-term value 1 / #union(F).
std::vector<Rational> shapley_shubik(const MwcSet& system, const FoldOptions& opts = {});

struct DirectScores {
  std::vector<BigInt> bs;
  std::vector<Rational> ssi;
};

// Both index families from a single traversal.
DirectScores direct_scores(const MwcSet& system, const FoldOptions& opts = {});

// PBP_w = BS_w / 2^(n-1).
std::vector<Rational> penrose_banzhaf_power(const std::vector<BigInt>& bs, int n);

// PBI_w = BS_w / sum of all scores. The sum is at least 1 because every
// member of a minimal winning coalition is decisive for it.
std::vector<Rational> penrose_banzhaf_index(const std::vector<BigInt>& bs);

// Cumulative partial sums for one voter after processing all sub-families of
// size <= r, for r = 1..m. The last entry equals the batch result. The
// intermediate values swing negative; that is expected, not a bug.
struct BanzhafTrace {
  std::vector<BigInt> cumulative;
};
struct ShapleyShubikTrace {
  std::vector<Rational> cumulative;
};
BanzhafTrace trace_banzhaf(const MwcSet& system, int voter, const FoldOptions& opts = {});
ShapleyShubikTrace trace_shapley_shubik(const MwcSet& system, int voter,
                                        const FoldOptions& opts = {});

// Serial reference implementations. These accumulate every term directly into
// per-voter big integers / rationals at each tree node, with no tallying
// shortcut, and exist to cross-check the kernel. `order` flips the member
// iteration direction; exact arithmetic means it must not change any result.
enum class TraversalOrder { Ascending, Descending };
std::vector<BigInt> banzhaf_scores_reference(const MwcSet& system,
                                             std::uint64_t budget = kDefaultSubfamilyBudget,
                                             TraversalOrder order = TraversalOrder::Ascending);
std::vector<Rational> shapley_shubik_reference(const MwcSet& system,
                                               std::uint64_t budget = kDefaultSubfamilyBudget,
                                               TraversalOrder order = TraversalOrder::Ascending);

namespace detail {
// The fold itself: signed number of sub-families per (voter, union
// cardinality), flattened as tallies[voter * (n + 1) + cardinality]. Scores
// are linear in these tallies, so both index families and the winning-count
// drop out of one traversal. Tallies are bounded by the budget, which
// check_subfamily_budget caps below 2^62.
std::vector<std::int64_t> subfamily_union_tallies(const MwcSet& system, const FoldOptions& opts);
}  // namespace detail

}  // namespace mwc
