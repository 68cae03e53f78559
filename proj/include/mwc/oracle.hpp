#pragma once

#include <vector>

#include "mwc/mwc_set.hpp"

namespace mwc {

// The brute-force cap: definitional scans enumerate all 2^n coalitions.
inline constexpr int kOracleMaxVoters = 24;

// Banzhaf score straight from the definition: the number of winning coalitions
// the voter is decisive for, found by scanning every coalition. No
// inclusion-exclusion anywhere in this module — these scans are the
// independent ground truth the direct formulas are checked against.
std::vector<BigInt> oracle_banzhaf(const MwcSet& system, int threads = 0);

// Shapley-Shubik index from the definition: sum of
// (n - #S)! (#S - 1)! / n! over the coalitions S the voter is decisive for.
std::vector<Rational> oracle_ssi(const MwcSet& system, int threads = 0);

// Deegan-Packel: DP_w = (1/m) * sum over minimal winning coalitions V
// containing w of 1/#V.
std::vector<Rational> deegan_packel(const MwcSet& system);

// Holler-Packel: HP_w = (number of minimal winning coalitions containing w)
// normalized by the total membership count over all voters.
std::vector<Rational> holler_packel(const MwcSet& system);

// Direct summation of sum_{l=k..n} C(n-k, l-k) (n-l)! (l-1)! / n!, the total
// Shapley-Shubik weight of all supersets of a fixed k-coalition. Equals 1/k;
// the identity underpins the per-term value of the direct Shapley-Shubik
// formula. Requires 1 <= k <= n <= 20.
Rational filter_weight_sum(int n, int k);

}  // namespace mwc
