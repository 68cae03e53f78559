#pragma once

#include <vector>

#include "mwc/direct.hpp"
#include "mwc/mwc_set.hpp"

namespace mwc {

// Exact per-voter values of every supported index. The normalized families
// (pbi, ssi, dp, hp) each sum to exactly 1; dummies (voters in no minimal
// winning coalition) are exactly 0 everywhere.
struct PowerReport {
  VoterSet voters;
  std::vector<BigInt> bs;
  std::vector<Rational> pbp;
  std::vector<Rational> pbi;
  std::vector<Rational> ssi;
  std::vector<Rational> dp;
  std::vector<Rational> hp;
};

// One sub-family traversal for the Banzhaf and Shapley-Shubik columns, plus
// the MWC-native Deegan-Packel and Holler-Packel columns.
PowerReport compute_report(const MwcSet& system, const FoldOptions& opts = {});

}  // namespace mwc
