#include "mwc/report.hpp"

#include <cassert>

#include "mwc/oracle.hpp"

namespace mwc {

PowerReport compute_report(const MwcSet& system, const FoldOptions& opts) {
  const int n = system.voter_count();
  DirectScores scores = direct_scores(system, opts);
  std::vector<Rational> pbp = penrose_banzhaf_power(scores.bs, n);
  std::vector<Rational> pbi = penrose_banzhaf_index(scores.bs);
  PowerReport report{
      system.voters(),      std::move(scores.bs),  std::move(pbp),       std::move(pbi),
      std::move(scores.ssi), deegan_packel(system), holler_packel(system),
  };
#ifndef NDEBUG
  Rational pbi_sum, ssi_sum, dp_sum, hp_sum;
  for (int w = 0; w < n; ++w) {
    pbi_sum += report.pbi[w];
    ssi_sum += report.ssi[w];
    dp_sum += report.dp[w];
    hp_sum += report.hp[w];
    assert(report.bs[w] >= 0 && report.bs[w] <= big_pow2(n - 1));
  }
  assert(pbi_sum == Rational(1) && ssi_sum == Rational(1));
  assert(dp_sum == Rational(1) && hp_sum == Rational(1));
#endif
  return report;
}

}  // namespace mwc
