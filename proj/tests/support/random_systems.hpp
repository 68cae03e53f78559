#pragma once

#include <random>

#include "mwc/mwc_set.hpp"

namespace mwc::support {

// Random valid system: draws coalitions uniformly and keeps the ones that
// stay incomparable to everything chosen so far. The first draw always lands,
// so the result is never empty; the attempt cap keeps tiny voter sets (where
// few incomparable coalitions exist) from spinning.
inline MwcSet random_antichain(std::mt19937_64& rng, int n, int max_m) {
  std::uniform_int_distribution<std::uint64_t> dist(1, Coalition::all(n).bits);
  const int target = std::uniform_int_distribution<int>(1, max_m)(rng);
  std::vector<Coalition> chosen;
  for (int attempts = 0; static_cast<int>(chosen.size()) < target && attempts < 300 * target;
       ++attempts) {
    const Coalition c{dist(rng)};
    bool ok = true;
    for (Coalition v : chosen) {
      if (c.subset_of(v) || v.subset_of(c)) {
        ok = false;
        break;
      }
    }
    if (ok) chosen.push_back(c);
  }
  return validate_mwc_set(VoterSet::numbered(n), chosen);
}

// Same, but insists on exactly m members (retries with fresh draws).
inline MwcSet random_antichain_exact(std::mt19937_64& rng, int n, int m) {
  for (;;) {
    MwcSet candidate = random_antichain(rng, n, m);
    if (candidate.size() == m) return candidate;
  }
}

}  // namespace mwc::support
