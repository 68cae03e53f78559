#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "mwc/mwc_set.hpp"
#include "mwc/report.hpp"

namespace mwc {

// Every antichain over n labeled voters is a voting system; their number is
// the Dedekind number minus two. Exhaustive enumeration is desk-scale only up
// to these caps (n = 7 already has ~2.4e12 systems).
inline constexpr int kAtlasMaxVoters = 6;
inline constexpr int kProfileAtlasMaxVoters = 5;

// Largest possible antichain: C(n, floor(n/2)).
BigInt sperner_bound(int n);

// Streams every non-empty antichain of non-empty coalitions over n voters
// exactly once, in depth-first order over candidates sorted by (cardinality,
// bitmask value); members arrive in that canonical order. Returns the count.
// Throws AtlasSizeExceeded for n outside [1, 6].
std::uint64_t enumerate_antichains(int n,
                                   const std::function<void(std::span<const Coalition>)>& visit);

// The same count without the visits, partitioned across threads by the first
// included candidate.
std::uint64_t count_antichains(int n, int threads = 0);

struct AtlasEntry {
  MwcSet system;
  PowerReport report;
};

// Streams every system over n voters together with its full power report.
// Throws AtlasSizeExceeded for n outside [1, 6].
void for_each_atlas_entry(int n, const std::function<void(const AtlasEntry&)>& visit);

enum class ProfileKind { PBI, SSI, DP, HP };

// Distinct power profiles over every system with n voters, with the number of
// systems realizing each. `ordered` keys are voter-order-sensitive vectors;
// `unordered` keys are the same profiles sorted descending.
struct ProfileAtlas {
  std::map<std::vector<Rational>, std::uint64_t> ordered;
  std::map<std::vector<Rational>, std::uint64_t> unordered;
};

// Throws AtlasSizeExceeded for n outside [1, 5].
ProfileAtlas profile_atlas(int n, ProfileKind kind);

}  // namespace mwc
