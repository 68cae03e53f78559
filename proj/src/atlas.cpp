#include "mwc/atlas.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "mwc/errors.hpp"
#include "mwc/oracle.hpp"

namespace mwc {

namespace {

void check_atlas_cap(int n, int cap, const char* what) {
  if (n < 1 || n > cap) {
    throw ResourceLimitError(LimitKind::AtlasSizeExceeded,
                             std::string(what) + " is capped at n = " + std::to_string(cap) +
                                 ", got n = " + std::to_string(n));
  }
}

// Non-empty subsets ordered by (cardinality, bitmask value); this is both the
// backtracking order and the member order of every emitted family.
std::vector<std::uint64_t> candidate_masks(int n) {
  std::vector<std::uint64_t> masks;
  masks.reserve((std::size_t{1} << n) - 1);
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
  });
  return masks;
}

bool comparable(std::uint64_t a, std::uint64_t b) {
  return (a & b) == a || (a & b) == b;
}

// The frontier holds the candidates that are incomparable to everything
// chosen so far and come after the last choice; taking one only requires
// filtering the frontier against it.
std::uint64_t enumerate_rec(const std::vector<std::uint64_t>& frontier,
                            std::vector<Coalition>& chosen,
                            const std::function<void(std::span<const Coalition>)>* visit) {
  std::uint64_t count = 0;
  for (std::size_t p = 0; p < frontier.size(); ++p) {
    const std::uint64_t c = frontier[p];
    chosen.push_back(Coalition{c});
    ++count;
    if (visit != nullptr) (*visit)(std::span<const Coalition>(chosen));
    std::vector<std::uint64_t> next;
    next.reserve(frontier.size() - p);
    for (std::size_t q = p + 1; q < frontier.size(); ++q) {
      if (!comparable(c, frontier[q])) next.push_back(frontier[q]);
    }
    if (!next.empty()) count += enumerate_rec(next, chosen, visit);
    chosen.pop_back();
  }
  return count;
}

}  // namespace

BigInt sperner_bound(int n) {
  if (n < 1) throw std::invalid_argument("sperner_bound requires n >= 1");
  return binomial(n, n / 2);
}

std::uint64_t enumerate_antichains(int n,
                                   const std::function<void(std::span<const Coalition>)>& visit) {
  check_atlas_cap(n, kAtlasMaxVoters, "antichain enumeration");
  std::vector<Coalition> chosen;
  chosen.reserve(sperner_bound(n).get_ui());
  return enumerate_rec(candidate_masks(n), chosen, &visit);
}

std::uint64_t count_antichains(int n, int threads) {
  check_atlas_cap(n, kAtlasMaxVoters, "antichain enumeration");
  const auto masks = candidate_masks(n);
  const int total_candidates = static_cast<int>(masks.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  std::uint64_t total = 0;

#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads) reduction(+ : total)
  for (int i = 0; i < total_candidates; ++i) {
    std::vector<std::uint64_t> frontier;
    frontier.reserve(masks.size() - i);
    for (std::size_t q = i + 1; q < masks.size(); ++q) {
      if (!comparable(masks[i], masks[q])) frontier.push_back(masks[q]);
    }
    std::vector<Coalition> chosen;
    total += 1 + enumerate_rec(frontier, chosen, nullptr);
  }
  return total;
}

void for_each_atlas_entry(int n, const std::function<void(const AtlasEntry&)>& visit) {
  check_atlas_cap(n, kAtlasMaxVoters, "atlas reporting");
  const VoterSet voters = VoterSet::numbered(n);
  const FoldOptions opts{.budget = kDefaultSubfamilyBudget, .threads = 1};
  enumerate_antichains(n, [&](std::span<const Coalition> members) {
    MwcSet system =
        detail::make_unchecked(voters, std::vector<Coalition>(members.begin(), members.end()));
    PowerReport report = compute_report(system, opts);
    visit(AtlasEntry{std::move(system), std::move(report)});
  });
}

ProfileAtlas profile_atlas(int n, ProfileKind kind) {
  check_atlas_cap(n, kProfileAtlasMaxVoters, "profile atlas");
  const VoterSet voters = VoterSet::numbered(n);
  const FoldOptions opts{.budget = kDefaultSubfamilyBudget, .threads = 1};
  ProfileAtlas atlas;
  enumerate_antichains(n, [&](std::span<const Coalition> members) {
    const MwcSet system =
        detail::make_unchecked(voters, std::vector<Coalition>(members.begin(), members.end()));
    std::vector<Rational> profile;
    switch (kind) {
      case ProfileKind::PBI:
        profile = penrose_banzhaf_index(banzhaf_scores(system, opts));
        break;
      case ProfileKind::SSI:
        profile = shapley_shubik(system, opts);
        break;
      case ProfileKind::DP:
        profile = deegan_packel(system);
        break;
      case ProfileKind::HP:
        profile = holler_packel(system);
        break;
    }
    ++atlas.ordered[profile];
    std::sort(profile.begin(), profile.end(), [](const Rational& a, const Rational& b) { return b < a; });
    ++atlas.unordered[profile];
  });
  return atlas;
}

}  // namespace mwc
