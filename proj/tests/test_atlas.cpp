#include <doctest.h>

#include <algorithm>
#include <set>

#include "mwc/atlas.hpp"
#include "mwc/errors.hpp"
#include "mwc/game_ops.hpp"
#include "mwc/oracle.hpp"
#include "support/fixtures.hpp"

using namespace mwc;
using support::coalition_of;

TEST_CASE("sperner bounds") {
  CHECK(sperner_bound(1) == 1);
  CHECK(sperner_bound(2) == 2);
  CHECK(sperner_bound(4) == 6);
  CHECK(sperner_bound(6) == 20);
  CHECK_THROWS_AS(sperner_bound(0), std::invalid_argument);
}

TEST_CASE("enumeration counts match the Dedekind ladder") {
  const std::uint64_t expected[] = {1, 4, 18, 166, 7579};
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t visited = 0;
    const std::uint64_t count = enumerate_antichains(n, [&](auto) { ++visited; });
    CHECK(count == expected[n - 1]);
    CHECK(visited == expected[n - 1]);
    CHECK(count_antichains(n) == expected[n - 1]);
    CHECK(count_antichains(n, 1) == expected[n - 1]);
  }
  CHECK_THROWS_AS(enumerate_antichains(7, [](auto) {}), ResourceLimitError);
  CHECK_THROWS_AS(count_antichains(0), ResourceLimitError);
}

TEST_CASE("the four two-voter systems, literally") {
  std::set<std::vector<std::uint64_t>> families;
  enumerate_antichains(2, [&](std::span<const Coalition> members) {
    std::vector<std::uint64_t> key;
    for (Coalition c : members) key.push_back(c.bits);
    families.insert(key);
  });
  const std::set<std::vector<std::uint64_t>> expected = {
      {0b01}, {0b10}, {0b01, 0b10}, {0b11}};
  CHECK(families == expected);
}

TEST_CASE("enumerated families are unique, valid, and within the Sperner bound") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<std::uint64_t>> seen;
    int max_m = 0;
    const VoterSet voters = VoterSet::numbered(n);
    enumerate_antichains(n, [&](std::span<const Coalition> members) {
      std::vector<std::uint64_t> key;
      for (Coalition c : members) key.push_back(c.bits);
      CHECK(seen.insert(key).second);
      CHECK_NOTHROW(
          validate_mwc_set(voters, std::vector<Coalition>(members.begin(), members.end())));
      max_m = std::max(max_m, static_cast<int>(members.size()));
    });
    CHECK(BigInt(max_m) == sperner_bound(n));
  }
}

TEST_CASE("all 166 four-voter systems: direct equals oracle, properness is definitional") {
  const VoterSet voters = VoterSet::numbered(4);
  std::uint64_t systems = 0;
  enumerate_antichains(4, [&](std::span<const Coalition> members) {
    ++systems;
    const MwcSet sys =
        validate_mwc_set(voters, std::vector<Coalition>(members.begin(), members.end()));
    const FoldOptions opts{.threads = 1};
    CHECK(banzhaf_scores(sys, opts) == oracle_banzhaf(sys, 1));
    CHECK(shapley_shubik(sys, opts) == oracle_ssi(sys, 1));

    // winning count against the brute scan
    BigInt brute = 0;
    bool complement_clash = false;
    for (std::uint64_t a = 0; a < 16; ++a) {
      if (!is_winning(sys, Coalition{a})) continue;
      ++brute;
      if (is_winning(sys, Coalition{0b1111 & ~a})) complement_clash = true;
    }
    CHECK(count_winning(sys) == brute);
    CHECK(is_proper(sys) == !complement_clash);
  });
  CHECK(systems == 166);
}

TEST_CASE("two-voter profiles: all or nothing, or an even split") {
  for (ProfileKind kind : {ProfileKind::PBI, ProfileKind::SSI}) {
    const ProfileAtlas atlas = profile_atlas(2, kind);
    const std::set<std::vector<Rational>> expected_unordered = {
        {Rational(1), Rational(0)}, {Rational(1, 2), Rational(1, 2)}};
    std::set<std::vector<Rational>> unordered;
    for (const auto& [profile, count] : atlas.unordered) {
      unordered.insert(profile);
      CHECK(count == 2);  // each realized by exactly two of the four systems
    }
    CHECK(unordered == expected_unordered);
    CHECK(atlas.ordered.size() == 3);  // (1,0), (0,1), (1/2,1/2)
  }
}

TEST_CASE("one-voter profile atlas") {
  const ProfileAtlas atlas = profile_atlas(1, ProfileKind::SSI);
  REQUIRE(atlas.ordered.size() == 1);
  CHECK(atlas.ordered.begin()->first == std::vector<Rational>{Rational(1)});
  CHECK(atlas.ordered.begin()->second == 1);
}

TEST_CASE("three-voter Shapley-Shubik profiles, pinned and cross-checked") {
  const ProfileAtlas atlas = profile_atlas(3, ProfileKind::SSI);

  // independent recomputation through the definitional oracle
  std::set<std::vector<Rational>> oracle_unordered;
  std::uint64_t systems = 0;
  const VoterSet voters = VoterSet::numbered(3);
  enumerate_antichains(3, [&](std::span<const Coalition> members) {
    ++systems;
    const MwcSet sys =
        detail::make_unchecked(voters, std::vector<Coalition>(members.begin(), members.end()));
    auto profile = oracle_ssi(sys, 1);
    std::sort(profile.begin(), profile.end(),
              [](const Rational& a, const Rational& b) { return b < a; });
    oracle_unordered.insert(profile);
  });
  CHECK(systems == 18);

  std::set<std::vector<Rational>> unordered;
  for (const auto& [profile, count] : atlas.unordered) unordered.insert(profile);
  CHECK(unordered == oracle_unordered);

  // regression pin: distinct profile counts over the 18 three-voter systems
  // (1,0,0), (1/2,1/2,0), (1/3,1/3,1/3), (2/3,1/6,1/6) up to ordering
  CHECK(atlas.unordered.size() == 4);
  CHECK(atlas.ordered.size() == 10);
}

TEST_CASE("profile atlas cap") {
  CHECK_THROWS_AS(profile_atlas(6, ProfileKind::PBI), ResourceLimitError);
}

TEST_CASE("atlas entries carry consistent reports") {
  int entries = 0;
  for_each_atlas_entry(3, [&](const AtlasEntry& entry) {
    ++entries;
    Rational pbi_sum, ssi_sum;
    for (int w = 0; w < entry.system.voter_count(); ++w) {
      pbi_sum += entry.report.pbi[w];
      ssi_sum += entry.report.ssi[w];
      CHECK(entry.report.pbp[w] ==
            Rational(entry.report.bs[w], big_pow2(entry.system.voter_count() - 1)));
    }
    CHECK(pbi_sum == Rational(1));
    CHECK(ssi_sum == Rational(1));
  });
  CHECK(entries == 18);
}
