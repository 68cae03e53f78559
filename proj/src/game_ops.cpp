#include "mwc/game_ops.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "mwc/errors.hpp"

namespace mwc {

void check_subfamily_budget(int m, std::uint64_t budget) {
  if (budget == 0 || budget > (std::uint64_t{1} << 62)) {
    throw std::invalid_argument("sub-family budget must be in [1, 2^62]");
  }
  if (m > 62 || ((std::uint64_t{1} << m) - 1) > budget) {
    throw ResourceLimitError(
        LimitKind::SubfamilyBudgetExceeded,
        "2^" + std::to_string(m) + " - 1 sub-families exceed the budget of " +
            std::to_string(budget) + "; raise the budget or use the brute-force oracle");
  }
}

bool is_winning(const MwcSet& system, Coalition a) {
  for (Coalition v : system.members()) {
    if (v.subset_of(a)) return true;
  }
  return false;
}

bool is_decisive(const MwcSet& system, int voter, Coalition a) {
  return a.contains(voter) && is_winning(system, a) && !is_winning(system, a.without(voter));
}

namespace {

// Walks all non-empty subsets in gray-code order so the running weight changes
// by one voter per step. Int is uint64 when everything fits, BigInt otherwise.
template <typename Int>
std::vector<Coalition> minimal_winning_subsets(int n, const std::vector<Int>& weight,
                                               const Int& quota) {
  std::vector<Coalition> out;
  Int sum{};
  std::uint64_t prev = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < end; ++i) {
    const std::uint64_t g = i ^ (i >> 1);
    const std::uint64_t flipped = g ^ prev;
    const int v = std::countr_zero(flipped);
    if (g & flipped) {
      sum += weight[v];
    } else {
      sum -= weight[v];
    }
    prev = g;
    if (sum >= quota) {
      bool minimal = true;
      for (std::uint64_t b = g; b != 0; b &= b - 1) {
        if (sum - weight[std::countr_zero(b)] >= quota) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(Coalition{g});
    }
  }
  std::sort(out.begin(), out.end(), [](Coalition a, Coalition b) {
    return std::pair(a.size(), a.bits) < std::pair(b.size(), b.bits);
  });
  return out;
}

}  // namespace

MwcSet derive_mwc(const WeightedGame& game) {
  const int n = game.voter_count();
  if (n > kDeriveMaxVoters) {
    throw ResourceLimitError(LimitKind::TooManyVotersForDerivation,
                             "weighted-game derivation enumerates all 2^n coalitions and is "
                             "capped at n = 24, got n = " +
                                 std::to_string(n));
  }

  // Scale weights and quota to integers over their common denominator; the
  // quota comparison must stay exact at the boundary.
  BigInt common = game.quota().den();
  for (const Rational& w : game.weights()) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), w.den().get_mpz_t());
  }
  std::vector<BigInt> weight(n);
  BigInt total = 0;
  for (int v = 0; v < n; ++v) {
    weight[v] = game.weights()[v].num() * (common / game.weights()[v].den());
    total += weight[v];
  }
  const BigInt quota = game.quota().num() * (common / game.quota().den());

  std::vector<Coalition> minimal;
  if (total.fits_ulong_p() && sizeof(unsigned long) == 8) {
    std::vector<std::uint64_t> w64(n);
    for (int v = 0; v < n; ++v) w64[v] = weight[v].get_ui();
    minimal = minimal_winning_subsets<std::uint64_t>(n, w64, quota.get_ui());
  } else {
    minimal = minimal_winning_subsets<BigInt>(n, weight, quota);
  }
  return detail::make_unchecked(game.voters(), std::move(minimal));
}

bool is_proper(const MwcSet& system) {
  const int m = system.size();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!system.member(i).intersects(system.member(j))) return false;
    }
  }
  return true;
}

BigInt count_winning(const MwcSet& system, std::uint64_t budget) {
  const int m = system.size();
  const int n = system.voter_count();
  check_subfamily_budget(m, budget);

  // Signed tally of sub-families by union cardinality; the per-term powers of
  // two are applied once at the end.
  std::array<std::int64_t, kMaxVoters + 1> tally{};
  auto rec = [&](auto&& self, int start, std::uint64_t unioned, std::int64_t sign) -> void {
    for (int i = start; i < m; ++i) {
      const std::uint64_t u = unioned | system.member(i).bits;
      tally[std::popcount(u)] += sign;
      self(self, i + 1, u, -sign);
    }
  };
  rec(rec, 0, 0, 1);

  BigInt total = 0;
  for (int c = 1; c <= n; ++c) {
    if (tally[c] != 0) total += BigInt(tally[c]) * big_pow2(n - c);
  }
  return total;
}

}  // namespace mwc
