#include <omp.h>

#include <bit>
#include <stdexcept>

#include "mwc/errors.hpp"
#include "mwc/oracle.hpp"

namespace mwc {

namespace {

void check_oracle_cap(int n) {
  if (n > kOracleMaxVoters) {
    throw ResourceLimitError(LimitKind::TooManyVotersForOracle,
                             "the brute-force oracle scans all 2^n coalitions and is capped at "
                             "n = 24, got n = " +
                                 std::to_string(n));
  }
}

bool wins(const std::vector<std::uint64_t>& members, std::uint64_t a) {
  for (std::uint64_t v : members) {
    if ((v & a) == v) return true;
  }
  return false;
}

}  // namespace

std::vector<BigInt> oracle_banzhaf(const MwcSet& system, int threads) {
  const int n = system.voter_count();
  check_oracle_cap(n);
  std::vector<std::uint64_t> members(system.size());
  for (int i = 0; i < system.size(); ++i) members[i] = system.member(i).bits;

  const std::int64_t end = std::int64_t{1} << n;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  std::vector<std::int64_t> swings(n, 0);

#pragma omp parallel num_threads(nthreads)
  {
    std::vector<std::int64_t> local(n, 0);
#pragma omp for schedule(static)
    for (std::int64_t a = 1; a < end; ++a) {
      const std::uint64_t coalition = static_cast<std::uint64_t>(a);
      if (!wins(members, coalition)) continue;
      for (std::uint64_t b = coalition; b != 0; b &= b - 1) {
        const int w = std::countr_zero(b);
        if (!wins(members, coalition & ~(std::uint64_t{1} << w))) ++local[w];
      }
    }
#pragma omp critical
    {
      for (int w = 0; w < n; ++w) swings[w] += local[w];
    }
  }

  return std::vector<BigInt>(swings.begin(), swings.end());
}

std::vector<Rational> oracle_ssi(const MwcSet& system, int threads) {
  const int n = system.voter_count();
  check_oracle_cap(n);
  std::vector<std::uint64_t> members(system.size());
  for (int i = 0; i < system.size(); ++i) members[i] = system.member(i).bits;

  // Count decisive coalitions per (voter, cardinality); the factorial weight
  // only depends on the cardinality.
  const int stride = n + 1;
  std::vector<std::int64_t> decisive(static_cast<std::size_t>(n) * stride, 0);
  const std::int64_t end = std::int64_t{1} << n;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel num_threads(nthreads)
  {
    std::vector<std::int64_t> local(decisive.size(), 0);
#pragma omp for schedule(static)
    for (std::int64_t a = 1; a < end; ++a) {
      const std::uint64_t coalition = static_cast<std::uint64_t>(a);
      if (!wins(members, coalition)) continue;
      const int card = std::popcount(coalition);
      for (std::uint64_t b = coalition; b != 0; b &= b - 1) {
        const int w = std::countr_zero(b);
        if (!wins(members, coalition & ~(std::uint64_t{1} << w))) {
          ++local[w * stride + card];
        }
      }
    }
#pragma omp critical
    {
      for (std::size_t i = 0; i < decisive.size(); ++i) decisive[i] += local[i];
    }
  }

  const BigInt n_fact = factorial(n);
  std::vector<Rational> ssi(n);
  for (int w = 0; w < n; ++w) {
    BigInt numerator = 0;
    for (int k = 1; k <= n; ++k) {
      const std::int64_t count = decisive[w * stride + k];
      if (count != 0) numerator += BigInt(count) * factorial(n - k) * factorial(k - 1);
    }
    ssi[w] = Rational(numerator, n_fact);
  }
  return ssi;
}

std::vector<Rational> deegan_packel(const MwcSet& system) {
  const int n = system.voter_count();
  const BigInt m(system.size());
  std::vector<Rational> dp(n);
  for (Coalition v : system.members()) {
    const Rational share(BigInt(1), m * v.size());
    for_each_voter(v, [&](int w) { dp[w] += share; });
  }
  return dp;
}

std::vector<Rational> holler_packel(const MwcSet& system) {
  const int n = system.voter_count();
  std::vector<std::int64_t> memberships(n, 0);
  std::int64_t total = 0;
  for (Coalition v : system.members()) {
    for_each_voter(v, [&](int w) {
      ++memberships[w];
      ++total;
    });
  }
  std::vector<Rational> hp(n);
  for (int w = 0; w < n; ++w) hp[w] = Rational(BigInt(memberships[w]), BigInt(total));
  return hp;
}

Rational filter_weight_sum(int n, int k) {
  if (k < 1 || n < k || n > 20) {
    throw std::invalid_argument("filter_weight_sum requires 1 <= k <= n <= 20");
  }
  BigInt numerator = 0;
  for (int l = k; l <= n; ++l) {
    numerator += binomial(n - k, l - k) * factorial(n - l) * factorial(l - 1);
  }
  return Rational(numerator, factorial(n));
}

}  // namespace mwc
