#include <omp.h>

#include <array>
#include <bit>
#include <cassert>

#include "mwc/direct.hpp"
#include "mwc/errors.hpp"

namespace mwc {

namespace {

// Tail walk of the sub-family tree: extends the current union with members
// start..m-1 in ascending order. Each node costs one word-OR plus one tally
// update per voter in the union.
void walk_tail(const std::vector<std::uint64_t>& members, int start, std::uint64_t unioned,
               std::int64_t sign, int stride, std::int64_t* tallies) {
  const int m = static_cast<int>(members.size());
  for (int i = start; i < m; ++i) {
    const std::uint64_t u = unioned | members[i];
    const int card = std::popcount(u);
    for (std::uint64_t b = u; b != 0; b &= b - 1) {
      tallies[std::countr_zero(b) * stride + card] += sign;
    }
    walk_tail(members, i + 1, u, -sign, stride, tallies);
  }
}

}  // namespace

namespace detail {

std::vector<std::int64_t> subfamily_union_tallies(const MwcSet& system, const FoldOptions& opts) {
  const int m = system.size();
  const int n = system.voter_count();
  check_subfamily_budget(m, opts.budget);

  std::vector<std::uint64_t> members(m);
  for (int i = 0; i < m; ++i) members[i] = system.member(i).bits;

  const int stride = n + 1;
  std::vector<std::int64_t> tallies(static_cast<std::size_t>(n) * stride, 0);

  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();

  // Partition the tree by the subset of the first `split` members: every
  // sub-family is one prefix subset plus an extension from the tail, so the
  // 2^split prefixes cover the tree exactly once. Exact integer tallies make
  // the merge independent of scheduling.
  int split = 0;
  if (threads > 1 && m >= 10) {
    while ((1 << split) < 8 * threads && split < m - 4 && split < 14) ++split;
  }
  const std::uint64_t prefixes = std::uint64_t{1} << split;

#pragma omp parallel num_threads(threads)
  {
    std::vector<std::int64_t> local(tallies.size(), 0);

#pragma omp for schedule(dynamic, 1)
    for (std::int64_t p = 0; p < static_cast<std::int64_t>(prefixes); ++p) {
      std::uint64_t u = 0;
      int r = 0;
      for (std::uint64_t b = static_cast<std::uint64_t>(p); b != 0; b &= b - 1) {
        u |= members[std::countr_zero(b)];
        ++r;
      }
      std::int64_t sign = (r % 2 == 0) ? -1 : 1;
      if (r > 0) {
        const int card = std::popcount(u);
        for (std::uint64_t b = u; b != 0; b &= b - 1) {
          local[std::countr_zero(b) * stride + card] += sign;
        }
        walk_tail(members, split, u, -sign, stride, local.data());
      } else {
        walk_tail(members, split, 0, 1, stride, local.data());
      }
    }

#pragma omp critical
    {
      for (std::size_t i = 0; i < tallies.size(); ++i) tallies[i] += local[i];
    }
  }
  return tallies;
}

}  // namespace detail

namespace {

std::vector<BigInt> assemble_bs(const std::vector<std::int64_t>& tallies, int n) {
  const int stride = n + 1;
  std::vector<BigInt> bs(n, BigInt(0));
  for (int w = 0; w < n; ++w) {
    for (int c = 1; c <= n; ++c) {
      const std::int64_t t = tallies[w * stride + c];
      if (t != 0) bs[w] += BigInt(t) * big_pow2(n - c);
    }
    assert(sgn(bs[w]) >= 0);
  }
  return bs;
}

std::vector<Rational> assemble_ssi(const std::vector<std::int64_t>& tallies, int n) {
  const int stride = n + 1;
  std::vector<Rational> ssi(n);
  for (int w = 0; w < n; ++w) {
    for (int c = 1; c <= n; ++c) {
      const std::int64_t t = tallies[w * stride + c];
      if (t != 0) ssi[w] += Rational(BigInt(t), BigInt(c));
    }
  }
  return ssi;
}

}  // namespace

std::vector<BigInt> banzhaf_scores(const MwcSet& system, const FoldOptions& opts) {
  return assemble_bs(detail::subfamily_union_tallies(system, opts), system.voter_count());
}

std::vector<Rational> shapley_shubik(const MwcSet& system, const FoldOptions& opts) {
  return assemble_ssi(detail::subfamily_union_tallies(system, opts), system.voter_count());
}

DirectScores direct_scores(const MwcSet& system, const FoldOptions& opts) {
  const auto tallies = detail::subfamily_union_tallies(system, opts);
  const int n = system.voter_count();
  return DirectScores{assemble_bs(tallies, n), assemble_ssi(tallies, n)};
}

std::vector<Rational> penrose_banzhaf_power(const std::vector<BigInt>& bs, int n) {
  const BigInt half_space = big_pow2(n - 1);
  std::vector<Rational> pbp;
  pbp.reserve(bs.size());
  for (const BigInt& s : bs) pbp.emplace_back(s, half_space);
  return pbp;
}

std::vector<Rational> penrose_banzhaf_index(const std::vector<BigInt>& bs) {
  BigInt total = 0;
  for (const BigInt& s : bs) total += s;
  assert(total >= 1);
  std::vector<Rational> pbi;
  pbi.reserve(bs.size());
  for (const BigInt& s : bs) pbi.emplace_back(s, total);
  return pbi;
}

namespace {

// Per (sub-family size, union cardinality) tallies restricted to sub-families
// whose union contains the voter. One serial walk; traces mirror the manual
// step-by-step calculation, so r-buckets are required.
std::vector<std::array<std::int64_t, kMaxVoters + 1>> trace_tallies(const MwcSet& system,
                                                                    int voter,
                                                                    const FoldOptions& opts) {
  const int m = system.size();
  check_subfamily_budget(m, opts.budget);
  if (voter < 0 || voter >= system.voter_count()) {
    throw std::out_of_range("trace voter index " + std::to_string(voter) + " out of range");
  }

  std::vector<std::array<std::int64_t, kMaxVoters + 1>> byr(m + 1);
  for (auto& row : byr) row.fill(0);
  const std::uint64_t wbit = std::uint64_t{1} << voter;

  auto rec = [&](auto&& self, int start, std::uint64_t unioned, int r) -> void {
    for (int i = start; i < m; ++i) {
      const std::uint64_t u = unioned | system.member(i).bits;
      if (u & wbit) byr[r + 1][std::popcount(u)] += (r % 2 == 0) ? 1 : -1;
      self(self, i + 1, u, r + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return byr;
}

}  // namespace

BanzhafTrace trace_banzhaf(const MwcSet& system, int voter, const FoldOptions& opts) {
  const auto byr = trace_tallies(system, voter, opts);
  const int n = system.voter_count();
  BanzhafTrace trace;
  BigInt running = 0;
  for (int r = 1; r <= system.size(); ++r) {
    for (int c = 1; c <= n; ++c) {
      if (byr[r][c] != 0) running += BigInt(byr[r][c]) * big_pow2(n - c);
    }
    trace.cumulative.push_back(running);
  }
  return trace;
}

ShapleyShubikTrace trace_shapley_shubik(const MwcSet& system, int voter, const FoldOptions& opts) {
  const auto byr = trace_tallies(system, voter, opts);
  const int n = system.voter_count();
  ShapleyShubikTrace trace;
  Rational running;
  for (int r = 1; r <= system.size(); ++r) {
    for (int c = 1; c <= n; ++c) {
      if (byr[r][c] != 0) running += Rational(BigInt(byr[r][c]), BigInt(c));
    }
    trace.cumulative.push_back(running);
  }
  return trace;
}

}  // namespace mwc
