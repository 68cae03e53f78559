#include <algorithm>
#include <bit>
#include <numeric>

#include "mwc/direct.hpp"

namespace mwc {

namespace {

std::vector<int> member_order(int m, TraversalOrder order) {
  std::vector<int> seq(m);
  std::iota(seq.begin(), seq.end(), 0);
  if (order == TraversalOrder::Descending) std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace

std::vector<BigInt> banzhaf_scores_reference(const MwcSet& system, std::uint64_t budget,
                                             TraversalOrder order) {
  const int m = system.size();
  const int n = system.voter_count();
  check_subfamily_budget(m, budget);
  const auto seq = member_order(m, order);

  std::vector<BigInt> pow2(n + 1);
  for (int c = 1; c <= n; ++c) pow2[c] = big_pow2(n - c);

  std::vector<BigInt> bs(n, BigInt(0));
  auto rec = [&](auto&& self, int pos, std::uint64_t unioned, int sign) -> void {
    for (int k = pos; k < m; ++k) {
      const std::uint64_t u = unioned | system.member(seq[k]).bits;
      const BigInt& term = pow2[std::popcount(u)];
      for (std::uint64_t b = u; b != 0; b &= b - 1) {
        if (sign > 0) {
          bs[std::countr_zero(b)] += term;
        } else {
          bs[std::countr_zero(b)] -= term;
        }
      }
      self(self, k + 1, u, -sign);
    }
  };
  rec(rec, 0, 0, 1);
  return bs;
}

std::vector<Rational> shapley_shubik_reference(const MwcSet& system, std::uint64_t budget,
                                               TraversalOrder order) {
  const int m = system.size();
  const int n = system.voter_count();
  check_subfamily_budget(m, budget);
  const auto seq = member_order(m, order);

  std::vector<Rational> card_term(n + 1);
  for (int c = 1; c <= n; ++c) card_term[c] = Rational(1, c);

  std::vector<Rational> ssi(n);
  auto rec = [&](auto&& self, int pos, std::uint64_t unioned, int sign) -> void {
    for (int k = pos; k < m; ++k) {
      const std::uint64_t u = unioned | system.member(seq[k]).bits;
      const Rational& term = card_term[std::popcount(u)];
      for (std::uint64_t b = u; b != 0; b &= b - 1) {
        if (sign > 0) {
          ssi[std::countr_zero(b)] += term;
        } else {
          ssi[std::countr_zero(b)] -= term;
        }
      }
      self(self, k + 1, u, -sign);
    }
  };
  rec(rec, 0, 0, 1);
  return ssi;
}

}  // namespace mwc
