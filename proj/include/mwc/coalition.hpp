#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mwc {

// Coalitions are bitmasks over voter indices, so the voter count is capped at
// one machine word. The cost of every algorithm here is driven by the number
// of minimal winning coalitions, not by the voter count, and 64 seats cover
// any real assembly.
inline constexpr int kMaxVoters = 64;

// A subset of the voters 0..n-1, bit i set iff voter i is a member.
struct Coalition {
  std::uint64_t bits = 0;

  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t b) : bits(b) {}

  static constexpr Coalition single(int voter) { return Coalition{std::uint64_t{1} << voter}; }
  static constexpr Coalition all(int n) {
    return Coalition{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr int size() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool contains(int voter) const { return (bits >> voter) & 1; }
  constexpr Coalition with(int voter) const { return Coalition{bits | (std::uint64_t{1} << voter)}; }
  constexpr Coalition without(int voter) const { return Coalition{bits & ~(std::uint64_t{1} << voter)}; }
  constexpr bool subset_of(Coalition o) const { return (bits & o.bits) == bits; }
  constexpr bool intersects(Coalition o) const { return (bits & o.bits) != 0; }

  friend constexpr Coalition operator|(Coalition a, Coalition b) { return Coalition{a.bits | b.bits}; }
  friend constexpr Coalition operator&(Coalition a, Coalition b) { return Coalition{a.bits & b.bits}; }
  constexpr auto operator<=>(const Coalition&) const = default;
};

// Calls f(v) for every voter v in the coalition, lowest index first.
template <typename F>
constexpr void for_each_voter(Coalition c, F&& f) {
  for (std::uint64_t b = c.bits; b != 0; b &= b - 1) {
    f(std::countr_zero(b));
  }
}

// Named roster of voters. Identity is the index 0..n-1; names are presentation
// only and never enter any computation.
class VoterSet {
 public:
  // Throws ValidationError unless 1 <= names.size() <= 64 and all names are
  // non-empty and pairwise distinct.
  explicit VoterSet(std::vector<std::string> names);

  // Default labels "1".."n".
  static VoterSet numbered(int n);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;
  Coalition grand() const { return Coalition::all(size()); }

  bool operator==(const VoterSet&) const = default;

 private:
  std::vector<std::string> names_;
};

// "{F,G,I}" style rendering, members in index order.
std::string format_coalition(const VoterSet& voters, Coalition c);

}  // namespace mwc
