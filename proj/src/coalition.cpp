#include "mwc/coalition.hpp"

#include <unordered_set>

#include "mwc/errors.hpp"

namespace mwc {

VoterSet::VoterSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw ValidationError(ValidationKind::NoVoters, "voter set must not be empty");
  }
  if (names_.size() > static_cast<std::size_t>(kMaxVoters)) {
    throw ValidationError(ValidationKind::TooManyVoters,
                          "at most 64 voters are supported, got " + std::to_string(names_.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names_) {
    if (name.empty()) {
      throw ValidationError(ValidationKind::EmptyVoterName, "voter names must be non-empty");
    }
    if (!seen.insert(name).second) {
      throw ValidationError(ValidationKind::DuplicateVoterName, "duplicate voter name: " + name);
    }
  }
}

VoterSet VoterSet::numbered(int n) {
  std::vector<std::string> names;
  names.reserve(n > 0 ? n : 0);
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return VoterSet(std::move(names));
}

std::optional<int> VoterSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::string format_coalition(const VoterSet& voters, Coalition c) {
  std::string out = "{";
  bool first = true;
  for_each_voter(c, [&](int v) {
    if (!first) out += ",";
    out += voters.name(v);
    first = false;
  });
  out += "}";
  return out;
}

}  // namespace mwc
