#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mwc/mwc_set.hpp"

namespace mwc::support {

inline Coalition coalition_of(std::initializer_list<int> voters) {
  Coalition c;
  for (int v : voters) c = c.with(v);
  return c;
}

// European Economic Community 1958-1972: weights (F,4) (G,4) (I,4) (B,2)
// (N,2) (L,1), quota 12. Voter indices F=0, G=1, I=2, B=3, N=4, L=5.
inline VoterSet eec_voters() { return VoterSet({"F", "G", "I", "B", "N", "L"}); }

inline WeightedGame eec_weighted() {
  return WeightedGame(eec_voters(), {4, 4, 4, 2, 2, 1}, 12);
}

inline MwcSet eec_system() {
  return validate_mwc_set(eec_voters(), {
                                            coalition_of({0, 1, 2}),     // {F,G,I}
                                            coalition_of({0, 1, 3, 4}),  // {F,G,B,N}
                                            coalition_of({0, 2, 3, 4}),  // {F,I,B,N}
                                            coalition_of({1, 2, 3, 4}),  // {G,I,B,N}
                                        });
}

// Relabels voters: voter i becomes perm[i], names move along.
inline MwcSet permuted_system(const MwcSet& system, const std::vector<int>& perm) {
  const int n = system.voter_count();
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[perm[i]] = system.voters().name(i);
  std::vector<Coalition> members;
  members.reserve(system.size());
  for (Coalition v : system.members()) {
    Coalition moved;
    for_each_voter(v, [&](int w) { moved = moved.with(perm[w]); });
    members.push_back(moved);
  }
  return validate_mwc_set(VoterSet(std::move(names)), std::move(members));
}

}  // namespace mwc::support
