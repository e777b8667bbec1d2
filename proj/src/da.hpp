#pragma once

#include <cstdint>
#include <vector>

#include "market.hpp"

namespace matchlab {

// Which pending proposer is picked next. The resulting matching is the same
// for every policy; the policies exist to test exactly that.
struct ProposalOrder {
  enum class Kind { Queue, Stack, SeededRandom };
  Kind kind = Kind::Queue;
  std::uint64_t seed = 0;

  static ProposalOrder queue() { return {}; }
  static ProposalOrder stack() { return {Kind::Stack, 0}; }
  static ProposalOrder seeded_random(std::uint64_t seed) { return {Kind::SeededRandom, seed}; }
};

struct Proposal {
  int proposer;
  int receiver;
  bool accepted;

  bool operator==(const Proposal&) const = default;
};

// Proposal-by-proposal record of one deferred-acceptance run.
// proposals_per_proposer[a] equals a's rank for its final match whenever a
// ends up matched (each proposal walks one step down the list).
struct DaTrace {
  Side proposing_side = Side::Doctor;
  Matching matching;
  std::vector<Proposal> proposals;
  std::vector<int> proposals_per_proposer;
  std::int64_t total_proposals = 0;
};

// Doctor-proposing deferred acceptance. Unmatched doctors with untried
// hospitals propose down their lists; a hospital holds the best acceptable
// proposer seen so far and displaces incumbents. Returns the doctor-optimal
// stable matching.
DaTrace run_dpda(const PreferenceProfile& profile, ProposalOrder order = {});

// Hospital-proposing variant (role swap); returns the hospital-optimal
// stable matching. Trace proposers are hospital indices.
DaTrace run_hpda(const PreferenceProfile& profile, ProposalOrder order = {});

struct BlockingPair {
  int doctor;
  int hospital;

  bool operator==(const BlockingPair&) const = default;
};

// Exhaustive O(n*m) scan. Empty result <=> the matching is stable.
std::vector<BlockingPair> find_blocking_pairs(const PreferenceProfile& profile,
                                              const Matching& matching);

bool is_stable(const PreferenceProfile& profile, const Matching& matching);

}  // namespace matchlab
