#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "market.hpp"

namespace matchlab {

// Proposal counts from one lazily-generated deferred-acceptance run.
// Phases are delimited by first proposals to fresh hospitals: phase_lengths[i]
// counts draws strictly after the i-th distinct countable hospital is first
// hit, up to and including the (i+1)-th such hit. Their sum is
// total_proposals. With a designated target, the target never counts as a
// phase boundary and target_hits_per_phase records how many draws of each
// phase landed on it.
struct LazyTrace {
  std::int64_t total_proposals = 0;
  std::int64_t proposals_to_target = 0;
  std::vector<std::int64_t> phase_lengths;
  std::vector<std::int64_t> target_hits_per_phase;
  Matching matching;
  std::optional<int> target;
};

// Deferred-decisions run: every proposal targets a uniformly random hospital
// among all m; a hospital ignores repeat proposals from the same doctor and
// accepts a fresh one after k prior distinct proposers with probability
// 1/(1+k), displacing any incumbent. Ends when every doctor is matched or
// has proposed to all hospitals.
LazyTrace run_dpda_prime(const Market& market, std::uint64_t seed);

// Same process on an m = n + 1 market where the target hospital rejects
// every proposal. Ends when all doctors hold matches outside the target;
// proposals_to_target is the paper-facing statistic.
LazyTrace run_dpda_prime_rejector(const Market& market, int target, std::uint64_t seed);

struct CoupledTotals {
  std::int64_t lazy_total = 0;
  std::int64_t filtered_total = 0;  // repeats removed; <= lazy_total per path
};

// One lazy sample path together with its repeat-filtered proposal count.
// The filtered count has the distribution of a preference-list DA run on the
// same (lazily revealed) preferences; both views share one matching.
CoupledTotals coupled_run(const Market& market, std::uint64_t seed);

}  // namespace matchlab
