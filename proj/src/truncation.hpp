#pragma once

#include <optional>
#include <vector>

#include "market.hpp"

namespace matchlab {

enum class ProbeStrategy { LinearScan, BinarySearch };

struct TruncationProbe {
  int keep;
  bool matched;

  bool operator==(const TruncationProbe&) const = default;
};

// Minimal keep-length at which the hospital still gets matched under
// doctor-proposing DA, i.e. its best stable-partner rank. nullopt means the
// hospital is unmatched in every stable matching.
struct TruncationResult {
  int hospital = 0;
  std::optional<int> optimal_rank;
  std::vector<TruncationProbe> probes;
};

// Whether the hospital is matched in run_dpda on the profile with its list
// truncated to the top `keep` entries.
bool matched_under_truncation(const PreferenceProfile& profile, int hospital, int keep);

// matched_under_truncation is monotone in keep, so BinarySearch needs
// O(log n) DA runs; LinearScan is kept as an in-tree cross-check.
TruncationResult hospital_optimal_rank_via_truncation(
    const PreferenceProfile& profile, int hospital,
    ProbeStrategy strategy = ProbeStrategy::BinarySearch);

}  // namespace matchlab
