#include "truncation.hpp"

#include <stdexcept>

#include "da.hpp"

namespace matchlab {

bool matched_under_truncation(const PreferenceProfile& profile, int hospital, int keep) {
  const PreferenceProfile truncated = truncate_hospital_list(profile, hospital, keep);
  const DaTrace trace = run_dpda(truncated);
  return trace.matching.hospital_match[static_cast<std::size_t>(hospital)] != kUnmatched;
}

TruncationResult hospital_optimal_rank_via_truncation(const PreferenceProfile& profile,
                                                      int hospital, ProbeStrategy strategy) {
  if (hospital < 0 || hospital >= profile.num_hospitals()) {
    throw std::invalid_argument("hospital index out of range");
  }
  const int full = static_cast<int>(profile.hospital_list(hospital).size());

  TruncationResult result;
  result.hospital = hospital;

  auto probe = [&](int keep) {
    bool matched = matched_under_truncation(profile, hospital, keep);
    result.probes.push_back({keep, matched});
    return matched;
  };

  if (full == 0 || !probe(full)) return result;  // unmatchable

  if (strategy == ProbeStrategy::LinearScan) {
    for (int keep = 1; keep <= full; ++keep) {
      if (probe(keep)) {
        result.optimal_rank = keep;
        break;
      }
    }
  } else {
    // Smallest keep in [1, full] that stays matched; full is known matched.
    int lo = 1, hi = full;
    while (lo < hi) {
      int mid = lo + (hi - lo) / 2;
      if (probe(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    result.optimal_rank = lo;
  }
  return result;
}

}  // namespace matchlab
