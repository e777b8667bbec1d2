#include "lazy.hpp"

#include <cassert>
#include <deque>
#include <stdexcept>

#include "rng.hpp"

namespace matchlab {

namespace {

struct LazyState {
  int n;
  int m;
  std::optional<int> target;
  SplitMix64 rng;

  std::vector<char> proposed;         // n*m, (d,h) pairs already drawn
  std::vector<int> distinct_made;     // per doctor
  std::vector<int> distinct_seen;     // per hospital, the k in 1/(1+k)
  std::vector<int> hospital_match;
  std::vector<int> doctor_match;
  std::deque<int> unmatched;

  int fresh_countable_remaining;      // hospitals (excl. target) nobody hit yet

  LazyState(const Market& market, std::optional<int> target_hospital, std::uint64_t seed)
      : n(market.num_doctors),
        m(market.num_hospitals),
        target(target_hospital),
        rng(seed),
        proposed(static_cast<std::size_t>(n) * static_cast<std::size_t>(m), 0),
        distinct_made(static_cast<std::size_t>(n), 0),
        distinct_seen(static_cast<std::size_t>(m), 0),
        hospital_match(static_cast<std::size_t>(m), kUnmatched),
        doctor_match(static_cast<std::size_t>(n), kUnmatched),
        fresh_countable_remaining(target_hospital ? m - 1 : m) {
    for (int d = 0; d < n; ++d) unmatched.push_back(d);
  }

  char& pair(int d, int h) {
    return proposed[static_cast<std::size_t>(d) * static_cast<std::size_t>(m) +
                    static_cast<std::size_t>(h)];
  }
};

LazyTrace run_lazy(const Market& market, std::optional<int> target, std::uint64_t seed) {
  LazyState s(market, target, seed);
  LazyTrace trace;
  trace.target = target;

  std::int64_t phase_len = 0;
  std::int64_t phase_hits = 0;

  while (!s.unmatched.empty()) {
    const int d = s.unmatched.front();
    if (s.distinct_made[static_cast<std::size_t>(d)] == s.m) {
      // Exhausted doctors can only exist when m < n; the designated-target
      // process never strands anyone before all doctors are placed.
      assert(!target);
      s.unmatched.pop_front();
      continue;
    }

    const int h = static_cast<int>(s.rng.next_below(static_cast<std::uint64_t>(s.m)));
    ++trace.total_proposals;
    ++phase_len;
    if (target && h == *target) {
      ++trace.proposals_to_target;
      ++phase_hits;
    }

    const bool fresh = !s.pair(d, h);
    if (!fresh) {
      // Repeat proposal: counted, ignored by the hospital.
      s.unmatched.pop_front();
      s.unmatched.push_back(d);
      continue;
    }
    s.pair(d, h) = 1;
    ++s.distinct_made[static_cast<std::size_t>(d)];

    const bool countable = !(target && h == *target);
    if (countable && s.distinct_seen[static_cast<std::size_t>(h)] == 0) {
      // First proposal anyone made to this hospital: phase boundary.
      trace.phase_lengths.push_back(phase_len);
      trace.target_hits_per_phase.push_back(phase_hits);
      phase_len = 0;
      phase_hits = 0;
      --s.fresh_countable_remaining;
    }

    const int prior = s.distinct_seen[static_cast<std::size_t>(h)];
    ++s.distinct_seen[static_cast<std::size_t>(h)];

    bool accepted = false;
    if (!(target && h == *target)) {
      accepted = s.rng.one_in(static_cast<std::uint64_t>(prior) + 1);
    }
    if (accepted) {
      const int incumbent = s.hospital_match[static_cast<std::size_t>(h)];
      s.hospital_match[static_cast<std::size_t>(h)] = d;
      s.doctor_match[static_cast<std::size_t>(d)] = h;
      s.unmatched.pop_front();
      if (incumbent != kUnmatched) {
        s.doctor_match[static_cast<std::size_t>(incumbent)] = kUnmatched;
        s.unmatched.push_back(incumbent);
      }
    } else {
      s.unmatched.pop_front();
      s.unmatched.push_back(d);
    }
  }

  // With m >= n the run ends on a fresh-hospital acceptance, which closes
  // the last phase. Short-hospital markets can end mid-phase.
  assert(s.m < s.n || phase_len == 0);

  trace.matching.doctor_match = std::move(s.doctor_match);
  trace.matching.hospital_match = std::move(s.hospital_match);
  return trace;
}

}  // namespace

LazyTrace run_dpda_prime(const Market& market, std::uint64_t seed) {
  return run_lazy(market, std::nullopt, seed);
}

LazyTrace run_dpda_prime_rejector(const Market& market, int target, std::uint64_t seed) {
  if (market.num_hospitals != market.num_doctors + 1) {
    throw std::invalid_argument("rejector process requires m = n + 1");
  }
  if (target < 0 || target >= market.num_hospitals) {
    throw std::invalid_argument("target hospital index out of range");
  }
  return run_lazy(market, target, seed);
}

CoupledTotals coupled_run(const Market& market, std::uint64_t seed) {
  // Same path as run_dpda_prime; the filtered view drops repeats, which the
  // hospitals ignore anyway, so both views end in the same matching.
  LazyState s(market, std::nullopt, seed);
  CoupledTotals totals;

  while (!s.unmatched.empty()) {
    const int d = s.unmatched.front();
    if (s.distinct_made[static_cast<std::size_t>(d)] == s.m) {
      s.unmatched.pop_front();
      continue;
    }
    const int h = static_cast<int>(s.rng.next_below(static_cast<std::uint64_t>(s.m)));
    ++totals.lazy_total;

    if (s.pair(d, h)) {
      s.unmatched.pop_front();
      s.unmatched.push_back(d);
      continue;
    }
    s.pair(d, h) = 1;
    ++s.distinct_made[static_cast<std::size_t>(d)];
    ++totals.filtered_total;

    const int prior = s.distinct_seen[static_cast<std::size_t>(h)];
    ++s.distinct_seen[static_cast<std::size_t>(h)];
    if (s.rng.one_in(static_cast<std::uint64_t>(prior) + 1)) {
      const int incumbent = s.hospital_match[static_cast<std::size_t>(h)];
      s.hospital_match[static_cast<std::size_t>(h)] = d;
      s.doctor_match[static_cast<std::size_t>(d)] = h;
      s.unmatched.pop_front();
      if (incumbent != kUnmatched) {
        s.doctor_match[static_cast<std::size_t>(incumbent)] = kUnmatched;
        s.unmatched.push_back(incumbent);
      }
    } else {
      s.unmatched.pop_front();
      s.unmatched.push_back(d);
    }
  }
  return totals;
}

}  // namespace matchlab
