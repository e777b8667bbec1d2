#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace matchlab {

inline constexpr int kUnmatched = -1;

enum class Side { Doctor, Hospital };

const char* side_name(Side side);

struct AgentId {
  Side side;
  int index;

  bool operator==(const AgentId&) const = default;
  bool operator<(const AgentId& other) const {
    if (side != other.side) return side < other.side;
    return index < other.index;
  }
};

// Market dimensions. Balanced experiments use m = n, unbalanced m = n + 1.
struct Market {
  int num_doctors;
  int num_hospitals;

  Market(int doctors, int hospitals);

  bool operator==(const Market&) const = default;
};

// Strict ordered preference lists for both sides, most preferred first.
// Lists may be proper subsets of the other side (truncation); generated
// profiles are always full permutations. Immutable after construction.
class PreferenceProfile {
 public:
  PreferenceProfile(Market market, std::vector<std::vector<int>> doctor_lists,
                    std::vector<std::vector<int>> hospital_lists);

  const Market& market() const { return market_; }
  int num_doctors() const { return market_.num_doctors; }
  int num_hospitals() const { return market_.num_hospitals; }

  const std::vector<int>& doctor_list(int doctor) const { return doctor_lists_.at(doctor); }
  const std::vector<int>& hospital_list(int hospital) const { return hospital_lists_.at(hospital); }
  const std::vector<std::vector<int>>& doctor_lists() const { return doctor_lists_; }
  const std::vector<std::vector<int>>& hospital_lists() const { return hospital_lists_; }

  bool operator==(const PreferenceProfile&) const = default;

 private:
  Market market_;
  std::vector<std::vector<int>> doctor_lists_;
  std::vector<std::vector<int>> hospital_lists_;
};

// Partial assignment between the two sides; kUnmatched marks unmatched agents.
// doctor_match[d] == h exactly when hospital_match[h] == d.
struct Matching {
  std::vector<int> doctor_match;
  std::vector<int> hospital_match;

  static Matching empty(int num_doctors, int num_hospitals);
  static Matching from_doctor_match(std::vector<int> doctor_match, int num_hospitals);

  bool consistent() const;
  std::vector<int> unmatched_doctors() const;
  std::vector<int> unmatched_hospitals() const;
  std::vector<AgentId> unmatched_agents() const;

  bool operator==(const Matching&) const = default;
};

// Fresh uniform permutation per agent, Fisher-Yates over one SplitMix64
// stream seeded with `seed` (doctors d0..dn-1 first, then hospitals).
PreferenceProfile generate_uniform_profile(const Market& market, std::uint64_t seed);

// Keep-top-k truncation of one hospital's list; returns a new profile.
// keep == 0 empties the list (the hospital can never be matched).
PreferenceProfile truncate_hospital_list(const PreferenceProfile& profile, int hospital, int keep);

// 1-based position of the agent's partner on the agent's list; an unmatched
// agent ranks one past the end of their list. Throws if the matching pairs
// the agent with someone absent from their list.
int rank_of(const PreferenceProfile& profile, AgentId agent, const Matching& matching);

}  // namespace matchlab
