#include "market.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rng.hpp"

namespace matchlab {

const char* side_name(Side side) {
  return side == Side::Doctor ? "doctor" : "hospital";
}

Market::Market(int doctors, int hospitals)
    : num_doctors(doctors), num_hospitals(hospitals) {
  if (doctors < 1 || hospitals < 1) {
    throw std::invalid_argument("market dimensions must be >= 1");
  }
}

namespace {

void validate_lists(const std::vector<std::vector<int>>& lists, std::size_t owners,
                    int partner_count, const char* owner_name) {
  if (lists.size() != owners) {
    throw std::invalid_argument(std::string(owner_name) + " list count does not match market size");
  }
  std::vector<char> seen(static_cast<std::size_t>(partner_count));
  for (const auto& list : lists) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int partner : list) {
      if (partner < 0 || partner >= partner_count) {
        throw std::invalid_argument(std::string(owner_name) + " list entry out of range");
      }
      if (seen[static_cast<std::size_t>(partner)]) {
        throw std::invalid_argument(std::string(owner_name) + " list contains a duplicate entry");
      }
      seen[static_cast<std::size_t>(partner)] = 1;
    }
  }
}

}  // namespace

PreferenceProfile::PreferenceProfile(Market market, std::vector<std::vector<int>> doctor_lists,
                                     std::vector<std::vector<int>> hospital_lists)
    : market_(market),
      doctor_lists_(std::move(doctor_lists)),
      hospital_lists_(std::move(hospital_lists)) {
  validate_lists(doctor_lists_, static_cast<std::size_t>(market_.num_doctors),
                 market_.num_hospitals, "doctor");
  validate_lists(hospital_lists_, static_cast<std::size_t>(market_.num_hospitals),
                 market_.num_doctors, "hospital");
}

Matching Matching::empty(int num_doctors, int num_hospitals) {
  Matching mu;
  mu.doctor_match.assign(static_cast<std::size_t>(num_doctors), kUnmatched);
  mu.hospital_match.assign(static_cast<std::size_t>(num_hospitals), kUnmatched);
  return mu;
}

Matching Matching::from_doctor_match(std::vector<int> doctor_match, int num_hospitals) {
  Matching mu;
  mu.hospital_match.assign(static_cast<std::size_t>(num_hospitals), kUnmatched);
  for (std::size_t d = 0; d < doctor_match.size(); ++d) {
    int h = doctor_match[d];
    if (h == kUnmatched) continue;
    if (h < 0 || h >= num_hospitals) throw std::invalid_argument("hospital index out of range");
    if (mu.hospital_match[static_cast<std::size_t>(h)] != kUnmatched) {
      throw std::invalid_argument("two doctors assigned to one hospital");
    }
    mu.hospital_match[static_cast<std::size_t>(h)] = static_cast<int>(d);
  }
  mu.doctor_match = std::move(doctor_match);
  return mu;
}

bool Matching::consistent() const {
  for (std::size_t d = 0; d < doctor_match.size(); ++d) {
    int h = doctor_match[d];
    if (h == kUnmatched) continue;
    if (h < 0 || static_cast<std::size_t>(h) >= hospital_match.size()) return false;
    if (hospital_match[static_cast<std::size_t>(h)] != static_cast<int>(d)) return false;
  }
  for (std::size_t h = 0; h < hospital_match.size(); ++h) {
    int d = hospital_match[h];
    if (d == kUnmatched) continue;
    if (d < 0 || static_cast<std::size_t>(d) >= doctor_match.size()) return false;
    if (doctor_match[static_cast<std::size_t>(d)] != static_cast<int>(h)) return false;
  }
  return true;
}

std::vector<int> Matching::unmatched_doctors() const {
  std::vector<int> out;
  for (std::size_t d = 0; d < doctor_match.size(); ++d) {
    if (doctor_match[d] == kUnmatched) out.push_back(static_cast<int>(d));
  }
  return out;
}

std::vector<int> Matching::unmatched_hospitals() const {
  std::vector<int> out;
  for (std::size_t h = 0; h < hospital_match.size(); ++h) {
    if (hospital_match[h] == kUnmatched) out.push_back(static_cast<int>(h));
  }
  return out;
}

std::vector<AgentId> Matching::unmatched_agents() const {
  std::vector<AgentId> out;
  for (int d : unmatched_doctors()) out.push_back({Side::Doctor, d});
  for (int h : unmatched_hospitals()) out.push_back({Side::Hospital, h});
  return out;
}

namespace {

std::vector<int> uniform_permutation(int length, SplitMix64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(length));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = length - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
  }
  return perm;
}

}  // namespace

PreferenceProfile generate_uniform_profile(const Market& market, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::vector<int>> doctor_lists;
  doctor_lists.reserve(static_cast<std::size_t>(market.num_doctors));
  for (int d = 0; d < market.num_doctors; ++d) {
    doctor_lists.push_back(uniform_permutation(market.num_hospitals, rng));
  }
  std::vector<std::vector<int>> hospital_lists;
  hospital_lists.reserve(static_cast<std::size_t>(market.num_hospitals));
  for (int h = 0; h < market.num_hospitals; ++h) {
    hospital_lists.push_back(uniform_permutation(market.num_doctors, rng));
  }
  return PreferenceProfile(market, std::move(doctor_lists), std::move(hospital_lists));
}

PreferenceProfile truncate_hospital_list(const PreferenceProfile& profile, int hospital, int keep) {
  if (hospital < 0 || hospital >= profile.num_hospitals()) {
    throw std::invalid_argument("hospital index out of range");
  }
  const auto& list = profile.hospital_list(hospital);
  if (keep < 0 || static_cast<std::size_t>(keep) > list.size()) {
    throw std::invalid_argument("truncation length exceeds the hospital's list");
  }
  auto hospital_lists = profile.hospital_lists();
  hospital_lists[static_cast<std::size_t>(hospital)].resize(static_cast<std::size_t>(keep));
  return PreferenceProfile(profile.market(), profile.doctor_lists(), std::move(hospital_lists));
}

int rank_of(const PreferenceProfile& profile, AgentId agent, const Matching& matching) {
  const bool is_doctor = agent.side == Side::Doctor;
  const int owners = is_doctor ? profile.num_doctors() : profile.num_hospitals();
  if (agent.index < 0 || agent.index >= owners) {
    throw std::invalid_argument("agent index out of range");
  }
  if (matching.doctor_match.size() != static_cast<std::size_t>(profile.num_doctors()) ||
      matching.hospital_match.size() != static_cast<std::size_t>(profile.num_hospitals())) {
    throw std::invalid_argument("matching dimensions do not match the profile");
  }
  const auto& list = is_doctor ? profile.doctor_list(agent.index) : profile.hospital_list(agent.index);
  const int partner = is_doctor ? matching.doctor_match[static_cast<std::size_t>(agent.index)]
                                : matching.hospital_match[static_cast<std::size_t>(agent.index)];
  if (partner == kUnmatched) return static_cast<int>(list.size()) + 1;
  auto it = std::find(list.begin(), list.end(), partner);
  if (it == list.end()) {
    throw std::runtime_error("rank_of: matched partner is absent from the agent's list");
  }
  return static_cast<int>(it - list.begin()) + 1;
}

}  // namespace matchlab
