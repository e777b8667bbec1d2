#include "da.hpp"

#include <limits>
#include <stdexcept>

#include "rng.hpp"

namespace matchlab {

namespace {

constexpr int kUnacceptable = std::numeric_limits<int>::max();

// position[owner][partner] = index of partner on owner's list, kUnacceptable
// if absent. Gives O(1) accept/reject decisions.
std::vector<std::vector<int>> position_tables(const std::vector<std::vector<int>>& lists,
                                              int partner_count) {
  std::vector<std::vector<int>> pos(lists.size(),
                                    std::vector<int>(static_cast<std::size_t>(partner_count), kUnacceptable));
  for (std::size_t owner = 0; owner < lists.size(); ++owner) {
    for (std::size_t i = 0; i < lists[owner].size(); ++i) {
      pos[owner][static_cast<std::size_t>(lists[owner][i])] = static_cast<int>(i);
    }
  }
  return pos;
}

// Pending-proposer pool. Queue keeps FIFO order via a head cursor, Stack is
// LIFO, SeededRandom draws a uniform member.
class ProposerPool {
 public:
  ProposerPool(ProposalOrder order, int initial_count)
      : kind_(order.kind), rng_(order.seed) {
    members_.reserve(static_cast<std::size_t>(initial_count));
    for (int a = 0; a < initial_count; ++a) members_.push_back(a);
  }

  bool empty() const { return head_ == members_.size(); }

  int take() {
    switch (kind_) {
      case ProposalOrder::Kind::Queue:
        return members_[head_++];
      case ProposalOrder::Kind::Stack: {
        int a = members_.back();
        members_.pop_back();
        return a;
      }
      case ProposalOrder::Kind::SeededRandom: {
        std::size_t live = members_.size() - head_;
        std::size_t pick = head_ + static_cast<std::size_t>(rng_.next_below(live));
        std::swap(members_[pick], members_.back());
        int a = members_.back();
        members_.pop_back();
        return a;
      }
    }
    throw std::logic_error("unreachable");
  }

  void add(int agent) { members_.push_back(agent); }

 private:
  ProposalOrder::Kind kind_;
  SplitMix64 rng_;
  std::vector<int> members_;
  std::size_t head_ = 0;
};

// Core one-side-proposing run, written in proposer/receiver terms.
DaTrace run_core(const std::vector<std::vector<int>>& proposer_lists,
                 const std::vector<std::vector<int>>& receiver_lists,
                 ProposalOrder order) {
  const int num_proposers = static_cast<int>(proposer_lists.size());
  const int num_receivers = static_cast<int>(receiver_lists.size());
  const auto receiver_pos = position_tables(receiver_lists, num_proposers);

  std::vector<int> next_choice(static_cast<std::size_t>(num_proposers), 0);
  std::vector<int> proposer_match(static_cast<std::size_t>(num_proposers), kUnmatched);
  std::vector<int> receiver_match(static_cast<std::size_t>(num_receivers), kUnmatched);

  DaTrace trace;
  trace.proposals_per_proposer.assign(static_cast<std::size_t>(num_proposers), 0);

  ProposerPool pool(order, num_proposers);
  while (!pool.empty()) {
    const int p = pool.take();
    const auto& list = proposer_lists[static_cast<std::size_t>(p)];
    if (static_cast<std::size_t>(next_choice[static_cast<std::size_t>(p)]) >= list.size()) {
      continue;  // exhausted, stays unmatched
    }
    const int r = list[static_cast<std::size_t>(next_choice[static_cast<std::size_t>(p)]++)];
    ++trace.proposals_per_proposer[static_cast<std::size_t>(p)];

    const int pos = receiver_pos[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)];
    const int incumbent = receiver_match[static_cast<std::size_t>(r)];
    bool accepted = false;
    if (pos != kUnacceptable &&
        (incumbent == kUnmatched ||
         pos < receiver_pos[static_cast<std::size_t>(r)][static_cast<std::size_t>(incumbent)])) {
      accepted = true;
      receiver_match[static_cast<std::size_t>(r)] = p;
      proposer_match[static_cast<std::size_t>(p)] = r;
      if (incumbent != kUnmatched) {
        proposer_match[static_cast<std::size_t>(incumbent)] = kUnmatched;
        pool.add(incumbent);
      }
    } else {
      pool.add(p);
    }
    trace.proposals.push_back({p, r, accepted});
  }

  trace.total_proposals = static_cast<std::int64_t>(trace.proposals.size());
  trace.matching.doctor_match = std::move(proposer_match);
  trace.matching.hospital_match = std::move(receiver_match);
  return trace;
}

}  // namespace

DaTrace run_dpda(const PreferenceProfile& profile, ProposalOrder order) {
  DaTrace trace = run_core(profile.doctor_lists(), profile.hospital_lists(), order);
  trace.proposing_side = Side::Doctor;
  return trace;
}

DaTrace run_hpda(const PreferenceProfile& profile, ProposalOrder order) {
  DaTrace trace = run_core(profile.hospital_lists(), profile.doctor_lists(), order);
  trace.proposing_side = Side::Hospital;
  // run_core matched hospitals as proposers; swap back to doctor/hospital form.
  std::swap(trace.matching.doctor_match, trace.matching.hospital_match);
  return trace;
}

std::vector<BlockingPair> find_blocking_pairs(const PreferenceProfile& profile,
                                              const Matching& matching) {
  const int n = profile.num_doctors();
  const int m = profile.num_hospitals();
  if (matching.doctor_match.size() != static_cast<std::size_t>(n) ||
      matching.hospital_match.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("matching dimensions do not match the profile");
  }

  const auto doctor_pos = position_tables(profile.doctor_lists(), m);
  const auto hospital_pos = position_tables(profile.hospital_lists(), n);

  // Position of the current partner, kUnacceptable when unmatched (anything
  // on the list beats staying unmatched) or when the partner is off-list.
  auto current_pos = [](const std::vector<int>& pos_row, int partner) {
    return partner == kUnmatched ? kUnacceptable : pos_row[static_cast<std::size_t>(partner)];
  };

  std::vector<BlockingPair> blocking;
  for (int d = 0; d < n; ++d) {
    const int matched_pos = current_pos(doctor_pos[static_cast<std::size_t>(d)],
                                        matching.doctor_match[static_cast<std::size_t>(d)]);
    for (int h = 0; h < m; ++h) {
      if (matching.doctor_match[static_cast<std::size_t>(d)] == h) continue;
      const int dh = doctor_pos[static_cast<std::size_t>(d)][static_cast<std::size_t>(h)];
      if (dh == kUnacceptable || dh >= matched_pos) continue;
      const int hd = hospital_pos[static_cast<std::size_t>(h)][static_cast<std::size_t>(d)];
      if (hd == kUnacceptable) continue;
      const int h_matched_pos = current_pos(hospital_pos[static_cast<std::size_t>(h)],
                                            matching.hospital_match[static_cast<std::size_t>(h)]);
      if (hd < h_matched_pos) blocking.push_back({d, h});
    }
  }
  return blocking;
}

bool is_stable(const PreferenceProfile& profile, const Matching& matching) {
  return find_blocking_pairs(profile, matching).empty();
}

}  // namespace matchlab
