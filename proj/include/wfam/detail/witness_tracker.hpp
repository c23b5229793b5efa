#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "wfam/set_family.hpp"

namespace wfam::detail {

// Incremental surviving-witness bookkeeping for depth-first searches.
// Each tracked member carries a bitmask over its candidate witness sets;
// adding a member clears every candidate realized as an intersection, on
// both sides, and records the clears on a trail for O(1) backtracking.
class witness_tracker {
 public:
  explicit witness_tracker(int s) : s_(s) {}

  std::size_t size() const { return members_.size(); }
  bool feasible() const { return empty_masks_ == 0; }
  const std::vector<element_set>& members() const { return members_; }

  // Candidate lists must be sorted (k_subsets order) and hold at most 64 sets.
  void add(const element_set& f, const std::vector<element_set>* candidates) {
    assert(candidates->size() <= 64);
    std::size_t slot = members_.size();
    members_.push_back(f);
    cands_.push_back(candidates);
    std::uint64_t full = candidates->size() == 64
                             ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << candidates->size()) - 1;
    masks_.push_back(full);
    if (full == 0) ++empty_masks_;
    trail_.push_back({kAddMember, 0});

    for (std::size_t j = 0; j < slot; ++j) {
      element_set i = members_[j] & f;
      if (i.size() != s_) continue;
      clear_candidate(j, i);
      clear_candidate(slot, i);
    }
  }

  std::size_t checkpoint() const { return trail_.size(); }

  void rollback(std::size_t mark) {
    while (trail_.size() > mark) {
      event e = trail_.back();
      trail_.pop_back();
      if (e.kind == kAddMember) {
        if (masks_.back() == 0) --empty_masks_;
        members_.pop_back();
        cands_.pop_back();
        masks_.pop_back();
      } else {
        std::size_t slot = e.kind;
        if (masks_[slot] == 0) --empty_masks_;
        masks_[slot] |= e.bit;
      }
    }
  }

  // Canonically-first surviving candidate of the member in a slot.
  element_set first_surviving(std::size_t slot) const {
    std::uint64_t mask = masks_[slot];
    assert(mask != 0);
    int bit = std::countr_zero(mask);
    return (*cands_[slot])[static_cast<std::size_t>(bit)];
  }

 private:
  static constexpr std::size_t kAddMember = static_cast<std::size_t>(-1);

  struct event {
    std::size_t kind;  // kAddMember, or the slot whose bit was cleared
    std::uint64_t bit;
  };

  void clear_candidate(std::size_t slot, const element_set& value) {
    const std::vector<element_set>& list = *cands_[slot];
    auto it = std::lower_bound(list.begin(), list.end(), value);
    if (it == list.end() || !(*it == value)) return;
    std::uint64_t bit = std::uint64_t{1} << (it - list.begin());
    if (!(masks_[slot] & bit)) return;
    masks_[slot] &= ~bit;  // masks only ever shrink; restoration goes through the trail
    if (masks_[slot] == 0) ++empty_masks_;
    trail_.push_back({slot, bit});
  }

  int s_;
  std::vector<element_set> members_;
  std::vector<const std::vector<element_set>*> cands_;
  std::vector<std::uint64_t> masks_;
  std::vector<event> trail_;
  std::size_t empty_masks_ = 0;
};

}  // namespace wfam::detail
