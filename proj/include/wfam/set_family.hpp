#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wfam/element_set.hpp"

namespace wfam {

// (n, d, s): ground set [n], members of size d+1, witnesses of size s.
struct ground_params {
  int n = 0;
  int d = 0;
  int s = 0;

  void validate() const {
    if (d < 0 || d + 1 > n)
      fail(errc::validation, "require 1 <= d+1 <= n, got n=" + std::to_string(n) +
                                 " d=" + std::to_string(d));
    if (n > element_set::capacity)
      fail(errc::validation, "n=" + std::to_string(n) + " exceeds capacity " +
                                 std::to_string(element_set::capacity));
    if (s < 0 || s > d)
      fail(errc::validation, "require 0 <= s <= d, got s=" + std::to_string(s) +
                                 " d=" + std::to_string(d));
  }

  element_set ground() const { return element_set::full(n); }

  bool operator==(const ground_params&) const = default;
};

// Canonical family: members sorted colexicographically, no duplicates,
// all members inside [n].
struct set_family {
  ground_params params;
  std::vector<element_set> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }

  bool contains(const element_set& s) const;
  // Index of s in canonical order, or nullopt.
  std::optional<std::size_t> index_of(const element_set& s) const;

  // Every member has exactly k elements.
  bool is_uniform(int k) const;

  bool operator==(const set_family&) const = default;
};

// Sorts, deduplicates, validates members against [n]. Idempotent.
set_family canonicalize(set_family family);

// Helper used by the builders: sort + unique a raw member list.
std::vector<element_set> canonical_members(std::vector<element_set> members);

// All k-subsets of `ground` in canonical (colex) order.
// k > |ground| gives an empty list; k < 0 is a usage error.
std::vector<element_set> k_subsets(const element_set& ground, int k);

// Same enumeration wrapped as a family with the given params.
set_family k_subset_family(const ground_params& params, const element_set& ground, int k);

// Canonical union / difference of canonical member lists.
std::vector<element_set> family_union(const std::vector<element_set>& a,
                                      const std::vector<element_set>& b);
std::vector<element_set> family_difference(const std::vector<element_set>& a,
                                           const std::vector<element_set>& b);

}  // namespace wfam
