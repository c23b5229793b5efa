#pragma once

#include <optional>
#include <vector>

#include "wfam/set_family.hpp"

namespace wfam {

// One chosen witness per family member, kept in family canonical order.
struct witness_entry {
  element_set set;
  element_set witness;
  bool operator==(const witness_entry&) const = default;
};

struct witness_assignment {
  std::vector<witness_entry> entries;  // sorted by `set` in colex order

  std::size_t size() const { return entries.size(); }
  std::optional<element_set> witness_for(const element_set& f) const;

  bool operator==(const witness_assignment&) const = default;
};

// Checks domain = family members, B_F subset of F with |B_F| = s, and that
// every B_F is a valid witness. Throws errc::invalid_assignment otherwise.
void validate_assignment(const set_family& family, const witness_assignment& assignment, int s);

// True iff no member F' of the family (including F itself) has F and F'
// intersecting in exactly B.
bool valid_witness(const set_family& family, const element_set& f, const element_set& b);

// All valid size-s witnesses of F, canonical order. Empty means F has none.
set_family find_witnesses(const set_family& family, const element_set& f, int s);

struct verify_result {
  std::optional<witness_assignment> assignment;   // canonically-first witness per member
  std::optional<element_set> failing_member;      // first member with no valid witness
  bool ok() const { return assignment.has_value(); }
};

// Decides whether the family is an s-witness family; on success the returned
// assignment picks the canonically-first valid witness for each member.
verify_result verify_s_witness(const set_family& family, int s);

// Every two members intersect. Equivalent to verify_s_witness(family, 0).ok().
bool is_intersecting(const set_family& family);

struct vc_report {
  bool vc_at_most_d = true;
  // Present iff vc_at_most_d is false: a member all of whose subsets are
  // realized as intersections with family members.
  std::optional<element_set> violating_member;
  std::optional<int> exact_vc;  // filled only by callers that also ran exact_vc
};

// The witness reformulation of VC(F) <= d for a (d+1)-uniform family.
vc_report vc_at_most_d(const set_family& family);

struct vc_value {
  int value = -1;      // largest shattered size found; -1 when nothing is shattered
  bool at_least = false;  // true when every k <= cap succeeded, so VC >= cap
};

// Exhaustive shattering search for small n: largest |S| <= cap with every
// subset of S realized as S ∩ F. Searches k ascending and stops at the first
// level with no shattered set.
vc_value exact_vc(const set_family& family, int cap);

// Default cap d+2: any (d+1)-uniform family has VC <= d+1, so the search is
// total and the result exact.
vc_value exact_vc(const set_family& family);

}  // namespace wfam
