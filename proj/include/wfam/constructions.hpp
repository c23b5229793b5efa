#pragma once

#include <optional>
#include <utility>

#include "wfam/witness.hpp"

namespace wfam {

struct certified_family {
  set_family family;
  witness_assignment witnesses;
};

// All (d+1)-sets containing `center`, witnesses the canonically-first
// s-subset of F minus the center. Requires n >= d+1+s so the witness fits.
// The emitted assignment is re-verified before returning.
certified_family star(const ground_params& params, int center);

struct two_star_result {
  set_family family;
  witness_assignment witnesses;
  std::uint64_t a1_size = 0;   // block {1}∪A with |A ∩ [3,m]| >= s
  std::uint64_t a2_size = 0;   // block {2}∪A with |A ∩ [3,m]| <  s
  std::uint64_t a12_size = 0;  // block {1,2}∪A
  // True when one of the single-star blocks is empty; the family is then a
  // star and the non-star claim is not asserted.
  bool degenerate = false;
};

// The two-star family of size C(n-1,d) that is not a star whenever both
// single-star blocks are non-empty. Requires d/2 < s <= d-1, n >= s+3 and
// s+2 <= m <= n-1. Witnesses follow the three block rules, with "arbitrary"
// choices resolved to canonically-first ones; the A2 rule takes the first
// min(s, |A ∩ [m+1,n]|) elements of A ∩ [m+1,n] and fills from A ∩ [3,m],
// so that at least d-s+1 witness elements land in [m+1,n].
two_star_result two_star(const ground_params& params, int m);

// All (d+1)-subsets of [n].
set_family full_uniform(const ground_params& params);

// Smallest element common to all members, or nullopt. The empty family
// returns 1 (vacuously every element is common).
std::optional<int> is_star(const set_family& family);

// Canonically-first pair {x,y} hitting every member, or nullopt.
std::optional<std::pair<int, int>> covered_by_two_stars(const set_family& family);

}  // namespace wfam
