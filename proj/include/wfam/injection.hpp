#pragma once

#include <cstdint>
#include <vector>

#include "wfam/model.hpp"

namespace wfam {

// E_B = {F \ {x_B} : F in F_B} for one B with alpha == 1.
struct base_image {
  element_set base;
  int x_b = 0;
  set_family f_b;  // members containing base ∪ {x_b}
  set_family e_b;  // their images under F -> F \ {x_b}
};

struct base_pair {
  element_set b;
  element_set b_prime;
  std::uint64_t u_count = 0;        // |U(B,B')|
  std::uint64_t u_lower_bound = 0;  // C(n-2s-2, d-2s), the s <= d/2 guarantee
};

struct injection_report {
  base_classification classification;
  std::vector<base_image> per_base;   // one entry per B in B1, canonical base order
  set_family f1;                      // union of the F_B
  set_family e;                       // union of the E_B
  std::vector<base_pair> pairs;       // P: ordered pairs with x_B != x_B', x_B not in B', x_B' not in B
  set_family u;                       // union of U(B,B') over P
  std::uint64_t slack = 0;            // C(n,d) - |F1| - |U|
};

// The d-sets containing b ∪ b' and avoiding both excluded points.
set_family u_pair_sets(const ground_params& params, const element_set& b, int x_b,
                       const element_set& b_prime, int x_b_prime);

// Builds the injection report and asserts, with counterexample-carrying
// errors on failure:
//   (1) a family member containing some E in E_B equals E ∪ {x_B},
//   (2) E_B and E_B' are disjoint when x_B != x_B',
//   (3) U ∩ E is empty,
// plus |E| = |F1| and |F1| + |U| <= C(n,d). Runs for any s; the per-pair
// lower bound C(n-2s-2, d-2s) is recorded for the caller to check where
// s <= d/2 applies.
injection_report build_injection(const set_family& family, const witness_assignment& assignment);

}  // namespace wfam
