#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wfam/injection.hpp"

namespace wfam {

// Frequency-based star approximation: most frequent element and the exact
// symmetric difference against the full star there.
struct best_star_result {
  int x0_freq = 0;
  std::uint64_t diff = 0;
};

best_star_result best_star(const set_family& family);

struct stability_report_result {
  bool degenerate = false;          // B1 empty: x0 undefined, B1-derived fields empty
  std::optional<int> x0;            // argmax_x |B1(x)|, canonically-first tie-break
  std::uint64_t m = 0;              // |B1| - |B1(x0)|
  std::uint64_t l = 0;              // |F* \ F| for the full star F* at x0
  std::vector<element_set> s1;      // bases containing x0
  std::vector<element_set> s2;      // alpha >= 2 bases avoiding x0
  std::vector<element_set> b1_x0;   // alpha == 1, x_B == x0
  std::vector<element_set> b1_prime;  // alpha == 1, x_B != x0, x0 not in B
  set_family f1_x0;
  set_family f1_prime;
  std::uint64_t f1_x0_size = 0;
  std::uint64_t f1_prime_minus_star_size = 0;
  set_family u_prime;               // union of U(B,B') over P' = P ∩ (B1(x0) × B1')
  std::uint64_t u_prime_size = 0;
  std::uint64_t inj2_slack = 0;     // C(n-1,d) - the three sizes above
};

// Star-approximation and stability diagnostics. Asserts the four-way base
// partition, that every U' set avoids x0, and that
// |F1(x0)| + |F1' \ F*| + |U'| <= C(n-1,d).
stability_report_result stability_report(const set_family& family,
                                         const witness_assignment& assignment);

}  // namespace wfam
