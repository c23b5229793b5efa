#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wfam/constructions.hpp"

namespace wfam {

enum class search_mode { exhaustive, branch_and_bound };

std::string to_string(search_mode mode);

// The four §-question constraints for the three-star search.
struct three_star_constraints {
  bool require_cover = true;          // every member meets {1,2,3}
  bool witness_avoid = true;          // every witness avoids {1,2,3}
  bool forbid_two_star_cover = true;  // no pair {x,y} hits every member
  std::uint64_t target_size = 0;      // 0 means C(n-1,d)
};

struct search_problem {
  ground_params params;
  search_mode mode = search_mode::branch_and_bound;
  std::optional<three_star_constraints> constraints;
  std::uint64_t node_limit = 100'000'000;
  std::optional<std::uint64_t> target;  // stop once a family this large is found

  void validate() const;
};

struct search_result {
  std::uint64_t best_size = 0;
  certified_family certificate;
  std::uint64_t nodes_explored = 0;
  bool complete = false;  // search space exhausted (not node-limited, not early-stopped)
};

// Exact maximum s-witness family size by depth-first search over the
// candidate members in canonical order.
//
// exhaustive: plain include/exclude enumeration re-verified by
// verify_s_witness at every step (the oracle); requires C(n,d+1) <= 25.
// branch_and_bound: incremental per-member witness masks with trail undo,
// the |partial| + |remaining| bound, and the lexicographically-least member
// fixed at the root (sound: the property is invariant under relabeling).
search_result max_s_witness(const search_problem& problem);

struct three_star_options {
  bool stratified = true;  // branch on d / (d-1) subset labels of [4,n]
  three_star_constraints constraints;
  std::uint64_t node_limit = 100'000'000;
};

// Searches for a family realizing the three-star question: size C(n-1,d),
// every member meets {1,2,3}, witnesses avoid {1,2,3}, and no two stars
// cover the family. Requires d/2 < s <= d-2. Returns the verified
// certificate (best_size = target) or exhaustion (best_size = 0); complete
// is false only when the node limit was hit before the question is decided.
search_result three_star_search(const ground_params& params, const three_star_options& options);

struct sweep_row {
  ground_params params;
  search_mode mode = search_mode::branch_and_bound;
  std::optional<std::uint64_t> best_size;
  std::uint64_t bound_nm1_d = 0;  // C(n-1,d) for comparison, not asserted
  bool complete = false;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  std::string error;
};

// Runs max_s_witness per cell; a failing cell records its error in the row
// and the sweep continues.
std::vector<sweep_row> sweep(const std::vector<ground_params>& grid, search_mode mode,
                             std::uint64_t node_limit);

}  // namespace wfam
