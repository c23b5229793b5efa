#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wfam/sunflower.hpp"
#include "wfam/witness.hpp"

namespace wfam {

// One sunflower contraction: the petals removed and the core inserted.
struct replacement_step {
  element_set core;
  std::vector<element_set> petals;
};

// Output of the per-base reduction. `model` lives over [n] \ base and holds
// sets of size at most d+1-s.
struct model_result {
  element_set base;
  set_family model;
  int alpha = 0;                    // minimum member size of the model
  std::optional<int> x_b;           // present iff alpha == 1; then {x_b} is in the model
  std::vector<replacement_step> trace;
  bool collapsed = false;           // model was replaced by {{x_b}}
  std::uint64_t fiber_size = 0;     // members F with B_F = base
};

// sum_{k=1}^{d+1-s} k!(d+1)^k, the sunflower-free size bound on the model.
std::uint64_t model_size_bound(const ground_params& params);

// Iteratively replaces (d+2)-sunflowers by their cores, starting from
// {F \ B : B_F = B}, until none remain. Verifies the intersecting /
// containment properties against the family before returning; violations of
// re-checked properties are internal errors, a non-intersecting start is an
// invalid-assignment error. With collapse_singleton, a model containing a
// singleton is replaced by just that singleton.
model_result reduce_to_model(const element_set& base, const set_family& family,
                             const witness_assignment& assignment, bool collapse_singleton);

struct base_classification {
  std::vector<model_result> b1;     // alpha == 1, x_b defined
  std::vector<model_result> b_ge2;  // alpha >= 2

  std::vector<element_set> all_bases() const;
};

// Runs reduce_to_model (collapsing singletons) for every distinct base of
// the assignment and partitions by alpha. The assignment is validated once.
base_classification classify_bases(const set_family& family, const witness_assignment& assignment);

// F_B: members containing A ∪ B for some model set A.
set_family family_f_b(const element_set& base, const set_family& model, const set_family& family);

}  // namespace wfam
