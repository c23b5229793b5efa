#pragma once

#include <optional>
#include <vector>

#include "wfam/set_family.hpp"

namespace wfam {

// r sets whose pairwise intersections all equal `core`.
struct sunflower {
  element_set core;
  std::vector<std::size_t> petal_indices;  // indices into the searched family, ascending
};

// Exhaustive, deterministic search for a sunflower with exactly r petals.
// Candidate cores are the pairwise member intersections (every sunflower
// core is one), visited by ascending size then canonical order; petals are
// picked by backtracking over the core's link in member order, so the first
// answer is reproducible. r < 2 is a usage error.
std::optional<sunflower> find_sunflower(const set_family& family, int r);

}  // namespace wfam
