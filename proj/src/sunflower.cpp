#include "wfam/sunflower.hpp"

#include <algorithm>

namespace wfam {

namespace {

// First r pairwise-disjoint links in index order, depth-first.
bool pick_petals(const std::vector<element_set>& links, std::size_t start, int needed,
                 element_set used, std::vector<std::size_t>& chosen) {
  if (needed == 0) return true;
  for (std::size_t i = start; i < links.size(); ++i) {
    if (links.size() - i < static_cast<std::size_t>(needed)) break;
    if (!links[i].disjoint(used)) continue;
    chosen.push_back(i);
    if (pick_petals(links, i + 1, needed - 1, used | links[i], chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<sunflower> find_sunflower(const set_family& family, int r) {
  if (r < 2) fail(errc::usage, "find_sunflower: r must be at least 2");
  const std::size_t count = family.members.size();
  if (count < static_cast<std::size_t>(r)) return std::nullopt;

  // A sunflower's core equals the intersection of any two of its petals.
  std::vector<element_set> cores;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      cores.push_back(family.members[i] & family.members[j]);
  std::sort(cores.begin(), cores.end(), [](const element_set& a, const element_set& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  cores.erase(std::unique(cores.begin(), cores.end()), cores.end());

  for (const element_set& core : cores) {
    std::vector<std::size_t> indices;
    std::vector<element_set> links;
    for (std::size_t i = 0; i < count; ++i) {
      if (core.subset_of(family.members[i])) {
        indices.push_back(i);
        links.push_back(family.members[i] - core);
      }
    }
    if (indices.size() < static_cast<std::size_t>(r)) continue;
    std::vector<std::size_t> chosen;
    if (pick_petals(links, 0, r, element_set{}, chosen)) {
      sunflower result;
      result.core = core;
      for (std::size_t c : chosen) result.petal_indices.push_back(indices[c]);
      return result;
    }
  }
  return std::nullopt;
}

}  // namespace wfam
