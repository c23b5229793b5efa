#include "wfam/set_family.hpp"

#include <algorithm>

namespace wfam {

bool set_family::contains(const element_set& s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

std::optional<std::size_t> set_family::index_of(const element_set& s) const {
  auto it = std::lower_bound(members.begin(), members.end(), s);
  if (it == members.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

bool set_family::is_uniform(int k) const {
  return std::all_of(members.begin(), members.end(),
                     [k](const element_set& m) { return m.size() == k; });
}

std::vector<element_set> canonical_members(std::vector<element_set> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

set_family canonicalize(set_family family) {
  family.params.validate();
  for (const element_set& m : family.members) {
    if (!m.within(family.params.n))
      fail(errc::validation,
           "member " + m.to_string() + " has elements outside [1," +
               std::to_string(family.params.n) + "]");
  }
  family.members = canonical_members(std::move(family.members));
  return family;
}

std::vector<element_set> k_subsets(const element_set& ground, int k) {
  if (k < 0) fail(errc::usage, "k_subsets: negative k");
  std::vector<int> elems = ground.elements();
  int t = static_cast<int>(elems.size());
  std::vector<element_set> out;
  if (k > t) return out;
  if (k == 0) {
    out.push_back(element_set{});
    return out;
  }
  // Index-vector successor in colex order: bump the lowest position that
  // can move, reset everything below it.
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    element_set s;
    for (int i : idx) s.add(elems[static_cast<std::size_t>(i)]);
    out.push_back(s);
    int j = 0;
    while (j < k) {
      int limit = (j + 1 < k) ? idx[static_cast<std::size_t>(j + 1)] : t;
      if (idx[static_cast<std::size_t>(j)] + 1 < limit) break;
      ++j;
    }
    if (j == k) break;
    ++idx[static_cast<std::size_t>(j)];
    for (int i = 0; i < j; ++i) idx[static_cast<std::size_t>(i)] = i;
  }
  return out;
}

set_family k_subset_family(const ground_params& params, const element_set& ground, int k) {
  set_family fam;
  fam.params = params;
  fam.members = k_subsets(ground, k);
  return fam;
}

std::vector<element_set> family_union(const std::vector<element_set>& a,
                                      const std::vector<element_set>& b) {
  std::vector<element_set> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<element_set> family_difference(const std::vector<element_set>& a,
                                           const std::vector<element_set>& b) {
  std::vector<element_set> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace wfam
