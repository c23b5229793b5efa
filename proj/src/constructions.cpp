#include "wfam/constructions.hpp"

#include <algorithm>

#include "wfam/binomial.hpp"

namespace wfam {

namespace {

// Canonically-first k-subset: the k smallest elements.
element_set first_k(const element_set& from, int k) {
  element_set out;
  int e = from.min_element();
  for (int i = 0; i < k; ++i) {
    if (e == 0) fail(errc::internal, "first_k: source set too small");
    out.add(e);
    e = from.next_element(e);
  }
  return out;
}

witness_assignment sorted_assignment(std::vector<witness_entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const witness_entry& a, const witness_entry& b) { return a.set < b.set; });
  witness_assignment out;
  out.entries = std::move(entries);
  return out;
}

}  // namespace

certified_family star(const ground_params& params, int center) {
  params.validate();
  if (center < 1 || center > params.n)
    fail(errc::usage, "star center " + std::to_string(center) + " outside [1," +
                          std::to_string(params.n) + "]");
  if (params.n < params.d + 1 + params.s)
    fail(errc::precondition, "star requires n >= d+1+s so a witness avoiding the center exists; "
                             "got n=" + std::to_string(params.n));

  element_set rest = params.ground().without(center);
  certified_family out;
  out.family.params = params;
  std::vector<witness_entry> entries;
  // Adding the fixed center to every d-subset preserves colex order, so the
  // family comes out canonical.
  for (const element_set& a : k_subsets(rest, params.d)) {
    element_set f = a.with(center);
    out.family.members.push_back(f);
    entries.push_back({f, first_k(a, params.s)});
  }
  out.witnesses = sorted_assignment(std::move(entries));
  validate_assignment(out.family, out.witnesses, params.s);
  return out;
}

two_star_result two_star(const ground_params& params, int m) {
  params.validate();
  const int d = params.d, s = params.s, n = params.n;
  if (2 * s <= d)
    fail(errc::precondition, "two_star requires d/2 < s, got d=" + std::to_string(d) +
                                 " s=" + std::to_string(s));
  if (s > d - 1)
    fail(errc::precondition, "two_star requires s <= d-1, got d=" + std::to_string(d) +
                                 " s=" + std::to_string(s));
  if (n < s + 3)
    fail(errc::precondition, "two_star requires n >= s+3, got n=" + std::to_string(n));
  if (m < s + 2 || m > n - 1)
    fail(errc::precondition, "two_star requires s+2 <= m <= n-1, got m=" + std::to_string(m));

  element_set tail = element_set::range(3, n);      // [3,n]
  element_set low = element_set::range(3, m);       // [3,m]
  element_set high = element_set::range(m + 1, n);  // [m+1,n]

  two_star_result out;
  out.family.params = params;
  std::vector<witness_entry> entries;

  for (const element_set& a : k_subsets(tail, d)) {
    element_set a_low = a & low;
    if (a_low.size() >= s) {
      element_set f = a.with(1);
      out.family.members.push_back(f);
      entries.push_back({f, first_k(a_low, s)});
      ++out.a1_size;
    } else {
      element_set f = a.with(2);
      out.family.members.push_back(f);
      element_set a_high = a & high;
      int from_high = std::min(s, a_high.size());
      element_set b = first_k(a_high, from_high);
      b = b | first_k(a_low, s - from_high);
      entries.push_back({f, b});
      ++out.a2_size;
    }
  }
  for (const element_set& a : k_subsets(tail, d - 1)) {
    element_set f = a.with(1).with(2);
    out.family.members.push_back(f);
    entries.push_back({f, first_k(a, s)});
    ++out.a12_size;
  }

  out.family.members = canonical_members(std::move(out.family.members));
  out.witnesses = sorted_assignment(std::move(entries));
  out.degenerate = (out.a1_size == 0 || out.a2_size == 0);

  std::uint64_t expected =
      checked_add(binomial(n - 2, d), binomial(n - 2, d - 1));
  if (out.family.size() != expected || expected != binomial(n - 1, d))
    fail(errc::internal, "two_star size " + std::to_string(out.family.size()) +
                             " does not match binomial(n-1,d)");
  validate_assignment(out.family, out.witnesses, s);
  return out;
}

set_family full_uniform(const ground_params& params) {
  params.validate();
  return k_subset_family(params, params.ground(), params.d + 1);
}

std::optional<int> is_star(const set_family& family) {
  if (family.empty()) return 1;  // vacuous: every element is common
  element_set common = family.members.front();
  for (const element_set& f : family.members) common = common & f;
  if (common.empty()) return std::nullopt;
  return common.min_element();
}

std::optional<std::pair<int, int>> covered_by_two_stars(const set_family& family) {
  for (const element_set& pair : k_subsets(family.params.ground(), 2)) {
    bool covers = true;
    for (const element_set& f : family.members) {
      if (f.disjoint(pair)) {
        covers = false;
        break;
      }
    }
    if (covers) {
      int x = pair.min_element();
      return std::make_pair(x, pair.next_element(x));
    }
  }
  return std::nullopt;
}

}  // namespace wfam
