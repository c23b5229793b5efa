#include "wfam/witness.hpp"

#include <algorithm>

namespace wfam {

std::optional<element_set> witness_assignment::witness_for(const element_set& f) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), f,
                             [](const witness_entry& e, const element_set& v) { return e.set < v; });
  if (it == entries.end() || !(it->set == f)) return std::nullopt;
  return it->witness;
}

void validate_assignment(const set_family& family, const witness_assignment& assignment, int s) {
  if (assignment.entries.size() != family.members.size())
    fail(errc::invalid_assignment,
         "assignment covers " + std::to_string(assignment.entries.size()) + " sets, family has " +
             std::to_string(family.members.size()));
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const witness_entry& e = assignment.entries[i];
    if (!(e.set == family.members[i]))
      fail(errc::invalid_assignment, "assignment domain differs from family at position " +
                                         std::to_string(i) + ": " + e.set.to_string());
    if (!e.witness.subset_of(e.set))
      fail(errc::invalid_assignment,
           "witness " + e.witness.to_string() + " is not a subset of " + e.set.to_string());
    if (e.witness.size() != s)
      fail(errc::invalid_assignment, "witness " + e.witness.to_string() + " has size " +
                                         std::to_string(e.witness.size()) + ", expected " +
                                         std::to_string(s));
    for (const element_set& other : family.members) {
      if ((e.set & other) == e.witness)
        fail(errc::invalid_assignment, "witness " + e.witness.to_string() + " of " +
                                           e.set.to_string() + " is realized by " +
                                           other.to_string());
    }
  }
}

bool valid_witness(const set_family& family, const element_set& f, const element_set& b) {
  if (!family.contains(f))
    fail(errc::membership, "set " + f.to_string() + " is not a family member");
  if (!b.subset_of(f))
    fail(errc::precondition, "witness candidate " + b.to_string() + " is not a subset of " +
                                 f.to_string());
  for (const element_set& other : family.members) {
    if ((f & other) == b) return false;
  }
  return true;
}

set_family find_witnesses(const set_family& family, const element_set& f, int s) {
  if (!family.contains(f))
    fail(errc::membership, "set " + f.to_string() + " is not a family member");
  if (s < 0 || s > family.params.d)
    fail(errc::precondition, "witness size s=" + std::to_string(s) + " outside [0,d]");
  set_family out;
  out.params = family.params;
  for (const element_set& b : k_subsets(f, s)) {
    bool blocked = false;
    for (const element_set& other : family.members) {
      if ((f & other) == b) {
        blocked = true;
        break;
      }
    }
    if (!blocked) out.members.push_back(b);
  }
  return out;
}

verify_result verify_s_witness(const set_family& family, int s) {
  if (!family.is_uniform(family.params.d + 1))
    fail(errc::validation, "family is not (d+1)-uniform");
  verify_result result;
  witness_assignment assignment;
  assignment.entries.reserve(family.members.size());
  for (const element_set& f : family.members) {
    std::optional<element_set> chosen;
    for (const element_set& b : k_subsets(f, s)) {
      bool blocked = false;
      for (const element_set& other : family.members) {
        if ((f & other) == b) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        chosen = b;
        break;  // candidates come in canonical order; first hit is canonically first
      }
    }
    if (!chosen) {
      result.failing_member = f;
      return result;
    }
    assignment.entries.push_back({f, *chosen});
  }
  result.assignment = std::move(assignment);
  return result;
}

bool is_intersecting(const set_family& family) {
  for (std::size_t i = 0; i < family.members.size(); ++i)
    for (std::size_t j = i + 1; j < family.members.size(); ++j)
      if (family.members[i].disjoint(family.members[j])) return false;
  return true;
}

namespace {

// Every subset of s realized as s ∩ F for some member F. Subsets are coded
// by the positions of s's elements, so the table has 2^|s| entries.
bool set_shattered(const set_family& family, const element_set& s) {
  int k = s.size();
  std::vector<int> elems = s.elements();
  std::vector<char> seen(static_cast<std::size_t>(1) << k, 0);
  std::size_t remaining = seen.size();
  for (const element_set& other : family.members) {
    element_set i = s & other;
    std::size_t code = 0;
    for (int p = 0; p < k; ++p)
      if (i.contains(elems[static_cast<std::size_t>(p)])) code |= (std::size_t{1} << p);
    if (!seen[code]) {
      seen[code] = 1;
      if (--remaining == 0) return true;
    }
  }
  return false;
}

}  // namespace

vc_report vc_at_most_d(const set_family& family) {
  if (!family.is_uniform(family.params.d + 1))
    fail(errc::validation, "family is not (d+1)-uniform");
  vc_report report;
  for (const element_set& f : family.members) {
    // A (d+1)-set shattered by the family must itself be a member, so it is
    // enough to look for a member whose every subset is realized.
    if (set_shattered(family, f)) {
      report.vc_at_most_d = false;
      report.violating_member = f;
      return report;
    }
  }
  return report;
}

vc_value exact_vc(const set_family& family, int cap) {
  if (cap < 0) fail(errc::usage, "exact_vc: negative cap");
  vc_value result;
  element_set ground = family.params.ground();
  for (int k = 0; k <= cap; ++k) {
    bool found = false;
    for (const element_set& s : k_subsets(ground, k)) {
      if (set_shattered(family, s)) {
        found = true;
        break;
      }
    }
    if (!found) return result;  // shattering is downward closed; stop at first failing level
    result.value = k;
  }
  result.at_least = true;  // every level up to cap succeeded
  return result;
}

vc_value exact_vc(const set_family& family) { return exact_vc(family, family.params.d + 2); }

}  // namespace wfam
