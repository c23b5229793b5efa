#include "wfam/model.hpp"

#include <algorithm>

#include "wfam/binomial.hpp"

namespace wfam {

std::uint64_t model_size_bound(const ground_params& params) {
  std::uint64_t total = 0;
  for (int k = 1; k <= params.d + 1 - params.s; ++k) {
    std::uint64_t term = 1;
    for (int i = 2; i <= k; ++i) term = checked_mul(term, static_cast<std::uint64_t>(i));
    for (int i = 0; i < k; ++i)
      term = checked_mul(term, static_cast<std::uint64_t>(params.d + 1));
    total = checked_add(total, term);
  }
  return total;
}

namespace {

bool pairwise_intersecting(const std::vector<element_set>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i].disjoint(sets[j])) return false;
  return true;
}

void check_model_properties(const model_result& result, const set_family& family) {
  const element_set& base = result.base;
  // (1) intersecting
  if (!pairwise_intersecting(result.model.members))
    fail(errc::internal, "model for base " + base.to_string() + " is not intersecting");
  // (3) every family member containing the base meets every model set
  for (const element_set& f : family.members) {
    if (!base.subset_of(f)) continue;
    for (const element_set& a : result.model.members) {
      if (a.disjoint(f))
        fail(errc::internal, "model set " + a.to_string() + " misses member " + f.to_string() +
                                 " containing base " + base.to_string());
    }
  }
}

}  // namespace

model_result reduce_to_model(const element_set& base, const set_family& family,
                             const witness_assignment& assignment, bool collapse_singleton) {
  const ground_params& params = family.params;
  model_result result;
  result.base = base;
  result.model.params = params;

  std::vector<element_set> fiber;  // members whose assigned witness is `base`
  for (const witness_entry& e : assignment.entries) {
    if (e.witness == base) fiber.push_back(e.set);
  }
  if (fiber.empty())
    fail(errc::precondition, "base " + base.to_string() + " does not occur in the assignment");
  result.fiber_size = fiber.size();

  std::vector<element_set> working;
  working.reserve(fiber.size());
  for (const element_set& f : fiber) working.push_back(f - base);
  working = canonical_members(std::move(working));

  if (!pairwise_intersecting(working))
    fail(errc::invalid_assignment,
         "initial model for base " + base.to_string() +
             " is not intersecting; the assignment cannot be a valid witness choice");

  const int r = params.d + 2;
  set_family current;
  current.params = params;
  current.members = std::move(working);
  for (;;) {
    std::optional<sunflower> found = find_sunflower(current, r);
    if (!found) break;
    if (found->core.empty())
      fail(errc::invalid_assignment,
           "empty-core sunflower in model reduction for base " + base.to_string() +
               "; initial family was not intersecting");
    replacement_step step;
    step.core = found->core;
    for (std::size_t i : found->petal_indices) step.petals.push_back(current.members[i]);
    // Remove the petals, insert the core; insertion is a no-op if present.
    std::vector<element_set> next;
    next.reserve(current.members.size());
    std::size_t petal_pos = 0;
    for (std::size_t i = 0; i < current.members.size(); ++i) {
      if (petal_pos < found->petal_indices.size() && found->petal_indices[petal_pos] == i) {
        ++petal_pos;
        continue;
      }
      next.push_back(current.members[i]);
    }
    next.push_back(found->core);
    current.members = canonical_members(std::move(next));
    result.trace.push_back(std::move(step));
  }

  result.model = current;

  int alpha = params.d + 2;
  std::optional<int> x_b;
  for (const element_set& a : result.model.members) {
    alpha = std::min(alpha, a.size());
    if (a.size() == 1) x_b = a.min_element();
  }
  result.alpha = alpha;
  result.x_b = x_b;

  if (collapse_singleton && x_b) {
    result.model.members = {element_set::singleton(*x_b)};
    result.collapsed = true;
  }

  // (2) every fiber member contains a model set
  for (const element_set& f : fiber) {
    bool covered = false;
    for (const element_set& a : result.model.members) {
      if (a.subset_of(f)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      fail(errc::internal, "fiber member " + f.to_string() + " contains no model set for base " +
                               base.to_string());
  }
  check_model_properties(result, family);

  // (4) the sunflower-lemma size bound
  if (result.model.size() > model_size_bound(params))
    fail(errc::internal, "model for base " + base.to_string() + " exceeds the size bound");
  // model sets live outside the base with size at most d+1-s
  for (const element_set& a : result.model.members) {
    if (a.intersects(base) || a.size() > params.d + 1 - params.s || a.empty())
      fail(errc::internal, "model set " + a.to_string() + " violates shape constraints");
  }
  return result;
}

base_classification classify_bases(const set_family& family,
                                   const witness_assignment& assignment) {
  validate_assignment(family, assignment, family.params.s);
  std::vector<element_set> bases;
  bases.reserve(assignment.entries.size());
  for (const witness_entry& e : assignment.entries) bases.push_back(e.witness);
  bases = canonical_members(std::move(bases));

  base_classification out;
  for (const element_set& base : bases) {
    model_result r = reduce_to_model(base, family, assignment, /*collapse_singleton=*/true);
    if (r.alpha == 1)
      out.b1.push_back(std::move(r));
    else
      out.b_ge2.push_back(std::move(r));
  }
  return out;
}

std::vector<element_set> base_classification::all_bases() const {
  std::vector<element_set> out;
  out.reserve(b1.size() + b_ge2.size());
  for (const model_result& r : b1) out.push_back(r.base);
  for (const model_result& r : b_ge2) out.push_back(r.base);
  return canonical_members(std::move(out));
}

set_family family_f_b(const element_set& base, const set_family& model,
                      const set_family& family) {
  set_family out;
  out.params = family.params;
  for (const element_set& f : family.members) {
    for (const element_set& a : model.members) {
      if ((a | base).subset_of(f)) {
        out.members.push_back(f);
        break;
      }
    }
  }
  return out;
}

}  // namespace wfam
