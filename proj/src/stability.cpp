#include "wfam/stability.hpp"

#include <algorithm>

#include "wfam/binomial.hpp"

namespace wfam {

best_star_result best_star(const set_family& family) {
  if (family.empty()) fail(errc::usage, "best_star: empty family");
  if (!family.is_uniform(family.params.d + 1))
    fail(errc::validation, "best_star: family is not (d+1)-uniform");

  const int n = family.params.n;
  std::vector<std::uint64_t> degree(static_cast<std::size_t>(n) + 1, 0);
  for (const element_set& f : family.members)
    for (int e : f.elements()) ++degree[static_cast<std::size_t>(e)];

  best_star_result out;
  std::uint64_t best = 0;
  for (int x = 1; x <= n; ++x) {
    if (degree[static_cast<std::size_t>(x)] > best) {
      best = degree[static_cast<std::size_t>(x)];
      out.x0_freq = x;
    }
  }

  set_family star_family = k_subset_family(family.params, family.params.ground(),
                                           family.params.d + 1);
  star_family.members.erase(
      std::remove_if(star_family.members.begin(), star_family.members.end(),
                     [&](const element_set& f) { return !f.contains(out.x0_freq); }),
      star_family.members.end());
  out.diff = family_difference(family.members, star_family.members).size() +
             family_difference(star_family.members, family.members).size();
  return out;
}

stability_report_result stability_report(const set_family& family,
                                         const witness_assignment& assignment) {
  const ground_params& params = family.params;
  injection_report inj = build_injection(family, assignment);
  const base_classification& cls = inj.classification;

  stability_report_result out;
  if (cls.b1.empty()) {
    out.degenerate = true;
    return out;
  }

  // x0 maximizes |B1(x)| with smallest-element tie-break.
  std::vector<std::uint64_t> b1_count(static_cast<std::size_t>(params.n) + 1, 0);
  for (const model_result& r : cls.b1) ++b1_count[static_cast<std::size_t>(*r.x_b)];
  int x0 = 0;
  std::uint64_t best = 0;
  for (int x = 1; x <= params.n; ++x) {
    if (b1_count[static_cast<std::size_t>(x)] > best) {
      best = b1_count[static_cast<std::size_t>(x)];
      x0 = x;
    }
  }
  out.x0 = x0;
  out.m = cls.b1.size() - best;

  // L = |F* \ F| for the full star at x0.
  std::uint64_t star_size = binomial(params.n - 1, params.d);
  std::uint64_t star_in_family = 0;
  for (const element_set& f : family.members)
    if (f.contains(x0)) ++star_in_family;
  out.l = star_size - star_in_family;

  // Four-way base partition.
  for (const model_result& r : cls.b1) {
    if (r.base.contains(x0))
      out.s1.push_back(r.base);
    else if (*r.x_b == x0)
      out.b1_x0.push_back(r.base);
    else
      out.b1_prime.push_back(r.base);
  }
  for (const model_result& r : cls.b_ge2) {
    if (r.base.contains(x0))
      out.s1.push_back(r.base);
    else
      out.s2.push_back(r.base);
  }
  out.s1 = canonical_members(std::move(out.s1));
  out.s2 = canonical_members(std::move(out.s2));
  out.b1_x0 = canonical_members(std::move(out.b1_x0));
  out.b1_prime = canonical_members(std::move(out.b1_prime));

  std::size_t total = out.s1.size() + out.s2.size() + out.b1_x0.size() + out.b1_prime.size();
  std::vector<element_set> all =
      family_union(family_union(out.s1, out.s2), family_union(out.b1_x0, out.b1_prime));
  std::vector<element_set> bases = cls.all_bases();
  if (total != bases.size() || all != bases)
    fail(errc::internal, "S1, S2, B1(x0), B1' do not partition the base set");

  // F1(x0), F1' and the restricted pair machinery.
  auto is_in = [](const std::vector<element_set>& list, const element_set& v) {
    return std::binary_search(list.begin(), list.end(), v);
  };
  std::vector<element_set> f1_x0_members;
  std::vector<element_set> f1_prime_members;
  for (const base_image& image : inj.per_base) {
    if (is_in(out.b1_x0, image.base))
      f1_x0_members = family_union(f1_x0_members, image.f_b.members);
    else if (is_in(out.b1_prime, image.base))
      f1_prime_members = family_union(f1_prime_members, image.f_b.members);
  }
  out.f1_x0.params = params;
  out.f1_x0.members = std::move(f1_x0_members);
  out.f1_prime.params = params;
  out.f1_prime.members = std::move(f1_prime_members);
  out.f1_x0_size = out.f1_x0.size();

  std::uint64_t f1_prime_in_star = 0;
  for (const element_set& f : out.f1_prime.members)
    if (f.contains(x0)) ++f1_prime_in_star;
  out.f1_prime_minus_star_size = out.f1_prime.size() - f1_prime_in_star;

  // U' over P' = P ∩ (B1(x0) × B1').
  std::vector<element_set> u_prime_members;
  for (const base_image& a : inj.per_base) {
    if (!is_in(out.b1_x0, a.base)) continue;
    for (const base_image& b : inj.per_base) {
      if (!is_in(out.b1_prime, b.base)) continue;
      if (a.x_b == b.x_b) continue;
      if (b.base.contains(a.x_b) || a.base.contains(b.x_b)) continue;
      set_family u_bb = u_pair_sets(params, a.base, a.x_b, b.base, b.x_b);
      u_prime_members = family_union(u_prime_members, u_bb.members);
    }
  }
  out.u_prime.params = params;
  out.u_prime.members = std::move(u_prime_members);
  out.u_prime_size = out.u_prime.size();

  for (const element_set& e : out.u_prime.members) {
    if (e.contains(x0))
      fail(errc::internal, "U' set " + e.to_string() + " contains x0 = " + std::to_string(x0));
  }

  std::uint64_t bound = binomial(params.n - 1, params.d);
  std::uint64_t used =
      checked_add(checked_add(out.f1_x0_size, out.f1_prime_minus_star_size), out.u_prime_size);
  if (used > bound)
    fail(errc::internal, "inj2 inequality fails: " + std::to_string(used) + " > C(n-1,d) = " +
                             std::to_string(bound));
  out.inj2_slack = bound - used;
  return out;
}

}  // namespace wfam
