#include "wfam/injection.hpp"

#include <algorithm>

#include "wfam/binomial.hpp"

namespace wfam {

set_family u_pair_sets(const ground_params& params, const element_set& b, int x_b,
                       const element_set& b_prime, int x_b_prime) {
  element_set required = b | b_prime;
  element_set forbidden = element_set::singleton(x_b) | element_set::singleton(x_b_prime);
  set_family out;
  out.params = params;
  if (required.intersects(forbidden)) return out;  // no d-set can contain and avoid a point
  element_set free = params.ground() - required - forbidden;
  int rest = params.d - required.size();
  if (rest < 0) return out;
  for (const element_set& extra : k_subsets(free, rest))
    out.members.push_back(extra | required);
  out.members = canonical_members(std::move(out.members));
  return out;
}

injection_report build_injection(const set_family& family, const witness_assignment& assignment) {
  const ground_params& params = family.params;
  injection_report report;
  report.classification = classify_bases(family, assignment);

  std::vector<element_set> f1_members;
  std::vector<element_set> e_members;
  for (const model_result& r : report.classification.b1) {
    base_image image;
    image.base = r.base;
    image.x_b = *r.x_b;
    image.f_b = family_f_b(r.base, r.model, family);
    image.e_b.params = params;
    for (const element_set& f : image.f_b.members)
      image.e_b.members.push_back(f.without(image.x_b));
    image.e_b.members = canonical_members(std::move(image.e_b.members));

    // (1): any member containing an image set must be that image plus x_B.
    for (const element_set& e : image.e_b.members) {
      for (const element_set& f : family.members) {
        if (e.subset_of(f) && !(f == e.with(image.x_b)))
          fail(errc::internal, "injection item 1 fails: member " + f.to_string() +
                                   " contains " + e.to_string() + " but is not " +
                                   e.to_string() + " plus x_B=" + std::to_string(image.x_b));
      }
    }

    f1_members = family_union(f1_members, image.f_b.members);
    e_members = family_union(e_members, image.e_b.members);
    report.per_base.push_back(std::move(image));
  }
  report.f1.params = params;
  report.f1.members = std::move(f1_members);
  report.e.params = params;
  report.e.members = std::move(e_members);

  // (2): images of bases with different x are disjoint.
  for (const base_image& a : report.per_base) {
    for (const base_image& b : report.per_base) {
      if (a.x_b == b.x_b) continue;
      for (const element_set& e : a.e_b.members) {
        if (b.e_b.contains(e))
          fail(errc::internal, "injection item 2 fails: image " + e.to_string() +
                                   " shared by bases " + a.base.to_string() + " and " +
                                   b.base.to_string());
      }
    }
  }

  // P and U.
  std::vector<element_set> u_members;
  for (const base_image& a : report.per_base) {
    for (const base_image& b : report.per_base) {
      if (a.base == b.base) continue;
      if (a.x_b == b.x_b) continue;
      if (b.base.contains(a.x_b) || a.base.contains(b.x_b)) continue;
      base_pair pair;
      pair.b = a.base;
      pair.b_prime = b.base;
      set_family u_bb = u_pair_sets(params, a.base, a.x_b, b.base, b.x_b);
      pair.u_count = u_bb.size();
      // the s <= d/2 guarantee; vacuous (0) outside that range
      pair.u_lower_bound =
          (params.d >= 2 * params.s && params.n >= 2 * params.s + 2)
              ? binomial(params.n - 2 * params.s - 2, params.d - 2 * params.s)
              : 0;
      u_members = family_union(u_members, u_bb.members);
      report.pairs.push_back(pair);
    }
  }
  report.u.params = params;
  report.u.members = std::move(u_members);

  // (3): U avoids the image of the injection.
  for (const element_set& e : report.u.members) {
    if (report.e.contains(e))
      fail(errc::internal, "injection item 3 fails: " + e.to_string() +
                               " lies in both U and E");
  }

  if (report.e.size() != report.f1.size())
    fail(errc::internal, "|E| = " + std::to_string(report.e.size()) + " differs from |F1| = " +
                             std::to_string(report.f1.size()) +
                             "; a member belongs to two bases with different x_B");

  std::uint64_t total = binomial(params.n, params.d);
  std::uint64_t used = checked_add(report.f1.size(), report.u.size());
  if (used > total)
    fail(errc::internal, "injection corollary fails: |F1| + |U| = " + std::to_string(used) +
                             " exceeds C(n,d) = " + std::to_string(total));
  report.slack = total - used;
  return report;
}

}  // namespace wfam
