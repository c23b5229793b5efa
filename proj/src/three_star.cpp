#include <algorithm>

#include "wfam/binomial.hpp"
#include "wfam/detail/witness_tracker.hpp"
#include "wfam/search.hpp"

namespace wfam {

namespace {

const element_set kCover = element_set::of({1, 2, 3});

// Turns surviving masks into a certificate and re-runs every constraint.
std::optional<certified_family> accept_leaf(const detail::witness_tracker& tracker,
                                            const ground_params& params,
                                            const three_star_constraints& constraints) {
  if (constraints.forbid_two_star_cover) {
    set_family fam;
    fam.params = params;
    fam.members = canonical_members(tracker.members());
    if (covered_by_two_stars(fam)) return std::nullopt;
  }
  certified_family cert;
  cert.family.params = params;
  std::vector<witness_entry> entries;
  for (std::size_t slot = 0; slot < tracker.size(); ++slot)
    entries.push_back({tracker.members()[slot], tracker.first_surviving(slot)});
  std::sort(entries.begin(), entries.end(),
            [](const witness_entry& a, const witness_entry& b) { return a.set < b.set; });
  for (const witness_entry& e : entries) cert.family.members.push_back(e.set);
  cert.witnesses.entries = std::move(entries);
  validate_assignment(cert.family, cert.witnesses, params.s);
  for (const witness_entry& e : cert.witnesses.entries) {
    if (constraints.witness_avoid && e.witness.intersects(kCover))
      fail(errc::internal, "three-star certificate witness meets {1,2,3}");
    if (constraints.require_cover && e.set.disjoint(kCover))
      fail(errc::internal, "three-star certificate member misses {1,2,3}");
  }
  return cert;
}

std::vector<element_set> witness_candidates(const element_set& f, int s, bool avoid_cover) {
  element_set source = avoid_cover ? f - kCover : f;
  return k_subsets(source, s);
}

}  // namespace

search_result three_star_search(const ground_params& params, const three_star_options& options) {
  params.validate();
  const int d = params.d, s = params.s;
  if (2 * s <= d || s > d - 2)
    fail(errc::usage, "three_star_search requires d/2 < s <= d-2, got d=" + std::to_string(d) +
                          " s=" + std::to_string(s));
  if (params.n < 4) fail(errc::usage, "three_star_search requires n >= 4");

  three_star_constraints constraints = options.constraints;
  if (constraints.target_size == 0) constraints.target_size = binomial(params.n - 1, params.d);
  const std::uint64_t target = constraints.target_size;

  std::uint64_t nodes = 0;
  bool limited = false;
  std::optional<certified_family> found;
  auto tick = [&]() {
    if (limited || found) return true;
    if (++nodes > options.node_limit) {
      limited = true;
      return true;
    }
    return false;
  };

  detail::witness_tracker tracker(s);

  if (options.stratified) {
    // Branch on the member shapes the size count forces at the target:
    // every d-subset of [4,n] lies under exactly one of {1},{2},{3}; every
    // (d-1)-subset under exactly two of {1,2},{1,3},{2,3}; all of
    // C([4,n], d-2) joined with {1,2,3} is present.
    element_set tail = element_set::range(4, params.n);
    const std::vector<element_set> d_subsets = k_subsets(tail, d);
    const std::vector<element_set> dm1_subsets = k_subsets(tail, d - 1);

    const element_set singles[3] = {element_set::of({1}), element_set::of({2}),
                                    element_set::of({3})};
    const element_set pairs[3] = {element_set::of({1, 2}), element_set::of({1, 3}),
                                  element_set::of({2, 3})};

    // Candidate witness lists precomputed per potential member, so the
    // tracker's pointers stay valid for the whole search.
    struct labeled {
      element_set member;
      std::vector<element_set> cands;
    };
    std::vector<std::array<labeled, 3>> d_choice(d_subsets.size());
    for (std::size_t i = 0; i < d_subsets.size(); ++i)
      for (int label = 0; label < 3; ++label) {
        element_set f = d_subsets[i] | singles[label];
        d_choice[i][static_cast<std::size_t>(label)] = {
            f, witness_candidates(f, s, constraints.witness_avoid)};
      }
    std::vector<std::array<labeled, 3>> pair_choice(dm1_subsets.size());
    for (std::size_t i = 0; i < dm1_subsets.size(); ++i)
      for (int p = 0; p < 3; ++p) {
        element_set f = dm1_subsets[i] | pairs[p];
        pair_choice[i][static_cast<std::size_t>(p)] = {
            f, witness_candidates(f, s, constraints.witness_avoid)};
      }
    std::vector<labeled> base123;
    for (const element_set& a : k_subsets(tail, d - 2)) {
      element_set f = a | kCover;
      base123.push_back({f, witness_candidates(f, s, constraints.witness_avoid)});
    }

    bool root_ok = true;
    for (const labeled& l : base123) {
      tracker.add(l.member, &l.cands);
      if (!tracker.feasible()) root_ok = false;
    }

    auto dfs = [&](auto&& self, std::size_t i) -> void {
      if (tick()) return;
      if (i == d_subsets.size() + dm1_subsets.size()) {
        found = accept_leaf(tracker, params, constraints);
        return;
      }
      if (i < d_subsets.size()) {
        for (const labeled& l : d_choice[i]) {
          std::size_t mark = tracker.checkpoint();
          tracker.add(l.member, &l.cands);
          if (tracker.feasible()) self(self, i + 1);
          tracker.rollback(mark);
          if (limited || found) return;
        }
      } else {
        const std::array<labeled, 3>& choice = pair_choice[i - d_subsets.size()];
        // Choice `skip` keeps the two pair blocks other than `skip`.
        for (int skip = 2; skip >= 0; --skip) {
          std::size_t mark = tracker.checkpoint();
          bool ok = true;
          for (int p = 0; p < 3; ++p) {
            if (p == skip) continue;
            const labeled& l = choice[static_cast<std::size_t>(p)];
            tracker.add(l.member, &l.cands);
            if (!tracker.feasible()) ok = false;
          }
          if (ok) self(self, i + 1);
          tracker.rollback(mark);
          if (limited || found) return;
        }
      }
    };
    if (root_ok) dfs(dfs, 0);
  } else {
    // Unstratified oracle: choose target-many members from every admissible
    // (d+1)-set directly.
    std::vector<element_set> universe;
    std::vector<std::vector<element_set>> cand_table;
    for (const element_set& f : k_subsets(params.ground(), d + 1)) {
      if (constraints.require_cover && f.disjoint(kCover)) continue;
      std::vector<element_set> cands = witness_candidates(f, s, constraints.witness_avoid);
      if (cands.empty()) continue;  // no admissible witness exists
      universe.push_back(f);
      cand_table.push_back(std::move(cands));
    }
    auto dfs = [&](auto&& self, std::size_t i) -> void {
      if (tick()) return;
      if (tracker.size() == target) {
        found = accept_leaf(tracker, params, constraints);
        return;
      }
      if (i == universe.size()) return;
      if (tracker.size() + (universe.size() - i) < target) return;  // cannot reach the target
      std::size_t mark = tracker.checkpoint();
      tracker.add(universe[i], &cand_table[i]);
      if (tracker.feasible()) self(self, i + 1);
      tracker.rollback(mark);
      if (limited || found) return;
      self(self, i + 1);
    };
    dfs(dfs, 0);
  }

  search_result result;
  result.nodes_explored = nodes;
  if (found) {
    result.best_size = found->family.size();
    result.certificate = *std::move(found);
    result.complete = true;  // the feasibility question is decided
  } else {
    result.best_size = 0;
    result.certificate.family.params = params;
    result.complete = !limited;
  }
  return result;
}

}  // namespace wfam
