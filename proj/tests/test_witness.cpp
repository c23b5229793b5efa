#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wfam/binomial.hpp"
#include "wfam/constructions.hpp"
#include "wfam/witness.hpp"

using namespace wfam;

namespace {

set_family make_family(ground_params params, std::vector<element_set> members) {
  set_family fam;
  fam.params = params;
  fam.members = std::move(members);
  return canonicalize(fam);
}

// {{1,2,3},{1,4,5},{2,4,5},{3,4,5}}: every singleton inside {1,2,3} is
// realized as an intersection, so the family has no 1-witness for it.
set_family blocked_family() {
  return make_family({5, 2, 1},
                     {element_set::of({1, 2, 3}), element_set::of({1, 4, 5}),
                      element_set::of({2, 4, 5}), element_set::of({3, 4, 5})});
}

}  // namespace

TEST_CASE("valid_witness on the star") {
  certified_family built = star({5, 2, 1}, 1);
  CHECK(valid_witness(built.family, element_set::of({1, 2, 3}), element_set::of({2})));
  // the center is realized: {1,2,3} ∩ {1,4,5} = {1}
  CHECK_FALSE(valid_witness(built.family, element_set::of({1, 2, 3}), element_set::of({1})));
}

TEST_CASE("valid_witness spec examples") {
  set_family two = make_family({5, 2, 1}, {element_set::of({1, 2, 3}), element_set::of({1, 4, 5})});
  CHECK_FALSE(valid_witness(two, element_set::of({1, 2, 3}), element_set::of({1})));

  set_family fam = blocked_family();
  // oracle: intersections of {1,2,3} with members are {1,2,3},{1},{2},{3}
  CHECK_FALSE(valid_witness(fam, element_set::of({1, 2, 3}), element_set::of({2})));

  // B = F is always blocked by the self-intersection
  CHECK_FALSE(valid_witness(fam, element_set::of({1, 2, 3}), element_set::of({1, 2, 3})));

  CHECK_THROWS_AS(valid_witness(fam, element_set::of({1, 2, 4}), element_set::of({1})), error);
  CHECK_THROWS_AS(valid_witness(fam, element_set::of({1, 2, 3}), element_set::of({4})), error);
}

TEST_CASE("find_witnesses") {
  set_family fam = blocked_family();
  CHECK(find_witnesses(fam, element_set::of({1, 2, 3}), 1).empty());

  certified_family built = star({5, 2, 1}, 1);
  set_family found = find_witnesses(built.family, element_set::of({1, 2, 3}), 1);
  REQUIRE(found.size() == 2);
  CHECK(found.members[0] == element_set::of({2}));
  CHECK(found.members[1] == element_set::of({3}));

  CHECK_THROWS_AS(find_witnesses(fam, element_set::of({1, 2, 3}), 3), error);  // s > d
}

TEST_CASE("verify_s_witness") {
  certified_family built = star({6, 2, 1}, 1);
  verify_result ok = verify_s_witness(built.family, 1);
  REQUIRE(ok.ok());
  validate_assignment(built.family, *ok.assignment, 1);

  verify_result bad = verify_s_witness(blocked_family(), 1);
  CHECK_FALSE(bad.ok());
  CHECK(*bad.failing_member == element_set::of({1, 2, 3}));

  set_family empty = make_family({6, 2, 1}, {});
  verify_result vacuous = verify_s_witness(empty, 1);
  REQUIRE(vacuous.ok());
  CHECK(vacuous.assignment->entries.empty());

  set_family nonuniform = make_family({6, 2, 1}, {element_set::of({1, 2})});
  CHECK_THROWS_AS(verify_s_witness(nonuniform, 1), error);
}

TEST_CASE("canonically-first witness selection") {
  certified_family built = star({6, 2, 1}, 3);
  verify_result ok = verify_s_witness(built.family, 1);
  REQUIRE(ok.ok());
  for (const witness_entry& e : ok.assignment->entries) {
    // first valid candidate in colex order: the smallest non-center element
    element_set expected = element_set::singleton((e.set.without(3)).min_element());
    CHECK(e.witness == expected);
  }
}

TEST_CASE("is_intersecting basics") {
  certified_family built = star({6, 2, 0}, 1);
  CHECK(is_intersecting(built.family));
  set_family split = make_family({4, 1, 0}, {element_set::of({1, 2}), element_set::of({3, 4})});
  CHECK_FALSE(is_intersecting(split));
  CHECK(is_intersecting(make_family({4, 1, 0}, {})));
}

TEST_CASE("0-witness is exactly intersecting on random families") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);          // 4..7
    int k = 2 + static_cast<int>(rng() % 2);          // members of size 2 or 3
    if (k > n) continue;
    set_family fam = oracle::random_uniform_family(rng, n, k, 1 + static_cast<int>(rng() % 8));
    fam.params = {n, k - 1, 0};
    CHECK(is_intersecting(fam) == verify_s_witness(fam, 0).ok());
    ++checked;
  }
  CHECK(checked >= 900);
}

TEST_CASE("vc_at_most_d spec examples") {
  set_family all3of4 = full_uniform({4, 2, 1});
  CHECK(vc_at_most_d(all3of4).vc_at_most_d);

  set_family pairs = full_uniform({4, 1, 0});  // all pairs of [4], d = 1
  vc_report report = vc_at_most_d(pairs);
  CHECK_FALSE(report.vc_at_most_d);
  REQUIRE(report.violating_member.has_value());
  CHECK(report.violating_member->size() == 2);

  set_family empty = make_family({6, 2, 1}, {});
  CHECK(vc_at_most_d(empty).vc_at_most_d);
}

TEST_CASE("exact_vc spec examples") {
  // all 2-subsets of [6]
  set_family pairs6 = full_uniform({6, 1, 0});
  CHECK(exact_vc(pairs6).value == 2);
  CHECK_FALSE(exact_vc(pairs6).at_least);

  set_family all3of4 = full_uniform({4, 2, 1});
  CHECK(exact_vc(all3of4).value == 1);

  certified_family built = star({8, 2, 1}, 1);
  CHECK(exact_vc(built.family).value == 2);

  set_family empty = make_family({6, 2, 1}, {});
  CHECK(exact_vc(empty).value == -1);

  // cap below the true value reports a lower bound
  vc_value capped = exact_vc(pairs6, 1);
  CHECK(capped.value == 1);
  CHECK(capped.at_least);
}

TEST_CASE("exact_vc agrees with the brute-force oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);  // 4..7
    int k = 2 + static_cast<int>(rng() % 2);
    if (k > n) continue;
    set_family fam = oracle::random_uniform_family(rng, n, k, static_cast<int>(rng() % 10));
    fam.params = {n, k - 1, 0};
    int expected = oracle::vc_dimension(fam);
    vc_value got = exact_vc(fam, n);
    CHECK(got.value == expected);
  }
}

TEST_CASE("vc_at_most_d equals exact_vc <= d on random uniform families") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    int d = 1 + static_cast<int>(rng() % 2);  // d in {1,2}
    int n = d + 2 + static_cast<int>(rng() % (8 - d - 1));
    set_family fam =
        oracle::random_uniform_family(rng, n, d + 1, static_cast<int>(rng() % 12));
    fam.params = {n, d, 0};
    bool via_report = vc_at_most_d(fam).vc_at_most_d;
    bool via_exact = exact_vc(fam).value <= d;
    CHECK(via_report == via_exact);
  }
}

TEST_CASE("verified families satisfy the witness reformulation and Frankl-Pach") {
  std::mt19937_64 rng(17);
  int verified_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int d = 1 + static_cast<int>(rng() % 2);
    int s = static_cast<int>(rng() % (d + 1));
    int n = d + 2 + static_cast<int>(rng() % 4);
    set_family fam =
        oracle::random_uniform_family(rng, n, d + 1, static_cast<int>(rng() % 10));
    fam.params = {n, d, s};
    verify_result result = verify_s_witness(fam, s);
    CHECK(result.ok() == oracle::is_s_witness(fam, s));
    if (result.ok()) {
      ++verified_count;
      CHECK(vc_at_most_d(fam).vc_at_most_d);
      CHECK(fam.size() <= binomial(n, d));
    }
  }
  CHECK(verified_count > 50);
}

TEST_CASE("hereditarity: subfamilies of verified families verify") {
  std::mt19937_64 rng(19);
  certified_family base = star({8, 3, 1}, 2);
  two_star_result ts = two_star({8, 3, 2}, 4);
  for (int trial = 0; trial < 100; ++trial) {
    set_family sub = oracle::random_subfamily(base.family, rng, 0.5);
    REQUIRE(verify_s_witness(sub, 1).ok());
    // witnesses valid in the superfamily stay valid in the subfamily
    for (const element_set& f : sub.members) {
      element_set b = *base.witnesses.witness_for(f);
      CHECK(valid_witness(sub, f, b));
    }
    set_family sub2 = oracle::random_subfamily(ts.family, rng, 0.5);
    REQUIRE(verify_s_witness(sub2, 2).ok());
  }
}
