#include <doctest.h>

#include "wfam/binomial.hpp"
#include "wfam/constructions.hpp"

using namespace wfam;

TEST_CASE("star sizes and witnesses") {
  certified_family s1 = star({6, 2, 1}, 1);
  CHECK(s1.family.size() == 10);  // C(5,2)
  CHECK(verify_s_witness(s1.family, 1).ok());

  certified_family s2 = star({7, 3, 0}, 7);
  CHECK(s2.family.size() == 20);  // C(6,3)
  for (const witness_entry& e : s2.witnesses.entries) CHECK(e.witness.empty());

  CHECK_THROWS_AS(star({6, 2, 1}, 9), error);
  CHECK_THROWS_AS(star({5, 3, 2}, 1), error);  // n < d+1+s
}

TEST_CASE("star verifies for every witness size up to d") {
  for (int d = 1; d <= 3; ++d) {
    for (int s = 0; s <= d; ++s) {
      int n = d + 1 + s + 1;
      certified_family built = star({n, d, s}, 2);
      CHECK(built.family.size() == binomial(n - 1, d));
      CHECK(verify_s_witness(built.family, s).ok());
    }
  }
}

TEST_CASE("two_star spec instance (8,3,2,4)") {
  two_star_result ts = two_star({8, 3, 2}, 4);
  CHECK(ts.family.size() == 35);  // C(7,3)
  CHECK(ts.a1_size + ts.a2_size == binomial(6, 3));
  CHECK(ts.a12_size == binomial(6, 2));
  CHECK_FALSE(ts.degenerate);
  CHECK_FALSE(is_star(ts.family).has_value());
  CHECK(verify_s_witness(ts.family, 2).ok());

  auto cover = covered_by_two_stars(ts.family);
  REQUIRE(cover.has_value());
  CHECK(cover->first == 1);
  CHECK(cover->second == 2);

  // blocks are determined by the intersection with {1,2}
  element_set head = element_set::of({1, 2});
  std::uint64_t a1 = 0, a2 = 0, a12 = 0;
  for (const element_set& f : ts.family.members) {
    element_set h = f & head;
    if (h == element_set::of({1}))
      ++a1;
    else if (h == element_set::of({2}))
      ++a2;
    else if (h == head)
      ++a12;
    else
      FAIL("member misses {1,2}");
  }
  CHECK(a1 == ts.a1_size);
  CHECK(a2 == ts.a2_size);
  CHECK(a12 == ts.a12_size);
}

TEST_CASE("two_star A2 witnesses favor the high block") {
  // (9,3,2,7): A2 members are {2}∪{x,8,9}; their witness must contain all of
  // A ∩ [8,9] because |A ∩ [3,7]| < s.
  two_star_result ts = two_star({9, 3, 2}, 7);
  CHECK(ts.family.size() == binomial(8, 3));
  CHECK(ts.a2_size == 5);
  element_set high = element_set::range(8, 9);
  for (const witness_entry& e : ts.witnesses.entries) {
    element_set h = e.set & element_set::of({1, 2});
    if (!(h == element_set::of({2}))) continue;
    element_set a_high = (e.set.without(2)) & high;
    CHECK(a_high.subset_of(e.witness));
    CHECK((e.witness & high).size() >= ts.family.params.d - ts.family.params.s + 1);
  }
}

TEST_CASE("two_star degenerate instances") {
  // m = n-1 = 7 at (8,3,2): no A with |A ∩ [3,7]| < 2 exists, so A2 is empty
  // and the family is a star at 1.
  two_star_result ts = two_star({8, 3, 2}, 7);
  CHECK(ts.family.size() == 35);
  CHECK(ts.a2_size == 0);
  CHECK(ts.degenerate);
  CHECK(is_star(ts.family) == std::optional<int>(1));
  CHECK(verify_s_witness(ts.family, 2).ok());

  // minimal n = s+3
  two_star_result tiny = two_star({5, 3, 2}, 4);
  CHECK(tiny.family.size() == 4);  // C(4,3)
  CHECK(tiny.a1_size == 1);        // only A = {3,4,5}
  CHECK(tiny.a2_size == 0);
  CHECK(tiny.degenerate);
  CHECK(verify_s_witness(tiny.family, 2).ok());
}

TEST_CASE("two_star rejects bad parameters by name") {
  CHECK_THROWS_WITH_AS(two_star({8, 4, 2}, 4), doctest::Contains("d/2 < s"), error);
  CHECK_THROWS_WITH_AS(two_star({8, 3, 3}, 5), doctest::Contains("s <= d-1"), error);
  CHECK_THROWS_WITH_AS(two_star({4, 3, 2}, 4), doctest::Contains("n >= s+3"), error);
  CHECK_THROWS_WITH_AS(two_star({8, 3, 2}, 8), doctest::Contains("m <= n-1"), error);
  CHECK_THROWS_WITH_AS(two_star({8, 3, 2}, 3), doctest::Contains("s+2 <= m"), error);
}

TEST_CASE("two_star size identity over the admissible grid") {
  for (int d = 3; d <= 5; ++d) {
    for (int s = d / 2 + 1; s <= d - 1; ++s) {
      for (int n = std::max(s + 3, d + 2); n <= d + 6; ++n) {
        for (int m = s + 2; m <= n - 1; ++m) {
          two_star_result ts = two_star({n, d, s}, m);
          CHECK(ts.a1_size + ts.a2_size == binomial(n - 2, d));
          CHECK(ts.a12_size == binomial(n - 2, d - 1));
          CHECK(ts.family.size() == binomial(n - 1, d));
        }
      }
    }
  }
}

TEST_CASE("full_uniform") {
  CHECK(full_uniform({6, 2, 1}).size() == 20);
  CHECK(full_uniform({4, 3, 0}).size() == 1);

  // n < 2(d+1): the whole uniform layer is a 1-witness family
  set_family tight = full_uniform({4, 2, 1});
  CHECK(tight.size() == 4);
  CHECK(verify_s_witness(tight, 1).ok());
}

TEST_CASE("is_star") {
  CHECK(is_star(star({6, 2, 1}, 3).family) == std::optional<int>(3));
  CHECK_FALSE(is_star(two_star({8, 3, 2}, 4).family).has_value());
  set_family empty;
  empty.params = {6, 2, 1};
  CHECK(is_star(empty) == std::optional<int>(1));  // vacuous convention
}

TEST_CASE("covered_by_two_stars") {
  set_family all3of4 = full_uniform({4, 2, 1});
  auto cover = covered_by_two_stars(all3of4);
  REQUIRE(cover.has_value());
  CHECK(*cover == std::make_pair(1, 2));

  set_family three_disjoint;
  three_disjoint.params = {9, 2, 0};
  three_disjoint.members = {element_set::of({1, 2, 3}), element_set::of({4, 5, 6}),
                            element_set::of({7, 8, 9})};
  three_disjoint = canonicalize(three_disjoint);
  CHECK_FALSE(covered_by_two_stars(three_disjoint).has_value());
}
