#include <doctest.h>

#include <algorithm>
#include <random>

#include "wfam/binomial.hpp"
#include "wfam/set_family.hpp"

using namespace wfam;

namespace {

element_set random_subset(std::mt19937_64& rng, int n, double p = 0.5) {
  element_set s;
  std::bernoulli_distribution coin(p);
  for (int e = 1; e <= n; ++e)
    if (coin(rng)) s.add(e);
  return s;
}

}  // namespace

TEST_CASE("element_set basics") {
  element_set s = element_set::of({3, 1, 7});
  CHECK(s.size() == 3);
  CHECK(s.contains(1));
  CHECK(s.contains(3));
  CHECK(s.contains(7));
  CHECK_FALSE(s.contains(2));
  CHECK(s.min_element() == 1);
  CHECK(s.next_element(1) == 3);
  CHECK(s.next_element(3) == 7);
  CHECK(s.next_element(7) == 0);
  CHECK(s.elements() == std::vector<int>{1, 3, 7});
  CHECK(s.to_string() == "{1,3,7}");

  element_set empty;
  CHECK(empty.empty());
  CHECK(empty.min_element() == 0);
  CHECK(empty.elements().empty());
}

TEST_CASE("element_set works across the word boundary") {
  element_set s = element_set::of({64, 65, 128});
  CHECK(s.size() == 3);
  CHECK(s.elements() == std::vector<int>{64, 65, 128});
  CHECK(s.next_element(64) == 65);
  CHECK(s.next_element(65) == 128);
  CHECK(element_set::range(1, 128).size() == 128);
  CHECK_THROWS_AS(s.add(129), error);
  CHECK_THROWS_AS(s.add(0), error);
}

TEST_CASE("colex order is the numeric order of the bit pattern") {
  // {1,2,3} < {1,2,4} < {3,4} numerically: 7 < 11 < 12.
  CHECK(element_set::of({1, 2, 3}) < element_set::of({1, 2, 4}));
  CHECK(element_set::of({1, 2, 4}) < element_set::of({3, 4}));
  CHECK(element_set::of({5}) < element_set::of({64}));
  CHECK(element_set::of({64}) < element_set::of({65}));
  CHECK(element_set::of({1, 65}) < element_set::of({2, 65}));
}

TEST_CASE("set algebra laws on random sets") {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 300; ++trial) {
    element_set a = random_subset(rng, 40);
    element_set b = random_subset(rng, 40);
    CHECK(a.size() + b.size() == (a & b).size() + (a | b).size());
    CHECK((a ^ b).size() == (a | b).size() - (a & b).size());
    CHECK(((a - b) | (a & b)) == a);
    CHECK((a & b).subset_of(a));
    CHECK(a.subset_of(a | b));
    CHECK(a.disjoint(b) == ((a & b).size() == 0));
  }
}

TEST_CASE("binomial values") {
  CHECK(binomial(9, 3) == 84);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(6, 2) + binomial(6, 3) == binomial(7, 3));
  // the identity used by the two-star size count at (n,d) = (8,3)
  CHECK(binomial(6, 3) + binomial(6, 2) == binomial(7, 3));
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(62, 31) == 465428353255261088ULL);
  CHECK(binomial(67, 33) == 14226520737620288370ULL);  // largest central value below 2^64
}

TEST_CASE("binomial overflow is loud") {
  CHECK_THROWS_AS(binomial(128, 64), error);
  CHECK_THROWS_AS(binomial(68, 34), error);
  try {
    binomial(128, 64);
  } catch (const error& e) {
    CHECK(e.kind() == errc::overflow);
  }
  CHECK_THROWS_AS(binomial(-1, 2), error);
}

TEST_CASE("k_subsets matches the spec examples") {
  CHECK(k_subsets(element_set::of({1, 2, 3, 4}), 3).size() == 4);
  auto singleton_empty = k_subsets(element_set::range(1, 5), 0);
  REQUIRE(singleton_empty.size() == 1);
  CHECK(singleton_empty[0].empty());
  CHECK(k_subsets(element_set::range(3, 9), 3).size() == 35);
  CHECK(k_subsets(element_set::range(1, 3), 5).empty());
  CHECK_THROWS_AS(k_subsets(element_set::range(1, 3), -1), error);
}

TEST_CASE("k_subsets count equals binomial and order is canonical") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    element_set ground = random_subset(rng, 16);
    int t = ground.size();
    for (int k = 0; k <= t; ++k) {
      auto subs = k_subsets(ground, k);
      CHECK(subs.size() == binomial(t, k));
      CHECK(std::is_sorted(subs.begin(), subs.end()));
      CHECK(std::adjacent_find(subs.begin(), subs.end()) == subs.end());
      for (const element_set& s : subs) {
        CHECK(s.size() == k);
        CHECK(s.subset_of(ground));
      }
    }
  }
}

TEST_CASE("canonicalize sorts, dedupes, and is idempotent") {
  set_family fam;
  fam.params = {6, 2, 1};
  fam.members = {element_set::of({1, 2, 3}), element_set::of({1, 2, 3}),
                 element_set::of({1, 2, 4})};
  set_family canon = canonicalize(fam);
  CHECK(canon.size() == 2);
  CHECK(canon.members[0] == element_set::of({1, 2, 3}));
  CHECK(canonicalize(canon) == canon);

  set_family empty_family;
  empty_family.params = {6, 2, 1};
  CHECK(canonicalize(empty_family).empty());

  set_family bad;
  bad.params = {4, 2, 1};
  bad.members = {element_set::of({1, 2, 5})};
  CHECK_THROWS_AS(canonicalize(bad), error);
}

TEST_CASE("canonicalize on random families") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    set_family fam;
    fam.params = {12, 3, 1};
    int count = static_cast<int>(rng() % 20);
    for (int i = 0; i < count; ++i) fam.members.push_back(random_subset(rng, 12));
    set_family canon = canonicalize(fam);
    CHECK(std::is_sorted(canon.members.begin(), canon.members.end()));
    CHECK(std::adjacent_find(canon.members.begin(), canon.members.end()) == canon.members.end());
    CHECK(canonicalize(canon) == canon);
    for (const element_set& m : fam.members) CHECK(canon.contains(m));
  }
}

TEST_CASE("ground params validation") {
  CHECK_THROWS_AS((ground_params{3, 3, 0}).validate(), error);   // d+1 > n
  CHECK_THROWS_AS((ground_params{6, 2, 3}).validate(), error);   // s > d
  CHECK_THROWS_AS((ground_params{200, 2, 1}).validate(), error); // beyond capacity
  CHECK_NOTHROW((ground_params{6, 2, 1}).validate());
}
