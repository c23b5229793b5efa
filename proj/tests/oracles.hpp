#pragma once

// Brute-force reference implementations used only by tests. These stay
// independent of the library code paths they check.

#include <optional>
#include <random>
#include <vector>

#include "wfam/set_family.hpp"
#include "wfam/witness.hpp"

namespace wfam::oracle {

// Largest |S| over all S subseteq [n] such that every subset of S is
// realized as S ∩ F, straight from the definition; -1 when nothing is
// shattered (empty family).
inline int vc_dimension(const set_family& family) {
  int n = family.params.n;
  int best = -1;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    element_set s;
    for (int e = 1; e <= n; ++e)
      if (bits & (std::uint64_t{1} << (e - 1))) s.add(e);
    std::vector<int> elems = s.elements();
    int k = static_cast<int>(elems.size());
    bool shattered = true;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k) && shattered; ++sub) {
      element_set target;
      for (int p = 0; p < k; ++p)
        if (sub & (std::uint64_t{1} << p)) target.add(elems[static_cast<std::size_t>(p)]);
      bool realized = false;
      for (const element_set& f : family.members) {
        if ((s & f) == target) {
          realized = true;
          break;
        }
      }
      if (!realized) shattered = false;
    }
    if (shattered && k > best) best = k;
  }
  return best;
}

// Definition of the s-witness property, with independent subset enumeration.
inline bool is_s_witness(const set_family& family, int s) {
  for (const element_set& f : family.members) {
    bool has_witness = false;
    std::vector<int> elems = f.elements();
    int k = static_cast<int>(elems.size());
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k) && !has_witness; ++sub) {
      element_set b;
      for (int p = 0; p < k; ++p)
        if (sub & (std::uint64_t{1} << p)) b.add(elems[static_cast<std::size_t>(p)]);
      if (b.size() != s) continue;
      bool blocked = false;
      for (const element_set& other : family.members) {
        if ((f & other) == b) {
          blocked = true;
          break;
        }
      }
      if (!blocked) has_witness = true;
    }
    if (!has_witness) return false;
  }
  return true;
}

// Exhaustive r-subset scan for a sunflower: all pairwise intersections equal.
inline std::optional<std::vector<std::size_t>> find_sunflower(const set_family& family, int r) {
  std::size_t count = family.members.size();
  if (count < static_cast<std::size_t>(r)) return std::nullopt;
  std::vector<std::size_t> pick(static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) pick[i] = i;
  for (;;) {
    element_set core = family.members[pick[0]] & family.members[pick[1]];
    bool ok = true;
    for (std::size_t i = 0; i < pick.size() && ok; ++i)
      for (std::size_t j = i + 1; j < pick.size() && ok; ++j)
        if (!((family.members[pick[i]] & family.members[pick[j]]) == core)) ok = false;
    if (ok) return pick;
    // next combination
    std::size_t level = pick.size();
    while (level > 0) {
      --level;
      if (pick[level] + (pick.size() - level) < count) {
        ++pick[level];
        for (std::size_t i = level + 1; i < pick.size(); ++i) pick[i] = pick[i - 1] + 1;
        break;
      }
      if (level == 0) return std::nullopt;
    }
  }
}

// Uniform random subfamily with keep probability p.
inline set_family random_subfamily(const set_family& family, std::mt19937_64& rng, double p) {
  set_family out;
  out.params = family.params;
  std::bernoulli_distribution coin(p);
  for (const element_set& m : family.members)
    if (coin(rng)) out.members.push_back(m);
  return out;
}

// Random k-uniform family over [n] with the given member count target.
inline set_family random_uniform_family(std::mt19937_64& rng, int n, int k, int count) {
  set_family out;
  out.params = {n, k - 1, 0};
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  for (int c = 0; c < count; ++c) {
    std::shuffle(pool.begin(), pool.end(), rng);
    element_set m;
    for (int i = 0; i < k; ++i) m.add(pool[static_cast<std::size_t>(i)]);
    out.members.push_back(m);
  }
  out.members = canonical_members(std::move(out.members));
  return out;
}

}  // namespace wfam::oracle
