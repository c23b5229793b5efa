#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "wfam/errors.hpp"

namespace wfam {

// Subset of the ground set [n] as a fixed-width bit vector.
// Elements are 1-indexed externally; element e lives at bit e-1.
// Two 64-bit words give capacity n <= 128.
class element_set {
 public:
  static constexpr int capacity = 128;

  constexpr element_set() : w_{0, 0} {}

  static element_set singleton(int e) {
    element_set s;
    s.add(e);
    return s;
  }

  // {lo, lo+1, ..., hi}; empty when lo > hi.
  static element_set range(int lo, int hi) {
    element_set s;
    for (int e = lo; e <= hi; ++e) s.add(e);
    return s;
  }

  static element_set full(int n) { return range(1, n); }

  static element_set of(std::initializer_list<int> elems) {
    element_set s;
    for (int e : elems) s.add(e);
    return s;
  }

  static element_set from_elements(const std::vector<int>& elems) {
    element_set s;
    for (int e : elems) s.add(e);
    return s;
  }

  bool contains(int e) const {
    if (e < 1 || e > capacity) return false;
    return (w_[word(e)] >> bit(e)) & 1u;
  }

  void add(int e) {
    check_element(e);
    w_[word(e)] |= (std::uint64_t{1} << bit(e));
  }

  void remove(int e) {
    check_element(e);
    w_[word(e)] &= ~(std::uint64_t{1} << bit(e));
  }

  element_set with(int e) const {
    element_set s = *this;
    s.add(e);
    return s;
  }

  element_set without(int e) const {
    element_set s = *this;
    s.remove(e);
    return s;
  }

  int size() const {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
  }

  bool empty() const { return w_[0] == 0 && w_[1] == 0; }

  // Smallest element, or 0 when empty.
  int min_element() const {
    if (w_[0]) return std::countr_zero(w_[0]) + 1;
    if (w_[1]) return std::countr_zero(w_[1]) + 65;
    return 0;
  }

  // Smallest element strictly greater than e, or 0 when none.
  int next_element(int e) const {
    for (int i = e + 1; i <= capacity; ++i) {
      std::uint64_t rest = w_[word(i)] >> bit(i);
      if (rest == 0) {
        i = (word(i) + 1) * 64;
        continue;
      }
      return i + std::countr_zero(rest);
    }
    return 0;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int e = min_element(); e != 0; e = next_element(e)) out.push_back(e);
    return out;
  }

  // True when every element lies in [1, n].
  bool within(int n) const {
    if (n >= capacity) return true;
    element_set over = *this & ~full(n);
    return over.empty();
  }

  friend element_set operator&(element_set a, const element_set& b) {
    a.w_[0] &= b.w_[0];
    a.w_[1] &= b.w_[1];
    return a;
  }
  friend element_set operator|(element_set a, const element_set& b) {
    a.w_[0] |= b.w_[0];
    a.w_[1] |= b.w_[1];
    return a;
  }
  friend element_set operator^(element_set a, const element_set& b) {
    a.w_[0] ^= b.w_[0];
    a.w_[1] ^= b.w_[1];
    return a;
  }
  // Set difference.
  friend element_set operator-(element_set a, const element_set& b) {
    a.w_[0] &= ~b.w_[0];
    a.w_[1] &= ~b.w_[1];
    return a;
  }
  element_set operator~() const {
    element_set s;
    s.w_[0] = ~w_[0];
    s.w_[1] = ~w_[1];
    return s;
  }

  bool subset_of(const element_set& b) const { return (*this - b).empty(); }
  bool intersects(const element_set& b) const { return !(*this & b).empty(); }
  bool disjoint(const element_set& b) const { return (*this & b).empty(); }

  bool operator==(const element_set& b) const { return w_ == b.w_; }

  // Colexicographic order: the bit pattern compared as one unsigned
  // 128-bit integer, element 1 least significant.
  std::strong_ordering operator<=>(const element_set& b) const {
    if (auto c = w_[1] <=> b.w_[1]; c != 0) return c;
    return w_[0] <=> b.w_[0];
  }

  std::string to_string() const;

 private:
  static constexpr int word(int e) { return (e - 1) >> 6; }
  static constexpr int bit(int e) { return (e - 1) & 63; }
  static void check_element(int e) {
    if (e < 1 || e > capacity)
      fail(errc::usage, "element " + std::to_string(e) + " out of supported range [1," +
                            std::to_string(capacity) + "]");
  }

  std::array<std::uint64_t, 2> w_;
};

}  // namespace wfam
