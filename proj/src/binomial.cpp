#include "wfam/binomial.hpp"

#include <limits>

#include "wfam/errors.hpp"

namespace wfam {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "count addition overflows 64 bits");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "count multiplication overflows 64 bits");
  return r;
}

std::uint64_t binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) fail(errc::usage, "binomial arguments must be non-negative");
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r = r * static_cast<unsigned __int128>(a - b + i);
    r /= static_cast<unsigned __int128>(i);  // exact: C(a-b+i, i) * i! divisible by i!
    if (r > std::numeric_limits<std::uint64_t>::max())
      fail(errc::overflow, "binomial(" + std::to_string(a) + "," + std::to_string(b) +
                               ") overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace wfam
