#pragma once

#include <cstdint>

namespace wfam {

// Exact C(a, b) in 64-bit unsigned arithmetic; 0 when b > a.
// Throws errc::overflow instead of wrapping (C(128,64) does not fit).
std::uint64_t binomial(std::int64_t a, std::int64_t b);

// a + b with overflow check.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

// a * b with overflow check.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace wfam
