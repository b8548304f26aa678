#pragma once

#include <cstdint>

#include "scroll/error.hpp"

namespace scroll {

// Cohomology dimensions are exact 64-bit integers; every operation that could
// wrap is checked and raises OverflowError instead.

inline std::int64_t checked_add(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

/// C(n, 2) with the convention that it vanishes for n < 2.
inline std::int64_t choose2(std::int64_t n)
{
    if (n < 2)
        return 0;
    // one of n, n-1 is even
    return n % 2 == 0 ? checked_mul(n / 2, n - 1) : checked_mul(n, (n - 1) / 2);
}

}  // namespace scroll
