#pragma once

#include <cstdint>

#include "dsrg/errors.hpp"

namespace dsrg {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 add overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 sub overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 mul overflow");
    return r;
}

// Floor of sqrt for nonnegative n, exact.  Never trusts floating point:
// the initial estimate is corrected by integer comparisons.
inline std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) throw PreconditionError("isqrt of negative value");
    if (n < 2) return n;
    auto r = static_cast<std::int64_t>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

inline bool is_perfect_square(std::int64_t n, std::int64_t* root = nullptr) {
    if (n < 0) return false;
    std::int64_t r = isqrt64(n);
    if (root) *root = r;
    return r * r == n;
}

}  // namespace dsrg
