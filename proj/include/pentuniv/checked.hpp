#pragma once

#include <cstdint>
#include <stdexcept>

namespace pentuniv {

using i64 = std::int64_t;

// Form values and matrix entries stay well inside 64 bits for every input this
// library accepts, but a bug upstream (or a hostile target) must surface as an
// exception, not as wrapped arithmetic.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("i64 add");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("i64 sub");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("i64 mul");
    return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

// p^e for small e, checked.
inline i64 checked_pow(i64 base, i64 exp) {
    if (exp < 0) throw std::domain_error("negative exponent");
    i64 r = 1;
    for (i64 i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

// Floor of sqrt for non-negative n, exact (no libm rounding trouble). The
// 3037000499 cap is floor(sqrt(2^63 - 1)); it keeps the correction loops free
// of overflow for every representable n.
inline i64 isqrt(i64 n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n < 2) return n;
    constexpr i64 cap = 3037000499;
    i64 x = static_cast<i64>(__builtin_sqrt(static_cast<double>(n))) + 1;
    if (x > cap) x = cap;
    while (x > 0 && x * x > n) --x;
    while (x < cap && (x + 1) * (x + 1) <= n) ++x;
    return x;
}

inline bool is_square(i64 n) {
    if (n < 0) return false;
    i64 r = isqrt(n);
    return r * r == n;
}

}  // namespace pentuniv
