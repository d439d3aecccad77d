#pragma once

#include "spinflat/errors.hpp"

namespace spinflat {

using i64 = long long;

inline i64 checked_add(i64 x, i64 y) {
    i64 r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 x, i64 y) {
    i64 r;
    if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline i64 checked_mul(i64 x, i64 y) {
    i64 r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline i64 checked_neg(i64 x) { return checked_sub(0, x); }

// x * 2^e for e >= 0
inline i64 checked_shl(i64 x, int e) {
    while (e-- > 0) x = checked_add(x, x);
    return x;
}

} // namespace spinflat
