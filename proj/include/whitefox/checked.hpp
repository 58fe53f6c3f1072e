#pragma once

#include <cstdint>

#include "whitefox/errors.hpp"

namespace wf {

using i64 = long long;

// All integer coefficient arithmetic goes through these helpers so that a
// wrap-around can never silently produce a wrong exact value.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) fail(Errc::Overflow, "integer addition overflow");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) fail(Errc::Overflow, "integer subtraction overflow");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Errc::Overflow, "integer multiplication overflow");
    return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

// Mathematical mod: result in [0, m).
inline i64 floor_mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace wf
