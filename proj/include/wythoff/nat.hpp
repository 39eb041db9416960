#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace wythoff {

// All sequence values are nonnegative 64-bit integers. Arithmetic that can
// leave the representable range must go through the checked helpers below;
// overflow is always a reported error, never a wrapped value.
using Nat = std::uint64_t;

inline Nat checked_add(Nat a, Nat b) {
    Nat r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("add overflows 64 bits: " + std::to_string(a) +
                                  " + " + std::to_string(b));
    return r;
}

inline Nat checked_mul(Nat a, Nat b) {
    Nat r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("mul overflows 64 bits: " + std::to_string(a) +
                                  " * " + std::to_string(b));
    return r;
}

inline Nat checked_shl(Nat a, unsigned bits) {
    if (a == 0)
        return 0;
    if (bits >= 64 || a > (std::numeric_limits<Nat>::max() >> bits))
        throw std::overflow_error("shift overflows 64 bits: " + std::to_string(a) +
                                  " << " + std::to_string(bits));
    return a << bits;
}

} // namespace wythoff
