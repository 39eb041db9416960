#pragma once

#include <bit>
#include <queue>
#include <stdexcept>
#include <vector>

#include "wythoff/nat.hpp"
#include "wythoff/zeckendorf.hpp"

namespace wythoff {

// Fibbinary numbers: binary expansion free of adjacent ones. fib_map is the
// bijection n = (n)_F -> fib(n) = (n)_2 that reads the Zeckendorf digits of n
// as base-2 digits.

inline bool is_fibbinary(Nat m) {
    return (m & (m >> 1)) == 0;
}

inline Nat fib_map(Nat n) {
    const ZeckWord w = zeck_encode(n);
    if (w.size() > 64)
        throw std::overflow_error("fib_map: image of " + std::to_string(n) +
                                  " exceeds the 64-bit range");
    Nat m = 0;
    for (char c : w.digits())
        m = (m << 1) | static_cast<Nat>(c == '1');
    return m;
}

inline Nat fib_unmap(Nat m) {
    if (!is_fibbinary(m))
        throw std::invalid_argument(std::to_string(m) +
                                    " is not fibbinary (adjacent binary ones)");
    Nat n = 0;
    for (unsigned j = 0; m >> j; ++j)
        if ((m >> j) & 1)
            n = checked_add(n, fibonacci(j + 2));
    return n;
}

// odfib(n) = 4 fib(n) + 1 = (n01)_2, the odd fibbinary numbers.
inline Nat odfib(Nat n) {
    return checked_add(checked_mul(fib_map(n), 4), 1);
}

// evfib(n) = 2 fib(n) = (n0)_2.
inline Nat evfib(Nat n) {
    if (n == 0)
        throw std::domain_error("evfib: index must be >= 1");
    return checked_mul(fib_map(n), 2);
}

struct FibStreamEntry {
    Nat value;
    Nat subset; // Fibonacci subset index = binary digit count = l(preimage)

    friend bool operator==(const FibStreamEntry&, const FibStreamEntry&) = default;
};

inline Nat fibbinary_subset_index(Nat m) {
    return static_cast<Nat>(std::bit_width(m));
}

// First `count` fibbinary numbers in increasing order, by direct bit filter.
inline std::vector<FibStreamEntry> fib_stream(Nat count) {
    if (count == 0)
        throw std::domain_error("fib_stream: count must be >= 1");
    std::vector<FibStreamEntry> out;
    out.reserve(static_cast<std::size_t>(count));
    for (Nat m = 1; out.size() < count; ++m) {
        if (m == 0)
            throw std::overflow_error("fib_stream: enumeration exceeds 64 bits");
        if (is_fibbinary(m))
            out.push_back({m, fibbinary_subset_index(m)});
    }
    return out;
}

// Second route for the same stream: closure of {1} under j -> 2j and
// j -> 4j+1, drained smallest-first. 2j is always even and 4j+1 odd, so the
// closure never produces duplicates.
inline std::vector<FibStreamEntry> fib_stream_closure(Nat count) {
    if (count == 0)
        throw std::domain_error("fib_stream_closure: count must be >= 1");
    std::priority_queue<Nat, std::vector<Nat>, std::greater<>> frontier;
    frontier.push(1);
    std::vector<FibStreamEntry> out;
    out.reserve(static_cast<std::size_t>(count));
    while (out.size() < count) {
        const Nat j = frontier.top();
        frontier.pop();
        out.push_back({j, fibbinary_subset_index(j)});
        if (j <= (std::numeric_limits<Nat>::max() >> 1))
            frontier.push(2 * j);
        if (j <= (std::numeric_limits<Nat>::max() - 1) >> 2)
            frontier.push(4 * j + 1);
    }
    return out;
}

// Unique factorisation of a fibbinary m >= 1 as odfib(s) * 2^r.
struct OdfibFactor {
    Nat s;
    Nat r;

    friend bool operator==(const OdfibFactor&, const OdfibFactor&) = default;
};

inline OdfibFactor odfib_decompose(Nat m) {
    if (m == 0 || !is_fibbinary(m))
        throw std::invalid_argument("odfib_decompose: " + std::to_string(m) +
                                    " is not a positive fibbinary number");
    const unsigned r = static_cast<unsigned>(std::countr_zero(m));
    const Nat core = m >> r; // odd, so core = 4 fib(s) + 1
    return {fib_unmap((core - 1) / 4), r};
}

} // namespace wythoff
