#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wythoff/nat.hpp"

namespace wythoff {

// Fibonacci convention: F_1 = F_2 = 1, F_{i+1} = F_i + F_{i-1}.
// F_93 = 12200160415121876738 is the largest Fibonacci number representable
// in 64 bits, so the internal table runs to index 93; every Nat therefore has
// a Zeckendorf expansion drawn from the table.
inline constexpr std::size_t kFibTableLast = 93;

// Largest index the public fibonacci() accepts; beyond it values no longer
// fit the signed 64-bit range many consumers assume.
inline constexpr Nat kFibonacciMaxIndex = 92;

namespace detail {

consteval std::array<Nat, kFibTableLast + 1> make_fib_table() {
    std::array<Nat, kFibTableLast + 1> t{};
    t[1] = 1;
    t[2] = 1;
    for (std::size_t i = 3; i <= kFibTableLast; ++i)
        t[i] = t[i - 1] + t[i - 2];
    return t;
}

inline constexpr auto kFib = make_fib_table();

} // namespace detail

inline Nat fibonacci(Nat i) {
    if (i == 0)
        throw std::domain_error("fibonacci: index must be >= 1");
    if (i > kFibonacciMaxIndex)
        throw std::overflow_error("fibonacci: F_" + std::to_string(i) +
                                  " exceeds the 64-bit range");
    return detail::kFib[static_cast<std::size_t>(i)];
}

// A Zeckendorf digit word: most significant digit first, digit j from the
// right (j = 0, 1, ...) weighting F_{j+2}. The empty word denotes 0. A
// nonempty word starts with '1' and never contains "11".
class ZeckWord {
  public:
    ZeckWord() = default;

    explicit ZeckWord(std::string digits) : digits_(std::move(digits)) {
        ensure_valid(digits_);
    }

    static bool is_valid(std::string_view digits) {
        if (digits.empty())
            return true;
        if (digits.front() != '1')
            return false;
        char prev = '0';
        for (char c : digits) {
            if (c != '0' && c != '1')
                return false;
            if (c == '1' && prev == '1')
                return false;
            prev = c;
        }
        return true;
    }

    // Appends extra digits on the right and drops leading zeros, so that
    // words built from the empty word (n = 0) normalise correctly.
    ZeckWord with_suffix(std::string_view suffix) const {
        std::string d = digits_ + std::string(suffix);
        auto first_one = d.find('1');
        d.erase(0, first_one == std::string::npos ? d.size() : first_one);
        return ZeckWord(std::move(d));
    }

    const std::string& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }

    friend bool operator==(const ZeckWord&, const ZeckWord&) = default;

  private:
    static void ensure_valid(std::string_view digits) {
        if (!is_valid(digits))
            throw std::invalid_argument("ZeckWord: invalid digit string \"" +
                                        std::string(digits) + "\"");
    }

    std::string digits_;
};

// Shorter word < longer word; equal lengths compare lexicographically.
// Matches integer order of the encoded values.
inline bool zeck_less(const ZeckWord& a, const ZeckWord& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    return a.digits() < b.digits();
}

// Greedy Zeckendorf encoding: repeatedly subtract the largest F_r <= n.
inline ZeckWord zeck_encode(Nat n) {
    if (n == 0)
        return ZeckWord{};
    std::size_t r = 2;
    while (r < kFibTableLast && detail::kFib[r + 1] <= n)
        ++r;
    std::string digits;
    digits.reserve(r - 1);
    Nat rest = n;
    for (std::size_t i = r; i >= 2; --i) {
        if (detail::kFib[i] <= rest) {
            digits.push_back('1');
            rest -= detail::kFib[i];
        } else {
            digits.push_back('0');
        }
    }
    return ZeckWord(std::move(digits));
}

inline Nat zeck_decode(const ZeckWord& w) {
    if (!ZeckWord::is_valid(w.digits()))
        throw std::invalid_argument("zeck_decode: invalid word");
    const std::string& d = w.digits();
    if (d.size() + 1 > kFibTableLast)
        throw std::overflow_error("zeck_decode: word of length " +
                                  std::to_string(d.size()) +
                                  " exceeds the 64-bit range");
    Nat total = 0;
    for (std::size_t j = 0; j < d.size(); ++j)
        if (d[d.size() - 1 - j] == '1')
            total = checked_add(total, detail::kFib[j + 2]);
    return total;
}

inline Nat zeck_length(Nat n) {
    if (n == 0)
        throw std::domain_error("zeck_length: undefined for 0");
    std::size_t r = 2;
    while (r < kFibTableLast && detail::kFib[r + 1] <= n)
        ++r;
    return static_cast<Nat>(r - 1);
}

// (n 0^zeros)_F: the word of n with `zeros` zeros appended, evaluated as
// index arithmetic: every F_i in the expansion of n becomes F_{i+zeros}.
// Shifting 0 is 0.
inline Nat zeck_shift(Nat n, Nat zeros) {
    if (n == 0)
        return 0;
    if (zeros > kFibTableLast)
        throw std::overflow_error("zeck_shift: shift too large");
    std::size_t i = 2;
    while (i < kFibTableLast && detail::kFib[i + 1] <= n)
        ++i;
    if (i + zeros > kFibTableLast)
        throw std::overflow_error("zeck_shift: result exceeds the 64-bit range");
    Nat total = 0;
    Nat rest = n;
    while (rest > 0) {
        while (detail::kFib[i] > rest)
            --i;
        total = checked_add(total, detail::kFib[i + static_cast<std::size_t>(zeros)]);
        rest -= detail::kFib[i];
        i -= 2; // Zeckendorf words have no adjacent ones
    }
    return total;
}

// floor(n*phi), computed exactly from the shift identity
// (n0)_F = floor((n+1)*phi) - 1. No floating point anywhere.
inline Nat lower_wythoff(Nat n) {
    if (n == 0)
        throw std::domain_error("lower_wythoff: index must be >= 1");
    return checked_add(zeck_shift(n - 1, 1), 1);
}

// floor(n*phi^2) = floor(n*phi) + n.
inline Nat upper_wythoff(Nat n) {
    if (n == 0)
        throw std::domain_error("upper_wythoff: index must be >= 1");
    return checked_add(lower_wythoff(n), n);
}

// FO(n): Zeckendorf word (n01)_F, the integers whose word ends in 1.
// Equals floor((n+1)*phi^2) - 1.
inline Nat fib_odd(Nat n) {
    return zeck_decode(zeck_encode(n).with_suffix("01"));
}

// FE(n): Zeckendorf word (n0)_F, the integers whose word ends in 0.
// Equals floor((n+1)*phi) - 1.
inline Nat fib_even(Nat n) {
    return zeck_shift(n, 1);
}

// The F_k integers whose Zeckendorf word has length k: [F_{k+1}, F_{k+2}-1].
inline std::vector<Nat> fibonacci_subset(Nat k) {
    if (k == 0)
        throw std::domain_error("fibonacci_subset: index must be >= 1");
    if (k + 2 > kFibonacciMaxIndex)
        throw std::overflow_error("fibonacci_subset: F_" + std::to_string(k + 2) +
                                  " exceeds the 64-bit range");
    const Nat lo = detail::kFib[static_cast<std::size_t>(k) + 1];
    const Nat hi = detail::kFib[static_cast<std::size_t>(k) + 2];
    std::vector<Nat> out;
    out.reserve(static_cast<std::size_t>(hi - lo));
    for (Nat n = lo; n < hi; ++n)
        out.push_back(n);
    return out;
}

} // namespace wythoff
