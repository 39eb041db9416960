#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wythoff/fibbinary.hpp"
#include "wythoff/fractal.hpp"
#include "wythoff/nat.hpp"
#include "wythoff/wythoff_array.hpp"
#include "wythoff/zeckendorf.hpp"

namespace wythoff {

// The named sequences surfaced by the CLI. Indices follow each sequence's
// natural offset: fib, fibonacci, lw, uw, w and the antidiagonal array
// reading start at 1; odfib, fo and fe start at 0.
enum class Seq {
    fib,       // fibbinary numbers, increasing
    odfib,     // odd fibbinary numbers
    lw,        // lower Wythoff, floor(n phi)
    uw,        // upper Wythoff, floor(n phi^2)
    fo,        // Fibonacci-odd integers
    fe,        // Fibonacci-even integers
    fibonacci, // F_1, F_2, ...
    w,         // fractal sequence of the Wythoff array
    wythoff,   // Wythoff array read by antidiagonals downwards
};

inline Seq parse_seq(std::string_view name) {
    if (name == "fib") return Seq::fib;
    if (name == "odfib") return Seq::odfib;
    if (name == "lw") return Seq::lw;
    if (name == "uw") return Seq::uw;
    if (name == "fo") return Seq::fo;
    if (name == "fe") return Seq::fe;
    if (name == "fibonacci") return Seq::fibonacci;
    if (name == "w") return Seq::w;
    if (name == "wythoff") return Seq::wythoff;
    throw std::invalid_argument("unknown sequence \"" + std::string(name) + "\"");
}

inline const char* seq_name(Seq s) {
    switch (s) {
    case Seq::fib: return "fib";
    case Seq::odfib: return "odfib";
    case Seq::lw: return "lw";
    case Seq::uw: return "uw";
    case Seq::fo: return "fo";
    case Seq::fe: return "fe";
    case Seq::fibonacci: return "fibonacci";
    case Seq::w: return "w";
    case Seq::wythoff: return "wythoff";
    }
    return "?";
}

inline Nat seq_offset(Seq s) {
    switch (s) {
    case Seq::odfib:
    case Seq::fo:
    case Seq::fe:
        return 0;
    default:
        return 1;
    }
}

inline std::vector<Nat> wythoff_antidiagonal_terms(Nat count) {
    std::vector<Nat> out;
    out.reserve(static_cast<std::size_t>(count));
    for (Nat d = 1; out.size() < count; ++d)
        for (Nat n = 0; n < d && out.size() < count; ++n)
            out.push_back(wythoff_cell(n, d - n));
    return out;
}

// First `count` terms of a sequence. Overflow is reported with the index at
// which the sequence leaves the 64-bit range.
inline std::vector<Nat> seq_terms(Seq s, Nat count) {
    if (count == 0)
        throw std::domain_error("seq_terms: count must be >= 1");
    std::vector<Nat> out;
    out.reserve(static_cast<std::size_t>(count));
    const Nat offset = seq_offset(s);
    try {
        switch (s) {
        case Seq::fib:
            for (const auto& e : fib_stream(count))
                out.push_back(e.value);
            break;
        case Seq::odfib:
            for (Nat n = 0; n < count; ++n)
                out.push_back(odfib(n));
            break;
        case Seq::lw:
            for (Nat n = 1; n <= count; ++n)
                out.push_back(lower_wythoff(n));
            break;
        case Seq::uw:
            for (Nat n = 1; n <= count; ++n)
                out.push_back(upper_wythoff(n));
            break;
        case Seq::fo:
            for (Nat n = 0; n < count; ++n)
                out.push_back(fib_odd(n));
            break;
        case Seq::fe:
            for (Nat n = 0; n < count; ++n)
                out.push_back(fib_even(n));
            break;
        case Seq::fibonacci:
            for (Nat n = 1; n <= count; ++n)
                out.push_back(fibonacci(n));
            break;
        case Seq::w:
            out = w_prefix(count).terms;
            break;
        case Seq::wythoff:
            out = wythoff_antidiagonal_terms(count);
            break;
        }
    } catch (const std::overflow_error& e) {
        throw std::overflow_error(std::string(seq_name(s)) + " overflows at index " +
                                  std::to_string(offset + out.size()) + ": " +
                                  e.what());
    }
    return out;
}

} // namespace wythoff
