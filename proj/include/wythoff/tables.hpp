#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wythoff/fibbinary.hpp"
#include "wythoff/nat.hpp"
#include "wythoff/zeckendorf.hpp"

namespace wythoff {

// A p-row table over column labels x = 0 .. width-1 (width = F_{p+1}), with
// only some cells occupied. Empty cells are meaningful and preserved.
// x_max = FE(F_p - 1) is the label of the last occupied bottom-row column.
struct SparseTable {
    enum class Kind { fibbinary, wythoff, fractal };

    Kind kind = Kind::fibbinary;
    std::size_t rows = 0;                  // p
    Nat width = 0;                         // number of column labels
    Nat x_max = 0;
    std::vector<std::map<Nat, Nat>> cells; // index r-1 -> {column -> value}

    const std::map<Nat, Nat>& row(std::size_t r) const { return cells.at(r - 1); }

    std::optional<Nat> at(std::size_t r, Nat x) const {
        const auto& m = cells.at(r - 1);
        auto it = m.find(x);
        if (it == m.end())
            return std::nullopt;
        return it->second;
    }
};

// Fibbinary table with p rows: the bottom row holds the Fibonacci subset
// F_p of fib at columns FE(0), ..., FE(F_p - 1); above each even entry sits
// its half, repeated until an odd number is reached.
inline SparseTable build_fibbinary_table(Nat p) {
    if (p == 0)
        throw std::domain_error("build_fibbinary_table: p must be >= 1");
    SparseTable t;
    t.kind = SparseTable::Kind::fibbinary;
    t.rows = static_cast<std::size_t>(p);
    t.width = fibonacci(p + 1);
    t.cells.resize(t.rows);

    const std::vector<Nat> subset = fibonacci_subset(p);
    t.x_max = fib_even(static_cast<Nat>(subset.size()) - 1);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        const Nat x = fib_even(static_cast<Nat>(i));
        Nat value = fib_map(subset[i]);
        t.cells[t.rows - 1].emplace(x, value);
        for (std::size_t r = t.rows - 1; r > 0 && value % 2 == 0; --r) {
            value /= 2;
            t.cells[r - 1].emplace(x, value);
        }
    }
    return t;
}

// Inverse image of the fibbinary table under the bijection: same occupied
// positions, each entry pulled back to its Zeckendorf preimage.
inline SparseTable build_wythoff_table(Nat p) {
    SparseTable t = build_fibbinary_table(p);
    t.kind = SparseTable::Kind::wythoff;
    for (auto& row : t.cells)
        for (auto& [x, value] : row)
            value = fib_unmap(value);
    return t;
}

// Each entry e = odfib(s) * 2^r replaced by s + 1, the 1-based row of the
// fibbinary array in which e is found.
inline SparseTable build_fractal_table(Nat p) {
    SparseTable t = build_fibbinary_table(p);
    t.kind = SparseTable::Kind::fractal;
    for (auto& row : t.cells)
        for (auto& [x, value] : row)
            value = checked_add(odfib_decompose(value).s, 1);
    return t;
}

// Takes row p of the p-row fractal table and fills its empty columns, left
// to right, with F_p + 1, ..., F_{p+1}. The result is the next Fibonacci
// block of the fractal sequence W in fractal order.
inline std::vector<Nat> extend_fractal_row(Nat p) {
    const SparseTable t = build_fractal_table(p);
    const auto& bottom = t.row(t.rows);
    std::vector<Nat> out;
    out.reserve(static_cast<std::size_t>(t.width));
    Nat next_fill = checked_add(fibonacci(p), 1);
    for (Nat x = 0; x < t.width; ++x) {
        auto it = bottom.find(x);
        if (it != bottom.end()) {
            out.push_back(it->second);
        } else {
            out.push_back(next_fill);
            ++next_fill;
        }
    }
    return out;
}

} // namespace wythoff
