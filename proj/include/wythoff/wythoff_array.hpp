#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wythoff/fibbinary.hpp"
#include "wythoff/nat.hpp"
#include "wythoff/zeckendorf.hpp"

namespace wythoff {

// Dense window of an array: `rows` x `cols` values, row-major. Rows are
// 0-based; column labels start at col_origin (-1 for the extended array,
// 1 for the array proper).
struct ArrayWindow {
    std::size_t rows = 0;
    std::size_t cols = 0;
    int row_origin = 0;
    int col_origin = 1;
    std::vector<Nat> cells;

    Nat at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
    Nat& at(std::size_t r, std::size_t c) { return cells[r * cols + c]; }
    int col_label(std::size_t c) const { return col_origin + static_cast<int>(c); }
};

// C_k(n) = floor((n+1) phi) F_{k+1} + n F_k, with the floor taken exactly
// via (n0)_F = floor((n+1) phi) - 1.
inline Nat wythoff_cell(Nat n, Nat k) {
    if (k == 0)
        throw std::domain_error("wythoff_cell: column index must be >= 1");
    const Nat lw = checked_add(zeck_shift(n, 1), 1);
    return checked_add(checked_mul(lw, fibonacci(k + 1)),
                       checked_mul(n, fibonacci(k)));
}

// Same cell by pure word manipulation: C_k(n) = (n 0 1 0^{k-1})_F.
inline Nat wythoff_cell_zeck(Nat n, Nat k) {
    if (k == 0)
        throw std::domain_error("wythoff_cell_zeck: column index must be >= 1");
    std::string suffix = "01";
    suffix.append(static_cast<std::size_t>(k - 1), '0');
    return zeck_decode(zeck_encode(n).with_suffix(suffix));
}

struct IterativeWythoff {
    ArrayWindow window;
    std::vector<int> offsets; // offsets[i] = s chosen for row i+1
};

namespace detail {

// Tracks every value of the rows built so far, extending each row by
// Fibonacci addition well past the window's right edge so that membership
// queries see the conceptually infinite rows.
class RowValuePool {
  public:
    void add_row(Nat first, Nat second) {
        frontiers_.push_back({first, second});
        seen_.insert(first);
        seen_.insert(second);
    }

    bool contains(Nat candidate) {
        extend_to(candidate);
        return seen_.count(candidate) > 0;
    }

  private:
    void extend_to(Nat limit) {
        for (auto& [a, b] : frontiers_) {
            while (b <= limit) {
                const Nat next = checked_add(a, b);
                a = b;
                b = next;
                seen_.insert(next);
            }
        }
    }

    std::vector<std::pair<Nat, Nat>> frontiers_;
    std::unordered_set<Nat> seen_;
};

} // namespace detail

// Builds the array row by row: row 0 is F_2, F_3, ...; each next row adds
// F_{3+s}, F_{4+s}, ... elementwise to the previous row, with s in {0,1} the
// smallest offset whose initial term has not occurred in an earlier row.
inline IterativeWythoff wythoff_rows_iterative(std::size_t row_count,
                                               std::size_t col_count) {
    if (row_count == 0 || col_count == 0)
        throw std::domain_error("wythoff_rows_iterative: empty window");
    IterativeWythoff result;
    ArrayWindow& w = result.window;
    w.rows = row_count;
    w.cols = col_count;
    w.col_origin = 1;
    w.cells.resize(row_count * col_count);

    for (std::size_t c = 0; c < col_count; ++c)
        w.at(0, c) = fibonacci(static_cast<Nat>(c) + 2);

    // Each row's first two values seed its Fibonacci extension in the pool;
    // they are tracked even when the requested window is a single column.
    Nat prev0 = fibonacci(2), prev1 = fibonacci(3);
    detail::RowValuePool pool;
    pool.add_row(prev0, prev1);

    for (std::size_t r = 1; r < row_count; ++r) {
        int s = -1;
        for (int cand = 0; cand <= 1; ++cand) {
            if (!pool.contains(checked_add(prev0, fibonacci(3 + static_cast<Nat>(cand))))) {
                s = cand;
                break;
            }
        }
        if (s < 0)
            throw std::logic_error("wythoff_rows_iterative: no admissible offset");
        result.offsets.push_back(s);
        for (std::size_t c = 0; c < col_count; ++c) {
            const Nat inc = fibonacci(3 + static_cast<Nat>(s) + static_cast<Nat>(c));
            w.at(r, c) = checked_add(w.at(r - 1, c), inc);
        }
        prev0 = checked_add(prev0, fibonacci(3 + static_cast<Nat>(s)));
        prev1 = checked_add(prev1, fibonacci(4 + static_cast<Nat>(s)));
        pool.add_row(prev0, prev1);
    }
    return result;
}

// Window of the array proper, columns k = 1..col_count.
inline ArrayWindow wythoff_window(std::size_t row_count, std::size_t col_count) {
    if (row_count == 0 || col_count == 0)
        throw std::domain_error("wythoff_window: empty window");
    ArrayWindow w;
    w.rows = row_count;
    w.cols = col_count;
    w.col_origin = 1;
    w.cells.resize(row_count * col_count);
    for (std::size_t r = 0; r < row_count; ++r)
        for (std::size_t c = 0; c < col_count; ++c)
            w.at(r, c) = wythoff_cell(static_cast<Nat>(r), static_cast<Nat>(c) + 1);
    return w;
}

// Extended array: column -1 holds the row number n, column 0 holds LW(n+1),
// columns k >= 1 hold C_k(n). col_count counts all columns including the
// two extended ones.
inline ArrayWindow extended_wythoff_window(std::size_t row_count,
                                           std::size_t col_count) {
    if (row_count == 0)
        throw std::domain_error("extended_wythoff_window: no rows");
    if (col_count < 3)
        throw std::domain_error("extended_wythoff_window: needs at least 3 columns");
    ArrayWindow w;
    w.rows = row_count;
    w.cols = col_count;
    w.col_origin = -1;
    w.cells.resize(row_count * col_count);
    for (std::size_t r = 0; r < row_count; ++r) {
        const Nat n = static_cast<Nat>(r);
        w.at(r, 0) = n;
        w.at(r, 1) = lower_wythoff(n + 1);
        for (std::size_t c = 2; c < col_count; ++c)
            w.at(r, c) = wythoff_cell(n, static_cast<Nat>(c) - 1);
    }
    return w;
}

// Image of the Wythoff array under the fibbinary bijection: row n is the
// geometric sequence odfib(n) * 2^{k-1}.
inline Nat fibbinary_array_cell(Nat n, Nat k) {
    if (k == 0)
        throw std::domain_error("fibbinary_array_cell: column index must be >= 1");
    return checked_shl(odfib(n), static_cast<unsigned>(k - 1));
}

inline ArrayWindow fibbinary_array_window(std::size_t row_count,
                                          std::size_t col_count) {
    if (row_count == 0 || col_count == 0)
        throw std::domain_error("fibbinary_array_window: empty window");
    ArrayWindow w;
    w.rows = row_count;
    w.cols = col_count;
    w.col_origin = 1;
    w.cells.resize(row_count * col_count);
    for (std::size_t r = 0; r < row_count; ++r) {
        w.at(r, 0) = odfib(static_cast<Nat>(r));
        for (std::size_t c = 1; c < col_count; ++c)
            w.at(r, c) = checked_mul(w.at(r, c - 1), 2);
    }
    return w;
}

// m lies in column k of the Wythoff array iff its word ends in 1 followed by
// exactly k-1 zeros.
inline bool column_membership(Nat k, Nat m) {
    if (k == 0 || m == 0)
        throw std::domain_error("column_membership: k and m must be >= 1");
    const std::string& d = zeck_encode(m).digits();
    std::size_t trailing = 0;
    while (trailing < d.size() && d[d.size() - 1 - trailing] == '0')
        ++trailing;
    return trailing == k - 1;
}

// Young-type shape with column lengths F_n, F_{n-1}, ..., F_1.
struct FibShape {
    Nat n;
    std::vector<Nat> column_lengths;
};

inline FibShape fib_shape(Nat n) {
    if (n == 0)
        throw std::domain_error("fib_shape: index must be >= 1");
    FibShape shape{n, {}};
    shape.column_lengths.reserve(static_cast<std::size_t>(n));
    for (Nat j = n; j >= 1; --j)
        shape.column_lengths.push_back(fibonacci(j));
    return shape;
}

namespace detail {

// Shape column j (j = 1..m) covers rows 0..F_{m-j+1}-1 of array column j.
inline std::vector<Nat> shape_cover_values(Nat m) {
    std::vector<Nat> covered;
    for (Nat j = 1; j <= m; ++j) {
        const Nat depth = fibonacci(m - j + 1);
        for (Nat n = 0; n < depth; ++n)
            covered.push_back(wythoff_cell(n, j));
    }
    return covered;
}

} // namespace detail

// Values covered by shape Gamma_m placed over the array's top-left corner,
// minus those covered by Gamma_{m-1}; sorted ascending.
inline std::vector<Nat> shape_cover_diff(Nat m) {
    if (m == 0)
        throw std::domain_error("shape_cover_diff: index must be >= 1");
    std::vector<Nat> outer = detail::shape_cover_values(m);
    std::vector<Nat> inner =
        m == 1 ? std::vector<Nat>{} : detail::shape_cover_values(m - 1);
    std::sort(outer.begin(), outer.end());
    std::sort(inner.begin(), inner.end());
    std::vector<Nat> diff;
    std::set_difference(outer.begin(), outer.end(), inner.begin(), inner.end(),
                        std::back_inserter(diff));
    return diff;
}

// Report of the main-theorem sweep: fib(C_k(n)) = 2^{k-1} odfib(n) on every
// cell, with the A11 formula, the word form, and the iterative construction
// all in agreement. Cells whose values leave 64 bits are skipped and listed.
struct TheoremReport {
    Nat cells_checked = 0;
    std::vector<std::pair<Nat, Nat>> overflow_cells;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

inline TheoremReport verify_main_theorem(Nat n_max, Nat k_max) {
    if (k_max == 0)
        throw std::domain_error("verify_main_theorem: k_max must be >= 1");
    TheoremReport report;
    const IterativeWythoff iter = wythoff_rows_iterative(
        static_cast<std::size_t>(n_max) + 1, static_cast<std::size_t>(k_max));
    constexpr std::size_t kFailureCap = 16;
    for (Nat n = 0; n <= n_max; ++n) {
        for (Nat k = 1; k <= k_max; ++k) {
            Nat formula, word_form, image, geometric;
            try {
                formula = wythoff_cell(n, k);
                word_form = wythoff_cell_zeck(n, k);
                image = fib_map(formula);
                geometric = fibbinary_array_cell(n, k);
            } catch (const std::overflow_error&) {
                report.overflow_cells.emplace_back(n, k);
                continue;
            }
            const Nat iterative =
                iter.window.at(static_cast<std::size_t>(n),
                               static_cast<std::size_t>(k) - 1);
            ++report.cells_checked;
            if (report.failures.size() >= kFailureCap)
                continue;
            if (image != geometric)
                report.failures.push_back(
                    "fib(C_" + std::to_string(k) + "(" + std::to_string(n) +
                    ")) = " + std::to_string(image) + " but 2^{k-1} odfib(n) = " +
                    std::to_string(geometric));
            if (formula != word_form)
                report.failures.push_back(
                    "C_" + std::to_string(k) + "(" + std::to_string(n) +
                    "): formula " + std::to_string(formula) + " != word form " +
                    std::to_string(word_form));
            if (formula != iterative)
                report.failures.push_back(
                    "C_" + std::to_string(k) + "(" + std::to_string(n) +
                    "): formula " + std::to_string(formula) + " != iterative " +
                    std::to_string(iterative));
        }
    }
    return report;
}

} // namespace wythoff
