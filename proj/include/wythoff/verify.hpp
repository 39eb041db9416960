#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "wythoff/fibbinary.hpp"
#include "wythoff/fractal.hpp"
#include "wythoff/nat.hpp"
#include "wythoff/oeis.hpp"
#include "wythoff/tables.hpp"
#include "wythoff/wythoff_array.hpp"
#include "wythoff/zeckendorf.hpp"

namespace wythoff {

struct CheckResult {
    std::string name;
    Nat checked = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.passed(); });
    }
    Nat total_checked() const {
        Nat n = 0;
        for (const auto& c : checks)
            n += c.checked;
        return n;
    }
};

namespace detail {

inline constexpr std::size_t kFailureCap = 8;

inline void record_failure(CheckResult& r, std::string message) {
    if (r.failures.size() < kFailureCap)
        r.failures.push_back(std::move(message));
}

} // namespace detail

// Default bounds; the acceptance criteria are pinned to these numbers.
inline constexpr Nat kDefaultCodecMaxN = 1'000'000;
inline constexpr Nat kDefaultStreamLimit = Nat{1} << 24;
inline constexpr Nat kDefaultBeattyMaxN = 100'000;
inline constexpr Nat kDefaultArraysMaxN = 2000;
inline constexpr Nat kDefaultArraysMaxK = 15;
inline constexpr Nat kDefaultCompletenessMaxN = 100'000;
inline constexpr Nat kDefaultTheoremMaxN = 10'000;
inline constexpr Nat kDefaultTheoremMaxK = 20;
inline constexpr Nat kDefaultFractalMaxN = 10'000;
inline constexpr Nat kDefaultTablesMaxP = 12;

inline SuiteReport run_codec_suite(Nat max_n = kDefaultCodecMaxN,
                                   Nat stream_limit = kDefaultStreamLimit) {
    SuiteReport report{"codec", {}};

    {
        CheckResult c{"round trip and word validity", 0, {}};
        for (Nat n = 0; n <= max_n; ++n) {
            const ZeckWord w = zeck_encode(n);
            ++c.checked;
            if (!ZeckWord::is_valid(w.digits()))
                detail::record_failure(c, "invalid word for " + std::to_string(n));
            else if (zeck_decode(w) != n)
                detail::record_failure(c, "round trip broken at " + std::to_string(n));
        }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"encoding is order-preserving", 0, {}};
        ZeckWord prev = zeck_encode(0);
        for (Nat n = 1; n <= max_n; ++n) {
            ZeckWord cur = zeck_encode(n);
            ++c.checked;
            if (!zeck_less(prev, cur))
                detail::record_failure(c, "order violated at " + std::to_string(n));
            prev = std::move(cur);
        }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"stream, closure and bijection agree up to 2^24", 0, {}};
        std::vector<Nat> filtered;
        for (Nat m = 1; m <= stream_limit; ++m)
            if (is_fibbinary(m))
                filtered.push_back(m);
        const Nat count = static_cast<Nat>(filtered.size());
        const auto stream = fib_stream(count);
        const auto closure = fib_stream_closure(count);
        for (std::size_t i = 0; i < filtered.size(); ++i) {
            ++c.checked;
            if (stream[i].value != filtered[i])
                detail::record_failure(c, "fib_stream differs at position " +
                                              std::to_string(i + 1));
            else if (closure[i] != stream[i])
                detail::record_failure(c, "closure generator differs at position " +
                                              std::to_string(i + 1));
            else if (fib_map(static_cast<Nat>(i) + 1) != filtered[i])
                detail::record_failure(c, "fib_map enumeration differs at position " +
                                              std::to_string(i + 1));
            else if (fib_unmap(filtered[i]) != static_cast<Nat>(i) + 1)
                detail::record_failure(c, "fib_unmap differs at value " +
                                              std::to_string(filtered[i]));
        }
        report.checks.push_back(std::move(c));

        CheckResult key{"key property: 2j and 4j+1 stay in fib, 4j-1 never occurs",
                        0, {}};
        for (Nat m : filtered) {
            ++key.checked;
            if (!is_fibbinary(2 * m) || !is_fibbinary(4 * m + 1))
                detail::record_failure(key, "closure fails at " + std::to_string(m));
            else if (m % 4 == 3)
                detail::record_failure(key, std::to_string(m) + " is 3 mod 4");
        }
        report.checks.push_back(std::move(key));

        CheckResult fac{"unique factorisation m = odfib(s) 2^r", 0, {}};
        for (Nat m : filtered) {
            ++fac.checked;
            const OdfibFactor f = odfib_decompose(m);
            if (checked_shl(odfib(f.s), static_cast<unsigned>(f.r)) != m)
                detail::record_failure(fac, "factorisation broken at " +
                                                std::to_string(m));
        }
        report.checks.push_back(std::move(fac));
    }
    {
        CheckResult c{"bridge identity fib(FO(n)) = odfib(n)", 0, {}};
        const Nat bound = std::min<Nat>(max_n, 100'000);
        for (Nat n = 0; n <= bound; ++n) {
            ++c.checked;
            if (fib_map(fib_odd(n)) != odfib(n))
                detail::record_failure(c, "bridge broken at " + std::to_string(n));
        }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"largest value in subset k is fib(F_{k+2}-1)", 0, {}};
        for (Nat k = 1; k <= 25; ++k) {
            // the largest k-digit fibbinary is alternating 1010...
            Nat expected = 0;
            for (Nat j = 0; j < k; ++j)
                expected = (expected << 1) | (j % 2 == 0 ? 1 : 0);
            ++c.checked;
            if (fib_map(fibonacci(k + 2) - 1) != expected)
                detail::record_failure(c, "subset max wrong for k = " +
                                              std::to_string(k));
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

inline SuiteReport run_beatty_suite(Nat max_n = kDefaultBeattyMaxN) {
    SuiteReport report{"beatty", {}};

    {
        CheckResult c{"LW and UW partition the positive integers", 0, {}};
        std::vector<unsigned char> hits(static_cast<std::size_t>(max_n) + 1, 0);
        for (Nat n = 1;; ++n) {
            const Nat v = lower_wythoff(n);
            if (v > max_n)
                break;
            ++hits[static_cast<std::size_t>(v)];
        }
        for (Nat n = 1;; ++n) {
            const Nat v = upper_wythoff(n);
            if (v > max_n)
                break;
            ++hits[static_cast<std::size_t>(v)];
        }
        for (Nat v = 1; v <= max_n; ++v) {
            ++c.checked;
            if (hits[static_cast<std::size_t>(v)] != 1)
                detail::record_failure(c, std::to_string(v) + " covered " +
                                              std::to_string(hits[v]) + " times");
        }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"cross identities FE(n-1)=LW(n)-1, FO(n-1)=UW(n)-1, UW=LW+n",
                      0, {}};
        for (Nat n = 1; n <= max_n; ++n) {
            const Nat lw = lower_wythoff(n);
            const Nat uw = upper_wythoff(n);
            ++c.checked;
            if (fib_even(n - 1) != lw - 1)
                detail::record_failure(c, "FE identity broken at " + std::to_string(n));
            else if (fib_odd(n - 1) != uw - 1)
                detail::record_failure(c, "FO identity broken at " + std::to_string(n));
            else if (uw != lw + n)
                detail::record_failure(c, "UW != LW + n at " + std::to_string(n));
        }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"Fibonacci subsets tile [1, F_{K+2}-1]", 0, {}};
        constexpr Nat K = 25;
        Nat expected = 1;
        for (Nat k = 1; k <= K; ++k) {
            for (Nat v : fibonacci_subset(k)) {
                ++c.checked;
                if (v != expected)
                    detail::record_failure(c, "tiling broken at " +
                                                  std::to_string(expected));
                ++expected;
            }
        }
        if (expected != fibonacci(K + 2))
            detail::record_failure(c, "tiling does not end at F_{K+2}-1");
        report.checks.push_back(std::move(c));
    }
    return report;
}

inline SuiteReport run_arrays_suite(Nat max_n = kDefaultArraysMaxN,
                                    Nat max_k = kDefaultArraysMaxK,
                                    Nat completeness_n = kDefaultCompletenessMaxN) {
    SuiteReport report{"arrays", {}};

    {
        CheckResult c{"formula, word form and iterative construction agree", 0, {}};
        const IterativeWythoff iter = wythoff_rows_iterative(
            static_cast<std::size_t>(max_n) + 1, static_cast<std::size_t>(max_k));
        for (Nat n = 0; n <= max_n; ++n) {
            for (Nat k = 1; k <= max_k; ++k) {
                const Nat formula = wythoff_cell(n, k);
                ++c.checked;
                if (formula != wythoff_cell_zeck(n, k))
                    detail::record_failure(c, "word form differs at (" +
                                                  std::to_string(n) + ", " +
                                                  std::to_string(k) + ")");
                else if (formula != iter.window.at(static_cast<std::size_t>(n),
                                                   static_cast<std::size_t>(k) - 1))
                    detail::record_failure(c, "iterative differs at (" +
                                                  std::to_string(n) + ", " +
                                                  std::to_string(k) + ")");
            }
        }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"every integer appears exactly once", 0, {}};
        std::vector<unsigned char> hits(static_cast<std::size_t>(completeness_n) + 1,
                                        0);
        for (Nat n = 0;; ++n) {
            Nat cell = wythoff_cell(n, 1);
            if (cell > completeness_n)
                break;
            for (Nat k = 2; cell <= completeness_n; ++k) {
                ++hits[static_cast<std::size_t>(cell)];
                cell = wythoff_cell(n, k);
            }
        }
        for (Nat v = 1; v <= completeness_n; ++v) {
            ++c.checked;
            if (hits[static_cast<std::size_t>(v)] != 1)
                detail::record_failure(c, std::to_string(v) + " appears " +
                                              std::to_string(hits[v]) + " times");
        }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"first column is FO", 0, {}};
        const Nat bound = std::min<Nat>(completeness_n, 100'000);
        for (Nat n = 0; n <= bound; ++n) {
            ++c.checked;
            if (wythoff_cell(n, 1) != fib_odd(n))
                detail::record_failure(c, "C_1 != FO at " + std::to_string(n));
        }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"iterative offsets follow LW and UW", 0, {}};
        constexpr std::size_t kRows = 501;
        const IterativeWythoff iter = wythoff_rows_iterative(kRows, 2);
        std::vector<Nat> ones, zeros;
        for (std::size_t i = 0; i < iter.offsets.size(); ++i) {
            if (iter.offsets[i] == 1)
                ones.push_back(static_cast<Nat>(i) + 1);
            else
                zeros.push_back(static_cast<Nat>(i) + 1);
        }
        for (std::size_t i = 0; i < ones.size(); ++i) {
            ++c.checked;
            if (ones[i] != lower_wythoff(static_cast<Nat>(i) + 1))
                detail::record_failure(c, "s=1 rows leave LW at position " +
                                              std::to_string(i + 1));
        }
        for (std::size_t i = 0; i < zeros.size(); ++i) {
            ++c.checked;
            if (zeros[i] != upper_wythoff(static_cast<Nat>(i) + 1))
                detail::record_failure(c, "s=0 rows leave UW at position " +
                                              std::to_string(i + 1));
        }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"Fibonacci addition across extended rows", 0, {}};
        const ArrayWindow w = extended_wythoff_window(500, 12);
        for (std::size_t r = 0; r < w.rows; ++r) {
            for (std::size_t col = 0; col + 2 < w.cols; ++col) {
                ++c.checked;
                if (w.at(r, col) + w.at(r, col + 1) != w.at(r, col + 2))
                    detail::record_failure(c, "addition broken in row " +
                                                  std::to_string(r));
            }
        }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"shape covering peels Fibonacci subsets", 0, {}};
        for (Nat m = 1; m <= 15; ++m) {
            const std::vector<Nat> diff = shape_cover_diff(m);
            const std::vector<Nat> expected = fibonacci_subset(m);
            ++c.checked;
            if (diff != expected)
                detail::record_failure(c, "covering difference wrong for m = " +
                                              std::to_string(m));
        }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"fibbinary array rows double and match fib(C_k(n))", 0, {}};
        const ArrayWindow w = fibbinary_array_window(200, 20);
        for (std::size_t r = 0; r < w.rows; ++r) {
            for (std::size_t col = 0; col < w.cols; ++col) {
                const Nat n = static_cast<Nat>(r);
                const Nat k = static_cast<Nat>(col) + 1;
                ++c.checked;
                if (w.at(r, col) != fibbinary_array_cell(n, k))
                    detail::record_failure(c, "window differs from cell formula");
                else if (col > 0 && w.at(r, col) != 2 * w.at(r, col - 1))
                    detail::record_failure(c, "row not geometric at row " +
                                                  std::to_string(r));
            }
        }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"column membership locates each integer", 0, {}};
        for (Nat m = 1; m <= 5000; ++m) {
            const Nat len = zeck_length(m);
            Nat column = 0;
            for (Nat k = 1; k <= len; ++k)
                if (column_membership(k, m))
                    column = k;
            ++c.checked;
            if (column == 0) {
                detail::record_failure(c, std::to_string(m) + " is in no column");
                continue;
            }
            const Nat row = w_of(m) - 1;
            if (wythoff_cell(row, column) != m)
                detail::record_failure(c, std::to_string(m) +
                                              " not at its claimed position");
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

inline SuiteReport run_tables_suite(Nat max_p = kDefaultTablesMaxP) {
    SuiteReport report{"tables", {}};

    CheckResult subsets{"table rows hold the Fibonacci subsets of fib", 0, {}};
    CheckResult heads{"column heads are the odfib / FO prefix", 0, {}};
    CheckResult halving{"halves sit above even entries", 0, {}};
    CheckResult addition{"Fibonacci addition down Wythoff table columns", 0, {}};
    CheckResult gaps{"empty bottom columns carry FO labels", 0, {}};
    CheckResult positions{"bottom row sits at the FE columns", 0, {}};
    CheckResult extension{"gap filling reproduces the next block of W", 0, {}};

    for (Nat p = 1; p <= max_p; ++p) {
        const SparseTable ft = build_fibbinary_table(p);
        const SparseTable wt = build_wythoff_table(p);

        for (Nat r = 1; r <= p; ++r) {
            std::vector<Nat> values;
            for (const auto& [x, v] : ft.row(static_cast<std::size_t>(r)))
                values.push_back(v);
            std::sort(values.begin(), values.end());
            std::vector<Nat> expected;
            for (Nat n : fibonacci_subset(r))
                expected.push_back(fib_map(n));
            ++subsets.checked;
            if (values != expected)
                detail::record_failure(subsets, "row " + std::to_string(r) +
                                                    " of p = " + std::to_string(p));
        }

        // topmost occupied entry per column
        std::vector<Nat> fib_heads, wyt_heads;
        for (Nat x = 0; x < ft.width; ++x) {
            for (Nat r = 1; r <= p; ++r) {
                if (auto v = ft.at(static_cast<std::size_t>(r), x)) {
                    fib_heads.push_back(*v);
                    wyt_heads.push_back(*wt.at(static_cast<std::size_t>(r), x));
                    break;
                }
            }
        }
        std::sort(fib_heads.begin(), fib_heads.end());
        std::sort(wyt_heads.begin(), wyt_heads.end());
        ++heads.checked;
        if (fib_heads.size() != static_cast<std::size_t>(fibonacci(p)))
            detail::record_failure(heads, "occupied column count wrong for p = " +
                                              std::to_string(p));
        for (std::size_t i = 0; i < fib_heads.size(); ++i) {
            ++heads.checked;
            if (fib_heads[i] != odfib(static_cast<Nat>(i)) ||
                wyt_heads[i] != fib_odd(static_cast<Nat>(i)))
                detail::record_failure(heads, "head " + std::to_string(i) +
                                                  " wrong for p = " +
                                                  std::to_string(p));
        }

        for (Nat r = 2; r <= p; ++r) {
            for (const auto& [x, v] : ft.row(static_cast<std::size_t>(r))) {
                if (v % 2 != 0)
                    continue;
                ++halving.checked;
                auto above = ft.at(static_cast<std::size_t>(r) - 1, x);
                if (!above || *above != v / 2)
                    detail::record_failure(halving, "no half above " +
                                                        std::to_string(v));
            }
        }

        for (Nat r = 2; r <= p; ++r) {
            for (const auto& [x, v] : wt.row(static_cast<std::size_t>(r))) {
                const Nat image = fib_map(v);
                if (image % 2 != 0)
                    continue; // word ends in 1: column head
                ++addition.checked;
                auto above = wt.at(static_cast<std::size_t>(r) - 1, x);
                if (!above || *above != fib_unmap(image / 2))
                    detail::record_failure(addition, "no preimage half above " +
                                                         std::to_string(v));
                if (r >= 3) {
                    auto two_up = wt.at(static_cast<std::size_t>(r) - 2, x);
                    if (two_up && above && v != *above + *two_up)
                        detail::record_failure(addition,
                                               "column sum broken at " +
                                                   std::to_string(v));
                }
            }
        }

        const auto& bottom = ft.row(static_cast<std::size_t>(p));
        std::vector<Nat> empty_labels;
        for (Nat x = 0; x < ft.width; ++x)
            if (!bottom.count(x))
                empty_labels.push_back(x);
        for (std::size_t i = 0; i < empty_labels.size(); ++i) {
            ++gaps.checked;
            if (empty_labels[i] != fib_odd(static_cast<Nat>(i)))
                detail::record_failure(gaps, "gap label " + std::to_string(i) +
                                                 " wrong for p = " +
                                                 std::to_string(p));
        }

        std::size_t index = 0;
        for (const auto& [x, v] : bottom) {
            ++positions.checked;
            if (x != fib_even(static_cast<Nat>(index)))
                detail::record_failure(positions, "bottom column " +
                                                      std::to_string(x) +
                                                      " is not FE(" +
                                                      std::to_string(index) + ")");
            ++index;
        }
        ++positions.checked;
        if (ft.x_max != fib_even(fibonacci(p) - 1) ||
            (!bottom.empty() && ft.x_max != bottom.rbegin()->first))
            detail::record_failure(positions,
                                   "x_max wrong for p = " + std::to_string(p));

        const std::vector<Nat> extended = extend_fractal_row(p);
        const Nat from = fibonacci(p + 2);
        const FractalPrefix w = w_prefix(fibonacci(p + 3) - 1);
        ++extension.checked;
        bool ok = extended.size() == static_cast<std::size_t>(fibonacci(p + 1));
        for (std::size_t i = 0; ok && i < extended.size(); ++i)
            ok = extended[i] == w.at(static_cast<std::size_t>(from) + i);
        if (!ok)
            detail::record_failure(extension,
                                   "extension differs from W for p = " +
                                       std::to_string(p));
    }

    report.checks.push_back(std::move(subsets));
    report.checks.push_back(std::move(heads));
    report.checks.push_back(std::move(halving));
    report.checks.push_back(std::move(addition));
    report.checks.push_back(std::move(gaps));
    report.checks.push_back(std::move(positions));
    report.checks.push_back(std::move(extension));
    return report;
}

inline SuiteReport run_fractal_suite(Nat max_n = kDefaultFractalMaxN) {
    SuiteReport report{"fractal", {}};

    {
        CheckResult c{"Zeckendorf parse agrees with the array scan", 0, {}};
        const std::vector<Nat> scanned = w_scan_table(max_n);
        for (Nat n = 1; n <= max_n; ++n) {
            ++c.checked;
            if (scanned[static_cast<std::size_t>(n)] == 0)
                detail::record_failure(c, std::to_string(n) + " missing from scan");
            else if (w_of(n) != scanned[static_cast<std::size_t>(n)])
                detail::record_failure(c, "w(n) differs at " + std::to_string(n));
        }
        // tie the per-position scanner to the bulk scan on a sample
        for (Nat n = 1; n <= max_n; n += 97) {
            ++c.checked;
            if (w_of_bruteforce(n) != scanned[static_cast<std::size_t>(n)])
                detail::record_failure(c, "row scan differs at " + std::to_string(n));
        }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"prefix has the fractal shape", 0, {}};
        const FractalPrefix p = w_prefix(max_n);
        ++c.checked;
        if (!is_valid_fractal_prefix(p))
            detail::record_failure(c, "prefix invariant violated");
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"excising first occurrences leaves a prefix of W", 0, {}};
        for (Nat k = 5; k <= 20; ++k) {
            const FractalPrefix original = w_prefix(fibonacci(k));
            const FractalPrefix once = excise_first_occurrences(original);
            const FractalPrefix twice = excise_first_occurrences(once);
            ++c.checked;
            if (once != w_prefix(static_cast<Nat>(once.size())))
                detail::record_failure(c, "single excision broken at F_" +
                                              std::to_string(k));
            else if (twice != w_prefix(static_cast<Nat>(twice.size())))
                detail::record_failure(c, "double excision broken at F_" +
                                              std::to_string(k));
        }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"value v first appears at position FO(v-1)", 0, {}};
        constexpr Nat kValues = 1000;
        const Nat horizon = fib_odd(kValues - 1);
        const FractalPrefix p = w_prefix(horizon);
        std::vector<Nat> first(static_cast<std::size_t>(kValues) + 1, 0);
        for (std::size_t i = 0; i < p.terms.size(); ++i) {
            const Nat v = p.terms[i];
            if (v <= kValues && first[static_cast<std::size_t>(v)] == 0)
                first[static_cast<std::size_t>(v)] = static_cast<Nat>(i) + 1;
        }
        for (Nat v = 1; v <= kValues; ++v) {
            ++c.checked;
            if (first[static_cast<std::size_t>(v)] != wythoff_cell(v - 1, 1))
                detail::record_failure(c, "first occurrence of " +
                                              std::to_string(v) + " misplaced");
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

inline SuiteReport run_theorem_suite(Nat max_n = kDefaultTheoremMaxN,
                                     Nat max_k = kDefaultTheoremMaxK) {
    SuiteReport report{"theorem", {}};
    const TheoremReport r = verify_main_theorem(max_n, max_k);
    CheckResult c{"fib(C_k(n)) = 2^{k-1} odfib(n) on all constructions",
                  r.cells_checked, r.failures};
    if (!r.overflow_cells.empty()) {
        const auto& [n, k] = r.overflow_cells.front();
        c.name += " (" + std::to_string(r.overflow_cells.size()) +
                  " cells skipped for overflow, first at n=" + std::to_string(n) +
                  " k=" + std::to_string(k) + ")";
    }
    report.checks.push_back(std::move(c));
    return report;
}

inline SuiteReport run_fixture_suite(const std::string& dir) {
    SuiteReport report{"fixtures", {}};
    for (const auto& binding : kFixtureBindings) {
        CheckResult c{std::string(binding.id) + " (" + seq_name(binding.seq) + ")",
                      0, {}};
        try {
            const OeisFixture fixture =
                load_fixture(dir + "/" + binding.id + ".txt");
            c.checked = static_cast<Nat>(fixture.terms.size());
            const std::string mismatch = compare_fixture(fixture, binding.seq);
            if (!mismatch.empty())
                detail::record_failure(c, mismatch);
        } catch (const std::exception& e) {
            detail::record_failure(c, e.what());
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

} // namespace wythoff
