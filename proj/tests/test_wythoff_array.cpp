#include <catch2/catch_amalgamated.hpp>

#include "wythoff/wythoff_array.hpp"

#include "wythoff/fibbinary.hpp"

#include "support/reference_data.hpp"

using namespace wythoff;

TEST_CASE("wythoff_cell") {
    CHECK(wythoff_cell(0, 1) == 1);
    CHECK(wythoff_cell(2, 5) == 42);
    CHECK(wythoff_cell(1, 7) == 76);
    CHECK(wythoff_cell(12, 1) == 33);
    CHECK_THROWS_AS(wythoff_cell(0, 0), std::domain_error);
}

TEST_CASE("wythoff_cell_zeck") {
    CHECK(wythoff_cell_zeck(0, 5) == 8);
    CHECK(wythoff_cell_zeck(1, 5) == 29);
    CHECK(wythoff_cell_zeck(2, 5) == 42);

    SECTION("agrees with the formula") {
        for (Nat n = 0; n <= 300; ++n)
            for (Nat k = 1; k <= 10; ++k)
                REQUIRE(wythoff_cell_zeck(n, k) == wythoff_cell(n, k));
    }
}

TEST_CASE("iterative construction") {
    const IterativeWythoff iter = wythoff_rows_iterative(4, 5);
    const ArrayWindow& w = iter.window;

    CHECK(w.at(0, 0) == 1);
    CHECK(w.at(0, 4) == 8);

    SECTION("row 1 adds the shifted Fibonacci sequence with s = 1") {
        CHECK(iter.offsets.at(0) == 1);
        CHECK(w.at(1, 0) == 4);
        CHECK(w.at(1, 1) == 7);
        CHECK(w.at(1, 2) == 11);
        CHECK(w.at(1, 3) == 18);
        CHECK(w.at(1, 4) == 29);
    }
    SECTION("row 2 uses s = 0") {
        CHECK(iter.offsets.at(1) == 0);
        CHECK(w.at(2, 0) == 6);
        CHECK(w.at(2, 4) == 42);
    }
    SECTION("row 3 uses s = 1") {
        CHECK(iter.offsets.at(2) == 1);
        CHECK(w.at(3, 0) == 9);
        CHECK(w.at(3, 4) == 63);
    }
}

TEST_CASE("offsets follow the lower and upper Wythoff numbering") {
    const IterativeWythoff iter = wythoff_rows_iterative(501, 3);
    std::vector<Nat> ones, zeros;
    for (std::size_t i = 0; i < iter.offsets.size(); ++i)
        (iter.offsets[i] == 1 ? ones : zeros).push_back(static_cast<Nat>(i) + 1);
    for (std::size_t i = 0; i < ones.size(); ++i)
        REQUIRE(ones[i] == lower_wythoff(static_cast<Nat>(i) + 1));
    for (std::size_t i = 0; i < zeros.size(); ++i)
        REQUIRE(zeros[i] == upper_wythoff(static_cast<Nat>(i) + 1));
}

TEST_CASE("extended window reproduces the published array") {
    const ArrayWindow w = extended_wythoff_window(13, 9);
    REQUIRE(w.rows == 13);
    REQUIRE(w.cols == 9);
    CHECK(w.col_label(0) == -1);
    CHECK(w.col_label(1) == 0);
    for (std::size_t r = 0; r < 13; ++r)
        for (std::size_t c = 0; c < 9; ++c)
            REQUIRE(w.at(r, c) == refdata::kExtendedWythoff13x9[r][c]);

    CHECK(w.at(5, 1) == 9); // LW(6)

    SECTION("Fibonacci addition across every triple, extended included") {
        const ArrayWindow big = extended_wythoff_window(200, 12);
        for (std::size_t r = 0; r < big.rows; ++r)
            for (std::size_t c = 0; c + 2 < big.cols; ++c)
                REQUIRE(big.at(r, c) + big.at(r, c + 1) == big.at(r, c + 2));
    }
    SECTION("rows and columns strictly increase") {
        for (std::size_t r = 0; r < w.rows; ++r)
            for (std::size_t c = 2; c + 1 < w.cols; ++c)
                REQUIRE(w.at(r, c) < w.at(r, c + 1));
        for (std::size_t c = 0; c < w.cols; ++c)
            for (std::size_t r = 0; r + 1 < w.rows; ++r)
                REQUIRE(w.at(r, c) < w.at(r + 1, c));
    }
    CHECK_THROWS_AS(extended_wythoff_window(5, 2), std::domain_error);
}

TEST_CASE("fibbinary array") {
    CHECK(fibbinary_array_cell(0, 1) == 1);
    CHECK(fibbinary_array_cell(4, 3) == 84);
    CHECK(fibbinary_array_cell(6, 6) == 1184); // 37 * 2^5
    CHECK(fibbinary_array_cell(6, 6) == fib_map(wythoff_cell(6, 6)));
    CHECK(fibbinary_array_cell(6, 7) == 2368);

    SECTION("window matches the corrected published table") {
        const ArrayWindow w = fibbinary_array_window(13, 7);
        for (std::size_t r = 0; r < 13; ++r)
            for (std::size_t c = 0; c < 7; ++c)
                REQUIRE(w.at(r, c) == refdata::kFibbinaryArray13x7[r][c]);
    }
    SECTION("rows are geometric") {
        const ArrayWindow w = fibbinary_array_window(50, 12);
        for (std::size_t r = 0; r < w.rows; ++r)
            for (std::size_t c = 1; c < w.cols; ++c)
                REQUIRE(w.at(r, c) == 2 * w.at(r, c - 1));
    }
}

TEST_CASE("verify_main_theorem") {
    SECTION("window of the published tables") {
        const TheoremReport r = verify_main_theorem(12, 7);
        CHECK(r.passed());
        CHECK(r.cells_checked == 91);
        CHECK(r.overflow_cells.empty());
    }
    SECTION("smallest cell") {
        const TheoremReport r = verify_main_theorem(0, 1);
        CHECK(r.passed());
        CHECK(r.cells_checked == 1);
    }
    SECTION("medium sweep") {
        const TheoremReport r = verify_main_theorem(500, 12);
        CHECK(r.passed());
        CHECK(r.cells_checked == 501 * 12);
    }
    SECTION("overflow cells are skipped and reported") {
        // row 0 is 2^{k-1}: k = 65 overflows, k <= 64 still fits
        const TheoremReport r = verify_main_theorem(0, 70);
        CHECK(r.passed());
        CHECK(r.cells_checked == 64);
        REQUIRE(r.overflow_cells.size() == 6);
        CHECK(r.overflow_cells.front() == std::pair<Nat, Nat>{0, 65});
    }
}

TEST_CASE("column membership") {
    CHECK(column_membership(5, 29));
    CHECK(column_membership(1, 9));
    CHECK_FALSE(column_membership(2, 9));
    CHECK_THROWS_AS(column_membership(0, 9), std::domain_error);
    CHECK_THROWS_AS(column_membership(1, 0), std::domain_error);

    SECTION("each integer lies in exactly one column") {
        for (Nat m = 1; m <= 2000; ++m) {
            Nat columns = 0;
            for (Nat k = 1; k <= zeck_length(m) + 1; ++k)
                if (column_membership(k, m))
                    ++columns;
            REQUIRE(columns == 1);
        }
    }
    SECTION("column k of the array passes the membership test") {
        for (Nat n = 0; n <= 50; ++n)
            for (Nat k = 1; k <= 10; ++k)
                REQUIRE(column_membership(k, wythoff_cell(n, k)));
    }
}

TEST_CASE("fib_shape") {
    const FibShape g6 = fib_shape(6);
    CHECK(g6.column_lengths == std::vector<Nat>{8, 5, 3, 2, 1, 1});
    Nat boxes = 0;
    for (Nat len : g6.column_lengths)
        boxes += len;
    CHECK(boxes == fibonacci(8) - 1);
}

TEST_CASE("shape covering") {
    CHECK(shape_cover_diff(1) == std::vector<Nat>{1});
    CHECK(shape_cover_diff(3) == std::vector<Nat>{3, 4});
    CHECK(shape_cover_diff(6) ==
          std::vector<Nat>{13, 14, 15, 16, 17, 18, 19, 20});

    SECTION("peels the Fibonacci subsets for m = 1..15") {
        for (Nat m = 1; m <= 15; ++m)
            REQUIRE(shape_cover_diff(m) == fibonacci_subset(m));
    }
}

TEST_CASE("completeness over a range") {
    constexpr Nat N = 20'000;
    std::vector<int> hits(N + 1, 0);
    for (Nat n = 0;; ++n) {
        Nat cell = wythoff_cell(n, 1);
        if (cell > N)
            break;
        for (Nat k = 2; cell <= N; ++k) {
            ++hits[cell];
            cell = wythoff_cell(n, k);
        }
    }
    for (Nat v = 1; v <= N; ++v)
        REQUIRE(hits[v] == 1);
}

TEST_CASE("first column is FO") {
    for (Nat n = 0; n <= 20'000; ++n)
        REQUIRE(wythoff_cell(n, 1) == fib_odd(n));
}
