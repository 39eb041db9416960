#pragma once

// Frozen reference values for the test suites: published table prefixes and
// sequence listings, plus the two documented errata in the printed fibbinary
// array (see kFibbinaryArray13x7 below).

#include <cstdint>
#include <map>
#include <vector>

namespace refdata {

using Nat = std::uint64_t;

// Extended Wythoff array, 13 rows x 9 columns (n, LW(n+1), C_1..C_7).
inline const std::vector<std::vector<Nat>> kExtendedWythoff13x9 = {
    {0, 1, 1, 2, 3, 5, 8, 13, 21},
    {1, 3, 4, 7, 11, 18, 29, 47, 76},
    {2, 4, 6, 10, 16, 26, 42, 68, 110},
    {3, 6, 9, 15, 24, 39, 63, 102, 165},
    {4, 8, 12, 20, 32, 52, 84, 136, 220},
    {5, 9, 14, 23, 37, 60, 97, 157, 254},
    {6, 11, 17, 28, 45, 73, 118, 191, 309},
    {7, 12, 19, 31, 50, 81, 131, 212, 343},
    {8, 14, 22, 36, 58, 94, 152, 246, 398},
    {9, 16, 25, 41, 66, 107, 173, 280, 453},
    {10, 17, 27, 44, 71, 115, 186, 301, 487},
    {11, 19, 30, 49, 79, 128, 207, 335, 542},
    {12, 21, 33, 54, 87, 141, 228, 369, 597},
};

// Fibbinary array, 13 rows x 7 columns. The printed version of this table
// has 1194 and 2388 in row 6 (0-based), columns 5-6; the row-doubling rule
// gives 1184 = 37*2^5 and 2368 = 37*2^6, frozen here.
inline const std::vector<std::vector<Nat>> kFibbinaryArray13x7 = {
    {1, 2, 4, 8, 16, 32, 64},
    {5, 10, 20, 40, 80, 160, 320},
    {9, 18, 36, 72, 144, 288, 576},
    {17, 34, 68, 136, 272, 544, 1088},
    {21, 42, 84, 168, 336, 672, 1344},
    {33, 66, 132, 264, 528, 1056, 2112},
    {37, 74, 148, 296, 592, 1184, 2368},
    {41, 82, 164, 328, 656, 1312, 2624},
    {65, 130, 260, 520, 1040, 2080, 4160},
    {69, 138, 276, 552, 1104, 2208, 4416},
    {73, 146, 292, 584, 1168, 2336, 4672},
    {81, 162, 324, 648, 1296, 2592, 5184},
    {85, 170, 340, 680, 1360, 2720, 5440},
};

inline constexpr Nat kFibbinaryArrayErrataPrinted[2] = {1194, 2388};
inline constexpr Nat kFibbinaryArrayErrataComputed[2] = {1184, 2368};

// Sparse tables with p = 6 rows over column labels 0..12, as maps
// row (1-based) -> {column -> value}. Absent cells are genuinely empty.
using SparseCells = std::map<Nat, std::map<Nat, Nat>>;

inline const SparseCells kFibbinaryTableP6 = {
    {1, {{0, 1}}},
    {2, {{0, 2}}},
    {3, {{0, 4}, {8, 5}}},
    {4, {{0, 8}, {5, 9}, {8, 10}}},
    {5, {{0, 16}, {3, 17}, {5, 18}, {8, 20}, {11, 21}}},
    {6, {{0, 32}, {2, 33}, {3, 34}, {5, 36}, {7, 37}, {8, 40}, {10, 41}, {11, 42}}},
};

inline const SparseCells kFractalTableP6 = {
    {1, {{0, 1}}},
    {2, {{0, 1}}},
    {3, {{0, 1}, {8, 2}}},
    {4, {{0, 1}, {5, 3}, {8, 2}}},
    {5, {{0, 1}, {3, 4}, {5, 3}, {8, 2}, {11, 5}}},
    {6, {{0, 1}, {2, 6}, {3, 4}, {5, 3}, {7, 7}, {8, 2}, {10, 8}, {11, 5}}},
};

inline const SparseCells kWythoffTableP6 = {
    {1, {{0, 1}}},
    {2, {{0, 2}}},
    {3, {{0, 3}, {8, 4}}},
    {4, {{0, 5}, {5, 6}, {8, 7}}},
    {5, {{0, 8}, {3, 9}, {5, 10}, {8, 11}, {11, 12}}},
    {6, {{0, 13}, {2, 14}, {3, 15}, {5, 16}, {7, 17}, {8, 18}, {10, 19}, {11, 20}}},
};

// Lower Wythoff sequence, LW(1), LW(2), ...
inline const std::vector<Nat> kLowerWythoff = {
    1,  3,  4,  6,  8,  9,  11, 12, 14, 16, 17, 19, 21, 22, 24, 25, 27,
    29, 30, 32, 33, 35, 37, 38, 40, 42, 43, 45, 46, 48, 50, 51, 53, 55};

// Upper Wythoff sequence, UW(1), UW(2), ...
inline const std::vector<Nat> kUpperWythoff = {
    2,  5,  7,  10, 13, 15, 18, 20, 23, 26, 28, 31, 34, 36, 39, 41,
    44, 47, 49, 52, 54, 57, 60, 62, 65, 68, 70, 73, 75, 78, 81};

// Fibonacci-odd integers, FO(0), FO(1), ...
inline const std::vector<Nat> kFibonacciOdd = {
    1,  4,  6,  9,  12, 14, 17, 19, 22, 25, 27, 30, 33, 35, 38, 40,
    43, 46, 48, 51, 53, 56, 59, 61, 64, 67, 69, 72, 74, 77, 80};

// Fibonacci-even integers, FE(0), FE(1), ...
inline const std::vector<Nat> kFibonacciEven = {
    0,  2,  3,  5,  7,  8,  10, 11, 13, 15, 16, 18, 20, 21, 23, 24, 26, 28,
    29, 31, 32, 34, 36, 37, 39, 41, 42, 44, 45, 47, 49, 50, 52, 54, 55};

// The fibbinary numbers through fib(33) = 85, with the boundaries of the
// Fibonacci subsets after 1, 2, 4, 7, 12, 20 and 33 terms.
inline const std::vector<Nat> kFibbinary = {
    1,  2,  4,  5,  8,  9,  10, 16, 17, 18, 20, 21, 32, 33, 34, 36, 37,
    40, 41, 42, 64, 65, 66, 68, 69, 72, 73, 74, 80, 81, 82, 84, 85};

// Odd fibbinary numbers, odfib(0), odfib(1), ...
inline const std::vector<Nat> kOdfib = {
    1,  5,  9,   17,  21,  33,  37,  41,  65,  69, 73,
    81, 85, 129, 133, 137, 145, 149, 161, 165, 169};

// Fractal sequence of the Wythoff array, w(1), w(2), ...
inline const std::vector<Nat> kFractalW = {1, 1, 1, 2, 1, 3, 2, 1, 4, 3, 2,
                                           5, 1, 6, 4, 3, 7, 2, 8, 5, 1};

// The seventh Fibonacci block of W, obtained by filling 9..13 into the gaps
// of the sixth fractal-table row.
inline const std::vector<Nat> kSeventhBlockOfW = {1, 9, 6,  4, 10, 3, 11,
                                                  7, 2, 12, 8, 5,  13};

// Column heads of the p = 6 fibbinary table, left to right by column.
inline const std::vector<Nat> kFibbinaryTableHeads = {1, 5, 9, 17, 21, 33, 37, 41};

} // namespace refdata
