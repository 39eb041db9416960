#pragma once

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "wythoff/nat.hpp"
#include "wythoff/wythoff_array.hpp"
#include "wythoff/zeckendorf.hpp"

namespace wythoff {

// The fractal sequence W: w(n) is the 1-based row of the Wythoff array in
// which n appears. Positions are 1-based throughout this header.

// Zeckendorf parse: every n >= 1 reads uniquely as (m 0 1 0^t)_F, where the
// separating 0 is absent when the word of m is empty. Then w(n) = m + 1.
inline Nat w_of(Nat n) {
    if (n == 0)
        throw std::domain_error("w_of: position must be >= 1");
    std::string d = zeck_encode(n).digits();
    while (!d.empty() && d.back() == '0')
        d.pop_back();
    d.pop_back(); // the final '1'
    if (!d.empty())
        d.pop_back(); // the separating '0'
    return checked_add(zeck_decode(ZeckWord(std::move(d))), 1);
}

// Independent route: scan array rows until the row head exceeds n.
inline Nat w_of_bruteforce(Nat n) {
    if (n == 0)
        throw std::domain_error("w_of_bruteforce: position must be >= 1");
    for (Nat r = 0;; ++r) {
        Nat cell = wythoff_cell(r, 1);
        if (cell > n)
            break;
        for (Nat k = 2; cell < n; ++k)
            cell = wythoff_cell(r, k);
        if (cell == n)
            return r + 1;
    }
    throw std::logic_error("w_of_bruteforce: " + std::to_string(n) +
                           " missing from the array");
}

// One pass over the array, for bulk oracle comparisons: entry n holds w(n)
// for n = 1..max_n, found by walking every row whose head is in range.
inline std::vector<Nat> w_scan_table(Nat max_n) {
    std::vector<Nat> rows(static_cast<std::size_t>(max_n) + 1, 0);
    for (Nat r = 0;; ++r) {
        Nat cell = wythoff_cell(r, 1);
        if (cell > max_n)
            break;
        for (Nat k = 2; cell <= max_n; ++k) {
            rows[static_cast<std::size_t>(cell)] = r + 1;
            cell = wythoff_cell(r, k);
        }
    }
    return rows;
}

struct FractalPrefix {
    std::vector<Nat> terms; // terms[i] = w(i+1)

    std::size_t size() const { return terms.size(); }
    Nat at(std::size_t pos) const { return terms.at(pos - 1); } // 1-based

    friend bool operator==(const FractalPrefix&, const FractalPrefix&) = default;
};

inline FractalPrefix w_prefix(Nat count) {
    if (count == 0)
        throw std::domain_error("w_prefix: length must be >= 1");
    FractalPrefix p;
    p.terms.reserve(static_cast<std::size_t>(count));
    for (Nat n = 1; n <= count; ++n)
        p.terms.push_back(w_of(n));
    return p;
}

// Removes the first occurrence of each distinct value. For a prefix of W the
// remainder is again a prefix of W.
inline FractalPrefix excise_first_occurrences(const FractalPrefix& prefix) {
    if (prefix.terms.empty())
        throw std::domain_error("excise_first_occurrences: empty prefix");
    FractalPrefix out;
    std::unordered_set<Nat> seen;
    for (Nat v : prefix.terms) {
        if (seen.insert(v).second)
            continue;
        out.terms.push_back(v);
    }
    return out;
}

// Checks the defining shape of a fractal prefix: starts at 1, and value v
// cannot appear before v-1 has.
inline bool is_valid_fractal_prefix(const FractalPrefix& prefix) {
    Nat next_new = 1;
    for (Nat v : prefix.terms) {
        if (v == 0 || v > next_new)
            return false;
        if (v == next_new)
            ++next_new;
    }
    return !prefix.terms.empty() && prefix.terms.front() == 1;
}

} // namespace wythoff
