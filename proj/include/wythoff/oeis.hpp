#pragma once

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wythoff/nat.hpp"
#include "wythoff/sequences.hpp"

namespace wythoff {

// The OEIS b-file interchange format: one "index value" pair per line.
inline std::string format_b_file(Nat offset, const std::vector<Nat>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        out += std::to_string(offset + i);
        out += ' ';
        out += std::to_string(terms[i]);
        out += '\n';
    }
    return out;
}

// Reference prefixes bundled with the repository: a "# id offset" header
// line followed by b-file lines with consecutive indices.
struct OeisFixture {
    std::string id;
    Nat offset = 0;
    std::vector<Nat> terms;
};

inline OeisFixture parse_fixture(std::istream& in, const std::string& origin) {
    auto fail = [&origin](const std::string& why) -> void {
        throw std::runtime_error("fixture " + origin + ": " + why);
    };
    OeisFixture f;
    std::string line;
    if (!std::getline(in, line))
        fail("empty file");
    {
        std::istringstream header(line);
        std::string hash;
        if (!(header >> hash >> f.id >> f.offset) || hash != "#")
            fail("malformed header \"" + line + "\"");
    }
    Nat expected = f.offset;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream fields(line);
        Nat index, value;
        if (!(fields >> index >> value))
            fail("malformed line \"" + line + "\"");
        if (index != expected)
            fail("index " + std::to_string(index) + " out of order, expected " +
                 std::to_string(expected));
        f.terms.push_back(value);
        ++expected;
    }
    if (f.terms.empty())
        fail("no terms");
    return f;
}

inline OeisFixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("fixture " + path + ": cannot open");
    return parse_fixture(in, path);
}

struct FixtureBinding {
    Seq seq;
    const char* id;
};

// Every bundled fixture and the sequence it pins down.
inline constexpr std::array<FixtureBinding, 8> kFixtureBindings{{
    {Seq::fib, "A003714"},
    {Seq::odfib, "A022341"},
    {Seq::lw, "A000201"},
    {Seq::uw, "A001950"},
    {Seq::fo, "A003622"},
    {Seq::fe, "A022342"},
    {Seq::w, "A003603"},
    {Seq::wythoff, "A035513"},
}};

// Compares a fixture against freshly generated terms. Returns an empty
// string on agreement, otherwise a description of the first mismatch.
inline std::string compare_fixture(const OeisFixture& fixture, Seq seq) {
    if (fixture.offset != seq_offset(seq))
        return fixture.id + ": offset " + std::to_string(fixture.offset) +
               " != expected " + std::to_string(seq_offset(seq));
    const std::vector<Nat> generated =
        seq_terms(seq, static_cast<Nat>(fixture.terms.size()));
    for (std::size_t i = 0; i < fixture.terms.size(); ++i) {
        if (generated[i] != fixture.terms[i])
            return fixture.id + ": term " + std::to_string(fixture.offset + i) +
                   " generated " + std::to_string(generated[i]) + " != fixture " +
                   std::to_string(fixture.terms[i]);
    }
    return {};
}

} // namespace wythoff
