#include <catch2/catch_amalgamated.hpp>

#include "wythoff/fibbinary.hpp"

#include "support/reference_data.hpp"

using namespace wythoff;

TEST_CASE("fib_map") {
    CHECK(fib_map(0) == 0);
    CHECK(fib_map(12) == 21);
    CHECK(fib_map(20) == 42);
    CHECK(fib_map(13) == 32); // fib(F_7) = 2^5

    SECTION("fib(F_i) = 2^{i-2}") {
        for (Nat i = 2; i <= 60; ++i)
            CHECK(fib_map(fibonacci(i)) == Nat{1} << (i - 2));
    }
}

TEST_CASE("fib_unmap") {
    CHECK(fib_unmap(21) == 12);
    CHECK(fib_unmap(1) == 1);
    CHECK(fib_unmap(85) == 33);
    CHECK(fib_unmap(0) == 0);
    CHECK_THROWS_AS(fib_unmap(7), std::invalid_argument);
    CHECK_THROWS_AS(fib_unmap(6), std::invalid_argument);
}

TEST_CASE("is_fibbinary") {
    CHECK(is_fibbinary(10));
    CHECK_FALSE(is_fibbinary(7));
    CHECK(is_fibbinary(170));
    CHECK(is_fibbinary(0));
    CHECK_FALSE(is_fibbinary(3));
}

TEST_CASE("odfib and evfib") {
    for (std::size_t i = 0; i < refdata::kOdfib.size(); ++i)
        CHECK(odfib(i) == refdata::kOdfib[i]);
    CHECK(odfib(0) == 1);
    CHECK(odfib(2) == 9);
    CHECK(odfib(12) == 85);
    CHECK(odfib(21) == 257);
    CHECK(odfib(33) == 341);
    CHECK(odfib(34) == 513);

    CHECK(evfib(1) == 2);
    CHECK(evfib(12) == 42);
    CHECK(evfib(3) == 8);
    CHECK_THROWS_AS(evfib(0), std::domain_error);

    SECTION("evfib doubles fib_map") {
        for (Nat n = 1; n <= 500; ++n)
            CHECK(evfib(n) == 2 * fib_map(n));
    }
}

TEST_CASE("fib_stream") {
    const auto stream = fib_stream(7);
    const std::vector<Nat> values{1, 2, 4, 5, 8, 9, 10};
    const std::vector<Nat> subsets{1, 2, 3, 3, 4, 4, 4};
    REQUIRE(stream.size() == 7);
    for (std::size_t i = 0; i < stream.size(); ++i) {
        CHECK(stream[i].value == values[i]);
        CHECK(stream[i].subset == subsets[i]);
    }

    CHECK(fib_stream(1).front().value == 1);

    SECTION("matches the published listing with subset boundaries") {
        const auto listing = fib_stream(refdata::kFibbinary.size());
        for (std::size_t i = 0; i < listing.size(); ++i)
            CHECK(listing[i].value == refdata::kFibbinary[i]);
        // subset boundaries fall after 1, 2, 4, 7, 12, 20, 33 terms
        CHECK(listing[0].subset == 1);
        CHECK(listing[1].subset == 2);
        CHECK(listing[11].subset == 5);
        CHECK(listing[12].subset == 6);
        CHECK(listing[19].subset == 6);
        CHECK(listing[20].subset == 7);
        CHECK(listing[32].subset == 7);
    }
    SECTION("subset 5 portion") {
        std::vector<Nat> block;
        for (const auto& e : fib_stream(100))
            if (e.subset == 5)
                block.push_back(e.value);
        CHECK(block == std::vector<Nat>{16, 17, 18, 20, 21});
    }
}

TEST_CASE("stream generators agree") {
    const auto filtered = fib_stream(5000);
    const auto closure = fib_stream_closure(5000);
    REQUIRE(filtered.size() == closure.size());
    for (std::size_t i = 0; i < filtered.size(); ++i) {
        REQUIRE(filtered[i] == closure[i]);
        REQUIRE(filtered[i].value == fib_map(static_cast<Nat>(i) + 1));
    }
}

TEST_CASE("bijection round trip") {
    for (Nat n = 0; n <= 50'000; ++n)
        REQUIRE(fib_unmap(fib_map(n)) == n);
    for (Nat m = 0; m <= (Nat{1} << 18); ++m)
        if (is_fibbinary(m))
            REQUIRE(fib_map(fib_unmap(m)) == m);
}

TEST_CASE("key property") {
    for (Nat m = 1; m <= (Nat{1} << 18); ++m) {
        if (!is_fibbinary(m))
            continue;
        REQUIRE(is_fibbinary(2 * m));
        REQUIRE(is_fibbinary(4 * m + 1));
        REQUIRE(m % 4 != 3);
    }
}

TEST_CASE("odfib factorisation") {
    CHECK(odfib_decompose(1) == OdfibFactor{0, 0});
    CHECK(odfib_decompose(32) == OdfibFactor{0, 5});
    CHECK(odfib_decompose(42) == OdfibFactor{4, 1});
    CHECK_THROWS_AS(odfib_decompose(0), std::invalid_argument);
    CHECK_THROWS_AS(odfib_decompose(3), std::invalid_argument);

    SECTION("recomposition is the identity") {
        for (Nat m = 1; m <= (Nat{1} << 16); ++m) {
            if (!is_fibbinary(m))
                continue;
            const OdfibFactor f = odfib_decompose(m);
            REQUIRE(checked_shl(odfib(f.s), static_cast<unsigned>(f.r)) == m);
        }
    }
}

TEST_CASE("bridge identity fib(FO(n)) = odfib(n)") {
    for (Nat n = 0; n <= 20'000; ++n)
        REQUIRE(fib_map(fib_odd(n)) == odfib(n));
}

TEST_CASE("largest element of each subset") {
    // fib(F_{k+2} - 1) closes subset k, as the listing annotates
    CHECK(fib_map(fibonacci(7) - 1) == 21);
    CHECK(fib_map(fibonacci(8) - 1) == 42);
    CHECK(fib_map(fibonacci(9) - 1) == 85);
    CHECK(fib_map(fibonacci(10) - 1) == 170);
    CHECK(fib_map(fibonacci(11) - 1) == 341);
    for (Nat k = 1; k <= 25; ++k) {
        Nat expected = 0; // alternating word 1010...
        for (Nat j = 0; j < k; ++j)
            expected = (expected << 1) | (j % 2 == 0 ? 1 : 0);
        CHECK(fib_map(fibonacci(k + 2) - 1) == expected);
    }
}
