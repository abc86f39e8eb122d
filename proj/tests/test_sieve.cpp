#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "bertrand/sieve.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bertrand::sieve;

TEST_SUITE("sieve") {

TEST_CASE("primes up to small limits") {
    CHECK(primes_up_to(0).collect().empty());
    CHECK(primes_up_to(1).collect().empty());
    CHECK(primes_up_to(2).collect() == std::vector<std::uint64_t>{2});
    CHECK(primes_up_to(10).collect() == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(11).collect().back() == 11);
}

TEST_CASE("enumeration matches trial division for every limit up to 10^4") {
    const auto reference = oracle::trial_division_primes(10000);
    SieveOptions tiny;
    tiny.segment_bytes = 8;  // 128-wide segments exercise the boundaries
    for (std::uint64_t limit = 0; limit <= 10000; ++limit) {
        const auto end = std::upper_bound(reference.begin(), reference.end(), limit);
        const std::vector<std::uint64_t> expected(reference.begin(), end);
        CAPTURE(limit);
        REQUIRE(primes_up_to(limit).collect() == expected);
        if (limit % 97 == 0) REQUIRE(primes_up_to(limit, tiny).collect() == expected);
    }
}

TEST_CASE("prime count at one million") {
    const auto reference = oracle::trial_division_primes(1000000);
    CHECK(reference.size() == 78498);
    CHECK(prime_count(1000000) == reference.size());
    SieveOptions opts;
    opts.segment_bytes = 1000;
    opts.threads = 3;
    CHECK(prime_count(1000000, opts) == reference.size());
}

TEST_CASE("segmented windows agree with a single full sieve") {
    const std::uint64_t bound = 10000000;
    const auto full = small_primes(bound);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t lo = rng() % bound;
        const std::uint64_t hi = std::min(bound + 1, lo + 1 + rng() % 100000);
        const auto base = base_primes_for(hi);
        SieveSegment seg(lo, hi, base);
        std::vector<std::uint64_t> got;
        seg.for_each_prime([&](std::uint64_t p) { got.push_back(p); });
        const std::vector<std::uint64_t> expected(std::lower_bound(full.begin(), full.end(), lo),
                                                  std::lower_bound(full.begin(), full.end(), hi));
        CAPTURE(lo);
        CAPTURE(hi);
        REQUIRE(got == expected);
        REQUIRE(seg.count() == expected.size());
    }
}

TEST_CASE("segments at the bottom of the range") {
    const auto base = base_primes_for(50);
    for (std::uint64_t lo = 0; lo < 10; ++lo) {
        for (std::uint64_t hi = lo; hi < 50; ++hi) {
            SieveSegment seg(lo, hi, base);
            for (std::uint64_t k = lo; k < hi; ++k) REQUIRE(seg.is_prime(k) == oracle::trial_division_is_prime(k));
        }
    }
}

TEST_CASE("is_prime exhaustive below 10^5") {
    for (std::uint64_t k = 0; k < 100000; ++k) {
        CAPTURE(k);
        REQUIRE(is_prime(k) == oracle::trial_division_is_prime(k));
    }
    CHECK(is_prime(631));
    CHECK(!is_prime(1));
    CHECK(is_prime(1000000007));
    CHECK(!is_prime(1000000007ull * 3));
    CHECK(is_prime(1000000000039ull));
    CHECK_THROWS_AS(is_prime(18446744073709551557ull), std::overflow_error);
}

TEST_CASE("next_prime_after") {
    CHECK(next_prime_after(0) == 2);
    CHECK(next_prime_after(1) == 2);
    CHECK(next_prime_after(2) == 3);
    CHECK(next_prime_after(89) == 97);
    CHECK(next_prime_after(505) == 509);
    CHECK(next_prime_after(1000000) == 1000003);

    std::mt19937_64 rng(29);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t k = rng() >> (20 + rng() % 40);
        const auto p = next_prime_after(k);
        CAPTURE(k);
        REQUIRE(p > k);
        REQUIRE(oracle::trial_division_is_prime(p));
        for (std::uint64_t j = k + 1; j < p; ++j) REQUIRE(!is_prime(j));
    }
}

TEST_CASE("stream cursor advances monotonically") {
    SieveOptions opts;
    opts.segment_bytes = 16;
    auto stream = primes_up_to(5000, opts);
    std::uint64_t last = 0;
    std::uint64_t cursor = 0;
    while (auto p = stream.next()) {
        REQUIRE(*p > last);
        REQUIRE(stream.cursor() >= cursor);
        last = *p;
        cursor = stream.cursor();
    }
    CHECK(last == 4999);
    CHECK(!stream.next());
}

TEST_CASE("segment ranges tile the interval") {
    SieveOptions opts;
    opts.segment_bytes = 64;
    const auto ranges = segment_ranges(17, 100000, opts);
    REQUIRE(!ranges.empty());
    CHECK(ranges.front().first == 17);
    CHECK(ranges.back().second == 100000);
    for (std::size_t i = 1; i < ranges.size(); ++i) CHECK(ranges[i].first == ranges[i - 1].second);
}

TEST_CASE("isqrt") {
    for (std::uint64_t k = 0; k < 100000; ++k) {
        const auto r = isqrt(k);
        REQUIRE(r * r <= k);
        REQUIRE((r + 1) * (r + 1) > k);
    }
    CHECK(isqrt(~0ull) == 4294967295ull);
}

}
