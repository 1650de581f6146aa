#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "qrdw/errors.hpp"
#include "qrdw/number_theory.hpp"

using namespace qrdw;

namespace {

// trial-division oracle, independent of the Miller-Rabin path
bool naive_is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

// quadratic-residue oracle by exhaustive square search
int naive_legendre(std::uint64_t a, std::uint64_t p) {
    a %= p;
    for (std::uint64_t x = 1; x < p; ++x) {
        if (x * x % p == a) {
            return 1;
        }
    }
    return -1;
}

} // namespace

TEST_SUITE("number_theory") {

    TEST_CASE("is_prime on small and named values") {
        CHECK(is_prime(2));
        CHECK_FALSE(is_prime(1));
        CHECK_FALSE(is_prime(0));
        // 391645 = 5 * 29 * 37 * 73
        CHECK(391645 == 5ULL * 29 * 37 * 73);
        CHECK_FALSE(naive_is_prime(391645));
        CHECK_FALSE(is_prime(391645));
    }

    TEST_CASE("is_prime agrees with trial division below 20000") {
        for (std::uint64_t n = 0; n < 20000; ++n) {
            CAPTURE(n);
            REQUIRE(is_prime(n) == naive_is_prime(n));
        }
    }

    TEST_CASE("is_prime at the top of the 64-bit range") {
        CHECK(is_prime(18446744073709551557ULL)); // largest prime below 2^64
        CHECK_FALSE(is_prime(18446744073709551615ULL));
        CHECK(is_prime(2305843009213693951ULL)); // 2^61 - 1
        CHECK_FALSE(is_prime(2305843009213693951ULL * 2 + 1));
    }

    TEST_CASE("primes_1_mod_4_up_to small pools") {
        CHECK(primes_1_mod_4_up_to(30) == std::vector<std::uint64_t>{5, 13, 17, 29});
        CHECK(primes_1_mod_4_up_to(4).empty());
        CHECK(primes_1_mod_4_up_to(0).empty());

        const auto pool = primes_1_mod_4_up_to(150);
        CHECK(pool.size() == 16);
        CHECK(pool.back() == 149);
    }

    TEST_CASE("primes_1_mod_4_up_to matches brute force and is strictly increasing") {
        std::vector<std::uint64_t> expected;
        for (std::uint64_t n = 2; n <= 2000; ++n) {
            if (naive_is_prime(n) && n % 4 == 1) {
                expected.push_back(n);
            }
        }
        const auto pool = primes_1_mod_4_up_to(2000);
        CHECK(pool == expected);
        for (std::size_t k = 0; k < pool.size(); ++k) {
            REQUIRE(is_prime(pool[k]));
            if (k > 0) {
                REQUIRE(pool[k - 1] < pool[k]);
            }
        }
    }

    TEST_CASE("primes_1_mod_4_up_to rejects over-budget bounds") {
        CHECK_THROWS_AS(primes_1_mod_4_up_to(1000, 100), BudgetError);
    }

    TEST_CASE("legendre pins the worked symbol values") {
        CHECK(legendre(5, 29) == 1);
        CHECK(legendre(37, 73) == 1);
        CHECK(legendre(5, 37) == -1);
        CHECK(legendre(5, 73) == -1);
        CHECK(legendre(29, 37) == -1);
        CHECK(legendre(29, 73) == -1);
        CHECK(legendre(4, 13) == 1); // perfect square
    }

    TEST_CASE("legendre agrees with the square-search oracle for p <= 200") {
        for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 97ULL, 101ULL, 193ULL,
                                197ULL, 199ULL}) {
            for (std::uint64_t a = 1; a < p; ++a) {
                CAPTURE(a);
                CAPTURE(p);
                REQUIRE(legendre(static_cast<std::int64_t>(a), p) == naive_legendre(a, p));
            }
        }
    }

    TEST_CASE("legendre matches Euler's criterion for every odd prime p <= 200") {
        for (std::uint64_t p = 3; p <= 200; p += 2) {
            if (!is_prime(p)) {
                continue;
            }
            for (std::uint64_t a = 1; a < p; ++a) {
                const std::uint64_t euler = pow_mod(a, (p - 1) / 2, p);
                const int expected = euler == 1 ? 1 : -1;
                REQUIRE(legendre(static_cast<std::int64_t>(a), p) == expected);
            }
        }
    }

    TEST_CASE("legendre rejects bad inputs") {
        CHECK_THROWS_AS(legendre(10, 5), DomainError);   // p | a
        CHECK_THROWS_AS(legendre(3, 15), DomainError);   // composite
        CHECK_THROWS_AS(legendre(3, 2), DomainError);    // even prime
        CHECK_THROWS_AS(legendre(-29, 29), DomainError); // p | a, negative
    }

    TEST_CASE("legendre handles negative first arguments") {
        // (-1/p) = +1 iff p == 1 (mod 4)
        CHECK(legendre(-1, 13) == 1);
        CHECK(legendre(-1, 7) == -1);
        CHECK(legendre(-4, 13) == 1);
    }

    TEST_CASE("jacobi basics") {
        CHECK(jacobi(1, 15) == 1);
        CHECK(jacobi(1, 1) == 1);
        CHECK(jacobi(13, 5) == -1);
        CHECK(jacobi(17, 5) == -1);
        CHECK(jacobi(13 * 17, 5) == 1); // multiplicativity instance
    }

    TEST_CASE("jacobi equals legendre for prime moduli") {
        for (std::uint64_t p : {5ULL, 13ULL, 17ULL}) {
            for (std::uint64_t a = 1; a < p; ++a) {
                REQUIRE(jacobi(static_cast<std::int64_t>(a), p) ==
                        legendre(static_cast<std::int64_t>(a), p));
            }
        }
    }

    TEST_CASE("jacobi rejects bad inputs") {
        CHECK_THROWS_AS(jacobi(2, 4), DomainError);  // even modulus
        CHECK_THROWS_AS(jacobi(5, 0), DomainError);  // nonpositive modulus
        CHECK_THROWS_AS(jacobi(3, 15), DomainError); // shared factor
        CHECK_THROWS_AS(jacobi(0, 15), DomainError); // gcd = 15
    }

    TEST_CASE("jacobi is multiplicative in both arguments (seeded random)") {
        std::mt19937_64 rng(20250809);
        int checked = 0;
        while (checked < 10000) {
            const std::uint64_t n = (rng() % (1u << 20)) | 1;
            const std::uint64_t a = 1 + rng() % (1u << 20);
            const std::uint64_t b = 1 + rng() % (1u << 20);
            if (std::gcd(a, n) != 1 || std::gcd(b, n) != 1) {
                continue;
            }
            const std::int64_t sa = static_cast<std::int64_t>(a);
            const std::int64_t sb = static_cast<std::int64_t>(b);
            REQUIRE(jacobi(sa * sb, n) == jacobi(sa, n) * jacobi(sb, n));
            REQUIRE(jacobi(sa % static_cast<std::int64_t>(n), n) == jacobi(sa, n));
            ++checked;
        }
    }

    TEST_CASE("jacobi is multiplicative in the modulus (seeded random)") {
        std::mt19937_64 rng(420);
        int checked = 0;
        while (checked < 10000) {
            const std::uint64_t m = (rng() % (1u << 16)) | 1;
            const std::uint64_t n = (rng() % (1u << 16)) | 1;
            const std::uint64_t a = 1 + rng() % (1u << 16);
            if (std::gcd(a, m * n) != 1) {
                continue;
            }
            const std::int64_t sa = static_cast<std::int64_t>(a);
            REQUIRE(jacobi(sa, m * n) == jacobi(sa, m) * jacobi(sa, n));
            ++checked;
        }
    }

    TEST_CASE("quadratic reciprocity symmetry for p, q == 1 (mod 4) up to 1000") {
        const auto pool = primes_1_mod_4_up_to(1000);
        for (std::size_t i = 0; i < pool.size(); ++i) {
            for (std::size_t j = i + 1; j < pool.size(); ++j) {
                REQUIRE(legendre(static_cast<std::int64_t>(pool[i]), pool[j]) ==
                        legendre(static_cast<std::int64_t>(pool[j]), pool[i]));
            }
        }
    }
}
