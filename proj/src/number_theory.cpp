#include "qrdw/number_theory.hpp"

#include <numeric>
#include <string>

#include "qrdw/errors.hpp"

namespace qrdw {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) {
        return 0;
    }
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

namespace {

// One strong-probable-prime round; n odd, n - 1 = d * 2^s.
bool sprp_round(std::uint64_t n, std::uint64_t d, int s, std::uint64_t witness) {
    witness %= n;
    if (witness == 0) {
        return true;
    }
    std::uint64_t x = pow_mod(witness, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (int round = 1; round < s; ++round) {
        x = mul_mod(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                            31ULL, 37ULL}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sinclair's witness set, deterministic for all n < 2^64
    for (std::uint64_t witness :
         {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        if (!sprp_round(n, d, s, witness)) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> primes_1_mod_4_up_to(std::uint64_t x, std::uint64_t sieve_bound) {
    if (x > sieve_bound) {
        throw BudgetError("sieve bound exceeded: x = " + std::to_string(x) + " > " +
                          std::to_string(sieve_bound));
    }
    std::vector<std::uint64_t> primes;
    if (x < 5) {
        return primes;
    }
    std::vector<bool> composite(x + 1, false);
    for (std::uint64_t i = 2; i * i <= x; ++i) {
        if (!composite[i]) {
            for (std::uint64_t j = i * i; j <= x; j += i) {
                composite[j] = true;
            }
        }
    }
    for (std::uint64_t p = 5; p <= x; p += 4) {
        if (!composite[p]) {
            primes.push_back(p);
        }
    }
    return primes;
}

namespace detail {

int legendre_prevalidated(std::uint64_t a, std::uint64_t p) {
    const std::uint64_t euler = pow_mod(a, (p - 1) / 2, p);
    if (euler == 1) {
        return 1;
    }
    if (euler == p - 1) {
        return -1;
    }
    throw InternalError("legendre: Euler criterion returned a nontrivial residue");
}

} // namespace detail

int legendre(std::int64_t a, std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw DomainError("legendre: " + std::to_string(p) + " is not an odd prime");
    }
    __int128 wide = static_cast<__int128>(a) % static_cast<__int128>(p);
    if (wide < 0) {
        wide += p;
    }
    const std::uint64_t rem = static_cast<std::uint64_t>(wide);
    if (rem == 0) {
        throw DomainError("legendre: " + std::to_string(p) + " divides " + std::to_string(a));
    }
    return detail::legendre_prevalidated(rem, p);
}

int jacobi(std::int64_t a, std::uint64_t n) {
    if (n == 0 || n % 2 == 0) {
        throw DomainError("jacobi: modulus " + std::to_string(n) + " must be odd and positive");
    }
    __int128 wide = static_cast<__int128>(a) % static_cast<__int128>(n);
    if (wide < 0) {
        wide += n;
    }
    std::uint64_t u = static_cast<std::uint64_t>(wide);
    std::uint64_t v = n;
    int result = 1;
    while (u != 0) {
        while ((u & 1) == 0) {
            u >>= 1;
            if (v % 8 == 3 || v % 8 == 5) {
                result = -result;
            }
        }
        std::swap(u, v);
        if (u % 4 == 3 && v % 4 == 3) {
            result = -result;
        }
        u %= v;
    }
    if (v != 1) {
        throw DomainError("jacobi: arguments share the factor gcd = " + std::to_string(v));
    }
    return result;
}

} // namespace qrdw
