#pragma once

#include <cstdint>
#include <vector>

namespace qrdw {

// Upper bound accepted by the plain sieve before it refuses to allocate.
inline constexpr std::uint64_t kDefaultSieveBound = 100'000'000;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin over the full 64-bit range (fixed witness set,
// no probabilistic error).
bool is_prime(std::uint64_t n);

// All primes p <= x with p == 1 (mod 4), ascending. Throws BudgetError when x
// exceeds the sieve bound.
std::vector<std::uint64_t> primes_1_mod_4_up_to(std::uint64_t x,
                                                std::uint64_t sieve_bound = kDefaultSieveBound);

// Legendre symbol (a/p) in {+1,-1} by Euler's criterion.
// Requires p an odd prime and p not dividing a; DomainError otherwise.
int legendre(std::int64_t a, std::uint64_t p);

namespace detail {
// Euler's criterion without the primality re-check, for callers whose p is
// already known prime (sieve output, PrimeSet members) and coprime to a.
int legendre_prevalidated(std::uint64_t a, std::uint64_t p);
} // namespace detail

// Jacobi symbol (a/n) in {+1,-1} by the binary reciprocity algorithm, kept
// independent of legendre() so the two cross-check each other.
// Requires n odd positive and gcd(a,n) = 1; DomainError otherwise.
int jacobi(std::int64_t a, std::uint64_t n);

} // namespace qrdw
