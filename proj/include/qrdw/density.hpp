#pragma once

#include <cstdint>
#include <iosfwd>

#include "qrdw/dyadic.hpp"

namespace qrdw {

// Subsets (or ordered tuples, for the character sums) an exhaustive scan may
// touch before refusing.
inline constexpr std::uint64_t kDefaultSubsetBudget = 100'000'000;

enum class SampleMode { exhaustive, monte_carlo };

// One density measurement: the fraction of r-subsets of the primes == 1
// (mod 4) up to x whose quadratic residue graph is even, against the limit
// density 2^(1-r).
struct DensityReport {
    int r = 0;
    std::uint64_t x = 0;
    SampleMode mode = SampleMode::exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    double theoretical = 0.0; // 2^(1-r)
    double std_error = 0.0;   // binomial; monte_carlo only
    std::uint64_t seed = 0;   // monte_carlo only
    std::uint64_t pi41_x = 0; // primes in the pool
    int workers = 1;

    double empirical() const {
        return samples == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(samples);
    }
};

// Walks every r-subset of the prime pool up to x (colexicographic order) and
// counts the even quadratic residue graphs. BudgetError (naming the required
// subset count) when C(pi41(x), r) exceeds the budget.
DensityReport exact_density_scan(int r, std::uint64_t x,
                                 std::uint64_t subset_budget = kDefaultSubsetBudget,
                                 int threads = 1);

// Seeded estimator of the same fraction: `samples` uniform r-subsets drawn
// without replacement within each draw (partial Fisher-Yates), independent
// across draws. Identical (seed, r, x, samples, threads) reproduce the
// report bit for bit. DomainError if the pool is smaller than r or samples
// is zero.
DensityReport monte_carlo_density(int r, std::uint64_t x, std::uint64_t samples,
                                  std::uint64_t seed, int threads = 1);

// #S_r(x) by the indicator product
//
//   #S_r(x) = 2^-r * sum over r-subsets of prod_j (1 + prod_{i != j} (p_i/p_j)),
//
// an independent route to exact_density_scan(r,x).hits.
std::uint64_t indicator_count(int r, std::uint64_t x,
                              std::uint64_t subset_budget = kDefaultSubsetBudget, int threads = 1);

// Character-sum error term over ordered tuples of distinct pool primes:
//
//   E_s(x) = sum over (p_1,...,p_r) of ( p_{s+1}...p_r / p_1...p_s ).
//
// Computed over unordered subsets via the r!-to-1 symmetric-group
// correspondence: each subset contributes s!(r-s)! times the sum over its
// size-s denominator cuts. Requires 0 < s < r; BudgetError when #Q_r(x)
// (the ordered-tuple count) exceeds the budget.
long long character_sum_es(int r, int s, std::uint64_t x,
                           std::uint64_t tuple_budget = kDefaultSubsetBudget);

// CSV: one header plus one row per report; empirical/theoretical/std_error
// carry 10 significant digits; std_error and seed are blank for exhaustive
// rows.
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const DensityReport& report);

} // namespace qrdw
