#include "qrdw/density.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <thread>
#include <vector>

#include "qrdw/combinatorics.hpp"
#include "qrdw/errors.hpp"
#include "qrdw/number_theory.hpp"

namespace qrdw {

namespace {

// Pairwise Legendre symbols over the prime pool. Dense precompute when the
// triangle fits the cache cap (covers every budgeted exhaustive scan); above
// that only Monte Carlo sampling arrives here, and it evaluates on the fly.
class SymbolTable {
  public:
    static constexpr std::size_t kDenseCap = std::size_t{1} << 26; // one byte per pair

    SymbolTable(const std::vector<std::uint64_t>& pool, int threads) : pool_(pool) {
        const std::size_t n = pool.size();
        const std::size_t pairs = n * (n - 1) / 2;
        dense_ = pairs <= kDenseCap;
        if (!dense_) {
            return;
        }
        triangle_.resize(pairs);
        if (n < 2) {
            return;
        }
        const int workers = std::max(1, threads);
        std::atomic<std::size_t> next_row{0};
        auto fill_rows = [&] {
            for (;;) {
                const std::size_t i = next_row.fetch_add(1);
                if (i >= n - 1) {
                    return;
                }
                std::int8_t* row = triangle_.data() + row_offset(i);
                for (std::size_t j = i + 1; j < n; ++j) {
                    row[j - i - 1] = static_cast<std::int8_t>(
                        detail::legendre_prevalidated(pool_[i], pool_[j]));
                }
            }
        };
        if (workers == 1) {
            fill_rows();
        } else {
            std::vector<std::thread> team;
            team.reserve(workers);
            for (int w = 0; w < workers; ++w) {
                team.emplace_back(fill_rows);
            }
            for (auto& t : team) {
                t.join();
            }
        }
    }

    // pool indices, 0-based, i != j
    int sym(std::size_t i, std::size_t j) const {
        if (i > j) {
            std::swap(i, j);
        }
        if (dense_) {
            return triangle_[row_offset(i) + (j - i - 1)];
        }
        return detail::legendre_prevalidated(pool_[i], pool_[j]);
    }

  private:
    std::size_t row_offset(std::size_t i) const {
        const std::size_t n = pool_.size();
        return i * n - i * (i + 1) / 2; // start of row i's strict upper part
    }

    const std::vector<std::uint64_t>& pool_;
    bool dense_ = false;
    std::vector<std::int8_t> triangle_;
};

bool subset_is_even(const std::vector<int>& idx, const SymbolTable& table) {
    const int r = static_cast<int>(idx.size());
    std::uint64_t parity = 0; // bit a = current degree parity of idx[a]
    for (int a = 0; a < r; ++a) {
        for (int b = a + 1; b < r; ++b) {
            if (table.sym(static_cast<std::size_t>(idx[a]), static_cast<std::size_t>(idx[b])) < 0) {
                parity ^= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
            }
        }
    }
    return parity == 0;
}

// prod_j (1 + prod_{i != j} s_ij) for one subset: 0 or 2^r.
std::uint64_t subset_indicator_product(const std::vector<int>& idx, const SymbolTable& table) {
    const int r = static_cast<int>(idx.size());
    std::uint64_t product = 1;
    for (int j = 0; j < r; ++j) {
        int inner = 1;
        for (int i = 0; i < r; ++i) {
            if (i != j) {
                inner *= table.sym(static_cast<std::size_t>(idx[i]),
                                   static_cast<std::size_t>(idx[j]));
            }
        }
        if (inner == -1) {
            return 0;
        }
        if (inner != 1) {
            throw InternalError("indicator scan: inner symbol product is not a unit");
        }
        product *= 2;
    }
    return product;
}

std::uint64_t checked_subset_count(std::size_t pool_size, int r, std::uint64_t budget,
                                   const char* what) {
    const std::uint64_t subsets = binomial_clamped(pool_size, static_cast<std::uint64_t>(r));
    if (subsets > budget) {
        throw BudgetError(std::string(what) + " needs " + std::to_string(subsets) +
                          " subsets, over the budget of " + std::to_string(budget));
    }
    return subsets;
}

// Walks every r-subset of [0,n), grouped by largest element so workers can
// claim groups off a shared counter; colex within each group. The per-subset
// accumulator must be associative integer addition for determinism.
template <typename PerSubset>
std::uint64_t scan_subsets(std::size_t n, int r, int threads, PerSubset per_subset) {
    const int workers = std::max(1, threads);
    std::atomic<std::uint64_t> next_top{static_cast<std::uint64_t>(r) - 1};
    std::vector<std::uint64_t> worker_totals(static_cast<std::size_t>(workers), 0);

    auto run = [&](int w) {
        std::uint64_t total = 0;
        std::vector<int> idx(static_cast<std::size_t>(r));
        for (;;) {
            const std::uint64_t top = next_top.fetch_add(1);
            if (top >= n) {
                break;
            }
            idx.back() = static_cast<int>(top);
            if (r == 1) {
                total += per_subset(idx);
                continue;
            }
            for_each_combination(static_cast<int>(top), r - 1, [&](const std::vector<int>& rest) {
                std::copy(rest.begin(), rest.end(), idx.begin());
                total += per_subset(idx);
            });
        }
        worker_totals[static_cast<std::size_t>(w)] = total;
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> team;
        team.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            team.emplace_back(run, w);
        }
        for (auto& t : team) {
            t.join();
        }
    }
    std::uint64_t total = 0;
    for (std::uint64_t part : worker_totals) {
        total += part;
    }
    return total;
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Unbiased bounded draw by rejection; mt19937_64 output is fully specified,
// so results are identical across platforms (std distributions are not).
std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t v = rng();
        if (v >= threshold) {
            return v % n;
        }
    }
}

// First r cells of a virtual Fisher-Yates shuffle of [0,n); the handful of
// displaced cells live in a linear-scanned override list.
void draw_subset(std::mt19937_64& rng, std::uint64_t n, int r, std::vector<int>& out,
                 std::vector<std::pair<std::uint64_t, std::uint64_t>>& overrides) {
    out.clear();
    overrides.clear();
    auto value_at = [&](std::uint64_t pos) {
        for (const auto& [p, v] : overrides) {
            if (p == pos) {
                return v;
            }
        }
        return pos;
    };
    auto set_value = [&](std::uint64_t pos, std::uint64_t v) {
        for (auto& [p, existing] : overrides) {
            if (p == pos) {
                existing = v;
                return;
            }
        }
        overrides.emplace_back(pos, v);
    };
    for (int t = 0; t < r; ++t) {
        const std::uint64_t pick = t + bounded_rand(rng, n - t);
        const std::uint64_t vt = value_at(static_cast<std::uint64_t>(t));
        const std::uint64_t vp = value_at(pick);
        set_value(static_cast<std::uint64_t>(t), vp);
        set_value(pick, vt);
        out.push_back(static_cast<int>(vp));
    }
}

} // namespace

DensityReport exact_density_scan(int r, std::uint64_t x, std::uint64_t subset_budget,
                                 int threads) {
    if (r < 1) {
        throw DomainError("subset size must be positive");
    }
    if (r > 64) {
        throw LimitError("density scans support r <= 64");
    }
    const std::vector<std::uint64_t> pool = primes_1_mod_4_up_to(x);
    const std::uint64_t subsets =
        checked_subset_count(pool.size(), r, subset_budget, "exhaustive density scan");

    DensityReport report;
    report.r = r;
    report.x = x;
    report.mode = SampleMode::exhaustive;
    report.samples = subsets;
    report.theoretical = std::ldexp(1.0, 1 - r);
    report.pi41_x = pool.size();
    report.workers = std::max(1, threads);

    if (subsets == 0) {
        return report;
    }
    const SymbolTable table(pool, threads);
    report.hits = scan_subsets(pool.size(), r, threads, [&](const std::vector<int>& idx) {
        return subset_is_even(idx, table) ? std::uint64_t{1} : std::uint64_t{0};
    });
    return report;
}

DensityReport monte_carlo_density(int r, std::uint64_t x, std::uint64_t samples,
                                  std::uint64_t seed, int threads) {
    if (r < 1) {
        throw DomainError("subset size must be positive");
    }
    if (r > 64) {
        throw LimitError("density scans support r <= 64");
    }
    if (samples == 0) {
        throw DomainError("sample count must be positive");
    }
    const std::vector<std::uint64_t> pool = primes_1_mod_4_up_to(x);
    if (pool.size() < static_cast<std::size_t>(r)) {
        throw DomainError("prime pool up to " + std::to_string(x) + " holds only " +
                          std::to_string(pool.size()) + " primes, need " + std::to_string(r));
    }

    const int workers = std::max(1, threads);
    const SymbolTable table(pool, threads);

    std::vector<std::uint64_t> worker_hits(static_cast<std::size_t>(workers), 0);
    auto run = [&](int w) {
        const std::uint64_t leftovers = samples % workers;
        const std::uint64_t share =
            samples / workers + (static_cast<std::uint64_t>(w) < leftovers ? 1 : 0);
        std::mt19937_64 rng(splitmix64(seed + static_cast<std::uint64_t>(w)));
        std::vector<int> idx;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> overrides;
        std::uint64_t hits = 0;
        for (std::uint64_t k = 0; k < share; ++k) {
            draw_subset(rng, pool.size(), r, idx, overrides);
            if (subset_is_even(idx, table)) {
                ++hits;
            }
        }
        worker_hits[static_cast<std::size_t>(w)] = hits;
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> team;
        team.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            team.emplace_back(run, w);
        }
        for (auto& t : team) {
            t.join();
        }
    }

    DensityReport report;
    report.r = r;
    report.x = x;
    report.mode = SampleMode::monte_carlo;
    report.samples = samples;
    for (std::uint64_t part : worker_hits) {
        report.hits += part;
    }
    report.theoretical = std::ldexp(1.0, 1 - r);
    report.seed = seed;
    report.pi41_x = pool.size();
    report.workers = workers;
    const double p = report.empirical();
    report.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return report;
}

std::uint64_t indicator_count(int r, std::uint64_t x, std::uint64_t subset_budget, int threads) {
    if (r < 1) {
        throw DomainError("subset size must be positive");
    }
    const std::vector<std::uint64_t> pool = primes_1_mod_4_up_to(x);
    const std::uint64_t subsets =
        checked_subset_count(pool.size(), r, subset_budget, "indicator count");
    if (subsets == 0) {
        return 0;
    }
    // the running sum of 2^r-valued products must stay in 64 bits
    if (r >= 63 || subsets > (std::uint64_t{1} << (63 - r))) {
        throw LimitError("indicator count: subset sum would overflow at r = " +
                         std::to_string(r));
    }
    const SymbolTable table(pool, threads);
    const std::uint64_t total = scan_subsets(
        pool.size(), r, threads,
        [&](const std::vector<int>& idx) { return subset_indicator_product(idx, table); });
    const std::uint64_t unit = std::uint64_t{1} << r;
    if (total % unit != 0) {
        throw InternalError("indicator count: subset products do not sum to a multiple of 2^r");
    }
    return total / unit;
}

long long character_sum_es(int r, int s, std::uint64_t x, std::uint64_t tuple_budget) {
    if (r < 2 || s < 1 || s >= r) {
        throw DomainError("character sum requires 0 < s < r");
    }
    if (r > 30) {
        throw LimitError("character sum supports r <= 30"); // cut enumeration mask
    }
    const std::vector<std::uint64_t> pool = primes_1_mod_4_up_to(x);
    const std::size_t n = pool.size();
    if (n < static_cast<std::size_t>(r)) {
        return 0; // empty sum
    }
    // |E_s| <= #Q_r(x), so the budget also keeps the result in range
    const std::uint64_t effective_budget =
        std::min<std::uint64_t>(tuple_budget, std::uint64_t{1} << 62);
    unsigned __int128 tuples = 1;
    for (int k = 0; k < r; ++k) {
        tuples *= n - static_cast<std::size_t>(k);
        if (tuples > effective_budget) {
            throw BudgetError("character sum needs more than " +
                              std::to_string(effective_budget) + " ordered tuples");
        }
    }

    const SymbolTable table(pool, 1);
    long long multiplicity = 1; // s! (r-s)!: orderings within each side of the cut
    for (int k = 2; k <= s; ++k) {
        multiplicity *= k;
    }
    for (int k = 2; k <= r - s; ++k) {
        multiplicity *= k;
    }

    long long subset_sum = 0;
    for_each_combination(static_cast<int>(n), r, [&](const std::vector<int>& idx) {
        // every size-s denominator cut of this subset; the Jacobi symbol of
        // the cut splits into pairwise Legendre symbols across it
        for (unsigned cut = 0; cut < (1u << r); ++cut) {
            if (std::popcount(cut) != s) {
                continue;
            }
            int term = 1;
            for (int a = 0; a < r; ++a) {
                if (!(cut >> a & 1)) {
                    continue;
                }
                for (int b = 0; b < r; ++b) {
                    if (cut >> b & 1) {
                        continue;
                    }
                    term *= table.sym(static_cast<std::size_t>(idx[a]),
                                      static_cast<std::size_t>(idx[b]));
                }
            }
            subset_sum += term;
        }
    });
    return multiplicity * subset_sum;
}

void write_csv_header(std::ostream& out) {
    out << "r,x,mode,samples,hits,empirical,theoretical,std_error,seed,pi41_x\n";
}

void write_csv_row(std::ostream& out, const DensityReport& report) {
    const bool mc = report.mode == SampleMode::monte_carlo;
    char buf[64];
    out << report.r << ',' << report.x << ',' << (mc ? "monte_carlo" : "exhaustive") << ','
        << report.samples << ',' << report.hits << ',';
    std::snprintf(buf, sizeof buf, "%.10g", report.empirical());
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.10g", report.theoretical);
    out << buf << ',';
    if (mc) {
        std::snprintf(buf, sizeof buf, "%.10g", report.std_error);
        out << buf;
    }
    out << ',';
    if (mc) {
        out << report.seed;
    }
    out << ',' << report.pi41_x << '\n';
}

} // namespace qrdw
