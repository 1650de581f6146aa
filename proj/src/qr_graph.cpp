#include "qrdw/qr_graph.hpp"

#include <algorithm>
#include <string>

#include "qrdw/errors.hpp"
#include "qrdw/number_theory.hpp"

namespace qrdw {

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
    if (primes_.empty()) {
        throw ValidationError("prime set must contain at least one prime");
    }
    std::sort(primes_.begin(), primes_.end());
    for (std::size_t k = 0; k < primes_.size(); ++k) {
        const std::uint64_t p = primes_[k];
        if (k > 0 && primes_[k - 1] == p) {
            throw ValidationError("duplicate prime " + std::to_string(p));
        }
        if (p % 4 != 1) {
            throw ValidationError(std::to_string(p) + " is not congruent to 1 mod 4");
        }
        if (!is_prime(p)) {
            throw ValidationError(std::to_string(p) + " is not prime");
        }
    }
}

std::uint64_t PrimeSet::prime(int i) const {
    if (i < 1 || i > size()) {
        throw std::out_of_range("prime index " + std::to_string(i) + " outside 1.." +
                                std::to_string(size()));
    }
    return primes_[static_cast<std::size_t>(i - 1)];
}

SymbolMatrix::SymbolMatrix(const PrimeSet& s) : r_(s.size()) {
    upper_.resize(pair_count(r_));
    for (int i = 1; i <= r_; ++i) {
        for (int j = i + 1; j <= r_; ++j) {
            // distinct validated primes: coprime, so the unchecked path applies
            upper_[pair_index(i, j, r_)] =
                static_cast<std::int8_t>(detail::legendre_prevalidated(s.prime(i), s.prime(j)));
        }
    }
}

int SymbolMatrix::at(int i, int j) const {
    if (i < 1 || j < 1 || i > r_ || j > r_ || i == j) {
        throw std::out_of_range("symbol index (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside the off-diagonal range");
    }
    if (i > j) {
        std::swap(i, j); // symmetric by reciprocity for p == 1 (mod 4)
    }
    return upper_[pair_index(i, j, r_)];
}

Graph build_qr_graph(const SymbolMatrix& symbols) {
    const int r = symbols.size();
    Graph g(r);
    for (int i = 1; i <= r; ++i) {
        for (int j = i + 1; j <= r; ++j) {
            if (symbols.at(i, j) == -1) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

Graph build_qr_graph(const PrimeSet& s) { return build_qr_graph(SymbolMatrix(s)); }

} // namespace qrdw
