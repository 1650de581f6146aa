#include "qrdw/dw_invariant.hpp"

#include <string>

#include "qrdw/errors.hpp"

namespace qrdw {

HomElement::HomElement(int rank, std::uint64_t c_bits) : rank_(rank), c_(c_bits) {
    if (rank < 1 || rank > 63) {
        throw DomainError("hom element rank must be in 1..63");
    }
    if (c_bits & 1) {
        throw DomainError("hom element parametrization requires c_1 = 0");
    }
    if (rank < 64 && (c_bits >> rank) != 0) {
        throw DomainError("hom element has bits beyond its rank");
    }
}

HomElement HomElement::from_index(int rank, std::uint64_t index) {
    return HomElement(rank, index << 1);
}

std::uint64_t HomElement::count(int rank) {
    if (rank < 1 || rank > 63) {
        throw DomainError("hom element rank must be in 1..63");
    }
    return std::uint64_t{1} << (rank - 1);
}

int HomElement::c(int i) const {
    if (i < 1 || i > rank_) {
        throw std::out_of_range("component " + std::to_string(i) + " outside 1.." +
                                std::to_string(rank_));
    }
    return static_cast<int>(c_ >> (i - 1) & 1);
}

HomElement HomElement::operator+(const HomElement& other) const {
    if (other.rank_ != rank_) {
        throw DimensionError("hom element ranks differ");
    }
    return HomElement(rank_, c_ ^ other.c_);
}

int phi_character(const SymbolMatrix& symbols, const HomElement& rho) {
    if (rho.rank() != symbols.size()) {
        throw DimensionError("hom element rank " + std::to_string(rho.rank()) +
                             " does not match prime set size " + std::to_string(symbols.size()));
    }
    const int r = symbols.size();
    int value = 1;
    for (int i = 1; i <= r; ++i) {
        for (int j = i + 1; j <= r; ++j) {
            if (rho.rho_b(i, j) != 0) {
                value *= symbols.at(i, j);
            }
        }
    }
    return value;
}

int phi_character(const PrimeSet& s, const HomElement& rho) {
    return phi_character(SymbolMatrix(s), rho);
}

DyadicValue hirano_sum(const PrimeSet& s, int hom_limit) {
    const int r = s.size();
    if (hom_limit < 1 || hom_limit > 62) {
        throw DomainError("hom limit must be in 1..62");
    }
    if (r > hom_limit) {
        throw LimitError("character sum over 2^" + std::to_string(r - 1) +
                         " homomorphisms exceeds the limit r <= " + std::to_string(hom_limit));
    }
    const SymbolMatrix symbols(s);
    std::int64_t sum = 0;
    const std::uint64_t total = HomElement::count(r);
    for (std::uint64_t index = 0; index < total; ++index) {
        sum += phi_character(symbols, HomElement::from_index(r, index));
    }
    return DyadicValue::from_ratio_pow2(sum, 1);
}

DyadicValue product_indicator(const PrimeSet& s) {
    const int r = s.size();
    const SymbolMatrix symbols(s);
    // prod_j (1 + prod_{i != j} (p_i/p_j)): each factor is 0 or 2, so the
    // whole product is 0 or 2^r; anything else means a symbol bug.
    int zero_factors = 0;
    for (int j = 1; j <= r; ++j) {
        int inner = 1;
        for (int i = 1; i <= r; ++i) {
            if (i != j) {
                inner *= symbols.at(i, j);
            }
        }
        if (inner == -1) {
            ++zero_factors;
        } else if (inner != 1) {
            throw InternalError("indicator product: inner symbol product is not a unit");
        }
    }
    if (zero_factors > 0) {
        return DyadicValue::zero();
    }
    // product = 2^r; Z_k = 2^r / 4
    return DyadicValue::pow2(r - 2);
}

DyadicValue invariant_fast(const PrimeSet& s) {
    const Graph g = build_qr_graph(s);
    return g.is_even() ? DyadicValue::pow2(s.size() - 2) : DyadicValue::zero();
}

} // namespace qrdw
