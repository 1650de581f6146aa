#pragma once

#include <cstdint>

#include "qrdw/dyadic.hpp"
#include "qrdw/qr_graph.hpp"

namespace qrdw {

// Largest rank the 2^(r-1)-term character sums will brute-force by default.
inline constexpr int kDefaultHomLimit = 24;

// Element of Hom(T, Z/2Z), where T is the even-weight subgroup of (Z/2Z)^r.
// Since b_ij = b_1i + b_1j in T, a homomorphism is determined by its values
// on the b_1j; we parametrize by c = (c_1,...,c_r) over Z/2Z with c_1 = 0,
// under which rho(b_ij) = c_i + c_j mod 2. There are exactly 2^(r-1)
// elements.
class HomElement {
  public:
    HomElement(int rank, std::uint64_t c_bits); // bit k-1 holds c_k; bit 0 must be 0

    static HomElement identity(int rank) { return HomElement(rank, 0); }
    // index in [0, 2^(rank-1)): the (rank-1)-bit counter over c_2..c_r
    static HomElement from_index(int rank, std::uint64_t index);
    static std::uint64_t count(int rank); // 2^(rank-1)

    int rank() const { return rank_; }
    int c(int i) const; // c_i, 1-based
    int rho_b(int i, int j) const { return static_cast<int>((c_ >> (i - 1) ^ c_ >> (j - 1)) & 1); }

    HomElement operator+(const HomElement& other) const; // group law

    bool operator==(const HomElement&) const = default;

  private:
    int rank_;
    std::uint64_t c_;
};

// phi(rho) = prod_{i<j} (p_i/p_j)^{rho(b_ij)} in {+1,-1}; equals
// (-1)^{sum over edges of G(S) of rho(b_ij)}.
int phi_character(const SymbolMatrix& symbols, const HomElement& rho);
int phi_character(const PrimeSet& s, const HomElement& rho); // DimensionError on rank mismatch

// Z_k for k = Q(sqrt(p_1...p_r)) by the character sum
//
//   Z_k = (1/2) * sum over rho in Hom(T,Z/2Z) of prod_{i<j} (p_i/p_j)^{rho(b_ij)}
//
// evaluated term by term over all 2^(r-1) rho. Exact dyadic result (r = 1
// gives 1/2). LimitError when r exceeds hom_limit.
DyadicValue hirano_sum(const PrimeSet& s, int hom_limit = kDefaultHomLimit);

// Z_k via the indicator product prod_j (1 + prod_{i != j} (p_i/p_j)), which
// is 2^r when G(S) is even and 0 otherwise; the result is that product
// divided by 4. InternalError if the product is neither 0 nor 2^r.
DyadicValue product_indicator(const PrimeSet& s);

// Z_k via the graph criterion: 2^(r-2) if every connected component of G(S)
// is a circuit (equivalently G(S) is even), else 0. No brute-force limit;
// this is the scalable path.
DyadicValue invariant_fast(const PrimeSet& s);

} // namespace qrdw
