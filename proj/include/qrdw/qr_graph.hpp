#pragma once

#include <cstdint>
#include <vector>

#include "qrdw/graph.hpp"

namespace qrdw {

// Strictly ascending set p_1 < p_2 < ... < p_r of distinct primes, each
// congruent to 1 mod 4. Construction canonicalizes the order and validates
// every invariant; without p == 1 (mod 4) reciprocity symmetry fails and the
// quadratic residue graph would be ill-defined.
class PrimeSet {
  public:
    explicit PrimeSet(std::vector<std::uint64_t> primes); // ValidationError

    int size() const { return static_cast<int>(primes_.size()); }
    std::uint64_t prime(int i) const; // 1-based
    const std::vector<std::uint64_t>& primes() const { return primes_; }

    bool operator==(const PrimeSet&) const = default;

  private:
    std::vector<std::uint64_t> primes_;
};

// All C(r,2) Legendre symbols (p_i/p_j) of a prime set, computed once and
// shared by every downstream evaluation. Symmetric by quadratic reciprocity.
class SymbolMatrix {
  public:
    explicit SymbolMatrix(const PrimeSet& s);

    int size() const { return r_; }
    int at(int i, int j) const; // +1 or -1; 1-based, i != j

  private:
    int r_;
    std::vector<std::int8_t> upper_;
};

// Quadratic residue graph G(S): vertex i <-> p_i, edge {i,j} iff
// (p_i/p_j) = -1.
Graph build_qr_graph(const PrimeSet& s);
Graph build_qr_graph(const SymbolMatrix& symbols);

} // namespace qrdw
