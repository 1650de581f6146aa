#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qrdw/dw_invariant.hpp"
#include "qrdw/dyadic.hpp"
#include "qrdw/graph.hpp"

namespace qrdw {

// Mod-2 linking numbers of an r-component link: symmetric 0/1 matrix with
// zero diagonal.
class LinkingMatrix {
  public:
    explicit LinkingMatrix(int r); // zero matrix

    // ValidationError if not square 0/1, symmetric, zero-diagonal
    static LinkingMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int size() const { return r_; }
    int at(int i, int j) const;          // 1-based
    void set_link(int i, int j, int value); // sets both mirror entries; i != j

    bool operator==(const LinkingMatrix&) const = default;

  private:
    int r_;
    std::vector<std::uint8_t> cells_;
};

// File format: first line r, then r lines of r space-separated values in
// {0,1}. Symmetry and zero diagonal are enforced.
LinkingMatrix read_linking_matrix(std::istream& in);
LinkingMatrix load_linking_matrix(const std::string& path);

// Linking graph D_L: edge {i,j} iff lk(K_i,K_j) is odd.
Graph build_linking_graph(const LinkingMatrix& m);

// Z_M of the double cover of S^3 branched over the link: 2^(r-2) if D_L is
// even, else 0.
DyadicValue link_invariant_fast(const LinkingMatrix& m);

// Z_M = (1/2) * sum over rho of (-1)^{sum_{i<j} rho(b_ij) lk(K_i,K_j)}, the
// same rho-enumeration as hirano_sum with (-1)^lk in place of the Legendre
// symbol.
DyadicValue link_hirano_sum(const LinkingMatrix& m, int hom_limit = kDefaultHomLimit);

} // namespace qrdw
