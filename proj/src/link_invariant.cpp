#include "qrdw/link_invariant.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "qrdw/errors.hpp"

namespace qrdw {

LinkingMatrix::LinkingMatrix(int r) : r_(r) {
    if (r < 1) {
        throw ValidationError("linking matrix needs at least one component");
    }
    cells_.assign(static_cast<std::size_t>(r) * r, 0);
}

LinkingMatrix LinkingMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const int r = static_cast<int>(rows.size());
    LinkingMatrix m(r);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != r) {
            throw ValidationError("linking matrix row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(r));
        }
        for (int j = 0; j < r; ++j) {
            const int v = rows[i][j];
            if (v != 0 && v != 1) {
                throw ValidationError("linking matrix entries must be 0 or 1");
            }
            m.cells_[static_cast<std::size_t>(i) * r + j] = static_cast<std::uint8_t>(v);
        }
    }
    for (int i = 0; i < r; ++i) {
        if (m.cells_[static_cast<std::size_t>(i) * r + i] != 0) {
            throw ValidationError("linking matrix diagonal entry (" + std::to_string(i + 1) + "," +
                                  std::to_string(i + 1) + ") must be 0");
        }
        for (int j = i + 1; j < r; ++j) {
            if (m.cells_[static_cast<std::size_t>(i) * r + j] !=
                m.cells_[static_cast<std::size_t>(j) * r + i]) {
                throw ValidationError("linking matrix is not symmetric at (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
        }
    }
    return m;
}

int LinkingMatrix::at(int i, int j) const {
    if (i < 1 || j < 1 || i > r_ || j > r_) {
        throw std::out_of_range("linking matrix index outside 1.." + std::to_string(r_));
    }
    return cells_[static_cast<std::size_t>(i - 1) * r_ + (j - 1)];
}

void LinkingMatrix::set_link(int i, int j, int value) {
    if (i < 1 || j < 1 || i > r_ || j > r_) {
        throw std::out_of_range("linking matrix index outside 1.." + std::to_string(r_));
    }
    if (i == j) {
        throw ValidationError("linking matrix diagonal is fixed at 0");
    }
    if (value != 0 && value != 1) {
        throw ValidationError("linking matrix entries must be 0 or 1");
    }
    cells_[static_cast<std::size_t>(i - 1) * r_ + (j - 1)] = static_cast<std::uint8_t>(value);
    cells_[static_cast<std::size_t>(j - 1) * r_ + (i - 1)] = static_cast<std::uint8_t>(value);
}

LinkingMatrix read_linking_matrix(std::istream& in) {
    int r = 0;
    if (!(in >> r)) {
        throw ValidationError("linking matrix file: missing component count");
    }
    if (r < 1) {
        throw ValidationError("linking matrix file: component count must be positive");
    }
    std::vector<std::vector<int>> rows(r, std::vector<int>(r));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            if (!(in >> rows[i][j])) {
                throw ValidationError("linking matrix file: truncated at row " +
                                      std::to_string(i + 1));
            }
        }
    }
    return LinkingMatrix::from_rows(rows);
}

LinkingMatrix load_linking_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open linking matrix file: " + path);
    }
    return read_linking_matrix(in);
}

Graph build_linking_graph(const LinkingMatrix& m) {
    const int r = m.size();
    Graph g(r);
    for (int i = 1; i <= r; ++i) {
        for (int j = i + 1; j <= r; ++j) {
            if (m.at(i, j) == 1) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

DyadicValue link_invariant_fast(const LinkingMatrix& m) {
    const Graph d = build_linking_graph(m);
    return d.is_even() ? DyadicValue::pow2(m.size() - 2) : DyadicValue::zero();
}

DyadicValue link_hirano_sum(const LinkingMatrix& m, int hom_limit) {
    const int r = m.size();
    if (hom_limit < 1 || hom_limit > 62) {
        throw DomainError("hom limit must be in 1..62");
    }
    if (r > hom_limit) {
        throw LimitError("character sum over 2^" + std::to_string(r - 1) +
                         " homomorphisms exceeds the limit r <= " + std::to_string(hom_limit));
    }
    std::int64_t sum = 0;
    const std::uint64_t total = HomElement::count(r);
    for (std::uint64_t index = 0; index < total; ++index) {
        const HomElement rho = HomElement::from_index(r, index);
        int exponent = 0;
        for (int i = 1; i <= r; ++i) {
            for (int j = i + 1; j <= r; ++j) {
                exponent ^= rho.rho_b(i, j) & m.at(i, j);
            }
        }
        sum += exponent == 0 ? 1 : -1;
    }
    return DyadicValue::from_ratio_pow2(sum, 1);
}

} // namespace qrdw
