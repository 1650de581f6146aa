#include "qrdw/enumeration.hpp"

#include <algorithm>
#include <string>

#include "qrdw/errors.hpp"

namespace qrdw {

std::uint64_t Pow2Count::as_uint64() const {
    if (!fits_uint64()) {
        throw DomainError("2^" + std::to_string(exponent_) + " does not fit in 64 bits");
    }
    return std::uint64_t{1} << exponent_;
}

std::string Pow2Count::to_decimal_string() const {
    // little-endian decimal digits, doubled exponent times
    std::vector<std::uint8_t> digits{1};
    for (std::uint64_t step = 0; step < exponent_; ++step) {
        int carry = 0;
        for (auto& d : digits) {
            const int twice = d * 2 + carry;
            d = static_cast<std::uint8_t>(twice % 10);
            carry = twice / 10;
        }
        if (carry != 0) {
            digits.push_back(static_cast<std::uint8_t>(carry));
        }
    }
    std::string out(digits.size(), '0');
    for (std::size_t k = 0; k < digits.size(); ++k) {
        out[out.size() - 1 - k] = static_cast<char>('0' + digits[k]);
    }
    return out;
}

Pow2Count count_all_graphs(std::uint64_t r) {
    if (r < 1) {
        throw DomainError("vertex count must be positive");
    }
    return Pow2Count(r * (r - 1) / 2);
}

Pow2Count count_even_graphs(std::uint64_t r) {
    if (r < 1) {
        throw DomainError("vertex count must be positive");
    }
    return Pow2Count((r - 1) * (r - 2) / 2);
}

DyadicValue even_graph_ratio(int r) {
    if (r < 1) {
        throw DomainError("vertex count must be positive");
    }
    return DyadicValue::pow2(1 - r);
}

void for_each_even_graph(int r, const std::function<void(const Graph&)>& visit, int limit) {
    if (r < 1) {
        throw DomainError("vertex count must be positive");
    }
    if (r > limit) {
        throw LimitError("exhaustive even-graph scan limited to r <= " + std::to_string(limit) +
                         ", got r = " + std::to_string(r));
    }
    const std::uint64_t masks = std::uint64_t{1} << pair_count(r);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        const Graph g = Graph::from_bitmask(r, mask);
        if (g.is_even()) {
            visit(g);
        }
    }
}

std::vector<Graph> enumerate_even_graphs(int r, int limit) {
    std::vector<Graph> result;
    for_each_even_graph(r, [&](const Graph& g) { result.push_back(g); }, limit);
    return result;
}

Graph attach_even_vertex(const Graph& g) {
    const int r = g.num_vertices() + 1;
    Graph extended(r);
    for (const auto& [i, j] : g.edges()) {
        extended.add_edge(i, j);
    }
    for (int v = 1; v < r; ++v) {
        if (g.degree(v) % 2 != 0) {
            extended.add_edge(v, r);
        }
    }
    return extended;
}

} // namespace qrdw
