#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qrdw/dyadic.hpp"
#include "qrdw/graph.hpp"

namespace qrdw {

// Largest r the exhaustive bitmask scans will walk by default (2^21 graphs).
inline constexpr int kDefaultEnumerationLimit = 7;

// Exact power of two. The graph-counting closed forms are powers of two for
// every r, so carrying the exponent keeps them exact far past 64 bits.
class Pow2Count {
  public:
    explicit Pow2Count(std::uint64_t exponent) : exponent_(exponent) {}

    std::uint64_t exponent() const { return exponent_; }
    bool fits_uint64() const { return exponent_ < 64; }
    std::uint64_t as_uint64() const; // DomainError if 2^exponent overflows

    std::string to_decimal_string() const;

    bool operator==(const Pow2Count&) const = default;

  private:
    std::uint64_t exponent_;
};

// #G_r = 2^(r(r-1)/2), the number of labeled graphs on {1..r}.
Pow2Count count_all_graphs(std::uint64_t r);

// #C_r = 2^((r-1)(r-2)/2), the number of those whose components are all
// circuits (equivalently, the even graphs).
Pow2Count count_even_graphs(std::uint64_t r);

// #C_r / #G_r = 2^(1-r), exact.
DyadicValue even_graph_ratio(int r);

// Visits every even graph on r vertices in ascending bitmask order.
// LimitError when r exceeds the exhaustive limit.
void for_each_even_graph(int r, const std::function<void(const Graph&)>& visit,
                         int limit = kDefaultEnumerationLimit);

std::vector<Graph> enumerate_even_graphs(int r, int limit = kDefaultEnumerationLimit);

// Adds vertex r joined to every odd vertex of g (a graph on r-1 vertices).
// The parity count forces the result even, and the map is a bijection from
// the graphs on r-1 vertices onto the even graphs on r vertices.
Graph attach_even_vertex(const Graph& g);

} // namespace qrdw
