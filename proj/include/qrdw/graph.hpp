#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qrdw {

// Index of the pair {i,j}, 1 <= i < j <= r, in the fixed order
// (1,2),(1,3),...,(1,r),(2,3),...,(r-1,r). This order is the contract shared
// with the bitmask enumeration.
std::size_t pair_index(int i, int j, int r);
std::size_t pair_count(int r); // r(r-1)/2

// Closed trail covering every edge of one connected component exactly once.
// A single isolated vertex is the length-0 circuit [v].
struct Circuit {
    std::vector<int> vertices; // v_1 .. v_k with v_1 = v_k, or a single vertex

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

// Labeled simple graph on vertex set {1..r}: no self-loops, no duplicate
// edges. The edge set is a bitmask over pair_index order, so two graphs on
// the same vertex count compare equal iff their bitmasks match.
class Graph {
  public:
    explicit Graph(int num_vertices);

    // requires pair_count(num_vertices) <= 64
    static Graph from_bitmask(int num_vertices, std::uint64_t mask);
    static Graph from_edges(int num_vertices, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return num_vertices_; }
    std::size_t num_edges() const { return num_edges_; }

    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;

    int degree(int v) const; // std::out_of_range if v outside 1..r

    // Maximal connected vertex sets, covering {1..r}; parts ordered by their
    // smallest vertex, vertices ascending within each part.
    std::vector<std::vector<int>> connected_components() const;

    // Every vertex has even degree (degree 0 included).
    bool is_even() const;

    // Component i of the result is degree(i) mod 2; equals the sum of the
    // b_ij generators over all edges in (Z/2Z)^r.
    std::vector<std::uint8_t> parity_vector() const;

    // One circuit per connected component, jointly covering every edge
    // exactly once (Hierholzer). Deterministic: each circuit starts at the
    // component's smallest vertex and always extends along the
    // smallest-indexed unused neighbor. Throws NotEvenError naming the
    // smallest odd vertex when the graph is not even.
    std::vector<Circuit> euler_decomposition() const;

    std::vector<std::pair<int, int>> edges() const; // lexicographic

    std::uint64_t bitmask() const; // requires pair_count(r) <= 64

    bool operator==(const Graph&) const = default;

  private:
    void check_vertex(int v) const;

    int num_vertices_ = 0;
    std::size_t num_edges_ = 0;
    std::vector<bool> edge_bits_;
};

// {"r":3,"edges":[[1,2],[1,3],[2,3]]} with edges sorted lexicographically
std::string to_json(const Graph& g);

// Undirected DOT with vertex i pinned at angle 2*pi*(i-1)/r on the unit
// circle, counterclockwise from (1,0). labels must be empty (vertex indices
// are used) or have one entry per vertex.
std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {});

} // namespace qrdw
