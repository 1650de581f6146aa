#include "qrdw/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "qrdw/errors.hpp"

namespace qrdw {

std::size_t pair_count(int r) {
    return static_cast<std::size_t>(r) * (static_cast<std::size_t>(r) - 1) / 2;
}

std::size_t pair_index(int i, int j, int r) {
    // rows of the upper triangle laid out consecutively
    const std::size_t row_start =
        static_cast<std::size_t>(i - 1) * r - static_cast<std::size_t>(i) * (i - 1) / 2;
    return row_start + static_cast<std::size_t>(j - i - 1);
}

Graph::Graph(int num_vertices) : num_vertices_(num_vertices) {
    if (num_vertices < 1) {
        throw ValidationError("graph needs at least one vertex");
    }
    edge_bits_.assign(pair_count(num_vertices), false);
}

Graph Graph::from_bitmask(int num_vertices, std::uint64_t mask) {
    Graph g(num_vertices);
    const std::size_t bits = pair_count(num_vertices);
    if (bits > 64) {
        throw DomainError("bitmask construction supports at most 64 vertex pairs");
    }
    if (bits < 64 && (mask >> bits) != 0) {
        throw DomainError("bitmask has bits beyond the pair range");
    }
    for (std::size_t k = 0; k < bits; ++k) {
        if (mask >> k & 1) {
            g.edge_bits_[k] = true;
            ++g.num_edges_;
        }
    }
    return g;
}

Graph Graph::from_edges(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
    Graph g(num_vertices);
    for (const auto& [i, j] : edges) {
        g.add_edge(i, j);
    }
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > num_vertices_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." +
                                std::to_string(num_vertices_));
    }
}

void Graph::add_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) {
        throw ValidationError("self-loop at vertex " + std::to_string(i));
    }
    if (i > j) {
        std::swap(i, j);
    }
    const std::size_t k = pair_index(i, j, num_vertices_);
    if (!edge_bits_[k]) {
        edge_bits_[k] = true;
        ++num_edges_;
    }
}

bool Graph::has_edge(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) {
        return false;
    }
    if (i > j) {
        std::swap(i, j);
    }
    return edge_bits_[pair_index(i, j, num_vertices_)];
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int u = 1; u <= num_vertices_; ++u) {
        if (u != v && edge_bits_[pair_index(std::min(u, v), std::max(u, v), num_vertices_)]) {
            ++d;
        }
    }
    return d;
}

std::vector<std::vector<int>> Graph::connected_components() const {
    std::vector<bool> seen(num_vertices_ + 1, false);
    std::vector<std::vector<int>> parts;
    for (int start = 1; start <= num_vertices_; ++start) {
        if (seen[start]) {
            continue;
        }
        std::vector<int> part;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            part.push_back(v);
            for (int u = 1; u <= num_vertices_; ++u) {
                if (!seen[u] && u != v &&
                    edge_bits_[pair_index(std::min(u, v), std::max(u, v), num_vertices_)]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

bool Graph::is_even() const {
    for (int v = 1; v <= num_vertices_; ++v) {
        if (degree(v) % 2 != 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint8_t> Graph::parity_vector() const {
    std::vector<std::uint8_t> parity(num_vertices_);
    for (int v = 1; v <= num_vertices_; ++v) {
        parity[v - 1] = static_cast<std::uint8_t>(degree(v) % 2);
    }
    return parity;
}

std::vector<Circuit> Graph::euler_decomposition() const {
    for (int v = 1; v <= num_vertices_; ++v) {
        if (degree(v) % 2 != 0) {
            throw NotEvenError(v);
        }
    }
    // mutable copy of the edge set; cleared as edges are walked
    std::vector<bool> unused = edge_bits_;
    std::vector<bool> visited(num_vertices_ + 1, false);

    auto smallest_unused_neighbor = [&](int v) -> int {
        for (int u = 1; u <= num_vertices_; ++u) {
            if (u != v && unused[pair_index(std::min(u, v), std::max(u, v), num_vertices_)]) {
                return u;
            }
        }
        return 0;
    };

    std::vector<Circuit> circuits;
    for (int start = 1; start <= num_vertices_; ++start) {
        if (visited[start]) {
            continue;
        }
        // Hierholzer, iterative: push along smallest unused neighbors, emit
        // vertices on backtrack, reverse at the end.
        std::vector<int> stack{start};
        std::vector<int> walk;
        while (!stack.empty()) {
            const int v = stack.back();
            visited[v] = true;
            const int u = smallest_unused_neighbor(v);
            if (u != 0) {
                unused[pair_index(std::min(u, v), std::max(u, v), num_vertices_)] = false;
                stack.push_back(u);
            } else {
                walk.push_back(v);
                stack.pop_back();
            }
        }
        std::reverse(walk.begin(), walk.end());
        circuits.push_back(Circuit{std::move(walk)});
    }
    return circuits;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(num_edges_);
    for (int i = 1; i <= num_vertices_; ++i) {
        for (int j = i + 1; j <= num_vertices_; ++j) {
            if (edge_bits_[pair_index(i, j, num_vertices_)]) {
                result.emplace_back(i, j);
            }
        }
    }
    return result;
}

std::uint64_t Graph::bitmask() const {
    const std::size_t bits = pair_count(num_vertices_);
    if (bits > 64) {
        throw DomainError("bitmask view supports at most 64 vertex pairs");
    }
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < bits; ++k) {
        if (edge_bits_[k]) {
            mask |= std::uint64_t{1} << k;
        }
    }
    return mask;
}

std::string to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["r"] = g.num_vertices();
    auto edge_array = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edges()) {
        edge_array.push_back({a, b});
    }
    j["edges"] = std::move(edge_array);
    return j.dump();
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels) {
    const int r = g.num_vertices();
    if (!labels.empty() && static_cast<int>(labels.size()) != r) {
        throw DimensionError("label count does not match vertex count");
    }
    std::string out = "graph G {\n  layout=neato;\n  node [shape=circle];\n";
    char buf[256];
    const double tau = 8.0 * std::atan(1.0);
    for (int v = 1; v <= r; ++v) {
        const double angle = tau * (v - 1) / r;
        const std::string label = labels.empty() ? std::to_string(v) : labels[v - 1];
        std::snprintf(buf, sizeof buf, "  %d [label=\"%s\", pos=\"%.4f,%.4f!\"];\n", v,
                      label.c_str(), std::cos(angle), std::sin(angle));
        out += buf;
    }
    for (const auto& [a, b] : g.edges()) {
        std::snprintf(buf, sizeof buf, "  %d -- %d;\n", a, b);
        out += buf;
    }
    out += "}\n";
    return out;
}

} // namespace qrdw
