#pragma once

#include <string>
#include <utility>
#include <vector>

#include "transit/bits.hpp"
#include "transit/errors.hpp"

namespace transit {

/// Finite simple undirected graph on vertices 0..n-1 with bitset adjacency.
/// Symmetry and irreflexivity hold by construction: edges are only added in
/// pairs and self-loops are rejected.
class Graph {
public:
    explicit Graph(int n) : n_(n) {
        if (n < 1) throw input_error("graph needs at least one vertex");
        if (n > kMaxVertices)
            throw input_error("graph too large: n = " + std::to_string(n) +
                              " exceeds the " + std::to_string(kMaxVertices) + "-vertex cap");
        adj_.assign(static_cast<std::size_t>(n), 0);
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
        adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
    }

    bool adjacent(int u, int v) const { return set_contains(adj_[static_cast<std::size_t>(u)], v); }

    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    int degree(int v) const { return set_size(adj_[static_cast<std::size_t>(v)]); }

    int edge_count() const {
        int twice = 0;
        for (VertexSet row : adj_) twice += set_size(row);
        return twice / 2;
    }

    VertexSet vertices() const { return full_set(n_); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for_each_vertex(adj_[static_cast<std::size_t>(u)] & ~(full_set(u + 1)),
                            [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw input_error("vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(n_) + ")");
    }

    int n_;
    std::vector<VertexSet> adj_;
};

/// All-pairs hop counts; kUnreachable marks pairs with no connecting path.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}

    int order() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }

private:
    int n_;
    std::vector<int> d_;
};

inline DistanceMatrix bfs_all_pairs(const Graph& g) {
    const int n = g.order();
    std::vector<int> d(static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
    for (int s = 0; s < n; ++s) {
        VertexSet frontier = vertex_bit(s);
        VertexSet seen = frontier;
        int depth = 0;
        while (frontier) {
            for_each_vertex(frontier,
                            [&](int v) { d[static_cast<std::size_t>(s) * n + v] = depth; });
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
            frontier = next & ~seen;
            seen |= frontier;
            ++depth;
        }
    }
    return DistanceMatrix(n, std::move(d));
}

inline VertexSet reachable_from(const Graph& g, int s) {
    VertexSet seen = vertex_bit(s);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen;
}

inline bool is_connected(const Graph& g) {
    return reachable_from(g, 0) == g.vertices();
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // vertex_map[i] = label in the host graph
};

/// Subgraph induced by the vertex set S, relabeled 0..|S|-1 in increasing
/// order of original label.
inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s) throw input_error("induced subgraph of an empty vertex set");
    std::vector<int> map = set_to_vector(s & g.vertices());
    if (map.empty()) throw input_error("vertex set lies outside the graph");
    Graph h(static_cast<int>(map.size()));
    for (std::size_t i = 0; i < map.size(); ++i)
        for (std::size_t j = i + 1; j < map.size(); ++j)
            if (g.adjacent(map[i], map[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return InducedSubgraph{std::move(h), std::move(map)};
}

}  // namespace transit
