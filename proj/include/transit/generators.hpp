#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "transit/graph.hpp"

namespace transit {

/// Thin deterministic wrapper over mt19937_64. Raw 64-bit draws are mapped to
/// doubles and bounded ints here rather than through std distributions, so
/// identical seeds give identical streams on every standard library.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }

    double unit() {  // uniform in [0,1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    int below(int m) {  // uniform in [0,m)
        return m <= 1 ? 0 : static_cast<int>(eng_() % static_cast<std::uint64_t>(m));
    }

    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 eng_;
};

// Named graphs with fixed canonical labelings (documented in the README):
//   house: square 0-1-2-3 plus apex 4 adjacent to 0 and 1
//   domino: hexagon 0-1-2-3-4-5 plus the rung 2-5 (squares 0,1,2,5 and 2,3,4,5)
//   fan3: path 0-1-2-3 plus hub 4 adjacent to all four
//   pgraph: square 0-1-2-3 plus pendant 4 attached to 0

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g(n);
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    for (int v = 0; n >= 3 && v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph house_graph() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}});
}

inline Graph domino_graph() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {2, 5}});
}

inline Graph fan3_graph() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
}

inline Graph pgraph_graph() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
}

inline Graph er_random_graph(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw input_error("edge probability must lie in [0,1]");
    Graph g(n);
    SeededRng rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) g.add_edge(u, v);
    return g;
}

/// First connected graph in the deterministic sequence er(n,p,seed),
/// er(n,p,seed+0x9e3779b97f4a7c15), ...
inline Graph random_connected_graph(int n, double p, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Graph g = er_random_graph(n, p, seed + attempt * 0x9e3779b97f4a7c15ULL);
        if (is_connected(g)) return g;
    }
}

namespace detail {

// Streams every labeled graph on n vertices: masks over the graph6 pair
// order (0,1),(0,2),(1,2),(0,3),...
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
    const int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Graph g(n);
        for (int b = 0; b < m; ++b)
            if ((mask >> b) & 1) g.add_edge(pairs[static_cast<std::size_t>(b)].first,
                                            pairs[static_cast<std::size_t>(b)].second);
        fn(g);
    }
}

template <typename Fn>
void for_each_connected_labeled(int n, Fn&& fn) {
    for_each_labeled_graph(n, [&](const Graph& g) {
        if (is_connected(g)) fn(g);
    });
}

// Chunked variant for parallel sweeps: only masks in [lo, hi).
template <typename Fn>
void for_each_connected_labeled_range(int n, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
    const int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        Graph g(n);
        for (int b = 0; b < m; ++b)
            if ((mask >> b) & 1) g.add_edge(pairs[static_cast<std::size_t>(b)].first,
                                            pairs[static_cast<std::size_t>(b)].second);
        if (is_connected(g)) fn(g);
    }
}

}  // namespace detail

/// Every labeled connected graph on n vertices, exactly once, in mask order.
/// Hard guard n <= 6: the count explodes beyond desk scale.
inline void enumerate_connected_labeled(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 6)
        throw input_error("labeled connected enumeration supports 1 <= n <= 6, got " +
                          std::to_string(n));
    detail::for_each_connected_labeled(n, fn);
}

inline std::vector<Graph> connected_labeled_graphs(int n) {
    std::vector<Graph> out;
    enumerate_connected_labeled(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace transit
