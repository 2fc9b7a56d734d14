#pragma once

#include <algorithm>
#include <vector>

#include "transit/graph.hpp"

namespace transit {

/// An ordered cycle v_0, ..., v_{k-1}: consecutive vertices (cyclically)
/// adjacent, all distinct, k >= 3. Cycles produced by
/// enumerate_induced_cycles are chordless and canonically oriented: v_0 is
/// the smallest vertex and v_1 < v_{k-1}.
struct CycleOccurrence {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
};

inline bool is_cycle_of(const Graph& g, const CycleOccurrence& c) {
    const int k = c.length();
    if (k < 3) return false;
    VertexSet seen = 0;
    for (int v : c.vertices) {
        if (v < 0 || v >= g.order() || set_contains(seen, v)) return false;
        seen |= vertex_bit(v);
    }
    for (int i = 0; i < k; ++i)
        if (!g.adjacent(c.vertices[static_cast<std::size_t>(i)],
                        c.vertices[static_cast<std::size_t>((i + 1) % k)]))
            return false;
    return true;
}

inline bool is_chordless_cycle_of(const Graph& g, const CycleOccurrence& c) {
    if (!is_cycle_of(g, c)) return false;
    const int k = c.length();
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;
            if (g.adjacent(c.vertices[static_cast<std::size_t>(i)],
                           c.vertices[static_cast<std::size_t>(j)]))
                return false;
        }
    return true;
}

/// Every chordless cycle of length >= min_len, each exactly once up to
/// rotation/reflection. Chordless paths are grown from their smallest vertex;
/// the result is sorted lexicographically by vertex sequence, so repeated
/// runs yield an identical list.
inline std::vector<CycleOccurrence> enumerate_induced_cycles(const Graph& g, int min_len = 3) {
    if (min_len < 3) throw input_error("induced-cycle enumeration needs min_len >= 3");
    const int n = g.order();
    std::vector<CycleOccurrence> out;
    std::vector<int> path;

    // Extends the chordless path anchored at s = path[0]; interior vertices
    // must avoid chords to everything but the path tail (and s, which only
    // the closing vertex may touch).
    auto dfs = [&](auto&& self, VertexSet used) -> void {
        const int s = path.front();
        const int last = path.back();
        VertexSet interior = used & ~vertex_bit(last) & ~vertex_bit(s);
        VertexSet candidates = g.neighbors(last) & ~used & ~(full_set(s + 1));
        for_each_vertex(candidates, [&](int z) {
            if (g.neighbors(z) & interior) return;  // chord to the path interior
            if (g.adjacent(z, s)) {
                const int len = static_cast<int>(path.size()) + 1;
                if (len >= min_len && path[1] < z) {
                    CycleOccurrence c;
                    c.vertices = path;
                    c.vertices.push_back(z);
                    out.push_back(std::move(c));
                }
                return;  // z cannot be interior: the edge to s would be a chord
            }
            path.push_back(z);
            self(self, used | vertex_bit(z));
            path.pop_back();
        });
    };

    for (int s = 0; s < n; ++s) {
        VertexSet firsts = g.neighbors(s) & ~(full_set(s + 1));
        for_each_vertex(firsts, [&](int v1) {
            path = {s, v1};
            dfs(dfs, vertex_bit(s) | vertex_bit(v1));
        });
    }
    std::sort(out.begin(), out.end(),
              [](const CycleOccurrence& a, const CycleOccurrence& b) {
                  return a.vertices < b.vertices;
              });
    return out;
}

/// True iff the cycle is isometric: the distance in g between any two cycle
/// vertices equals their distance along the cycle.
inline bool is_isometric_cycle(const Graph& g, const CycleOccurrence& c) {
    if (!is_cycle_of(g, c)) throw input_error("vertex sequence is not a cycle of the graph");
    const DistanceMatrix d = bfs_all_pairs(g);
    const int k = c.length();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const int along = std::min(j - i, k - (j - i));
            if (d.at(c.vertices[static_cast<std::size_t>(i)],
                     c.vertices[static_cast<std::size_t>(j)]) != along)
                return false;
        }
    return true;
}

}  // namespace transit
