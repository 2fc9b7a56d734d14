#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "transit/graph.hpp"

namespace transit {

/// Map from unordered vertex pairs {u,v}, u != v, to vertex subsets of the
/// ground set 0..n-1. One entry is stored per unordered pair, so symmetry
/// R(u,v) = R(v,u) holds structurally, and the diagonal is implicitly
/// R(u,u) = {u}. Freshly constructed functions carry R(u,v) = {u,v}.
class TransitFunction {
public:
    explicit TransitFunction(int n) : TransitFunction(n, {}) {}

    TransitFunction(int n, std::vector<std::string> names) : n_(n), names_(std::move(names)) {
        if (n < 1) throw input_error("transit function needs at least one vertex");
        if (n > kMaxVertices) throw input_error("ground set exceeds the 64-vertex cap");
        if (!names_.empty() && static_cast<int>(names_.size()) != n)
            throw input_error("vertex name list does not match ground-set size");
        sets_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) sets_[pair_index(u, v)] = pair_set(u, v);
    }

    int ground_size() const { return n_; }

    VertexSet between(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return vertex_bit(u);
        return sets_[pair_index(u, v)];
    }

    void set(int u, int v, VertexSet s) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw input_error("diagonal entries are fixed at R(u,u) = {u}");
        if (s & ~full_set(n_)) throw input_error("set contains a vertex outside the ground set");
        sets_[pair_index(u, v)] = s;
    }

    /// True iff u != v and R(u,v) is exactly the two-element set {u,v}; this
    /// is the edge relation of the underlying graph.
    bool edge_pair(int u, int v) const {
        return u != v && sets_[pair_index(u, v)] == pair_set(u, v);
    }

    const std::vector<std::string>& names() const { return names_; }

    std::string vertex_label(int v) const {
        if (!names_.empty()) return names_[static_cast<std::size_t>(v)];
        return std::to_string(v);
    }

    std::optional<int> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }

    /// Pairwise set equality; vertex names are labels and do not participate.
    bool operator==(const TransitFunction& other) const {
        return n_ == other.n_ && sets_ == other.sets_;
    }

private:
    std::size_t pair_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        return static_cast<std::size_t>(u) * (2 * n_ - u - 1) / 2 + (v - u - 1);
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw input_error("vertex " + std::to_string(v) + " outside ground set of size " +
                              std::to_string(n_));
    }

    int n_;
    std::vector<VertexSet> sets_;
    std::vector<std::string> names_;
};

struct TValidation {
    bool t1_ok = true;
    bool t2_ok = true;  // structural: one entry per unordered pair
    bool t3_ok = true;  // structural: diagonal fixed at {u}
    std::optional<std::pair<int, int>> t1_witness;
    std::string note;

    bool all_ok() const { return t1_ok && t2_ok && t3_ok; }
};

/// Checks {u,v} ⊆ R(u,v) for every pair; (t2) and (t3) hold structurally in
/// this representation and are reported as such.
inline TValidation validate_t(const TransitFunction& r) {
    TValidation out;
    out.note = "t2,t3 structural under pair-keyed storage";
    const int n = r.ground_size();
    for (int u = 0; u < n && out.t1_ok; ++u)
        for (int v = u + 1; v < n; ++v) {
            if ((r.between(u, v) & pair_set(u, v)) != pair_set(u, v)) {
                out.t1_ok = false;
                out.t1_witness = {u, v};
                break;
            }
        }
    return out;
}

/// I(u,v) = { w : d(u,w) + d(w,v) = d(u,v) }, the vertices on shortest
/// u,v-paths. Requires a connected graph.
inline TransitFunction interval_function(const Graph& g) {
    if (!is_connected(g)) throw input_error("interval function requires a connected graph");
    const int n = g.order();
    const DistanceMatrix d = bfs_all_pairs(g);
    TransitFunction r(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            VertexSet s = 0;
            for (int w = 0; w < n; ++w)
                if (d.at(u, w) + d.at(w, v) == d.at(u, v)) s |= vertex_bit(w);
            r.set(u, v, s);
        }
    return r;
}

inline constexpr int kInducedPathCap = 14;

/// J(u,v) = vertices lying on at least one chordless u,v-path. Computed by
/// exhaustive chordless-path extension, which is exponential; guarded at
/// n <= 14.
inline TransitFunction induced_path_function(const Graph& g) {
    if (!is_connected(g)) throw input_error("induced-path function requires a connected graph");
    const int n = g.order();
    if (n > kInducedPathCap)
        throw capability_error(
            "induced-path function is a desk-scale operation: n <= " +
            std::to_string(kInducedPathCap) + ", got " + std::to_string(n));
    TransitFunction r(n);

    std::vector<int> path;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            VertexSet members = 0;
            // Grow chordless paths from u; a new vertex may touch only the
            // current endpoint, and reaching v records the whole path.
            auto dfs = [&](auto&& self, VertexSet used) -> void {
                const int last = path.back();
                if (last == v) {
                    members |= used;
                    return;
                }
                VertexSet interior = used & ~vertex_bit(last);
                for_each_vertex(g.neighbors(last) & ~used, [&](int z) {
                    if (g.neighbors(z) & interior) return;
                    path.push_back(z);
                    self(self, used | vertex_bit(z));
                    path.pop_back();
                });
            };
            path = {u};
            dfs(dfs, vertex_bit(u));
            r.set(u, v, members);
        }
    }
    return r;
}

/// Underlying graph G_R: distinct u,v are adjacent iff R(u,v) = {u,v}.
inline Graph underlying_graph(const TransitFunction& r) {
    const int n = r.ground_size();
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (r.edge_pair(u, v)) g.add_edge(u, v);
    return g;
}

}  // namespace transit
