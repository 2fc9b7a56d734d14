#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "transit/patterns.hpp"

namespace transit {

enum class GraphClass {
    chordal,
    distance_hereditary,
    ptolemaic,
    bridged,
    hhd_free,
    hhp3fan_free,
    hhd3fan_free
};

inline std::string_view class_name(GraphClass c) {
    switch (c) {
        case GraphClass::chordal: return "chordal";
        case GraphClass::distance_hereditary: return "distance_hereditary";
        case GraphClass::ptolemaic: return "ptolemaic";
        case GraphClass::bridged: return "bridged";
        case GraphClass::hhd_free: return "HHD_free";
        case GraphClass::hhp3fan_free: return "HHP3fan_free";
        case GraphClass::hhd3fan_free: return "HHD3fan_free";
    }
    return "?";
}

struct PruneStep {
    enum class Kind { pendant, true_twin, false_twin };
    int vertex = 0;   // deleted vertex
    Kind kind = Kind::pendant;
    int partner = 0;  // the supporting neighbor or surviving twin
};

inline std::string_view prune_kind_name(PruneStep::Kind k) {
    switch (k) {
        case PruneStep::Kind::pendant: return "pendant";
        case PruneStep::Kind::true_twin: return "true_twin";
        case PruneStep::Kind::false_twin: return "false_twin";
    }
    return "?";
}

struct RecognitionReport {
    GraphClass cls = GraphClass::chordal;
    bool member = false;
    std::optional<PatternOccurrence> forbidden;           // negative certificate
    std::optional<std::vector<int>> elimination_order;    // chordal positive certificate
    std::optional<std::vector<PruneStep>> pruning;        // DH positive certificate
};

namespace detail {

inline void require_connected(const Graph& g, const char* who) {
    if (!is_connected(g)) throw input_error(std::string(who) + " requires a connected graph");
}

/// Order v_1..v_n such that each v_i's neighbors among v_{i+1}..v_n form a
/// clique, if one exists (maximum-cardinality search, then verification).
inline std::optional<std::vector<int>> perfect_elimination_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> picked(static_cast<std::size_t>(n), false);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {  // MCS emits a reverse elimination order
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!picked[static_cast<std::size_t>(v)] &&
                (best == -1 ||
                 weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        picked[static_cast<std::size_t>(best)] = true;
        order[static_cast<std::size_t>(i)] = best;
        for_each_vertex(g.neighbors(best), [&](int w) {
            if (!picked[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
        });
    }
    // verify: later neighbors of each vertex must be pairwise adjacent
    VertexSet later = full_set(n);
    std::vector<VertexSet> later_at(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        later &= ~vertex_bit(order[static_cast<std::size_t>(i)]);
        later_at[static_cast<std::size_t>(i)] = later;
    }
    for (int i = 0; i < n; ++i) {
        const int v = order[static_cast<std::size_t>(i)];
        VertexSet nb = g.neighbors(v) & later_at[static_cast<std::size_t>(i)];
        bool clique = true;
        for_each_vertex(nb, [&](int a) {
            if ((nb & ~vertex_bit(a) & ~g.neighbors(a)) != 0) clique = false;
        });
        if (!clique) return std::nullopt;
    }
    return order;
}

inline bool is_valid_elimination_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.order();
    if (static_cast<int>(order.size()) != n) return false;
    VertexSet seen = 0;
    for (int v : order) {
        if (v < 0 || v >= n || set_contains(seen, v)) return false;
        seen |= vertex_bit(v);
    }
    VertexSet later = full_set(n);
    for (int v : order) {
        later &= ~vertex_bit(v);
        VertexSet nb = g.neighbors(v) & later;
        bool clique = true;
        for_each_vertex(nb, [&](int a) {
            if ((nb & ~vertex_bit(a) & ~g.neighbors(a)) != 0) clique = false;
        });
        if (!clique) return false;
    }
    return true;
}

/// Greedy pendant/twin reduction. Deterministic: the smallest vertex with an
/// applicable deletion goes first, twins keep their smaller member.
inline std::optional<std::vector<PruneStep>> pruning_sequence(const Graph& g) {
    const int n = g.order();
    VertexSet alive = full_set(n);
    std::vector<PruneStep> steps;
    while (set_size(alive) > 1) {
        bool reduced = false;
        for (int v = 0; v < n && !reduced; ++v) {
            if (!set_contains(alive, v)) continue;
            VertexSet nv = g.neighbors(v) & alive;
            if (set_size(nv) == 1) {
                steps.push_back({v, PruneStep::Kind::pendant, lowest_vertex(nv)});
                alive &= ~vertex_bit(v);
                reduced = true;
                break;
            }
            for (int u = 0; u < v && !reduced; ++u) {
                if (!set_contains(alive, u)) continue;
                VertexSet nu = g.neighbors(u) & alive;
                if (g.adjacent(u, v)) {
                    if ((nu & ~vertex_bit(v)) == (nv & ~vertex_bit(u))) {
                        steps.push_back({v, PruneStep::Kind::true_twin, u});
                        alive &= ~vertex_bit(v);
                        reduced = true;
                    }
                } else if (nu == nv) {
                    steps.push_back({v, PruneStep::Kind::false_twin, u});
                    alive &= ~vertex_bit(v);
                    reduced = true;
                }
            }
        }
        if (!reduced) return std::nullopt;
    }
    return steps;
}

inline bool is_valid_pruning_sequence(const Graph& g, const std::vector<PruneStep>& steps) {
    const int n = g.order();
    if (static_cast<int>(steps.size()) != n - 1) return false;
    VertexSet alive = full_set(n);
    for (const PruneStep& s : steps) {
        if (!set_contains(alive, s.vertex) || !set_contains(alive, s.partner) ||
            s.vertex == s.partner)
            return false;
        VertexSet nv = g.neighbors(s.vertex) & alive;
        VertexSet np = g.neighbors(s.partner) & alive;
        switch (s.kind) {
            case PruneStep::Kind::pendant:
                if (nv != vertex_bit(s.partner)) return false;
                break;
            case PruneStep::Kind::true_twin:
                if (!g.adjacent(s.vertex, s.partner) ||
                    (nv & ~vertex_bit(s.partner)) != (np & ~vertex_bit(s.vertex)))
                    return false;
                break;
            case PruneStep::Kind::false_twin:
                if (g.adjacent(s.vertex, s.partner) || nv != np) return false;
                break;
        }
        alive &= ~vertex_bit(s.vertex);
    }
    return set_size(alive) == 1;
}

inline std::optional<PatternOccurrence> first_pattern(const Graph& g,
                                                      std::initializer_list<PatternId> which) {
    for (PatternId p : which)
        if (auto occ = find_induced_pattern(g, p)) return occ;
    return std::nullopt;
}

}  // namespace detail

inline RecognitionReport is_chordal(const Graph& g) {
    detail::require_connected(g, "chordal recognition");
    RecognitionReport rep;
    rep.cls = GraphClass::chordal;
    if (auto order = detail::perfect_elimination_order(g)) {
        rep.member = true;
        rep.elimination_order = std::move(order);
    } else {
        rep.forbidden = find_induced_pattern(g, PatternId::induced_c4_plus);
    }
    return rep;
}

inline RecognitionReport is_distance_hereditary(const Graph& g) {
    detail::require_connected(g, "distance-hereditary recognition");
    RecognitionReport rep;
    rep.cls = GraphClass::distance_hereditary;
    rep.forbidden = detail::first_pattern(
        g, {PatternId::house, PatternId::hole, PatternId::domino, PatternId::fan3});
    if (!rep.forbidden) {
        rep.member = true;
        rep.pruning = detail::pruning_sequence(g);
    }
    return rep;
}

inline RecognitionReport is_ptolemaic(const Graph& g) {
    detail::require_connected(g, "Ptolemaic recognition");
    RecognitionReport rep;
    rep.cls = GraphClass::ptolemaic;
    RecognitionReport ch = is_chordal(g);
    if (!ch.member) {
        rep.forbidden = ch.forbidden;
        return rep;
    }
    if (auto fan = find_induced_pattern(g, PatternId::fan3)) {
        rep.forbidden = fan;
        return rep;
    }
    rep.member = true;
    rep.elimination_order = ch.elimination_order;
    return rep;
}

inline RecognitionReport is_bridged(const Graph& g) {
    detail::require_connected(g, "bridged recognition");
    RecognitionReport rep;
    rep.cls = GraphClass::bridged;
    // every isometric cycle is induced, so induced cycles suffice
    rep.forbidden = find_induced_pattern(g, PatternId::isometric_hole);
    rep.member = !rep.forbidden;
    return rep;
}

inline RecognitionReport is_hhd_free(const Graph& g) {
    detail::require_connected(g, "HHD-free recognition");
    RecognitionReport rep;
    rep.cls = GraphClass::hhd_free;
    rep.forbidden =
        detail::first_pattern(g, {PatternId::house, PatternId::hole, PatternId::domino});
    rep.member = !rep.forbidden;
    return rep;
}

inline RecognitionReport is_hhp3fan_free(const Graph& g) {
    detail::require_connected(g, "HHP3fan-free recognition");
    RecognitionReport rep;
    rep.cls = GraphClass::hhp3fan_free;
    rep.forbidden = detail::first_pattern(
        g, {PatternId::house, PatternId::hole, PatternId::pgraph, PatternId::fan3});
    rep.member = !rep.forbidden;
    return rep;
}

inline RecognitionReport is_hhd3fan_free(const Graph& g) {
    detail::require_connected(g, "HHD3fan-free recognition");
    RecognitionReport rep;
    rep.cls = GraphClass::hhd3fan_free;
    rep.forbidden = detail::first_pattern(
        g, {PatternId::house, PatternId::hole, PatternId::domino, PatternId::fan3});
    rep.member = !rep.forbidden;
    return rep;
}

inline constexpr int kDefinitionalCap = 9;

/// Definitional distance-hereditary test: every connected induced subgraph
/// preserves pairwise distances. Exponential subset sweep, guarded at n <= 9.
inline bool dh_oracle_definition(const Graph& g) {
    detail::require_connected(g, "definitional DH oracle");
    const int n = g.order();
    if (n > kDefinitionalCap)
        throw capability_error("definitional DH oracle is guarded at n <= " +
                               std::to_string(kDefinitionalCap));
    const DistanceMatrix d = bfs_all_pairs(g);
    for (VertexSet s = 1; s < (VertexSet{1} << n); ++s) {
        if (set_size(s) < 2) continue;
        InducedSubgraph sub = induced_subgraph(g, s);
        if (!is_connected(sub.graph)) continue;
        const DistanceMatrix ds = bfs_all_pairs(sub.graph);
        const int k = sub.graph.order();
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (ds.at(i, j) != d.at(sub.vertex_map[static_cast<std::size_t>(i)],
                                        sub.vertex_map[static_cast<std::size_t>(j)]))
                    return false;
    }
    return true;
}

/// Pruning-sequence recognition: reducible to a single vertex by pendant and
/// twin deletions.
inline bool dh_oracle_pruning(const Graph& g) {
    detail::require_connected(g, "pruning DH oracle");
    return detail::pruning_sequence(g).has_value();
}

/// Four-point condition: d(u,v)d(x,y) <= d(u,x)d(v,y) + d(u,y)d(v,x) over all
/// vertex quadruples.
inline bool ptolemaic_oracle_inequality(const Graph& g) {
    detail::require_connected(g, "Ptolemaic inequality oracle");
    const int n = g.order();
    const DistanceMatrix dm = bfs_all_pairs(g);
    auto d = [&](int a, int b) { return static_cast<long>(dm.at(a, b)); };
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (d(u, v) * d(x, y) > d(u, x) * d(v, y) + d(u, y) * d(v, x)) return false;
    return true;
}

}  // namespace transit
