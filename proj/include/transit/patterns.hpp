#pragma once

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

#include "transit/cycles.hpp"
#include "transit/generators.hpp"
#include "transit/graph.hpp"

namespace transit {

enum class PatternId {
    house,
    hole,             // induced C_k, k >= 5
    domino,
    fan3,
    pgraph,
    induced_c4_plus,  // induced C_k, k >= 4
    isometric_hole    // isometric C_k, k >= 4
};

inline std::string_view pattern_name(PatternId p) {
    switch (p) {
        case PatternId::house: return "house";
        case PatternId::hole: return "hole";
        case PatternId::domino: return "domino";
        case PatternId::fan3: return "fan3";
        case PatternId::pgraph: return "pgraph";
        case PatternId::induced_c4_plus: return "induced_c4_plus";
        case PatternId::isometric_hole: return "isometric_hole";
    }
    return "?";
}

inline bool pattern_is_fixed(PatternId p) {
    return p == PatternId::house || p == PatternId::domino || p == PatternId::fan3 ||
           p == PatternId::pgraph;
}

inline const Graph& pattern_graph(PatternId p) {
    static const Graph house = house_graph();
    static const Graph domino = domino_graph();
    static const Graph fan3 = fan3_graph();
    static const Graph pg = pgraph_graph();
    switch (p) {
        case PatternId::house: return house;
        case PatternId::domino: return domino;
        case PatternId::fan3: return fan3;
        case PatternId::pgraph: return pg;
        default: throw usage_error("cycle patterns have no fixed pattern graph");
    }
}

/// Occurrence of a forbidden pattern. For fixed patterns the vertices are the
/// sorted subset inducing it; for cycle patterns they are in cycle order.
struct PatternOccurrence {
    PatternId pattern = PatternId::house;
    std::vector<int> vertices;
};

namespace detail {

inline bool induced_isomorphic(const Graph& g, const std::vector<int>& subset,
                               const Graph& pattern) {
    const int k = pattern.order();
    if (static_cast<int>(subset.size()) != k) return false;
    // degree multiset filter within the subset
    VertexSet mask = set_from_vector(subset);
    std::vector<int> degs;
    degs.reserve(subset.size());
    for (int v : subset) degs.push_back(set_size(g.neighbors(v) & mask));
    std::vector<int> pdegs;
    pdegs.reserve(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) pdegs.push_back(pattern.degree(v));
    std::sort(degs.begin(), degs.end());
    std::sort(pdegs.begin(), pdegs.end());
    if (degs != pdegs) return false;

    std::vector<int> perm(subset.begin(), subset.end());
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (int i = 0; ok && i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.adjacent(perm[static_cast<std::size_t>(i)],
                               perm[static_cast<std::size_t>(j)]) != pattern.adjacent(i, j)) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// k-subsets of 0..n-1 in lexicographic order; fn returns true to stop.
template <typename Fn>
bool for_each_subset_lex(int n, int k, Fn&& fn) {
    if (k > n) return false;
    std::vector<int> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (fn(s)) return true;
        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

/// Smallest occurrence of the pattern, or nullopt. Fixed patterns return the
/// lexicographically smallest inducing subset; cycle patterns return the
/// first qualifying cycle in enumeration order.
inline std::optional<PatternOccurrence> find_induced_pattern(const Graph& g, PatternId p) {
    if (pattern_is_fixed(p)) {
        const Graph& pat = pattern_graph(p);
        const int k = pat.order();
        std::optional<PatternOccurrence> hit;
        detail::for_each_subset_lex(g.order(), k, [&](const std::vector<int>& subset) {
            if (detail::induced_isomorphic(g, subset, pat)) {
                hit = PatternOccurrence{p, subset};
                return true;
            }
            return false;
        });
        return hit;
    }
    const int min_len = p == PatternId::hole ? 5 : 4;
    for (const CycleOccurrence& c : enumerate_induced_cycles(g, min_len)) {
        if (p == PatternId::isometric_hole && !is_isometric_cycle(g, c)) continue;
        return PatternOccurrence{p, c.vertices};
    }
    return std::nullopt;
}

/// Replays an occurrence: the named vertices must actually exhibit the pattern.
inline bool occurrence_matches(const Graph& g, const PatternOccurrence& occ) {
    switch (occ.pattern) {
        case PatternId::house:
        case PatternId::domino:
        case PatternId::fan3:
        case PatternId::pgraph:
            return detail::induced_isomorphic(g, occ.vertices, pattern_graph(occ.pattern));
        case PatternId::hole:
            return occ.vertices.size() >= 5 &&
                   is_chordless_cycle_of(g, CycleOccurrence{occ.vertices});
        case PatternId::induced_c4_plus:
            return occ.vertices.size() >= 4 &&
                   is_chordless_cycle_of(g, CycleOccurrence{occ.vertices});
        case PatternId::isometric_hole:
            return occ.vertices.size() >= 4 &&
                   is_chordless_cycle_of(g, CycleOccurrence{occ.vertices}) &&
                   is_isometric_cycle(g, CycleOccurrence{occ.vertices});
    }
    return false;
}

}  // namespace transit
