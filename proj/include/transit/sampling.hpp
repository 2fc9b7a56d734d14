#pragma once

#include <cstdint>
#include <string_view>

#include "transit/generators.hpp"
#include "transit/transit_function.hpp"

namespace transit {

enum class SampleMode { uniform, interval_mutation };

inline std::string_view sample_mode_name(SampleMode m) {
    return m == SampleMode::uniform ? "uniform" : "interval_mutation";
}

namespace detail {

inline void check_sample_n(int n) {
    if (n < 3 || n > 8)
        throw input_error("transit-function sampling supports 3 <= n <= 8, got " +
                          std::to_string(n));
}

}  // namespace detail

/// R(u,v) = {u,v} ∪ a uniformly random subset of the remaining vertices;
/// (t1) holds by construction.
inline TransitFunction sample_uniform(int n, std::uint64_t seed) {
    detail::check_sample_n(n);
    SeededRng rng(seed);
    TransitFunction r(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            VertexSet s = pair_set(u, v);
            VertexSet rest = full_set(n) & ~s;
            for_each_vertex(rest, [&](int w) {
                if (rng.chance(0.5)) s |= vertex_bit(w);
            });
            r.set(u, v, s);
        }
    return r;
}

/// Interval function of a seeded random connected graph, followed by k
/// single-vertex toggles that never touch pair endpoints, so (t1) survives.
/// k = 0 returns the interval function itself; this mode biases samples
/// toward the premise-rich region where the b- and J-axioms actually fire.
inline TransitFunction sample_interval_mutation(int n, int k, std::uint64_t seed) {
    detail::check_sample_n(n);
    SeededRng rng(seed);
    const double p = 0.3 + 0.2 * rng.below(3);  // 0.3, 0.5 or 0.7
    Graph g = random_connected_graph(n, p, rng.bits());
    TransitFunction r = interval_function(g);
    for (int i = 0; i < k; ++i) {
        const int u = rng.below(n);
        int v = rng.below(n - 1);
        if (v >= u) ++v;
        VertexSet others = full_set(n) & ~pair_set(u, v);
        const int pick = rng.below(set_size(others));
        int w = -1, seen = 0;
        for_each_vertex(others, [&](int x) {
            if (seen++ == pick) w = x;
        });
        r.set(u, v, r.between(u, v) ^ vertex_bit(w));
    }
    return r;
}

inline TransitFunction sample_transit_function(int n, SampleMode mode, std::uint64_t seed) {
    if (mode == SampleMode::uniform) return sample_uniform(n, seed);
    SeededRng head(seed ^ 0xa076'1d64'78bd'642fULL);
    const int k = head.below(4);
    return sample_interval_mutation(n, k, seed);
}

}  // namespace transit
