#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace transit {

// A set of vertices packed into one machine word; the library caps graphs at
// 64 vertices so every vertex set is a single uint64_t.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

constexpr bool set_contains(VertexSet s, int v) { return (s >> v) & VertexSet{1}; }

constexpr int set_size(VertexSet s) { return std::popcount(s); }

constexpr int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

constexpr VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr VertexSet pair_set(int u, int v) { return vertex_bit(u) | vertex_bit(v); }

template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
    while (s) {
        fn(std::countr_zero(s));
        s &= s - 1;
    }
}

inline std::vector<int> set_to_vector(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

inline VertexSet set_from_vector(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s |= vertex_bit(v);
    return s;
}

}  // namespace transit
