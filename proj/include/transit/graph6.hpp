#pragma once

#include <string>
#include <string_view>

#include "transit/graph.hpp"

namespace transit {

// graph6: header is n+63 for n <= 62, or '~' followed by three bytes carrying
// 18 bits of n; payload packs the upper-triangle bits x(0,1), x(0,2), x(1,2),
// x(0,3), ... six per byte, most significant first, each byte offset by 63.

inline Graph parse_graph6(std::string_view text) {
    auto bad = [](std::size_t offset, const std::string& what) -> input_error {
        return input_error("graph6: " + what + " at byte " + std::to_string(offset));
    };
    auto valid = [](char c) { return c >= 63 && c <= 126; };

    if (text.empty()) throw bad(0, "empty input");
    std::size_t pos = 0;
    long n = 0;
    if (text[0] == '~') {
        if (text.size() < 4) throw bad(text.size(), "truncated vertex-count header");
        for (pos = 1; pos <= 3; ++pos) {
            if (!valid(text[pos])) throw bad(pos, "invalid header character");
            n = (n << 6) | (text[pos] - 63);
        }
    } else {
        if (!valid(text[0])) throw bad(0, "invalid header character");
        n = text[0] - 63;
        pos = 1;
    }
    if (n < 1) throw bad(0, "vertex count must be at least 1");
    if (n > kMaxVertices) throw bad(0, "vertex count " + std::to_string(n) + " exceeds cap");

    Graph g(static_cast<int>(n));
    int chunk = 0, chunk_left = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (chunk_left == 0) {
                if (pos >= text.size()) throw bad(pos, "truncated bit payload");
                if (!valid(text[pos])) throw bad(pos, "invalid payload character");
                chunk = text[pos] - 63;
                chunk_left = 6;
                ++pos;
            }
            if (chunk & (1 << (chunk_left - 1))) g.add_edge(u, v);
            --chunk_left;
        }
    }
    if (pos != text.size()) throw bad(pos, "trailing characters");
    return g;
}

inline std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    }
    int chunk = 0, chunk_bits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++chunk_bits == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                chunk_bits = 0;
            }
        }
    }
    if (chunk_bits > 0) out.push_back(static_cast<char>((chunk << (6 - chunk_bits)) + 63));
    return out;
}

}  // namespace transit
