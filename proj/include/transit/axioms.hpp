#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "transit/transit_function.hpp"

namespace transit {

// The fourteen betweenness axioms decided by this engine, quantified over the
// ground set V of a transit function R (sweep variable order in brackets):
//
//   t1  [u,v]     u ∈ R(u,v)
//   t2  []        R(u,v) = R(v,u)                     (structural here)
//   t3  []        R(u,u) = {u}                        (structural here)
//   b1  [u,v,x]   x ∈ R(u,v), x ≠ v  ⇒  v ∉ R(u,x)
//   b2  [u,v,x,y] x ∈ R(u,v), y ∈ R(u,x)  ⇒  y ∈ R(u,v)
//   b3  [u,v,x,y] x ∈ R(u,v), y ∈ R(u,x)  ⇒  x ∈ R(y,v)
//   b4  [u,v,x]   x ∈ R(u,v)  ⇒  R(u,x) ∩ R(x,v) = {x}
//   J0  [u,v,x,y] u,v,x,y pairwise distinct: x ∈ R(u,y), y ∈ R(x,v)  ⇒  x ∈ R(u,v)
//   J0' [u,v,x,y] u,v,x,y pairwise distinct: x ∈ R(u,y), y ∈ R(x,v),
//                 R(u,y) ∩ R(x,v) ⊆ {u,x,y,v}  ⇒  x ∈ R(u,v)
//   J1  [u,v,w]   w ∈ R(u,v), w ∉ {u,v}  ⇒  ∃ u1 ∈ R(u,w)∖R(v,w), v1 ∈ R(v,w)∖R(u,w)
//                 with R(u1,w) = {u1,w}, R(v1,w) = {v1,w}, w ∈ R(u1,v1)
//   J2  [u,v,x]   R(u,x) = {u,x}, R(x,v) = {x,v}, R(u,v) ≠ {u,v}  ⇒  x ∈ R(u,v)
//   J2' [u,v,x,y] x ∈ R(u,y), y ∈ R(x,v), R(u,x) = {u,x}, R(x,y) = {x,y},
//                 R(y,v) = {y,v}, R(u,v) ≠ {u,v}  ⇒  x ∈ R(u,v)
//   J3  [u,v,x,y] x ∈ R(u,y), y ∈ R(x,v), x ≠ y, R(u,v) ≠ {u,v}  ⇒  x ∈ R(u,v)
//   J3' [u,v,x,y] x ∈ R(u,y), y ∈ R(x,v), R(x,y) ≠ {x,y}, R(u,v) ≠ {u,v}  ⇒  x ∈ R(u,v)
//
// Reading conventions, applied uniformly:
//  - An equality hypothesis "R(a,b) = {a,b}" means a ≠ b and the stored set is
//    exactly the doubleton; it is the edge relation of the underlying graph.
//  - An inequality "R(a,b) ≠ {a,b}" compares sets literally, so for a = b it
//    reads {a} ≠ {a} and the hypothesis fails.
//  - (J0) and (J0') quantify over pairwise-distinct 4-tuples; the remaining
//    axioms sweep all tuples, whose degenerate cases are vacuous under the
//    two rules above for any (t1)-valid function.
//
// Witnesses are the lexicographically smallest falsifying assignment in the
// bracketed sweep order, so identical inputs always yield identical results.

enum class AxiomId {
    t1, t2, t3, b1, b2, b3, b4, J0, J0p, J1, J2, J2p, J3, J3p
};

inline constexpr std::array<AxiomId, 14> kAllAxioms = {
    AxiomId::t1, AxiomId::t2, AxiomId::t3, AxiomId::b1, AxiomId::b2,
    AxiomId::b3, AxiomId::b4, AxiomId::J0, AxiomId::J0p, AxiomId::J1,
    AxiomId::J2, AxiomId::J2p, AxiomId::J3, AxiomId::J3p};

inline std::string_view axiom_name(AxiomId a) {
    switch (a) {
        case AxiomId::t1: return "t1";
        case AxiomId::t2: return "t2";
        case AxiomId::t3: return "t3";
        case AxiomId::b1: return "b1";
        case AxiomId::b2: return "b2";
        case AxiomId::b3: return "b3";
        case AxiomId::b4: return "b4";
        case AxiomId::J0: return "J0";
        case AxiomId::J0p: return "J0'";
        case AxiomId::J1: return "J1";
        case AxiomId::J2: return "J2";
        case AxiomId::J2p: return "J2'";
        case AxiomId::J3: return "J3";
        case AxiomId::J3p: return "J3'";
    }
    return "?";
}

inline std::optional<AxiomId> parse_axiom(std::string_view name) {
    for (AxiomId a : kAllAxioms)
        if (name == axiom_name(a)) return a;
    // prime axioms also accepted with a 'p' suffix: J0p, J2p, J3p
    if (name == "J0p") return AxiomId::J0p;
    if (name == "J2p") return AxiomId::J2p;
    if (name == "J3p") return AxiomId::J3p;
    return std::nullopt;
}

/// Sweep-variable names for each axiom, in witness order.
inline std::span<const std::string_view> axiom_vars(AxiomId a) {
    static constexpr std::string_view uv[] = {"u", "v"};
    static constexpr std::string_view uvx[] = {"u", "v", "x"};
    static constexpr std::string_view uvxy[] = {"u", "v", "x", "y"};
    static constexpr std::string_view uvw[] = {"u", "v", "w"};
    switch (a) {
        case AxiomId::t1: return uv;
        case AxiomId::t2:
        case AxiomId::t3: return {};
        case AxiomId::b1:
        case AxiomId::b4:
        case AxiomId::J2: return uvx;
        case AxiomId::J1: return uvw;
        default: return uvxy;
    }
}

struct AxiomResult {
    AxiomId axiom = AxiomId::t1;
    bool holds = true;
    std::vector<int> witness;  // assignment in axiom_vars order; empty when holds
    std::uint64_t tuples_checked = 0;
    std::string note;
};

namespace detail {

inline bool edge_hyp(const TransitFunction& r, int a, int b) { return r.edge_pair(a, b); }

inline bool nonpair_hyp(const TransitFunction& r, int a, int b) {
    return r.between(a, b) != pair_set(a, b);
}

inline bool j1_satisfied_at(const TransitFunction& r, int u, int v, int w) {
    const VertexSet ruw = r.between(u, w);
    const VertexSet rvw = r.between(v, w);
    const VertexSet a = ruw & ~rvw;
    const VertexSet b = rvw & ~ruw;
    bool ok = false;
    for_each_vertex(a, [&](int u1) {
        if (ok || !r.edge_pair(u1, w)) return;
        for_each_vertex(b, [&](int v1) {
            if (ok) return;
            if (r.edge_pair(v1, w) && set_contains(r.between(u1, v1), w)) ok = true;
        });
    });
    return ok;
}

}  // namespace detail

/// True iff the assignment (in axiom_vars order) satisfies the axiom's
/// hypotheses and falsifies its conclusion. Used both by the sweep and to
/// replay reported witnesses.
inline bool violates_at(const TransitFunction& r, AxiomId a, std::span<const int> t) {
    using detail::edge_hyp;
    using detail::nonpair_hyp;
    switch (a) {
        case AxiomId::t1:
            return !set_contains(r.between(t[0], t[1]), t[0]);
        case AxiomId::t2:
        case AxiomId::t3:
            return false;
        case AxiomId::b1: {
            const int u = t[0], v = t[1], x = t[2];
            return set_contains(r.between(u, v), x) && x != v &&
                   set_contains(r.between(u, x), v);
        }
        case AxiomId::b2: {
            const int u = t[0], v = t[1], x = t[2], y = t[3];
            return set_contains(r.between(u, v), x) && set_contains(r.between(u, x), y) &&
                   !set_contains(r.between(u, v), y);
        }
        case AxiomId::b3: {
            const int u = t[0], v = t[1], x = t[2], y = t[3];
            return set_contains(r.between(u, v), x) && set_contains(r.between(u, x), y) &&
                   !set_contains(r.between(y, v), x);
        }
        case AxiomId::b4: {
            const int u = t[0], v = t[1], x = t[2];
            return set_contains(r.between(u, v), x) &&
                   (r.between(u, x) & r.between(x, v)) != vertex_bit(x);
        }
        case AxiomId::J0: {
            const int u = t[0], v = t[1], x = t[2], y = t[3];
            if (u == v || u == x || u == y || v == x || v == y || x == y) return false;
            return set_contains(r.between(u, y), x) && set_contains(r.between(x, v), y) &&
                   !set_contains(r.between(u, v), x);
        }
        case AxiomId::J0p: {
            const int u = t[0], v = t[1], x = t[2], y = t[3];
            if (u == v || u == x || u == y || v == x || v == y || x == y) return false;
            const VertexSet corners =
                vertex_bit(u) | vertex_bit(x) | vertex_bit(y) | vertex_bit(v);
            return set_contains(r.between(u, y), x) && set_contains(r.between(x, v), y) &&
                   (r.between(u, y) & r.between(x, v) & ~corners) == 0 &&
                   !set_contains(r.between(u, v), x);
        }
        case AxiomId::J1: {
            const int u = t[0], v = t[1], w = t[2];
            if (w == u || w == v || !set_contains(r.between(u, v), w)) return false;
            return !detail::j1_satisfied_at(r, u, v, w);
        }
        case AxiomId::J2: {
            const int u = t[0], v = t[1], x = t[2];
            return edge_hyp(r, u, x) && edge_hyp(r, x, v) && nonpair_hyp(r, u, v) &&
                   !set_contains(r.between(u, v), x);
        }
        case AxiomId::J2p: {
            const int u = t[0], v = t[1], x = t[2], y = t[3];
            return edge_hyp(r, u, x) && edge_hyp(r, x, y) && edge_hyp(r, y, v) &&
                   set_contains(r.between(u, y), x) && set_contains(r.between(x, v), y) &&
                   nonpair_hyp(r, u, v) && !set_contains(r.between(u, v), x);
        }
        case AxiomId::J3: {
            const int u = t[0], v = t[1], x = t[2], y = t[3];
            return x != y && set_contains(r.between(u, y), x) &&
                   set_contains(r.between(x, v), y) && nonpair_hyp(r, u, v) &&
                   !set_contains(r.between(u, v), x);
        }
        case AxiomId::J3p: {
            const int u = t[0], v = t[1], x = t[2], y = t[3];
            return set_contains(r.between(u, y), x) && set_contains(r.between(x, v), y) &&
                   nonpair_hyp(r, x, y) && nonpair_hyp(r, u, v) &&
                   !set_contains(r.between(u, v), x);
        }
    }
    return false;
}

inline AxiomResult check_axiom(const TransitFunction& r, AxiomId a) {
    AxiomResult out;
    out.axiom = a;
    const int n = r.ground_size();

    if (a == AxiomId::t2 || a == AxiomId::t3) {
        out.note = a == AxiomId::t2 ? "structural: stored per unordered pair"
                                    : "structural: diagonal fixed at {u}";
        return out;
    }

    const int arity = static_cast<int>(axiom_vars(a).size());
    std::array<int, 4> t{};
    auto sweep = [&](auto&& self, int depth) -> bool {
        if (depth == arity) {
            ++out.tuples_checked;
            return violates_at(r, a, std::span<const int>(t.data(), static_cast<std::size_t>(arity)));
        }
        for (int v = 0; v < n; ++v) {
            t[static_cast<std::size_t>(depth)] = v;
            if (self(self, depth + 1)) return true;
        }
        return false;
    };
    if (sweep(sweep, 0)) {
        out.holds = false;
        out.witness.assign(t.begin(), t.begin() + arity);
    }
    return out;
}

inline constexpr int kProfileCap = 32;

struct AxiomProfile {
    std::array<AxiomResult, kAllAxioms.size()> results;

    const AxiomResult& operator[](AxiomId a) const {
        return results[static_cast<std::size_t>(a)];
    }
    bool holds(AxiomId a) const { return (*this)[a].holds; }
};

inline AxiomProfile check_profile(const TransitFunction& r) {
    if (r.ground_size() > kProfileCap)
        throw capability_error("axiom profiles are enforced for n <= " +
                               std::to_string(kProfileCap));
    AxiomProfile p;
    for (AxiomId a : kAllAxioms) p.results[static_cast<std::size_t>(a)] = check_axiom(r, a);
    return p;
}

enum class ImplicationVerdict { vacuous, consistent, counterexample };

struct ImplicationOutcome {
    ImplicationVerdict verdict = ImplicationVerdict::vacuous;
    std::optional<AxiomResult> failed_conclusion;
};

/// "Vacuous" if some premise fails on R, "consistent" if premises and
/// conclusion hold, otherwise a counterexample carrying the conclusion's
/// falsifying witness.
inline ImplicationOutcome implication_check(const TransitFunction& r,
                                            std::span<const AxiomId> premises,
                                            AxiomId conclusion) {
    for (AxiomId p : premises)
        if (!check_axiom(r, p).holds) return {ImplicationVerdict::vacuous, std::nullopt};
    AxiomResult c = check_axiom(r, conclusion);
    if (c.holds) return {ImplicationVerdict::consistent, std::nullopt};
    return {ImplicationVerdict::counterexample, std::move(c)};
}

/// Pure axiom-to-axiom implications; (t1) rides along as the transit-function
/// premise, (t2)/(t3) being structural.
struct ImplicationRow {
    std::string_view name;
    std::vector<AxiomId> premises;
    AxiomId conclusion;
};

inline const std::vector<ImplicationRow>& implication_lattice() {
    using A = AxiomId;
    static const std::vector<ImplicationRow> rows = {
        {"t1,b4 => t3", {A::t1, A::b4}, A::t3},
        {"t1,b3 => b4", {A::t1, A::b3}, A::b4},
        {"t1,b4 => b1", {A::t1, A::b4}, A::b1},
        {"t1,b3 => b1", {A::t1, A::b3}, A::b1},
        {"J0 => J2'", {A::t1, A::J0}, A::J2p},
        {"J0 => J3'", {A::t1, A::J0}, A::J3p},
        {"J0 => J0'", {A::t1, A::J0}, A::J0p},
        {"J3 => J2'", {A::t1, A::J3}, A::J2p},
        {"J3 => J3'", {A::t1, A::J3}, A::J3p},
        {"b2,b3 => J1", {A::t1, A::b2, A::b3}, A::J1},
        {"J1,b2 => b1", {A::t1, A::J1, A::b2}, A::b1},
    };
    return rows;
}

/// Witness rendered with the function's vertex labels, e.g. "u=a, v=d, x=b, y=c".
inline std::string render_witness(const TransitFunction& r, const AxiomResult& res) {
    if (res.holds) return "";
    std::string out;
    auto vars = axiom_vars(res.axiom);
    for (std::size_t i = 0; i < res.witness.size(); ++i) {
        if (i) out += ", ";
        out += std::string(vars[i]) + "=" + r.vertex_label(res.witness[i]);
    }
    return out;
}

}  // namespace transit
