#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "transit/axioms.hpp"
#include "transit/fixtures.hpp"
#include "transit/graph6.hpp"
#include "transit/parallel.hpp"
#include "transit/recognizers.hpp"
#include "transit/sampling.hpp"

namespace transit {

// Executable registry of the claims validated by this library. GRAPH claims
// are equivalences about the interval function of a connected graph; TF
// claims are implications about an arbitrary transit function (its t-axioms
// are implicit premises). Two reconstruction characterizations accept both
// instance kinds.
enum class ClaimId {
    IMP_T1B4_T3,
    IMP_B3_B4_B1,
    PROP_J2P,
    LEM_DHG,
    THM_HHD3FAN,
    THM_J3_HHP,
    THM_J2PJ3P_DH,
    LEM_HHD3FAN_GR,
    THM_J0_PTOLEMAIC,
    THM_J0J2_CNFREE,
    LEM_B1B2_CONN,
    LEM_J0B3_B2CONN,
    THM_B3J0J2_PTOL_R_EQ_I,
    THM_PTOL_CH,
    IMP_J0_J0P,
    THM_J0P_BRIDGED,
    PROP_B2B3_J1,
    PROP_J1B2_B1,
    THM_INDUCED,
    THM_DISH,
    THM_DISH1,
    THM_DH_CH
};

inline constexpr std::array<ClaimId, 22> kAllClaims = {
    ClaimId::IMP_T1B4_T3,    ClaimId::IMP_B3_B4_B1,   ClaimId::PROP_J2P,
    ClaimId::LEM_DHG,        ClaimId::THM_HHD3FAN,    ClaimId::THM_J3_HHP,
    ClaimId::THM_J2PJ3P_DH,  ClaimId::LEM_HHD3FAN_GR, ClaimId::THM_J0_PTOLEMAIC,
    ClaimId::THM_J0J2_CNFREE, ClaimId::LEM_B1B2_CONN, ClaimId::LEM_J0B3_B2CONN,
    ClaimId::THM_B3J0J2_PTOL_R_EQ_I, ClaimId::THM_PTOL_CH, ClaimId::IMP_J0_J0P,
    ClaimId::THM_J0P_BRIDGED, ClaimId::PROP_B2B3_J1,  ClaimId::PROP_J1B2_B1,
    ClaimId::THM_INDUCED,    ClaimId::THM_DISH,       ClaimId::THM_DISH1,
    ClaimId::THM_DH_CH};

inline std::string_view claim_name(ClaimId c) {
    switch (c) {
        case ClaimId::IMP_T1B4_T3: return "IMP_T1B4_T3";
        case ClaimId::IMP_B3_B4_B1: return "IMP_B3_B4_B1";
        case ClaimId::PROP_J2P: return "PROP_J2P";
        case ClaimId::LEM_DHG: return "LEM_DHG";
        case ClaimId::THM_HHD3FAN: return "THM_HHD3FAN";
        case ClaimId::THM_J3_HHP: return "THM_J3_HHP";
        case ClaimId::THM_J2PJ3P_DH: return "THM_J2PJ3P_DH";
        case ClaimId::LEM_HHD3FAN_GR: return "LEM_HHD3FAN_GR";
        case ClaimId::THM_J0_PTOLEMAIC: return "THM_J0_PTOLEMAIC";
        case ClaimId::THM_J0J2_CNFREE: return "THM_J0J2_CNFREE";
        case ClaimId::LEM_B1B2_CONN: return "LEM_B1B2_CONN";
        case ClaimId::LEM_J0B3_B2CONN: return "LEM_J0B3_B2CONN";
        case ClaimId::THM_B3J0J2_PTOL_R_EQ_I: return "THM_B3J0J2_PTOL_R_EQ_I";
        case ClaimId::THM_PTOL_CH: return "THM_PTOL_CH";
        case ClaimId::IMP_J0_J0P: return "IMP_J0_J0P";
        case ClaimId::THM_J0P_BRIDGED: return "THM_J0P_BRIDGED";
        case ClaimId::PROP_B2B3_J1: return "PROP_B2B3_J1";
        case ClaimId::PROP_J1B2_B1: return "PROP_J1B2_B1";
        case ClaimId::THM_INDUCED: return "THM_INDUCED";
        case ClaimId::THM_DISH: return "THM_DISH";
        case ClaimId::THM_DISH1: return "THM_DISH1";
        case ClaimId::THM_DH_CH: return "THM_DH_CH";
    }
    return "?";
}

inline std::optional<ClaimId> parse_claim(std::string_view name) {
    for (ClaimId c : kAllClaims)
        if (claim_name(c) == name) return c;
    return std::nullopt;
}

enum class ClaimKind { graph, tf, both };

inline ClaimKind claim_kind(ClaimId c) {
    switch (c) {
        case ClaimId::PROP_J2P:
        case ClaimId::THM_HHD3FAN:
        case ClaimId::THM_J3_HHP:
        case ClaimId::THM_J2PJ3P_DH:
        case ClaimId::THM_J0_PTOLEMAIC:
        case ClaimId::THM_J0P_BRIDGED:
            return ClaimKind::graph;
        case ClaimId::THM_PTOL_CH:
        case ClaimId::THM_DH_CH:
            return ClaimKind::both;
        default:
            return ClaimKind::tf;
    }
}

enum class Verdict { consistent, vacuous, counterexample };

inline std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::consistent: return "consistent";
        case Verdict::vacuous: return "vacuous";
        case Verdict::counterexample: return "counterexample";
    }
    return "?";
}

struct ClaimWitness {
    std::string detail;                        // human-readable account
    std::optional<AxiomResult> axiom;          // failed axiom with its witness
    std::optional<PatternOccurrence> pattern;  // pattern refuting a freeness claim
    std::optional<std::pair<int, int>> pair;   // first pair where two functions differ
};

struct ClaimOutcome {
    ClaimId claim = ClaimId::PROP_J2P;
    std::string instance;
    Verdict verdict = Verdict::consistent;
    std::optional<ClaimWitness> witness;
};

namespace detail {

inline bool has_induced_c5(const Graph& g) {
    for (const CycleOccurrence& c : enumerate_induced_cycles(g, 5))
        if (c.length() == 5) return true;
    return false;
}

inline bool chordal_by_cycles(const Graph& g) {
    return enumerate_induced_cycles(g, 4).empty();
}

inline bool pattern_free(const Graph& g, std::initializer_list<PatternId> which) {
    for (PatternId p : which)
        if (find_induced_pattern(g, p)) return false;
    return true;
}

inline ClaimOutcome consistent_outcome(ClaimId c, std::string instance) {
    return {c, std::move(instance), Verdict::consistent, std::nullopt};
}

inline ClaimOutcome vacuous_outcome(ClaimId c, std::string instance) {
    return {c, std::move(instance), Verdict::vacuous, std::nullopt};
}

inline ClaimOutcome cex(ClaimId c, std::string instance, ClaimWitness w) {
    return {c, std::move(instance), Verdict::counterexample, std::move(w)};
}

// Evaluates one side of an equivalence between an axiom set on I_G and a
// class property, producing a counterexample when the two sides disagree.
struct IffSides {
    bool axioms_hold;
    std::optional<AxiomResult> failed_axiom;
    bool class_holds;
    std::string class_desc;
    std::optional<PatternOccurrence> class_witness;
};

inline ClaimOutcome iff_outcome(ClaimId c, std::string instance, const IffSides& s) {
    if (s.axioms_hold == s.class_holds) return consistent_outcome(c, std::move(instance));
    ClaimWitness w;
    if (s.axioms_hold) {
        w.detail = "axioms hold on I but " + s.class_desc + " fails";
        w.pattern = s.class_witness;
    } else {
        w.detail = s.class_desc + " holds but an axiom fails on I";
        w.axiom = s.failed_axiom;
    }
    return cex(c, std::move(instance), std::move(w));
}

inline bool axioms_hold_on(const TransitFunction& r, std::initializer_list<AxiomId> axioms,
                           std::optional<AxiomResult>* first_failure = nullptr) {
    for (AxiomId a : axioms) {
        AxiomResult res = check_axiom(r, a);
        if (!res.holds) {
            if (first_failure) *first_failure = std::move(res);
            return false;
        }
    }
    return true;
}

inline bool axioms_hold_on_span(const TransitFunction& r, std::span<const AxiomId> axioms,
                                std::optional<AxiomResult>* first_failure = nullptr) {
    for (AxiomId a : axioms) {
        AxiomResult res = check_axiom(r, a);
        if (!res.holds) {
            if (first_failure) *first_failure = std::move(res);
            return false;
        }
    }
    return true;
}

}  // namespace detail

/// Equivalences about I_G, evaluated in both directions on one connected graph.
inline ClaimOutcome verify_graph_claim(ClaimId c, const Graph& g, std::string instance = "") {
    using namespace detail;
    if (claim_kind(c) == ClaimKind::tf)
        throw usage_error(std::string(claim_name(c)) + " is a transit-function claim");
    if (!is_connected(g)) throw input_error("graph claims are stated over connected graphs");
    if (instance.empty()) instance = encode_graph6(g);

    const TransitFunction i = interval_function(g);
    switch (c) {
        case ClaimId::PROP_J2P: {
            IffSides s;
            std::optional<AxiomResult> fail;
            s.axioms_hold = axioms_hold_on(i, {AxiomId::J2p}, &fail);
            s.failed_axiom = fail;
            s.class_desc = "house/C5/3-fan-freeness";
            if (auto h = find_induced_pattern(g, PatternId::house))
                s.class_witness = h;
            else if (has_induced_c5(g))
                s.class_witness = find_induced_pattern(g, PatternId::hole);
            else if (auto f = find_induced_pattern(g, PatternId::fan3))
                s.class_witness = f;
            s.class_holds = !s.class_witness;
            return iff_outcome(c, std::move(instance), s);
        }
        case ClaimId::THM_J3_HHP: {
            IffSides s;
            std::optional<AxiomResult> fail;
            s.axioms_hold = axioms_hold_on(i, {AxiomId::J3}, &fail);
            s.failed_axiom = fail;
            RecognitionReport rep = is_hhp3fan_free(g);
            s.class_holds = rep.member;
            s.class_desc = "HHP3fan-freeness";
            s.class_witness = rep.forbidden;
            return iff_outcome(c, std::move(instance), s);
        }
        case ClaimId::THM_J2PJ3P_DH: {
            IffSides s;
            std::optional<AxiomResult> fail;
            s.axioms_hold = axioms_hold_on(i, {AxiomId::J2p, AxiomId::J3p}, &fail);
            s.failed_axiom = fail;
            RecognitionReport rep = is_distance_hereditary(g);
            s.class_holds = rep.member;
            s.class_desc = "distance-hereditariness";
            s.class_witness = rep.forbidden;
            return iff_outcome(c, std::move(instance), s);
        }
        case ClaimId::THM_J0_PTOLEMAIC: {
            IffSides s;
            std::optional<AxiomResult> fail;
            s.axioms_hold = axioms_hold_on(i, {AxiomId::J0}, &fail);
            s.failed_axiom = fail;
            RecognitionReport rep = is_ptolemaic(g);
            s.class_holds = rep.member;
            s.class_desc = "Ptolemaicity";
            s.class_witness = rep.forbidden;
            return iff_outcome(c, std::move(instance), s);
        }
        case ClaimId::THM_J0P_BRIDGED: {
            IffSides s;
            std::optional<AxiomResult> fail;
            s.axioms_hold = axioms_hold_on(i, {AxiomId::J0p}, &fail);
            s.failed_axiom = fail;
            RecognitionReport rep = is_bridged(g);
            s.class_holds = rep.member;
            s.class_desc = "bridgedness";
            s.class_witness = rep.forbidden;
            return iff_outcome(c, std::move(instance), s);
        }
        case ClaimId::THM_HHD3FAN: {
            const bool by_pattern = is_distance_hereditary(g).member;
            const bool by_pruning = dh_oracle_pruning(g);
            const bool def_applies = g.order() <= kDefinitionalCap;
            const bool by_definition = def_applies ? dh_oracle_definition(g) : by_pattern;
            if (by_pattern == by_pruning && by_pattern == by_definition)
                return consistent_outcome(c, std::move(instance));
            ClaimWitness w;
            w.detail = "DH routes disagree: pattern=" + std::to_string(by_pattern) +
                       " pruning=" + std::to_string(by_pruning) +
                       (def_applies ? " definitional=" + std::to_string(by_definition) : "");
            return cex(c, std::move(instance), std::move(w));
        }
        case ClaimId::THM_PTOL_CH: {
            IffSides s;
            std::optional<AxiomResult> fail;
            s.axioms_hold = axioms_hold_on(i, {AxiomId::b3, AxiomId::J0, AxiomId::J2}, &fail);
            s.failed_axiom = fail;
            RecognitionReport rep = is_ptolemaic(g);
            s.class_holds = rep.member;
            s.class_desc = "Ptolemaicity";
            s.class_witness = rep.forbidden;
            return iff_outcome(c, std::move(instance), s);
        }
        case ClaimId::THM_DH_CH: {
            IffSides s;
            std::optional<AxiomResult> fail;
            s.axioms_hold = axioms_hold_on(
                i, {AxiomId::b2, AxiomId::b3, AxiomId::J2, AxiomId::J2p, AxiomId::J3p}, &fail);
            s.failed_axiom = fail;
            RecognitionReport rep = is_distance_hereditary(g);
            s.class_holds = rep.member;
            s.class_desc = "distance-hereditariness";
            s.class_witness = rep.forbidden;
            return iff_outcome(c, std::move(instance), s);
        }
        default:
            throw usage_error("unhandled graph claim");
    }
}

namespace detail {

struct TfConclusionCheck {
    bool ok = true;
    ClaimWitness witness;
};

inline TfConclusionCheck conclude_pattern_free(const Graph& gr,
                                               std::initializer_list<PatternId> which,
                                               const std::string& what) {
    for (PatternId p : which)
        if (auto occ = find_induced_pattern(gr, p)) {
            TfConclusionCheck bad;
            bad.ok = false;
            bad.witness.detail = "underlying graph is not " + what + ": found " +
                                 std::string(pattern_name(p));
            bad.witness.pattern = occ;
            return bad;
        }
    return {};
}

inline TfConclusionCheck conclude_connected(const Graph& gr) {
    if (is_connected(gr)) return {};
    TfConclusionCheck bad;
    bad.ok = false;
    bad.witness.detail = "underlying graph is disconnected";
    return bad;
}

inline TfConclusionCheck conclude_equals(const TransitFunction& r, const TransitFunction& other,
                                         const std::string& what) {
    const int n = r.ground_size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (r.between(u, v) != other.between(u, v)) {
                TfConclusionCheck bad;
                bad.ok = false;
                bad.witness.detail = "R differs from " + what + " at pair {" +
                                     r.vertex_label(u) + "," + r.vertex_label(v) + "}";
                bad.witness.pair = {u, v};
                return bad;
            }
    return {};
}

inline TfConclusionCheck conclude_axiom(const TransitFunction& r, AxiomId a) {
    AxiomResult res = check_axiom(r, a);
    if (res.holds) return {};
    TfConclusionCheck bad;
    bad.ok = false;
    bad.witness.detail = "axiom " + std::string(axiom_name(a)) + " fails";
    bad.witness.axiom = std::move(res);
    return bad;
}

}  // namespace detail

/// Implications about an arbitrary transit function. The t-axioms are
/// implicit premises: a function that is not (t1)-valid makes every claim
/// vacuous, exactly as "let R be a transit function" requires.
inline ClaimOutcome verify_tf_claim(ClaimId c, const TransitFunction& r,
                                    std::string instance = "") {
    using namespace detail;
    using A = AxiomId;
    if (claim_kind(c) == ClaimKind::graph)
        throw usage_error(std::string(claim_name(c)) + " is a graph claim");
    if (instance.empty()) instance = "tf";

    if (!validate_t(r).all_ok()) return vacuous_outcome(c, std::move(instance));

    auto premises_hold = [&](std::initializer_list<A> axioms) {
        return axioms_hold_on(r, axioms);
    };
    auto conclude_all = [&](std::initializer_list<TfConclusionCheck> checks)
        -> std::optional<ClaimWitness> {
        for (const TfConclusionCheck& chk : checks)
            if (!chk.ok) return chk.witness;
        return std::nullopt;
    };
    auto implication = [&](std::initializer_list<A> premises,
                           std::initializer_list<A> conclusions) -> ClaimOutcome {
        if (!premises_hold(premises)) return vacuous_outcome(c, instance);
        for (A a : conclusions) {
            TfConclusionCheck chk = conclude_axiom(r, a);
            if (!chk.ok) return cex(c, instance, std::move(chk.witness));
        }
        return consistent_outcome(c, instance);
    };

    const Graph gr = underlying_graph(r);

    switch (c) {
        case ClaimId::IMP_T1B4_T3:
            return implication({A::t1, A::b4}, {A::t3});
        case ClaimId::IMP_B3_B4_B1: {
            const bool from_b3 = premises_hold({A::t1, A::b3});
            const bool from_b4 = premises_hold({A::t1, A::b4});
            if (!from_b3 && !from_b4) return vacuous_outcome(c, std::move(instance));
            if (from_b3) {
                TfConclusionCheck chk = conclude_axiom(r, A::b4);
                if (!chk.ok) return cex(c, std::move(instance), std::move(chk.witness));
            }
            TfConclusionCheck chk = conclude_axiom(r, A::b1);
            if (!chk.ok) return cex(c, std::move(instance), std::move(chk.witness));
            return consistent_outcome(c, std::move(instance));
        }
        case ClaimId::IMP_J0_J0P:
            return implication({A::J0}, {A::J0p});
        case ClaimId::PROP_B2B3_J1:
            return implication({A::b2, A::b3}, {A::J1});
        case ClaimId::PROP_J1B2_B1:
            return implication({A::J1, A::b2}, {A::b1});
        case ClaimId::LEM_DHG: {
            if (!premises_hold({A::b1, A::J2, A::J2p, A::J3p}))
                return vacuous_outcome(c, std::move(instance));
            if (auto w = conclude_all({conclude_pattern_free(
                    gr, {PatternId::house, PatternId::hole, PatternId::domino}, "HHD-free")}))
                return cex(c, std::move(instance), std::move(*w));
            return consistent_outcome(c, std::move(instance));
        }
        case ClaimId::LEM_HHD3FAN_GR: {
            if (!premises_hold({A::b3, A::J2, A::J2p, A::J3p}))
                return vacuous_outcome(c, std::move(instance));
            if (auto w = conclude_all({conclude_pattern_free(
                    gr,
                    {PatternId::house, PatternId::hole, PatternId::domino, PatternId::fan3},
                    "HHD3fan-free")}))
                return cex(c, std::move(instance), std::move(*w));
            return consistent_outcome(c, std::move(instance));
        }
        case ClaimId::THM_J0J2_CNFREE: {
            if (!premises_hold({A::J0, A::J2})) return vacuous_outcome(c, std::move(instance));
            if (auto occ = find_induced_pattern(gr, PatternId::induced_c4_plus)) {
                ClaimWitness w;
                w.detail = "underlying graph has an induced cycle of length >= 4";
                w.pattern = occ;
                return cex(c, std::move(instance), std::move(w));
            }
            return consistent_outcome(c, std::move(instance));
        }
        case ClaimId::LEM_B1B2_CONN: {
            if (!premises_hold({A::b1, A::b2})) return vacuous_outcome(c, std::move(instance));
            if (auto w = conclude_all({conclude_connected(gr)}))
                return cex(c, std::move(instance), std::move(*w));
            return consistent_outcome(c, std::move(instance));
        }
        case ClaimId::LEM_J0B3_B2CONN: {
            if (!premises_hold({A::J0, A::b3})) return vacuous_outcome(c, std::move(instance));
            if (auto w = conclude_all({conclude_axiom(r, A::b2), conclude_connected(gr)}))
                return cex(c, std::move(instance), std::move(*w));
            return consistent_outcome(c, std::move(instance));
        }
        case ClaimId::THM_B3J0J2_PTOL_R_EQ_I: {
            if (!premises_hold({A::b3, A::J0, A::J2}))
                return vacuous_outcome(c, std::move(instance));
            TfConclusionCheck conn = conclude_connected(gr);
            if (!conn.ok) return cex(c, std::move(instance), std::move(conn.witness));
            RecognitionReport rep = is_ptolemaic(gr);
            if (!rep.member) {
                ClaimWitness w;
                w.detail = "underlying graph is not Ptolemaic";
                w.pattern = rep.forbidden;
                return cex(c, std::move(instance), std::move(w));
            }
            TfConclusionCheck eq = conclude_equals(r, interval_function(gr),
                                                   "the interval function of G_R");
            if (!eq.ok) return cex(c, std::move(instance), std::move(eq.witness));
            return consistent_outcome(c, std::move(instance));
        }
        case ClaimId::THM_PTOL_CH:
        case ClaimId::THM_DH_CH: {
            const bool ptolemaic_form = c == ClaimId::THM_PTOL_CH;
            static constexpr A ptol_axioms[] = {A::b3, A::J0, A::J2};
            static constexpr A dh_axioms[] = {A::b2, A::b3, A::J2, A::J2p, A::J3p};
            const std::span<const A> axioms =
                ptolemaic_form ? std::span<const A>(ptol_axioms) : std::span<const A>(dh_axioms);
            const bool forward_fires = axioms_hold_on_span(r, axioms);
            bool class_ok = false;
            RecognitionReport rep;
            const bool connected = is_connected(gr);
            if (connected)
                rep = ptolemaic_form ? is_ptolemaic(gr) : is_distance_hereditary(gr);
            class_ok = connected && rep.member;
            const bool equals_i = connected && r == interval_function(gr);
            const bool backward_fires = class_ok && equals_i;

            if (!forward_fires && !backward_fires)
                return vacuous_outcome(c, std::move(instance));
            if (forward_fires) {
                if (!connected)
                    return cex(c, std::move(instance),
                               {"axioms hold but underlying graph is disconnected", {}, {}, {}});
                if (!rep.member) {
                    ClaimWitness w;
                    w.detail = ptolemaic_form
                                   ? "axioms hold but G_R is not Ptolemaic"
                                   : "axioms hold but G_R is not distance-hereditary";
                    w.pattern = rep.forbidden;
                    return cex(c, std::move(instance), std::move(w));
                }
                TfConclusionCheck eq = conclude_equals(r, interval_function(gr),
                                                       "the interval function of G_R");
                if (!eq.ok) return cex(c, std::move(instance), std::move(eq.witness));
            }
            if (backward_fires) {
                std::optional<AxiomResult> fail;
                if (!axioms_hold_on_span(r, axioms, &fail)) {
                    ClaimWitness w;
                    w.detail = "R is the interval function of its " +
                               std::string(ptolemaic_form ? "Ptolemaic" : "distance-hereditary") +
                               " underlying graph but an axiom fails";
                    w.axiom = std::move(fail);
                    return cex(c, std::move(instance), std::move(w));
                }
            }
            return consistent_outcome(c, std::move(instance));
        }
        case ClaimId::THM_INDUCED:
        case ClaimId::THM_DISH: {
            const bool old_form = c == ClaimId::THM_INDUCED;
            const bool fires =
                old_form ? premises_hold({A::b1, A::b2, A::J1, A::J2, A::J2p, A::J3p})
                         : premises_hold({A::b2, A::b3, A::J2, A::J2p, A::J3p});
            if (!fires) return vacuous_outcome(c, std::move(instance));
            TfConclusionCheck freeness =
                old_form ? conclude_pattern_free(
                               gr, {PatternId::house, PatternId::hole, PatternId::domino},
                               "HHD-free")
                         : conclude_pattern_free(gr,
                                                 {PatternId::house, PatternId::hole,
                                                  PatternId::domino, PatternId::fan3},
                                                 "HHD3fan-free");
            if (!freeness.ok) return cex(c, std::move(instance), std::move(freeness.witness));
            TfConclusionCheck conn = conclude_connected(gr);
            if (!conn.ok) return cex(c, std::move(instance), std::move(conn.witness));
            if (gr.order() > kInducedPathCap)
                throw capability_error("induced-path conclusion needs n <= " +
                                       std::to_string(kInducedPathCap));
            TfConclusionCheck eq = conclude_equals(r, induced_path_function(gr),
                                                   "the induced-path function of G_R");
            if (!eq.ok) return cex(c, std::move(instance), std::move(eq.witness));
            return consistent_outcome(c, std::move(instance));
        }
        case ClaimId::THM_DISH1: {
            if (!premises_hold({A::b2, A::b3, A::J2, A::J2p, A::J3p}))
                return vacuous_outcome(c, std::move(instance));
            TfConclusionCheck freeness = conclude_pattern_free(
                gr, {PatternId::house, PatternId::hole, PatternId::domino, PatternId::fan3},
                "distance-hereditary");
            if (!freeness.ok) return cex(c, std::move(instance), std::move(freeness.witness));
            TfConclusionCheck conn = conclude_connected(gr);
            if (!conn.ok) return cex(c, std::move(instance), std::move(conn.witness));
            TfConclusionCheck eq = conclude_equals(r, interval_function(gr),
                                                   "the interval function of G_R");
            if (!eq.ok) return cex(c, std::move(instance), std::move(eq.witness));
            return consistent_outcome(c, std::move(instance));
        }
        default:
            throw usage_error("unhandled transit-function claim");
    }
}

// ---------------------------------------------------------------------------
// Corpus runs

struct CorpusSpec {
    int exhaustive_max_n = 6;
    int random_count = 1000;
    int random_n_lo = 7;
    int random_n_hi = 10;
    std::vector<double> edge_probs = {0.2, 0.4, 0.6};
    int tf_samples_per_n = 2000;
    std::vector<int> tf_ns = {4, 5, 6};
    std::uint64_t seed = 42;
    bool include_fixtures = true;
    bool include_named_intervals = true;
};

struct ClaimStats {
    ClaimId claim = ClaimId::PROP_J2P;
    long instances = 0;
    long consistent = 0;
    long vacuous = 0;
    std::vector<ClaimOutcome> counterexamples;
};

struct CorpusReport {
    std::vector<ClaimStats> claims;
    long graph_instances = 0;
    long tf_instances = 0;

    long total_counterexamples() const {
        long k = 0;
        for (const ClaimStats& s : claims) k += static_cast<long>(s.counterexamples.size());
        return k;
    }
};

/// Standing interval-function instances. They keep the strong-premise claims
/// non-vacuous in every default run: uniform samples rarely satisfy the
/// geometric axioms, but I of a Ptolemaic or distance-hereditary graph always
/// does.
inline std::vector<std::pair<std::string, TransitFunction>> named_interval_instances() {
    std::vector<std::pair<std::string, TransitFunction>> out;
    auto add = [&](const Graph& g) {
        out.emplace_back("interval:" + encode_graph6(g), interval_function(g));
    };
    add(path_graph(5));
    add(complete_graph(4));
    add(cycle_graph(4));
    add(cycle_graph(5));
    add(cycle_graph(6));
    add(house_graph());
    add(domino_graph());
    add(fan3_graph());
    add(pgraph_graph());
    add(Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}));  // two blocks
    return out;
}

namespace detail {

inline void fold_outcome(ClaimStats& stats, ClaimOutcome&& outcome) {
    ++stats.instances;
    switch (outcome.verdict) {
        case Verdict::consistent: ++stats.consistent; break;
        case Verdict::vacuous: ++stats.vacuous; break;
        case Verdict::counterexample: stats.counterexamples.push_back(std::move(outcome)); break;
    }
}

inline void merge_stats(std::vector<ClaimStats>& into, std::vector<ClaimStats>&& from) {
    for (std::size_t i = 0; i < into.size(); ++i) {
        into[i].instances += from[i].instances;
        into[i].consistent += from[i].consistent;
        into[i].vacuous += from[i].vacuous;
        for (auto& cex : from[i].counterexamples)
            into[i].counterexamples.push_back(std::move(cex));
    }
}

}  // namespace detail

/// Runs the selected claims over the corpus described by the spec: graph
/// claims over all labeled connected graphs with n <= exhaustive_max_n plus
/// seeded random connected graphs; transit-function claims over the fixtures,
/// the named interval instances, and seeded samples. Deterministic given the
/// spec; the worker count only partitions the sweep.
inline CorpusReport run_corpus(const std::vector<ClaimId>& claims, const CorpusSpec& spec) {
    if (spec.exhaustive_max_n > 7)
        throw capability_error("exhaustive corpus is guarded at n <= 7");
    std::vector<ClaimId> graph_claims, tf_claims;
    for (ClaimId c : claims) {
        if (claim_kind(c) != ClaimKind::tf) graph_claims.push_back(c);
        if (claim_kind(c) != ClaimKind::graph) tf_claims.push_back(c);
    }

    CorpusReport report;
    report.claims.reserve(claims.size());
    for (ClaimId c : claims) {
        ClaimStats stats;
        stats.claim = c;
        report.claims.push_back(std::move(stats));
    }
    auto stats_of = [&](ClaimId c) -> ClaimStats& {
        for (ClaimStats& s : report.claims)
            if (s.claim == c) return s;
        throw usage_error("claim not in run");
    };

    auto eval_graph = [&](std::vector<ClaimStats>& into, const Graph& g) {
        for (std::size_t i = 0; i < graph_claims.size(); ++i)
            detail::fold_outcome(into[i], verify_graph_claim(graph_claims[i], g));
    };

    struct ExhaustPart {
        std::vector<ClaimStats> per_claim;
        long graphs = 0;
    };

    // exhaustive corpus
    if (!graph_claims.empty()) {
        for (int n = 1; n <= spec.exhaustive_max_n; ++n) {
            const int m = n * (n - 1) / 2;
            auto work = [&](std::uint64_t lo, std::uint64_t hi) {
                ExhaustPart part;
                part.per_claim.assign(graph_claims.size(), ClaimStats{});
                detail::for_each_connected_labeled_range(n, lo, hi, [&](const Graph& g) {
                    eval_graph(part.per_claim, g);
                    ++part.graphs;
                });
                return part;
            };
            auto merge = [&](ExhaustPart& acc, ExhaustPart&& chunk) {
                if (acc.per_claim.empty()) {
                    acc = std::move(chunk);
                    return;
                }
                acc.graphs += chunk.graphs;
                detail::merge_stats(acc.per_claim, std::move(chunk.per_claim));
            };
            ExhaustPart merged =
                parallel_map_merge<ExhaustPart>(std::uint64_t{1} << m, work, merge);
            if (merged.per_claim.empty()) merged.per_claim.assign(graph_claims.size(), ClaimStats{});
            report.graph_instances += merged.graphs;
            for (std::size_t i = 0; i < graph_claims.size(); ++i) {
                ClaimStats& dst = stats_of(graph_claims[i]);
                dst.instances += merged.per_claim[i].instances;
                dst.consistent += merged.per_claim[i].consistent;
                dst.vacuous += merged.per_claim[i].vacuous;
                for (auto& cex : merged.per_claim[i].counterexamples)
                    dst.counterexamples.push_back(std::move(cex));
            }
        }
        // random corpus
        for (int i = 0; i < spec.random_count; ++i) {
            const int span = spec.random_n_hi - spec.random_n_lo + 1;
            const int n = spec.random_n_lo + (span > 0 ? i % span : 0);
            const double p = spec.edge_probs[static_cast<std::size_t>(i) % spec.edge_probs.size()];
            Graph g = random_connected_graph(n, p, spec.seed + static_cast<std::uint64_t>(i));
            ++report.graph_instances;
            for (ClaimId c : graph_claims)
                detail::fold_outcome(stats_of(c), verify_graph_claim(c, g));
        }
    }

    if (!tf_claims.empty()) {
        auto eval_tf = [&](const TransitFunction& r, const std::string& id) {
            ++report.tf_instances;
            for (ClaimId c : tf_claims)
                detail::fold_outcome(stats_of(c), verify_tf_claim(c, r, id));
        };
        if (spec.include_fixtures)
            for (const Fixture& f : all_fixtures()) eval_tf(f.tf, "fixture:" + f.name);
        if (spec.include_named_intervals)
            for (const auto& [id, r] : named_interval_instances()) eval_tf(r, id);
        for (SampleMode mode : {SampleMode::uniform, SampleMode::interval_mutation})
            for (int n : spec.tf_ns)
                for (int i = 0; i < spec.tf_samples_per_n; ++i) {
                    const std::uint64_t s =
                        spec.seed ^ (static_cast<std::uint64_t>(n) << 32) ^
                        (mode == SampleMode::uniform ? 0x55555555ULL : 0xaaaaaaaaULL) ^
                        static_cast<std::uint64_t>(i) * 0x100000001b3ULL;
                    TransitFunction r = sample_transit_function(n, mode, s);
                    eval_tf(r, "sample:" + std::string(sample_mode_name(mode)) + ":n" +
                                   std::to_string(n) + ":" + std::to_string(i));
                }
    }
    return report;
}

/// The five interval-function equivalences validated exhaustively and on the
/// randomized corpus.
inline std::vector<ClaimId> equivalence_claims() {
    return {ClaimId::PROP_J2P, ClaimId::THM_J3_HHP, ClaimId::THM_J2PJ3P_DH,
            ClaimId::THM_J0_PTOLEMAIC, ClaimId::THM_J0P_BRIDGED};
}

}  // namespace transit
