#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "transit/claims.hpp"

namespace transit {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Edge-list document: {"n": 4, "edges": [[0,1],[1,2]]}

inline Graph graph_from_edge_list(const Json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw input_error("edge-list document needs fields 'n' and 'edges'");
    Graph g(doc.at("n").get<int>());
    for (const Json& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw input_error("edge entries must be pairs [u,v]");
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return g;
}

inline Json graph_to_edge_list(const Graph& g) {
    Json doc;
    doc["n"] = g.order();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    doc["edges"] = std::move(edges);
    return doc;
}

inline Graph parse_edge_list(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("edge-list document: ") + e.what());
    }
    return graph_from_edge_list(doc);
}

// ---------------------------------------------------------------------------
// Transit-function document:
//   {"n": 5, "vertices": ["a","b","c","d","e"], "default": "pair",
//    "entries": [{"u": "a", "v": "c", "set": ["a","b","c","e"]}, ...]}
// Vertices may be named via "vertices" and then referenced by name; with
// default "pair", unlisted pairs keep R(u,v) = {u,v}; with default "none",
// every pair must be listed.

inline TransitFunction tf_from_document(const Json& doc) {
    if (!doc.is_object() || !doc.contains("n"))
        throw input_error("transit-function document needs field 'n'");
    const int n = doc.at("n").get<int>();
    std::vector<std::string> names;
    if (doc.contains("vertices"))
        for (const Json& v : doc.at("vertices")) names.push_back(v.get<std::string>());
    TransitFunction r(n, names);

    auto vertex_of = [&](const Json& j) -> int {
        if (j.is_number_integer()) {
            const int v = j.get<int>();
            if (v < 0 || v >= n) throw input_error("vertex index " + std::to_string(v) +
                                                   " out of range [0," + std::to_string(n) + ")");
            return v;
        }
        const std::string name = j.get<std::string>();
        if (auto idx = r.index_of(name)) return *idx;
        throw input_error("unknown vertex name '" + name + "'");
    };

    const std::string dflt = doc.value("default", "pair");
    if (dflt != "pair" && dflt != "none")
        throw input_error("default rule must be \"pair\" or \"none\"");

    std::vector<bool> listed(static_cast<std::size_t>(n) * n, false);
    if (doc.contains("entries"))
        for (const Json& e : doc.at("entries")) {
            const int u = vertex_of(e.at("u"));
            const int v = vertex_of(e.at("v"));
            if (u == v) throw input_error("entry with u = v is not allowed");
            VertexSet s = 0;
            for (const Json& w : e.at("set")) s |= vertex_bit(vertex_of(w));
            r.set(u, v, s);
            listed[static_cast<std::size_t>(u) * n + v] = true;
            listed[static_cast<std::size_t>(v) * n + u] = true;
        }
    if (dflt == "none")
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!listed[static_cast<std::size_t>(u) * n + v])
                    throw input_error("default \"none\" but pair {" + std::to_string(u) + "," +
                                      std::to_string(v) + "} is unlisted");
    return r;
}

inline Json tf_to_document(const TransitFunction& r) {
    const int n = r.ground_size();
    Json doc;
    doc["n"] = n;
    if (!r.names().empty()) doc["vertices"] = r.names();
    doc["default"] = "none";
    Json entries = Json::array();
    auto label = [&](int v) -> Json {
        if (!r.names().empty()) return Json(r.vertex_label(v));
        return Json(v);
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Json e;
            e["u"] = label(u);
            e["v"] = label(v);
            Json s = Json::array();
            for_each_vertex(r.between(u, v), [&](int w) { s.push_back(label(w)); });
            e["set"] = std::move(s);
            entries.push_back(std::move(e));
        }
    doc["entries"] = std::move(entries);
    return doc;
}

inline TransitFunction parse_tf_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("transit-function document: ") + e.what());
    }
    return tf_from_document(doc);
}

// ---------------------------------------------------------------------------
// Report serialization

inline Json axiom_result_to_json(const TransitFunction& r, const AxiomResult& res) {
    Json j;
    j["axiom"] = std::string(axiom_name(res.axiom));
    j["holds"] = res.holds;
    if (!res.holds) {
        Json w;
        auto vars = axiom_vars(res.axiom);
        for (std::size_t i = 0; i < res.witness.size(); ++i)
            w[std::string(vars[i])] = r.vertex_label(res.witness[i]);
        j["witness"] = std::move(w);
    }
    j["tuples_checked"] = res.tuples_checked;
    if (!res.note.empty()) j["note"] = res.note;
    return j;
}

inline Json pattern_to_json(const PatternOccurrence& occ) {
    Json j;
    j["pattern"] = std::string(pattern_name(occ.pattern));
    j["vertices"] = occ.vertices;
    return j;
}

inline Json recognition_to_json(const RecognitionReport& rep) {
    Json j;
    j["class"] = std::string(class_name(rep.cls));
    j["member"] = rep.member;
    if (rep.forbidden) j["certificate"] = pattern_to_json(*rep.forbidden);
    if (rep.elimination_order) j["certificate"] = Json{{"order", *rep.elimination_order}};
    if (rep.pruning) {
        Json steps = Json::array();
        for (const PruneStep& s : *rep.pruning)
            steps.push_back(Json{{"vertex", s.vertex},
                                 {"kind", std::string(prune_kind_name(s.kind))},
                                 {"partner", s.partner}});
        j["certificate"] = Json{{"order", std::move(steps)}};
    }
    return j;
}

inline Json claim_outcome_to_json(const ClaimOutcome& o) {
    Json j;
    j["claim"] = std::string(claim_name(o.claim));
    j["instance"] = o.instance;
    j["verdict"] = std::string(verdict_name(o.verdict));
    if (o.witness) {
        Json w;
        w["detail"] = o.witness->detail;
        if (o.witness->axiom) {
            Json a;
            a["axiom"] = std::string(axiom_name(o.witness->axiom->axiom));
            a["assignment"] = o.witness->axiom->witness;
            w["axiom"] = std::move(a);
        }
        if (o.witness->pattern) w["pattern"] = pattern_to_json(*o.witness->pattern);
        if (o.witness->pair)
            w["pair"] = Json::array({o.witness->pair->first, o.witness->pair->second});
        j["witness"] = std::move(w);
    }
    return j;
}

inline Json corpus_report_to_json(const CorpusReport& rep) {
    Json j;
    j["graph_instances"] = rep.graph_instances;
    j["tf_instances"] = rep.tf_instances;
    Json claims = Json::array();
    for (const ClaimStats& s : rep.claims) {
        Json c;
        c["claim"] = std::string(claim_name(s.claim));
        c["instances"] = s.instances;
        c["consistent"] = s.consistent;
        c["vacuous"] = s.vacuous;
        Json cexs = Json::array();
        for (const ClaimOutcome& o : s.counterexamples) cexs.push_back(claim_outcome_to_json(o));
        c["counterexamples"] = std::move(cexs);
        claims.push_back(std::move(c));
    }
    j["claims"] = std::move(claims);
    return j;
}

inline Json fixture_report_to_json(const FixtureReport& rep) {
    const Fixture& f = load_fixture(rep.name);
    Json j;
    j["fixture"] = rep.name;
    j["t_valid"] = rep.tval.all_ok();
    Json checks = Json::array();
    for (const FixtureCheck& c : rep.checks) {
        Json e;
        e["axiom"] = std::string(axiom_name(c.axiom));
        e["claimed"] = c.claimed;
        e["engine"] = c.result.holds;
        e["discrepancy"] = c.discrepancy();
        if (!c.result.holds) e["witness"] = render_witness(f.tf, c.result);
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

// ---------------------------------------------------------------------------
// Plain-text tables

inline std::string render_corpus_report_text(const CorpusReport& rep) {
    std::ostringstream out;
    out << "claim                     instances consistent    vacuous counterexamples\n";
    for (const ClaimStats& s : rep.claims) {
        out << std::left << std::setw(26) << claim_name(s.claim) << std::right
            << std::setw(9) << s.instances << std::setw(11) << s.consistent << std::setw(11)
            << s.vacuous << std::setw(16) << s.counterexamples.size() << "\n";
    }
    out << "graphs: " << rep.graph_instances << "  transit functions: " << rep.tf_instances
        << "  counterexamples: " << rep.total_counterexamples() << "\n";
    for (const ClaimStats& s : rep.claims)
        for (const ClaimOutcome& o : s.counterexamples) {
            out << "counterexample " << claim_name(o.claim) << " on " << o.instance;
            if (o.witness) out << ": " << o.witness->detail;
            out << "\n";
        }
    return out.str();
}

inline std::string render_profile_text(const TransitFunction& r, const AxiomProfile& p) {
    std::ostringstream out;
    out << "axiom  holds  witness\n";
    for (AxiomId a : kAllAxioms) {
        const AxiomResult& res = p[a];
        out << std::left << std::setw(7) << axiom_name(a) << std::setw(7)
            << (res.holds ? "yes" : "NO") << render_witness(r, res) << "\n";
    }
    return out.str();
}

}  // namespace transit
