#pragma once

// JSON serialization (nlohmann::ordered_json so output is byte-deterministic).
// Every document carries a top-level "schema": 1.

#include <json.hpp>

#include "graph.hpp"
#include "moves.hpp"
#include "statespace.hpp"
#include "torus.hpp"
#include "transform.hpp"

namespace crowell {

using Json = nlohmann::ordered_json;

inline Json graph_json(const CrowellGraph& g) {
    Json j;
    j["schema"] = 1;
    j["vertices"] = Json::array();
    for (int v = 1; v <= g.n; ++v) j["vertices"].push_back(v);
    j["edges"] = Json::array();
    for (const CrowellEdge& e : g.edges) {
        Json je;
        je["id"] = e.id;
        je["tail"] = e.tail;
        je["head"] = e.head;
        je["weight"] = (e.weight == Weight::MinusT) ? "-t" : "+1";
        j["edges"].push_back(je);
    }
    return j;
}

inline Json states_json(const CrowellGraph& g, const std::vector<State>& states) {
    Json j;
    j["schema"] = 1;
    if (!states.empty()) j["root"] = states.front().root;
    j["states"] = Json::array();
    for (const State& s : states) {
        Json js;
        js["key"] = state_key(s);
        js["d"] = state_degree(g, s);
        j["states"].push_back(js);
    }
    return j;
}

inline Json alexander_json(const Alexander& a) {
    Json j;
    j["schema"] = 1;
    j["delta"] = a.delta.coeffs();
    j["m"] = a.m;
    j["str"] = a.delta.str();
    return j;
}

inline Json move_sequence_json(const MoveSequence& seq) {
    Json j;
    j["schema"] = 1;
    j["moves"] = Json::array();
    for (const AnnotatedMove& am : seq.moves) {
        Json jm;
        jm["vertex"] = am.move.vertex;
        jm["removed_edge"] = am.move.removed_edge;
        jm["added_edge"] = am.move.added_edge;
        jm["degree_delta"] = am.move.degree_delta;
        jm["milestone"] = am.milestone;
        jm["phase"] = am.phase;
        jm["cleared_for"] = am.cleared_for;
        jm["depth"] = am.depth;
        j["moves"].push_back(jm);
    }
    return j;
}

inline Json torus_report_json(const TorusReport& r) {
    Json j;
    j["n"] = r.n;
    j["poly_matches"] = r.poly_matches;
    j["plus_cycle"] = r.plus_cycle;
    j["minus_cycle"] = r.minus_cycle;
    j["path_statespace"] = r.path_statespace;
    j["endpoint_leaf_counts"] = {r.endpoint_leaf_counts.first, r.endpoint_leaf_counts.second};
    j["all_pass"] = r.all_pass();
    return j;
}

inline Json torus_verdict_json(const TorusVerdict& v) {
    Json j;
    j["schema"] = 1;
    j["is_torus"] = v.is_torus;
    j["n"] = v.n;
    if (v.report)
        j["report"] = torus_report_json(*v.report);
    else
        j["report"] = nullptr;
    j["diagram_prime"] = v.diagram_prime;
    j["primality_note"] = v.primality_note;
    return j;
}

}  // namespace crowell
