#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "crowell/error.hpp"
#include "crowell/graph.hpp"
#include "crowell/poly.hpp"

namespace crowell {

// A state: a spanning arborescence diverging from the root.  Every vertex
// other than the root keeps exactly one of its two incoming edges, so the
// parent-edge table is the whole state.
struct State {
    int root = 1;
    std::vector<int> parent_edge; // [v] = kept incoming edge id; 0 at the root and at index 0

    bool operator==(const State& o) const = default;

    // The edge ids of the state, ascending: a canonical key.
    std::vector<int> edge_ids() const {
        std::vector<int> ids;
        ids.reserve(parent_edge.size() - 2);
        for (int e : parent_edge)
            if (e != 0) ids.push_back(e);
        std::sort(ids.begin(), ids.end());
        return ids;
    }
};

inline void require_vertex(const CrowellGraph& g, int v) {
    if (v < 1 || v > g.n) throw Error(ErrorKind::NotFound, "no such vertex: " + std::to_string(v));
}

// Number of MinusT edges kept by the state.
inline int state_degree(const CrowellGraph& g, const State& s) {
    int d = 0;
    for (int e : s.parent_edge)
        if (e != 0 && g.edge(e).weight == Weight::MinusT) ++d;
    return d;
}

// w(state) = (-t)^degree.
inline IntPoly state_weight(const CrowellGraph& g, const State& s) {
    return IntPoly::neg_t_power(state_degree(g, s));
}

// True if the parent-edge table is a spanning arborescence diverging from
// s.root: acyclic with every non-root vertex assigned one in-edge.
inline bool is_state(const CrowellGraph& g, const State& s) {
    if (s.root < 1 || s.root > g.n) return false;
    if (static_cast<int>(s.parent_edge.size()) != g.n + 1) return false;
    if (s.parent_edge[static_cast<std::size_t>(s.root)] != 0) return false;
    for (int v = 1; v <= g.n; ++v) {
        if (v == s.root) continue;
        int e = s.parent_edge[static_cast<std::size_t>(v)];
        if (e < 1 || e > g.num_edges() || g.edge(e).head != v) return false;
        // climb towards the root; a revisit of v means a cycle
        int u = g.edge(e).tail, steps = 0;
        while (u != s.root) {
            if (u == v || ++steps > g.n) return false;
            int pe = s.parent_edge[static_cast<std::size_t>(u)];
            if (pe < 1 || pe > g.num_edges()) return false;
            u = g.edge(pe).tail;
        }
    }
    return true;
}

// All states with the given root, in lexicographic order of the in-edge
// choice at vertices 1,2,...,n (root skipped, smaller edge id first).
inline std::vector<State> enumerate_states(const CrowellGraph& g, int root) {
    require_vertex(g, root);
    std::vector<State> out;
    State cur;
    cur.root = root;
    cur.parent_edge.assign(static_cast<std::size_t>(g.n) + 1, 0);

    std::vector<int> order;
    for (int v = 1; v <= g.n; ++v)
        if (v != root) order.push_back(v);

    // Kept edges so far form a forest; edge e into v closes a cycle exactly
    // when the parent chain from its tail reaches v through kept edges.
    auto closes_cycle = [&](int v, int e) {
        int u = g.edge(e).tail;
        while (u != root) {
            if (u == v) return true;
            int pe = cur.parent_edge[static_cast<std::size_t>(u)];
            if (pe == 0) return false;
            u = g.edge(pe).tail;
        }
        return false;
    };

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == order.size()) {
            out.push_back(cur);
            return;
        }
        int v = order[i];
        auto in = g.in_edges(v);
        if (in[0] > in[1]) std::swap(in[0], in[1]);
        for (int e : in) {
            if (closes_cycle(v, e)) continue;
            cur.parent_edge[static_cast<std::size_t>(v)] = e;
            self(self, i + 1);
            cur.parent_edge[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(rec, 0);

    if (out.empty()) throw Error(ErrorKind::NoStates, "no spanning arborescences from this root");
    return out;
}

// The state sum: sum of w(state) over all states with this root.
inline IntPoly state_sum(const CrowellGraph& g, int root) {
    IntPoly sum;
    for (const State& s : enumerate_states(g, root)) sum = sum + state_weight(g, s);
    return sum;
}

// The normalized polynomial: delta = (-t)^m * state_sum, with m chosen so
// delta is a polynomial with nonzero positive constant term.
struct Alexander {
    IntPoly delta;
    int m = 0;
};

inline Alexander alexander(const CrowellGraph& g, int root) {
    IntPoly sum = state_sum(g, root);
    int lo = sum.lowest_power();
    Alexander r;
    r.delta = sum.shift_down(lo);
    if (r.delta.coeff(0) < 0) r.delta = -r.delta;
    r.m = -lo;
    return r;
}

} // namespace crowell
