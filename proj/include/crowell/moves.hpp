#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "crowell/error.hpp"
#include "crowell/graph.hpp"
#include "crowell/statespace.hpp"

namespace crowell {

// One terminal edge exchange: at a leaf `vertex`, the tree edge
// `removed_edge` is swapped for the other incoming edge `added_edge`.  The
// two incoming edges always carry distinct weights, so the t-degree moves
// by exactly one.
struct Move {
    int vertex = 0;
    int removed_edge = 0;
    int added_edge = 0;
    int degree_delta = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

// All tree edges whose head is a leaf, as (vertex, edge) pairs in vertex
// order.
inline std::vector<std::pair<int, int>> terminal_edges(const CrowellGraph& g, const State& s) {
    std::vector<bool> has_child(static_cast<std::size_t>(g.n) + 1, false);
    for (int v = 1; v <= g.n; ++v) {
        int e = s.parent_edge[static_cast<std::size_t>(v)];
        if (e != 0) has_child[static_cast<std::size_t>(g.edge(e).tail)] = true;
    }
    std::vector<std::pair<int, int>> out;
    for (int v = 1; v <= g.n; ++v) {
        int e = s.parent_edge[static_cast<std::size_t>(v)];
        if (e != 0 && !has_child[static_cast<std::size_t>(v)])
            out.emplace_back(v, e);
    }
    return out;
}

inline bool is_terminal_vertex(const CrowellGraph& g, const State& s, int v) {
    if (v == s.root || s.parent_edge[static_cast<std::size_t>(v)] == 0) return false;
    for (int u = 1; u <= g.n; ++u) {
        int e = s.parent_edge[static_cast<std::size_t>(u)];
        if (e != 0 && g.edge(e).tail == v) return false;
    }
    return true;
}

// The terminal edge exchange at v: replace v's parent edge by its other
// incoming edge.  Swapping at a leaf can never close a cycle, so the result
// is again a state; the lone exception would be an incoming loop (a kink),
// which reduced diagrams do not have.
inline std::pair<State, Move> exchange_move(const CrowellGraph& g, const State& s, int v) {
    require_vertex(g, v);
    if (!is_terminal_vertex(g, s, v))
        throw Error(ErrorKind::NotTerminal, "vertex " + std::to_string(v) + " is not terminal");
    int removed = s.parent_edge[static_cast<std::size_t>(v)];
    int added = g.other_in_edge(v, removed);
    if (g.edge(added).tail == v)
        throw Error(ErrorKind::KinkVertex, "other incoming edge is a loop");
    State t = s;
    t.parent_edge[static_cast<std::size_t>(v)] = added;
    int delta = (g.edge(added).weight == Weight::MinusT ? 1 : 0) -
                (g.edge(removed).weight == Weight::MinusT ? 1 : 0);
    return {std::move(t), Move{v, removed, added, delta}};
}

inline State exchange(const CrowellGraph& g, const State& s, int v) {
    return exchange_move(g, s, v).first;
}

// Canonical state key: the sorted tree-edge ids, comma-joined.
inline std::string state_key(const State& s) {
    std::vector<int> ids = s.edge_ids();
    std::ostringstream os;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) os << ',';
        os << ids[i];
    }
    return os.str();
}

// Undirected graph over a full state enumeration; one edge per unordered
// state pair related by a terminal edge exchange.  Parallel discoveries
// (each exchange is seen from both endpoints) collapse into one edge whose
// move list keeps the distinct exchange vertices.
struct ExchangeGraph {
    struct Edge {
        int a = 0; // node indices, a < b
        int b = 0;
        std::vector<Move> moves; // as applied to node a, one per exchange vertex
    };

    std::vector<std::string> keys;
    std::vector<int> degrees; // t-degree d(T) per node
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adjacency; // node -> incident edge indices

    std::size_t num_nodes() const { return keys.size(); }
    int node_degree(int i) const { return static_cast<int>(adjacency[static_cast<std::size_t>(i)].size()); }
};

inline ExchangeGraph exchange_graph(const CrowellGraph& g, const std::vector<State>& states) {
    ExchangeGraph xg;
    std::map<std::string, int> index;
    for (const State& s : states) {
        xg.keys.push_back(state_key(s));
        xg.degrees.push_back(state_degree(g, s));
        index.emplace(xg.keys.back(), static_cast<int>(xg.keys.size()) - 1);
    }
    xg.adjacency.assign(states.size(), {});

    std::map<std::pair<int, int>, int> edge_at;
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (auto [v, e] : terminal_edges(g, states[i])) {
            (void)e;
            auto [t, mv] = exchange_move(g, states[i], v);
            auto it = index.find(state_key(t));
            if (it == index.end())
                throw Error(ErrorKind::NotFound, "exchange left the supplied state set");
            int j = it->second;
            int a = std::min(static_cast<int>(i), j);
            int b = std::max(static_cast<int>(i), j);
            Move rec = (a == static_cast<int>(i))
                           ? mv
                           : Move{mv.vertex, mv.added_edge, mv.removed_edge, -mv.degree_delta};
            auto [eit, fresh] = edge_at.emplace(std::make_pair(a, b), static_cast<int>(xg.edges.size()));
            if (fresh) {
                xg.edges.push_back({a, b, {rec}});
                xg.adjacency[static_cast<std::size_t>(a)].push_back(eit->second);
                xg.adjacency[static_cast<std::size_t>(b)].push_back(eit->second);
            } else {
                auto& moves = xg.edges[static_cast<std::size_t>(eit->second)].moves;
                if (std::find(moves.begin(), moves.end(), rec) == moves.end()) moves.push_back(rec);
            }
        }
    }
    return xg;
}

inline bool is_connected(const ExchangeGraph& xg) {
    if (xg.num_nodes() == 0) return false;
    std::vector<bool> seen(xg.num_nodes(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int ei : xg.adjacency[static_cast<std::size_t>(u)]) {
            const auto& e = xg.edges[static_cast<std::size_t>(ei)];
            int t = (e.a == u) ? e.b : e.a;
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = true;
                ++reached;
                q.push(t);
            }
        }
    }
    return reached == xg.num_nodes();
}

// Number of degree-1 nodes.  A value above 2 rules out any compatible
// lattice order: a finite lattice has a single local maximum and a single
// local minimum.
inline int lattice_obstruction(const ExchangeGraph& xg) {
    int count = 0;
    for (std::size_t i = 0; i < xg.num_nodes(); ++i)
        if (xg.node_degree(static_cast<int>(i)) == 1) ++count;
    return count;
}

inline bool is_simple_path(const ExchangeGraph& xg) {
    if (xg.num_nodes() == 0) return false;
    if (xg.num_nodes() == 1) return xg.edges.empty();
    if (xg.edges.size() != xg.num_nodes() - 1 || !is_connected(xg)) return false;
    int leaves = 0;
    for (std::size_t i = 0; i < xg.num_nodes(); ++i) {
        int d = xg.node_degree(static_cast<int>(i));
        if (d > 2 || d == 0) return false;
        if (d == 1) ++leaves;
    }
    return leaves == 2;
}

// DOT rendering: node label = t-degree, tooltip = canonical key, edge label
// = exchange vertex (or vertices).
inline std::string to_dot(const ExchangeGraph& xg) {
    std::ostringstream os;
    os << "graph exchange {\n";
    for (std::size_t i = 0; i < xg.num_nodes(); ++i)
        os << "  n" << i << " [label=\"" << xg.degrees[i] << "\", tooltip=\"" << xg.keys[i]
           << "\"];\n";
    for (const auto& e : xg.edges) {
        os << "  n" << e.a << " -- n" << e.b << " [label=\"";
        for (std::size_t k = 0; k < e.moves.size(); ++k) {
            if (k) os << ',';
            os << 'v' << e.moves[k].vertex;
        }
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace crowell
