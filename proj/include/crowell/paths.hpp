#pragma once

#include <algorithm>
#include <cstddef>
#include <queue>
#include <string>
#include <vector>

#include "crowell/error.hpp"
#include "crowell/graph.hpp"
#include "crowell/statespace.hpp"

namespace crowell {

// A simple directed path: edges chain tail->head from `from` to `to`.
struct Path {
    int from = 0;
    int to = 0;
    std::vector<int> edges;

    std::vector<int> vertices(const CrowellGraph& g) const {
        std::vector<int> vs{from};
        for (int e : edges) vs.push_back(g.edge(e).head);
        return vs;
    }
};

inline void require_edge(const CrowellGraph& g, int e) {
    if (e < 1 || e > g.num_edges()) throw Error(ErrorKind::NotFound, "no such edge: " + std::to_string(e));
}

namespace detail {

// Face f's boundary edges in directed (tail->head chaining) order.  The
// trace order runs with the edges on one color class and against them on
// the other; reversing the latter restores the directed cycle.
inline std::vector<int> directed_face_cycle(const CrowellGraph& g, int f) {
    const auto& cyc = g.face_cycles[static_cast<std::size_t>(f)];
    std::vector<int> out;
    out.reserve(cyc.size());
    if (cyc.front().second)
        for (auto [e, fwd] : cyc) out.push_back(e);
    else
        for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) out.push_back(it->first);
    return out;
}

// The directed path head(e) -> tail(e) around face f (which must contain e):
// the rest of f's boundary cycle.
inline std::vector<int> detour_along(const CrowellGraph& g, int f, int e) {
    std::vector<int> cyc = directed_face_cycle(g, f);
    auto it = std::find(cyc.begin(), cyc.end(), e);
    if (it == cyc.end()) throw Error(ErrorKind::HypothesisViolation, "edge not on chosen detour face");
    std::size_t i = static_cast<std::size_t>(it - cyc.begin());
    std::vector<int> out;
    for (std::size_t k = 1; k < cyc.size(); ++k) out.push_back(cyc[(i + k) % cyc.size()]);
    return out;
}

// Collapse a directed walk into a simple path: whenever a vertex repeats,
// drop everything between its first and latest visit.
inline Path eliminate_loops(const CrowellGraph& g, int from, const std::vector<int>& walk) {
    std::vector<int> verts{from};
    std::vector<int> edges;
    for (int e : walk) {
        if (g.edge(e).tail != verts.back())
            throw Error(ErrorKind::HypothesisViolation, "walk does not chain");
        int h = g.edge(e).head;
        auto it = std::find(verts.begin(), verts.end(), h);
        if (it != verts.end()) {
            std::size_t keep = static_cast<std::size_t>(it - verts.begin());
            verts.resize(keep + 1);
            edges.resize(keep);
        } else {
            verts.push_back(h);
            edges.push_back(e);
        }
    }
    return Path{from, verts.back(), std::move(edges)};
}

// The corner index k with {k, k+1 mod 4} = {s1, s2}, or -1.
inline int corner_between(int s1, int s2) {
    if ((s1 + 1) % 4 == s2) return s1;
    if ((s2 + 1) % 4 == s1) return s2;
    return -1;
}

} // namespace detail

// A simple directed path root -> v: pick any unoriented path, send each
// wrong-way edge around its left face (whose boundary cycle supplies the
// directed connection head -> tail), then excise revisit loops.
inline Path rooted_path(const CrowellGraph& g, int root, int v) {
    require_vertex(g, root);
    require_vertex(g, v);
    if (root == v) return Path{root, root, {}};

    // undirected BFS, neighbors in edge-id order
    std::vector<std::vector<std::pair<int, bool>>> adj(static_cast<std::size_t>(g.n) + 1);
    for (const CrowellEdge& e : g.edges) {
        adj[static_cast<std::size_t>(e.tail)].emplace_back(e.id, true);
        adj[static_cast<std::size_t>(e.head)].emplace_back(e.id, false);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<std::pair<int, bool>> via(static_cast<std::size_t>(g.n) + 1, {0, false});
    std::vector<bool> seen(static_cast<std::size_t>(g.n) + 1, false);
    seen[static_cast<std::size_t>(root)] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty() && !seen[static_cast<std::size_t>(v)]) {
        int u = q.front();
        q.pop();
        for (auto [e, fwd] : adj[static_cast<std::size_t>(u)]) {
            int t = fwd ? g.edge(e).head : g.edge(e).tail;
            if (seen[static_cast<std::size_t>(t)]) continue;
            seen[static_cast<std::size_t>(t)] = true;
            via[static_cast<std::size_t>(t)] = {e, fwd};
            q.push(t);
        }
    }

    std::vector<std::pair<int, bool>> hops;
    for (int u = v; u != root;) {
        auto [e, fwd] = via[static_cast<std::size_t>(u)];
        hops.emplace_back(e, fwd);
        u = fwd ? g.edge(e).tail : g.edge(e).head;
    }
    std::reverse(hops.begin(), hops.end());

    std::vector<int> walk;
    for (auto [e, fwd] : hops) {
        if (fwd) {
            walk.push_back(e);
        } else {
            for (int d : detail::detour_along(g, g.left_face(e), e)) walk.push_back(d);
        }
    }
    return detail::eliminate_loops(g, root, walk);
}

// Extend a partial rooted tree (parent_edge with zeros for unassigned
// vertices) to a full state by attaching final segments of rooted paths to
// the smallest missing vertex.
inline State extend_to_state(const CrowellGraph& g, const State& partial) {
    require_vertex(g, partial.root);
    if (static_cast<int>(partial.parent_edge.size()) != g.n + 1)
        throw Error(ErrorKind::NotATree, "parent table has wrong size");
    if (partial.parent_edge[static_cast<std::size_t>(partial.root)] != 0)
        throw Error(ErrorKind::NotATree, "root must not have a parent edge");

    State t = partial;
    auto in_tree = [&](int u) { return u == t.root || t.parent_edge[static_cast<std::size_t>(u)] != 0; };

    // validate: every assigned vertex chains up to the root
    for (int v = 1; v <= g.n; ++v) {
        int e = t.parent_edge[static_cast<std::size_t>(v)];
        if (e == 0) continue;
        if (e < 1 || e > g.num_edges() || g.edge(e).head != v)
            throw Error(ErrorKind::NotATree, "assigned edge does not point at its vertex");
        int u = v, steps = 0;
        while (u != t.root) {
            int pe = t.parent_edge[static_cast<std::size_t>(u)];
            if (pe == 0 || ++steps > g.n) throw Error(ErrorKind::NotATree, "partial tree has a cycle or dangling branch");
            u = g.edge(pe).tail;
        }
    }

    for (int v = 1; v <= g.n; ++v) {
        if (in_tree(v)) continue;
        Path p = rooted_path(g, t.root, v);
        std::vector<int> vs = p.vertices(g);
        std::size_t last = 0;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (in_tree(vs[i])) last = i;
        for (std::size_t i = last; i < p.edges.size(); ++i)
            t.parent_edge[static_cast<std::size_t>(g.edge(p.edges[i]).head)] = p.edges[i];
    }
    return t;
}

inline State extend_to_state(const CrowellGraph& g, int root, const std::vector<int>& tree_edges) {
    State t;
    t.root = root;
    t.parent_edge.assign(static_cast<std::size_t>(g.n) + 1, 0);
    for (int e : tree_edges) {
        require_edge(g, e);
        int h = g.edge(e).head;
        if (h == root || t.parent_edge[static_cast<std::size_t>(h)] != 0)
            throw Error(ErrorKind::NotATree, "two edges share a head or an edge points at the root");
        t.parent_edge[static_cast<std::size_t>(h)] = e;
    }
    return extend_to_state(g, t);
}

// A state with the prescribed edge terminal: builds a rooted path to
// tail(e0) that avoids head(e0) (rerouting around the corner region if the
// path runs through it), adds e0, protects head(e0)'s two out-neighbors by
// attaching them along region-complement paths, and extends.  Requires a
// prime diagram; the reroute guarantees rest on primality.
inline State state_with_terminal_edge(const CrowellGraph& g, int root, int e0) {
    require_vertex(g, root);
    require_edge(g, e0);
    const int w0 = g.edge(e0).tail;
    const int w1 = g.edge(e0).head;
    if (w1 == root) throw Error(ErrorKind::EdgeIntoRoot, "prescribed edge points at the root");
    if (!g.prime_diagram)
        throw Error(ErrorKind::HypothesisViolation, "terminal-edge construction needs a prime diagram");

    Path gamma = rooted_path(g, root, w0);
    std::vector<int> verts = gamma.vertices(g);
    auto wit = std::find(verts.begin(), verts.end(), w1);
    if (wit != verts.end()) {
        // The path runs through w1: reroute between its neighbors v' -> v''
        // around the region R cornered by the path's edges at w1, walking
        // R's far boundary backward, each edge detoured around its face on
        // the other side from R.
        std::size_t pos = static_cast<std::size_t>(wit - verts.begin());
        int ep = gamma.edges[pos - 1]; // v' -> w1
        int es = gamma.edges[pos];     // w1 -> v''
        int corner = detail::corner_between(g.slot_of(w1, ep), g.slot_of(w1, es));
        int R = g.fs.face_at_corner(w1, corner);
        std::vector<int> cyc = detail::directed_face_cycle(g, R);
        std::size_t i = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), ep) - cyc.begin());
        if (i == cyc.size() || cyc[(i + 1) % cyc.size()] != es)
            throw Error(ErrorKind::HypothesisViolation, "corner region does not chain the path edges");

        std::vector<int> alpha;
        for (std::size_t k = cyc.size() - 1; k >= 2; --k) {
            int f = cyc[(i + k) % cyc.size()];
            for (int d : detail::detour_along(g, g.other_face(f, R), f)) alpha.push_back(d);
        }
        for (int e : alpha)
            if (e == ep || e == es || g.edge(e).head == w1 || g.edge(e).tail == w1)
                throw Error(ErrorKind::HypothesisViolation, "reroute re-enters the bypassed vertex");

        std::vector<int> walk(gamma.edges.begin(), gamma.edges.begin() + static_cast<std::ptrdiff_t>(pos - 1));
        walk.insert(walk.end(), alpha.begin(), alpha.end());
        walk.insert(walk.end(), gamma.edges.begin() + static_cast<std::ptrdiff_t>(pos + 1), gamma.edges.end());
        gamma = detail::eliminate_loops(g, root, walk);
    }

    State t;
    t.root = root;
    t.parent_edge.assign(static_cast<std::size_t>(g.n) + 1, 0);
    for (int e : gamma.edges) t.parent_edge[static_cast<std::size_t>(g.edge(e).head)] = e;
    t.parent_edge[static_cast<std::size_t>(w1)] = e0;
    auto in_tree = [&](int u) { return u == root || t.parent_edge[static_cast<std::size_t>(u)] != 0; };

    // Protect w1's out-neighbors: connect each to the tree along the far
    // boundary of the region cornered by e0 and that out-edge, so that the
    // final extension never needs an edge out of w1.
    for (int e1 : g.out_edges(w1)) {
        int w1p = g.edge(e1).head;
        if (in_tree(w1p)) continue;
        int corner = detail::corner_between(g.slot_of(w1, e0), g.slot_of(w1, e1));
        int R = g.fs.face_at_corner(w1, corner);
        std::vector<int> cyc = detail::directed_face_cycle(g, R);
        std::size_t i = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), e0) - cyc.begin());
        if (i == cyc.size() || cyc[(i + 1) % cyc.size()] != e1)
            throw Error(ErrorKind::HypothesisViolation, "corner region does not chain e0 with the out-edge");

        std::vector<int> bwalk;
        for (std::size_t k = cyc.size() - 1; k >= 2; --k) {
            int f = cyc[(i + k) % cyc.size()];
            for (int d : detail::detour_along(g, g.other_face(f, R), f)) bwalk.push_back(d);
        }
        Path beta = detail::eliminate_loops(g, w0, bwalk);
        if (beta.to != w1p)
            throw Error(ErrorKind::HypothesisViolation, "protection path misses the out-neighbor");
        std::vector<int> bv = beta.vertices(g);
        std::size_t last = 0;
        for (std::size_t k = 0; k < bv.size(); ++k)
            if (in_tree(bv[k])) last = k;
        for (std::size_t k = last; k < beta.edges.size(); ++k) {
            int e = beta.edges[k];
            if (g.edge(e).tail == w1)
                throw Error(ErrorKind::HypothesisViolation, "protection path branches at the bypassed vertex");
            t.parent_edge[static_cast<std::size_t>(g.edge(e).head)] = e;
        }
    }

    State full = extend_to_state(g, t);
    if (!is_state(g, full) || full.parent_edge[static_cast<std::size_t>(w1)] != e0)
        throw Error(ErrorKind::HypothesisViolation, "construction lost the prescribed edge");
    for (int v = 1; v <= g.n; ++v) {
        int e = full.parent_edge[static_cast<std::size_t>(v)];
        if (e != 0 && g.edge(e).tail == w1)
            throw Error(ErrorKind::HypothesisViolation, "prescribed edge is not terminal");
    }
    return full;
}

} // namespace crowell
