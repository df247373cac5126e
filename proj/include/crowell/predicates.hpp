#pragma once

#include <algorithm>
#include <vector>

#include "crowell/diagram.hpp"
#include "crowell/faces.hpp"

namespace crowell {

// Alternating: walking the knot, the passages alternate under/over.  With
// arcs numbered along the orientation this is a parity condition on where
// each arc arrives (slot 0 = under, over-in slot = over).
inline bool is_alternating(const Diagram& d) {
    for (int a = 1; a <= d.num_arcs(); ++a)
        if (d.arrives_under(a) == d.arrives_under(d.next_arc(a))) return false;
    return true;
}

// Reduced: no nugatory crossing, i.e. no face fills two opposite corners of
// one crossing (such a crossing untwists away).
inline bool is_reduced(const Diagram& d, const FaceSet& fs) {
    for (const auto& c : d.crossings) {
        const auto& cf = fs.corner_face[static_cast<std::size_t>(c.id - 1)];
        if (cf[0] == cf[2] || cf[1] == cf[3]) return false;
    }
    return true;
}

inline bool is_reduced(const Diagram& d) { return is_reduced(d, faces(d)); }

namespace detail {

// Cut-vertex test on a multigraph given as an edge list (parallel edges are
// meaningful: a doubled edge cannot be separated).  Standard lowlink DFS,
// iterative, skipping the specific edge used to reach a vertex.
inline bool connected_without_cut_vertex(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
    if (num_vertices <= 1) return true;
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(num_vertices)); // (neighbor, edge id)
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[static_cast<std::size_t>(edges[e].first)].emplace_back(edges[e].second, static_cast<int>(e));
        adj[static_cast<std::size_t>(edges[e].second)].emplace_back(edges[e].first, static_cast<int>(e));
    }
    std::vector<int> disc(static_cast<std::size_t>(num_vertices), -1), low(static_cast<std::size_t>(num_vertices), 0);
    struct Frame { int v; int in_edge; std::size_t next; };
    std::vector<Frame> stack;
    int timer = 0, root_children = 0, visited = 0;
    disc[0] = low[0] = timer++;
    ++visited;
    stack.push_back({0, -1, 0});
    while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.next < adj[static_cast<std::size_t>(fr.v)].size()) {
            auto [u, eid] = adj[static_cast<std::size_t>(fr.v)][fr.next++];
            if (eid == fr.in_edge) continue;
            if (disc[static_cast<std::size_t>(u)] == -1) {
                disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
                ++visited;
                if (fr.v == 0) ++root_children;
                stack.push_back({u, eid, 0});
            } else {
                low[static_cast<std::size_t>(fr.v)] =
                    std::min(low[static_cast<std::size_t>(fr.v)], disc[static_cast<std::size_t>(u)]);
            }
        } else {
            int v = fr.v;
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back().v;
                low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                if (p != 0 && low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)])
                    return false; // p is a cut vertex
            }
        }
    }
    return visited == num_vertices && root_children <= 1;
}

} // namespace detail

// Prime diagram: the diagram is not a connected sum presentation.  Checked
// on the checkerboard graph of the black faces (one vertex per black face,
// one edge per crossing joining the black faces at its opposite corners): a
// connected-sum neck pinches that graph at a cut vertex.  Tiny diagrams
// (n <= 2) carry no useful checkerboard graph; they are prime iff reduced.
inline bool is_prime_diagram(const Diagram& d, const FaceSet& fs) {
    if (d.n() <= 2) return is_reduced(d, fs);
    std::vector<int> black_index(fs.faces.size(), -1);
    int num_black = 0;
    for (std::size_t f = 0; f < fs.faces.size(); ++f)
        if (fs.colors[f] == Color::Black) black_index[f] = num_black++;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(d.n()));
    for (const auto& c : d.crossings) {
        const auto& cf = fs.corner_face[static_cast<std::size_t>(c.id - 1)];
        int k = (fs.colors[static_cast<std::size_t>(cf[0])] == Color::Black) ? 0 : 1;
        edges.emplace_back(black_index[static_cast<std::size_t>(cf[static_cast<std::size_t>(k)])],
                           black_index[static_cast<std::size_t>(cf[static_cast<std::size_t>(k + 2)])]);
    }
    return detail::connected_without_cut_vertex(num_black, edges);
}

inline bool is_prime_diagram(const Diagram& d) { return is_prime_diagram(d, faces(d)); }

} // namespace crowell
