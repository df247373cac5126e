#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "crowell/diagram.hpp"
#include "crowell/error.hpp"
#include "crowell/faces.hpp"
#include "crowell/predicates.hpp"

namespace crowell {

enum class Weight { PlusOne, MinusT };

inline const char* to_string(Weight w) { return w == Weight::PlusOne ? "+1" : "-t"; }

// One directed edge of the state-model graph.  Edge ids coincide with the
// arc ids of the source diagram.
struct CrowellEdge {
    int id = 0;
    int tail = 0;   // crossing where the arc rides the over-strand
    int head = 0;   // crossing where the arc rides the under-strand
    Weight weight = Weight::PlusOne;
};

// The directed weighted graph of Crowell's state model for a reduced
// alternating knot diagram.  Vertices are the crossings (ids 1..n).  Each
// arc contributes one edge pointing from its over-strand end to its
// under-strand end, so every vertex has the two under-strand halves coming
// in (slots 0 and 2) and the two over-strand halves going out (slots 1 and
// 3); around a vertex the rotation alternates in/out.
//
// Weights: the two incoming edges at a crossing get one PlusOne and one
// MinusT, and which under-strand half carries the MinusT depends on the
// crossing's handedness, i.e. on which side the over-strand enters:
//
//   over-strand enters slot 3:  arriving half (slot 0) -> MinusT
//   over-strand enters slot 1:  departing half (slot 2) -> MinusT
//
// The assignment is calibrated so that the state sum reproduces the
// Alexander polynomial; the trefoil (1 - t + t^2 off three states) fixes it
// up to a global flip of the two cases, and the flip only mirrors every
// state degree, which normalization cancels.  A handedness-blind rule looks
// plausible but is wrong: on the figure-eight diagram it produces a
// non-palindromic state sum.
struct CrowellGraph {
    int n = 0;
    std::vector<CrowellEdge> edges;               // edge id = index + 1
    std::vector<std::array<int, 4>> rotation;     // [vertex-1][slot] = edge id
    std::vector<std::array<int, 2>> in_edge_ids;  // [vertex-1] = {slot-0 edge, slot-2 edge}
    std::vector<std::array<int, 2>> out_edge_ids; // [vertex-1] = {slot-1 edge, slot-3 edge}
    FaceSet fs;                                   // faces of the source diagram
    // Per face, its boundary as (edge id, forward) in trace order, forward
    // meaning the trace runs the edge tail -> head.
    std::vector<std::vector<std::pair<int, bool>>> face_cycles;
    // [edge-1][0]: face whose trace runs along the edge (its left side),
    // [edge-1][1]: the face against it.
    std::vector<std::array<int, 2>> edge_face;
    bool prime_diagram = false;

    int num_edges() const { return 2 * n; }
    const CrowellEdge& edge(int id) const { return edges[static_cast<std::size_t>(id - 1)]; }
    const std::array<int, 2>& in_edges(int v) const { return in_edge_ids[static_cast<std::size_t>(v - 1)]; }
    const std::array<int, 2>& out_edges(int v) const { return out_edge_ids[static_cast<std::size_t>(v - 1)]; }

    // The incoming edge at v other than e (each vertex has exactly two).
    int other_in_edge(int v, int e) const {
        const auto& in = in_edges(v);
        return in[0] == e ? in[1] : in[0];
    }

    // The face left of e (the one tracing along its direction).
    int left_face(int e) const { return edge_face[static_cast<std::size_t>(e - 1)][0]; }
    // The face on e's side other than f.
    int other_face(int e, int f) const {
        const auto& ef = edge_face[static_cast<std::size_t>(e - 1)];
        return ef[0] == f ? ef[1] : ef[0];
    }
    // The slot of edge e around vertex v (e must be incident).
    int slot_of(int v, int e) const {
        const auto& rot = rotation[static_cast<std::size_t>(v - 1)];
        for (int s = 0; s < 4; ++s)
            if (rot[static_cast<std::size_t>(s)] == e) return s;
        return -1;
    }
};

inline CrowellGraph build_crowell(const Diagram& d) {
    if (!is_alternating(d))
        throw Error(ErrorKind::NotAlternating, "state model needs an alternating diagram");
    FaceSet fs = faces(d);
    if (!is_reduced(d, fs))
        throw Error(ErrorKind::NotReduced, "state model needs a reduced diagram (nugatory crossing present)");

    CrowellGraph g;
    g.n = d.n();
    g.prime_diagram = is_prime_diagram(d, fs);
    g.fs = std::move(fs);

    g.edges.resize(static_cast<std::size_t>(d.num_arcs()));
    for (int a = 1; a <= d.num_arcs(); ++a) {
        // Alternating => each arc has one under-strand end and one
        // over-strand end; the edge points over-end -> under-end.
        ArcEnd under = d.arrives_under(a) ? d.head[static_cast<std::size_t>(a)] : d.tail[static_cast<std::size_t>(a)];
        ArcEnd over = d.arrives_under(a) ? d.tail[static_cast<std::size_t>(a)] : d.head[static_cast<std::size_t>(a)];
        const Crossing& hc = d.crossing(under.crossing);
        bool minus_t = (under.slot == 0) == (hc.over_in_slot == 3);
        g.edges[static_cast<std::size_t>(a - 1)] =
            CrowellEdge{a, over.crossing, under.crossing, minus_t ? Weight::MinusT : Weight::PlusOne};
    }

    g.rotation.resize(static_cast<std::size_t>(g.n));
    g.in_edge_ids.resize(static_cast<std::size_t>(g.n));
    g.out_edge_ids.resize(static_cast<std::size_t>(g.n));
    for (const auto& c : d.crossings) {
        for (int s = 0; s < 4; ++s) g.rotation[static_cast<std::size_t>(c.id - 1)][static_cast<std::size_t>(s)] = c.slots[static_cast<std::size_t>(s)];
        g.in_edge_ids[static_cast<std::size_t>(c.id - 1)] = {c.slots[0], c.slots[2]};
        g.out_edge_ids[static_cast<std::size_t>(c.id - 1)] = {c.slots[1], c.slots[3]};
    }

    // Face boundaries in edge terms.  An arc's edge direction agrees with
    // the knot's direction exactly when the knot arrives on the under-strand
    // (head = under end), so the traced knot-direction flag converts by
    // comparing with arrives_under.
    g.face_cycles.resize(g.fs.faces.size());
    g.edge_face.assign(static_cast<std::size_t>(d.num_arcs()), {-1, -1});
    for (const auto& f : g.fs.faces) {
        auto& cycle = g.face_cycles[static_cast<std::size_t>(f.id)];
        cycle.reserve(f.boundary.size());
        for (auto [a, knot_fwd] : f.boundary) {
            bool fwd = knot_fwd == d.arrives_under(a);
            cycle.emplace_back(a, fwd);
            g.edge_face[static_cast<std::size_t>(a - 1)][fwd ? 0 : 1] = f.id;
        }
    }

    return g;
}

inline CrowellGraph build_crowell(const std::string& pd_text) { return build_crowell(parse_pd(pd_text)); }

// The orientation/coloring compatibility of the state-model graph: every
// face boundary is a consistently directed cycle, faces of one color run
// with the tracing orientation and faces of the other color against it.
inline bool check_region_compatibility(const CrowellGraph& g) {
    // Directions within each face must be uniform.
    std::vector<int> dir(g.face_cycles.size(), -1); // 1 = trace runs tail->head
    for (std::size_t f = 0; f < g.face_cycles.size(); ++f) {
        if (g.face_cycles[f].empty()) return false;
        bool fwd = g.face_cycles[f].front().second;
        for (auto [e, ef] : g.face_cycles[f])
            if (ef != fwd) return false;
        dir[f] = fwd ? 1 : 0;
        // And the boundary must truly chain head -> tail around the face.
        const auto& cyc = g.face_cycles[f];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const CrowellEdge& cur = g.edge(cyc[i].first);
            const CrowellEdge& nxt = g.edge(cyc[(i + 1) % cyc.size()].first);
            int cur_to = fwd ? cur.head : cur.tail;
            int nxt_from = fwd ? nxt.tail : nxt.head;
            if (cur_to != nxt_from) return false;
        }
    }
    // Handedness must be a function of color, opposite for the two colors.
    int white_dir = dir[static_cast<std::size_t>(g.fs.unbounded)];
    for (std::size_t f = 0; f < g.face_cycles.size(); ++f) {
        bool white = g.fs.colors[f] == g.fs.colors[static_cast<std::size_t>(g.fs.unbounded)];
        if (dir[f] != (white ? white_dir : 1 - white_dir)) return false;
    }
    return true;
}

} // namespace crowell
