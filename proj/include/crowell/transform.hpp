#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "crowell/error.hpp"
#include "crowell/graph.hpp"
#include "crowell/moves.hpp"
#include "crowell/statespace.hpp"

namespace crowell {

// A move plus where it came from in the clearance recursion: the outer
// milestone (iteration of transform, -1 for a standalone clearance), the
// phase ("clear" while emptying below a vertex, "attach" for the exchange
// that joins it to the meet), the vertex whose clearance loop emitted the
// move, and the recursion depth.
struct AnnotatedMove {
    Move move;
    int milestone = -1;
    std::string phase;
    int cleared_for = 0;
    int depth = 0;
};

struct MoveSequence {
    std::vector<AnnotatedMove> moves;

    std::size_t size() const { return moves.size(); }
    bool empty() const { return moves.empty(); }
};

// Apply a recorded sequence, insisting each step is exactly the exchange it
// claims to be.
inline State replay(const CrowellGraph& g, const State& start, const MoveSequence& seq) {
    State cur = start;
    for (const AnnotatedMove& am : seq.moves) {
        auto [next, mv] = exchange_move(g, cur, am.move.vertex);
        if (mv != am.move)
            throw Error(ErrorKind::HypothesisViolation, "recorded move does not match the state it is applied to");
        cur = std::move(next);
    }
    return cur;
}

// The rooted tree of edges shared by t1 and t2 and reachable from the root
// through shared edges, as a partial parent table.
inline State rooted_meet(const CrowellGraph& g, const State& t1, const State& t2) {
    if (t1.root != t2.root)
        throw Error(ErrorKind::HypothesisViolation, "states are rooted differently");
    State meet;
    meet.root = t1.root;
    meet.parent_edge.assign(static_cast<std::size_t>(g.n) + 1, 0);
    std::vector<bool> in(static_cast<std::size_t>(g.n) + 1, false);
    in[static_cast<std::size_t>(meet.root)] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 1; v <= g.n; ++v) {
            if (in[static_cast<std::size_t>(v)]) continue;
            int e = t1.parent_edge[static_cast<std::size_t>(v)];
            if (e != 0 && e == t2.parent_edge[static_cast<std::size_t>(v)] &&
                in[static_cast<std::size_t>(g.edge(e).tail)]) {
                in[static_cast<std::size_t>(v)] = true;
                meet.parent_edge[static_cast<std::size_t>(v)] = e;
                grew = true;
            }
        }
    }
    return meet;
}

inline int meet_size(const State& meet) {
    int count = 0;
    for (int e : meet.parent_edge)
        if (e != 0) ++count;
    return count;
}

// The vertices strictly below w in the tree, with the component structure
// of the part of the diagram they span: components are joined by graph
// edges with both endpoints below w and by faces all of whose corners lie
// below w or at w.  Bel1 is the component holding w's smaller-labeled tree
// successor.
struct BelowInfo {
    std::vector<int> vertices;                // strictly below w, ascending
    std::vector<std::vector<int>> components; // partition of `vertices`, each ascending,
                                              // ordered by smallest member
    int bel1_index = -1;                      // component of w's smaller-labeled child

    const std::vector<int>& bel1() const { return components[static_cast<std::size_t>(bel1_index)]; }
};

inline BelowInfo below(const CrowellGraph& g, const State& t, int w) {
    require_vertex(g, w);
    BelowInfo info;
    std::vector<bool> is_below(static_cast<std::size_t>(g.n) + 1, false);
    for (int v = 1; v <= g.n; ++v) {
        if (v == t.root || v == w) continue;
        for (int u = v;;) {
            int pe = t.parent_edge[static_cast<std::size_t>(u)];
            if (pe == 0) break;
            u = g.edge(pe).tail;
            if (u == w) {
                is_below[static_cast<std::size_t>(v)] = true;
                break;
            }
            if (u == t.root) break;
        }
    }
    for (int v = 1; v <= g.n; ++v)
        if (is_below[static_cast<std::size_t>(v)]) info.vertices.push_back(v);
    if (info.vertices.empty()) return info;

    // union-find over the below vertices
    std::vector<int> uf(static_cast<std::size_t>(g.n) + 1);
    for (int v = 1; v <= g.n; ++v) uf[static_cast<std::size_t>(v)] = v;
    auto find = [&](int v) {
        while (uf[static_cast<std::size_t>(v)] != v) {
            uf[static_cast<std::size_t>(v)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(v)])];
            v = uf[static_cast<std::size_t>(v)];
        }
        return v;
    };
    auto unite = [&](int a, int b) { uf[static_cast<std::size_t>(find(a))] = find(b); };

    for (const CrowellEdge& e : g.edges)
        if (is_below[static_cast<std::size_t>(e.tail)] && is_below[static_cast<std::size_t>(e.head)])
            unite(e.tail, e.head);

    // faces whose every corner sits below w or at w merge their below corners
    std::size_t num_faces = g.face_cycles.size();
    std::vector<std::vector<int>> face_corners(num_faces);
    for (int c = 1; c <= g.n; ++c)
        for (int corner = 0; corner < 4; ++corner)
            face_corners[static_cast<std::size_t>(g.fs.face_at_corner(c, corner))].push_back(c);
    for (const auto& corners : face_corners) {
        bool enclosed = true;
        for (int c : corners)
            if (c != w && !is_below[static_cast<std::size_t>(c)]) enclosed = false;
        if (!enclosed) continue;
        int first = 0;
        for (int c : corners) {
            if (c == w) continue;
            if (first == 0)
                first = c;
            else
                unite(first, c);
        }
    }

    std::vector<int> rep_of;
    for (int v : info.vertices) {
        int r = find(v);
        auto it = std::find(rep_of.begin(), rep_of.end(), r);
        std::size_t idx;
        if (it == rep_of.end()) {
            rep_of.push_back(r);
            info.components.emplace_back();
            idx = info.components.size() - 1;
        } else {
            idx = static_cast<std::size_t>(it - rep_of.begin());
        }
        info.components[idx].push_back(v);
    }

    // Bel1 = component of the smaller-labeled tree child of w
    int child = 0;
    for (int v = 1; v <= g.n; ++v) {
        int e = t.parent_edge[static_cast<std::size_t>(v)];
        if (e != 0 && g.edge(e).tail == w && (child == 0 || v < child)) child = v;
    }
    for (std::size_t i = 0; i < info.components.size(); ++i)
        if (std::find(info.components[i].begin(), info.components[i].end(), child) !=
            info.components[i].end())
            info.bel1_index = static_cast<int>(i);
    return info;
}

// The tail of v's unique incoming edge that is not in the tree.
inline int phi(const CrowellGraph& g, const State& t, int v) {
    require_vertex(g, v);
    if (v == t.root) throw Error(ErrorKind::VertexIsRoot, "phi is undefined at the root");
    int other = g.other_in_edge(v, t.parent_edge[static_cast<std::size_t>(v)]);
    return g.edge(other).tail;
}

// A vertex below w whose non-tree incoming edge arrives from outside the
// below-set: found among heads of edges entering Bel1 from neither w nor
// anywhere below w, smallest label first.
inline int find_w_prime(const CrowellGraph& g, const State& t, int w) {
    BelowInfo info = below(g, t, w);
    if (info.vertices.empty())
        throw Error(ErrorKind::NotFound, "nothing below vertex " + std::to_string(w));
    std::vector<bool> is_below(static_cast<std::size_t>(g.n) + 1, false);
    for (int v : info.vertices) is_below[static_cast<std::size_t>(v)] = true;
    std::vector<bool> in_bel1(static_cast<std::size_t>(g.n) + 1, false);
    for (int v : info.bel1()) in_bel1[static_cast<std::size_t>(v)] = true;

    int best = 0;
    for (const CrowellEdge& e : g.edges) {
        if (!in_bel1[static_cast<std::size_t>(e.head)]) continue;
        if (e.tail == w || is_below[static_cast<std::size_t>(e.tail)]) continue;
        if (best == 0 || e.head < best) best = e.head;
    }
    if (best == 0)
        throw Error(ErrorKind::NotFound, "no reattachment vertex below " + std::to_string(w));
    if (is_below[static_cast<std::size_t>(phi(g, t, best))] || phi(g, t, best) == w)
        throw Error(ErrorKind::NotFound, "reattachment vertex points back below " + std::to_string(w));
    return best;
}

namespace detail {

// Lemma-style clearance: repeatedly pick w' below w that can reattach
// outside, clear below w' first, then exchange at the then-leaf w'.  Each
// round moves one vertex out from below w, so the loop runs |below(w)|
// times and the recursion nests along strictly shrinking below-sets.
inline void clear_below_impl(const CrowellGraph& g, State& cur, int w, MoveSequence& seq,
                             int milestone, int depth) {
    if (depth > g.n)
        throw Error(ErrorKind::HypothesisViolation, "clearance recursion exceeded the depth bound");
    while (true) {
        if (below(g, cur, w).vertices.empty()) break;
        int wp;
        try {
            wp = find_w_prime(g, cur, w);
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::NotFound)
                throw Error(ErrorKind::HypothesisViolation,
                            std::string("clearance stalled: ") + err.what());
            throw;
        }
        clear_below_impl(g, cur, wp, seq, milestone, depth + 1);
        auto [next, mv] = exchange_move(g, cur, wp);
        cur = std::move(next);
        seq.moves.push_back({mv, milestone, "clear", w, depth});
    }
}

} // namespace detail

// Turn w into a leaf by exchanges strictly below it.  The clearance itself
// needs no assumption on w's own non-tree incoming edge (that only matters
// for the progress argument of the enclosing transform); it stalls with
// HypothesisViolation only if some below-component has no vertex that can
// reattach outside, which reduced prime diagrams never produce.
inline std::pair<MoveSequence, State> clear_below(const CrowellGraph& g, const State& t, int w) {
    require_vertex(g, w);
    if (w == t.root)
        throw Error(ErrorKind::HypothesisViolation, "cannot clear below the root");
    MoveSequence seq;
    State cur = t;
    detail::clear_below_impl(g, cur, w, seq, -1, 0);
    return {std::move(seq), std::move(cur)};
}

// Constructive connectivity: grow the rooted meet of cur and t2 one vertex
// per milestone.  The chosen w sits just outside the meet along its
// t2-parent edge, so that edge is non-tree in cur and arrives from inside
// the meet; clearing below w and exchanging at it installs the t2 edge.
inline MoveSequence transform(const CrowellGraph& g, const State& t1, const State& t2) {
    if (!is_state(g, t1) || !is_state(g, t2))
        throw Error(ErrorKind::NotATree, "transform endpoints must be valid states");
    if (t1.root != t2.root)
        throw Error(ErrorKind::HypothesisViolation, "states are rooted differently");

    MoveSequence seq;
    State cur = t1;
    int milestone = 0;
    int last_meet = meet_size(rooted_meet(g, cur, t2));
    while (!(cur == t2)) {
        if (milestone > g.n)
            throw Error(ErrorKind::HypothesisViolation, "meet stopped growing");
        State meet = rooted_meet(g, cur, t2);
        std::vector<bool> in(static_cast<std::size_t>(g.n) + 1, false);
        in[static_cast<std::size_t>(meet.root)] = true;
        for (int v = 1; v <= g.n; ++v)
            if (meet.parent_edge[static_cast<std::size_t>(v)] != 0) in[static_cast<std::size_t>(v)] = true;

        int w = 0;
        for (int v = 1; v <= g.n; ++v) {
            if (in[static_cast<std::size_t>(v)]) continue;
            int e = t2.parent_edge[static_cast<std::size_t>(v)];
            if (e != 0 && in[static_cast<std::size_t>(g.edge(e).tail)] && (w == 0 || v < w)) w = v;
        }
        if (w == 0)
            throw Error(ErrorKind::HypothesisViolation, "no vertex adjacent to the meet");

        detail::clear_below_impl(g, cur, w, seq, milestone, 0);
        auto [next, mv] = exchange_move(g, cur, w);
        cur = std::move(next);
        seq.moves.push_back({mv, milestone, "attach", w, 0});

        int now = meet_size(rooted_meet(g, cur, t2));
        if (now <= last_meet)
            throw Error(ErrorKind::HypothesisViolation, "meet did not grow at a milestone");
        last_meet = now;
        ++milestone;
    }
    return seq;
}

} // namespace crowell
