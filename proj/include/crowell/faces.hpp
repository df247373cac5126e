#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "crowell/diagram.hpp"
#include "crowell/error.hpp"

namespace crowell {

enum class Color { White, Black };

// One complementary region of the diagram.  The boundary is recorded as the
// face tracing visits it: (arc id, forward) where forward means the arc is
// crossed from its departing end to its arriving end (with the knot's
// orientation).  corners lists the (crossing id, k) corners the face fills,
// corner k lying between slots k and k+1 (mod 4).
struct Face {
    int id = 0;
    std::vector<std::pair<int, bool>> boundary;
    std::vector<std::pair<int, int>> corners;
};

// All faces of the diagram plus the lookups the rest of the library needs.
struct FaceSet {
    std::vector<Face> faces;
    int unbounded = 0;                            // face id (see below)
    std::vector<Color> colors;                    // by face id
    std::vector<std::array<int, 4>> corner_face;  // [crossing id - 1][corner] -> face id
    std::vector<std::array<int, 2>> arc_face;     // [arc id][0]=forward side, [1]=backward side

    Color color(int face_id) const { return colors[static_cast<std::size_t>(face_id)]; }
    int face_at_corner(int crossing_id, int corner) const {
        return corner_face[static_cast<std::size_t>(crossing_id - 1)][static_cast<std::size_t>(corner)];
    }
};

// Trace the faces of the counterclockwise rotation system.  Arc ends are the
// darts: from end (c,s) jump to the arc's other end (c',s') and rotate to
// (c',s'+1); orbits of that step are the faces, and each jump sweeps the
// corner (c',s').  A PD code carries no geometric turning data, so the orbit
// containing slot 0 of crossing 1 -- the first face in tracing order -- is
// designated the unbounded one; everything downstream is stable under the
// other choice up to a color swap.
inline FaceSet faces(const Diagram& d) {
    const int n = d.n();
    const int arcs = d.num_arcs();
    auto end_index = [](const ArcEnd& e) { return 4 * (e.crossing - 1) + e.slot; };

    // other_end[4c+s] = the same arc's opposite end.
    std::vector<int> other_end(static_cast<std::size_t>(4 * n), -1);
    std::vector<int> arc_at(static_cast<std::size_t>(4 * n), 0);
    std::vector<bool> is_tail(static_cast<std::size_t>(4 * n), false);
    for (int a = 1; a <= arcs; ++a) {
        int h = end_index(d.head[static_cast<std::size_t>(a)]);
        int t = end_index(d.tail[static_cast<std::size_t>(a)]);
        other_end[static_cast<std::size_t>(h)] = t;
        other_end[static_cast<std::size_t>(t)] = h;
        arc_at[static_cast<std::size_t>(h)] = a;
        arc_at[static_cast<std::size_t>(t)] = a;
        is_tail[static_cast<std::size_t>(t)] = true;
    }

    FaceSet fs;
    fs.corner_face.assign(static_cast<std::size_t>(n), {-1, -1, -1, -1});
    fs.arc_face.assign(static_cast<std::size_t>(arcs) + 1, {-1, -1});

    std::vector<bool> seen(static_cast<std::size_t>(4 * n), false);
    for (int start = 0; start < 4 * n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        Face f;
        f.id = static_cast<int>(fs.faces.size());
        int e = start;
        do {
            seen[static_cast<std::size_t>(e)] = true;
            int a = arc_at[static_cast<std::size_t>(e)];
            bool fwd = is_tail[static_cast<std::size_t>(e)]; // leaving the tail end = with the knot
            f.boundary.emplace_back(a, fwd);
            fs.arc_face[static_cast<std::size_t>(a)][fwd ? 0 : 1] = f.id;
            int land = other_end[static_cast<std::size_t>(e)];
            f.corners.emplace_back(land / 4 + 1, land % 4);
            fs.corner_face[static_cast<std::size_t>(land / 4)][static_cast<std::size_t>(land % 4)] = f.id;
            e = 4 * (land / 4) + (land % 4 + 1) % 4;
        } while (e != start);
        fs.faces.push_back(std::move(f));
    }
    fs.unbounded = 0;

    // Checkerboard coloring: the two sides of every arc get opposite colors.
    // A 4-valent diagram has no bridge, so the sides are distinct faces and
    // the coloring exists; a conflict would mean corrupted structure.
    fs.colors.assign(fs.faces.size(), Color::White);
    std::vector<int> state(fs.faces.size(), -1); // -1 unvisited, else 0/1
    std::vector<int> stack{fs.unbounded};
    state[static_cast<std::size_t>(fs.unbounded)] = 0;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int a = 1; a <= arcs; ++a) {
            int f0 = fs.arc_face[static_cast<std::size_t>(a)][0];
            int f1 = fs.arc_face[static_cast<std::size_t>(a)][1];
            if (f0 != f && f1 != f) continue;
            int g = (f0 == f) ? f1 : f0;
            if (g == f) throw Error(ErrorKind::ColoringConflict, "arc " + std::to_string(a) + " borders one face twice");
            if (state[static_cast<std::size_t>(g)] == -1) {
                state[static_cast<std::size_t>(g)] = 1 - state[static_cast<std::size_t>(f)];
                stack.push_back(g);
            } else if (state[static_cast<std::size_t>(g)] == state[static_cast<std::size_t>(f)]) {
                throw Error(ErrorKind::ColoringConflict, "faces across arc " + std::to_string(a) + " collide");
            }
        }
    }
    for (std::size_t f = 0; f < fs.faces.size(); ++f) {
        if (state[f] == -1) throw Error(ErrorKind::ColoringConflict, "disconnected face adjacency");
        fs.colors[f] = state[f] == 0 ? Color::White : Color::Black;
    }
    return fs;
}

// Same faces with the opposite color convention (the unbounded face black).
inline FaceSet recolor_swapped(FaceSet fs) {
    for (auto& c : fs.colors) c = (c == Color::White) ? Color::Black : Color::White;
    return fs;
}

} // namespace crowell
