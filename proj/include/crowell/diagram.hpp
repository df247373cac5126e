#pragma once

#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "crowell/error.hpp"

namespace crowell {

// One crossing of a planar diagram, read off a PD token X(a,b,c,d):
//   slot 0  -- the arc entering on the under-strand,
//   slots 1..3 -- the remaining arc ends counterclockwise around the crossing.
// The under-strand therefore occupies slots 0 and 2, the over-strand slots 1
// and 3.  Arcs are numbered 1..2n along the knot's orientation, so the
// under-strand leaves on slot 2 carrying the successor arc, and exactly one
// of the slot-1/slot-3 arcs is the over-strand's entry (the one whose
// successor sits opposite it).
struct Crossing {
    int id = 0;                  // 1..n in token order
    std::array<int, 4> slots{};  // arc ids by slot
    int over_in_slot = 0;        // 1 or 3

    int under_in() const { return slots[0]; }
    int under_out() const { return slots[2]; }
    int over_in() const { return slots[over_in_slot]; }
    int over_out() const { return slots[over_in_slot ^ 2]; }
};

// Where one end of an arc lands: which crossing, which slot.
struct ArcEnd {
    int crossing = 0; // crossing id
    int slot = 0;
};

// A validated oriented knot diagram.  Guarantees after parse_pd:
// every arc id in 1..2n occurs exactly twice, once as an arriving end (head)
// and once as a departing end (tail); following arc k through its head
// crossing continues on arc k+1 (mod 2n), so the diagram closes into a single
// oriented curve; and the counterclockwise rotation system embeds in the
// sphere (Euler check).
struct Diagram {
    std::vector<Crossing> crossings;
    std::vector<ArcEnd> head; // indexed by arc id; end where the arc arrives
    std::vector<ArcEnd> tail; // indexed by arc id; end where the arc departs

    int n() const { return static_cast<int>(crossings.size()); }
    int num_arcs() const { return 2 * n(); }
    int next_arc(int a) const { return a % num_arcs() + 1; }
    int prev_arc(int a) const { return (a + num_arcs() - 2) % num_arcs() + 1; }
    const Crossing& crossing(int id) const { return crossings[static_cast<std::size_t>(id - 1)]; }

    // True when the knot passes under at the head of arc a (it arrives on
    // slot 0 of some crossing); otherwise it passes over there.
    bool arrives_under(int a) const { return head[static_cast<std::size_t>(a)].slot == 0; }
};

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline int parse_int(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw Error(ErrorKind::MalformedToken, "expected an arc number at offset " + std::to_string(start));
    long v = std::stol(s.substr(start, i - start));
    return static_cast<int>(v);
}

inline void expect(const std::string& s, std::size_t& i, char c) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != c)
        throw Error(ErrorKind::MalformedToken,
                    std::string("expected '") + c + "' at offset " + std::to_string(i));
    ++i;
}

} // namespace detail

// Number of orbits of the face-tracing step (jump to the arc's other end,
// rotate one slot counterclockwise).  Needed here for parse_pd's Euler
// check; faces.hpp builds the full traced structure on top of the same step.
inline int count_faces(const Diagram& d) {
    const int fn = 4 * d.n();
    auto end_index = [](const ArcEnd& e) { return 4 * (e.crossing - 1) + e.slot; };
    std::vector<int> other_end(static_cast<std::size_t>(fn), -1);
    for (int a = 1; a <= d.num_arcs(); ++a) {
        int h = end_index(d.head[static_cast<std::size_t>(a)]);
        int t = end_index(d.tail[static_cast<std::size_t>(a)]);
        other_end[static_cast<std::size_t>(h)] = t;
        other_end[static_cast<std::size_t>(t)] = h;
    }
    std::vector<bool> seen(static_cast<std::size_t>(fn), false);
    int count = 0;
    for (int start = 0; start < fn; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++count;
        int e = start;
        do {
            seen[static_cast<std::size_t>(e)] = true;
            int land = other_end[static_cast<std::size_t>(e)];
            e = 4 * (land / 4) + (land % 4 + 1) % 4;
        } while (e != start);
    }
    return count;
}

// Parse PD text: whitespace-separated tokens X(a,b,c,d).  Also accepts a
// comma between tokens.  Rejects anything that is not a single closed
// oriented knot curve embedded in the sphere.
inline Diagram parse_pd(const std::string& text) {
    Diagram d;
    std::size_t i = 0;
    detail::skip_ws(text, i);
    while (i < text.size()) {
        if (text[i] != 'X')
            throw Error(ErrorKind::MalformedToken, "expected 'X' at offset " + std::to_string(i));
        ++i;
        detail::expect(text, i, '(');
        Crossing c;
        c.id = static_cast<int>(d.crossings.size()) + 1;
        for (int k = 0; k < 4; ++k) {
            if (k) detail::expect(text, i, ',');
            c.slots[static_cast<std::size_t>(k)] = detail::parse_int(text, i);
        }
        detail::expect(text, i, ')');
        d.crossings.push_back(c);
        detail::skip_ws(text, i);
        if (i < text.size() && text[i] == ',') { ++i; detail::skip_ws(text, i); }
    }
    if (d.crossings.empty()) throw Error(ErrorKind::MalformedToken, "no crossings in input");

    const int n = d.n();
    const int arcs = 2 * n;

    // Every arc id in 1..2n, each exactly twice.
    std::vector<int> uses(static_cast<std::size_t>(arcs) + 1, 0);
    for (const auto& c : d.crossings)
        for (int a : c.slots) {
            if (a < 1 || a > arcs)
                throw Error(ErrorKind::ArcCountMismatch,
                            "arc " + std::to_string(a) + " outside 1.." + std::to_string(arcs));
            ++uses[static_cast<std::size_t>(a)];
        }
    for (int a = 1; a <= arcs; ++a)
        if (uses[static_cast<std::size_t>(a)] != 2)
            throw Error(ErrorKind::ArcCountMismatch,
                        "arc " + std::to_string(a) + " used " + std::to_string(uses[static_cast<std::size_t>(a)]) +
                            " times (want 2)");

    // Orient each crossing: the under-strand must continue a -> next(a) on
    // slot 2, and one over slot must continue into the other.  A failure
    // means the arc numbering does not trace one oriented component.
    auto next = [arcs](int a) { return a % arcs + 1; };
    for (auto& c : d.crossings) {
        if (c.slots[2] != next(c.slots[0]))
            throw Error(ErrorKind::MultiComponent,
                        "crossing " + std::to_string(c.id) + ": under-strand does not continue arc " +
                            std::to_string(c.slots[0]));
        bool b_in = next(c.slots[1]) == c.slots[3];
        bool d_in = next(c.slots[3]) == c.slots[1];
        if (b_in && d_in) {
            // Only possible when 2n == 2; the entering over-arc is the one
            // that is not already arriving on slot 0.
            c.over_in_slot = (c.slots[1] != c.slots[0]) ? 1 : 3;
        } else if (b_in) {
            c.over_in_slot = 1;
        } else if (d_in) {
            c.over_in_slot = 3;
        } else {
            throw Error(ErrorKind::MultiComponent,
                        "crossing " + std::to_string(c.id) + ": over-strand does not continue either way");
        }
    }

    // Each arc must arrive exactly once (slot 0 or the over-in slot) and
    // depart exactly once (slot 2 or the over-out slot); together with the
    // successor rule above this closes the numbering into a single curve.
    d.head.assign(static_cast<std::size_t>(arcs) + 1, ArcEnd{});
    d.tail.assign(static_cast<std::size_t>(arcs) + 1, ArcEnd{});
    std::vector<int> heads(static_cast<std::size_t>(arcs) + 1, 0), tails(static_cast<std::size_t>(arcs) + 1, 0);
    for (const auto& c : d.crossings) {
        for (int s : {0, c.over_in_slot}) {
            int a = c.slots[static_cast<std::size_t>(s)];
            ++heads[static_cast<std::size_t>(a)];
            d.head[static_cast<std::size_t>(a)] = ArcEnd{c.id, s};
        }
        for (int s : {2, c.over_in_slot ^ 2}) {
            int a = c.slots[static_cast<std::size_t>(s)];
            ++tails[static_cast<std::size_t>(a)];
            d.tail[static_cast<std::size_t>(a)] = ArcEnd{c.id, s};
        }
    }
    for (int a = 1; a <= arcs; ++a)
        if (heads[static_cast<std::size_t>(a)] != 1 || tails[static_cast<std::size_t>(a)] != 1)
            throw Error(ErrorKind::MultiComponent,
                        "arc " + std::to_string(a) + " does not have one arriving and one departing end");

    // Rotation system must embed in the sphere: V - E + F = 2.
    if (n - arcs + count_faces(d) != 2)
        throw Error(ErrorKind::NonplanarEmbedding,
                    "rotation system has genus > 0 (V - E + F != 2)");

    return d;
}

} // namespace crowell
