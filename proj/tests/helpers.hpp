#pragma once

#include <functional>

#include <catch2/catch_amalgamated.hpp>

#include "crowell/error.hpp"

namespace fixtures {

// Reduced alternating torus knot with three crossings (trefoil).
inline const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

// Figure-eight knot; its two negative and two positive crossings exercise
// both handedness cases of the weight rule.
inline const char* kFigureEight = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

// Six-crossing twist knot 6_1; crossings 3 and 4 have the opposite
// handedness from the rest.
inline const char* kSixOne = "X(1,4,2,5) X(7,10,8,11) X(3,9,4,8) X(9,3,10,2) X(5,12,6,1) X(11,6,12,7)";

// Trefoil with one extra kink: alternating, but the kink crossing is
// nugatory, so the diagram is not reduced.
inline const char* kKinkedTrefoil = "X(3,6,4,7) X(5,8,6,1) X(7,4,8,5) X(1,2,2,3)";

// One-crossing kink (unknot diagram); alternating and not reduced.
inline const char* kKink = "X(1,2,2,1)";

// Granny knot (trefoil connect-sum trefoil): reduced and alternating but
// not a prime diagram.
inline const char* kGranny = "X(1,4,2,5) X(3,12,4,1) X(5,2,6,3) X(11,8,12,9) X(7,10,8,11) X(9,6,10,7)";

// Trefoil with the third crossing switched: a valid diagram that is not
// alternating.
inline const char* kNonAlternating = "X(1,4,2,5) X(3,6,4,1) X(2,6,3,5)";

// Gauss-realizable only on a torus (virtual trefoil): locally consistent,
// fails the Euler check.
inline const char* kVirtualTrefoil = "X(3,1,4,2) X(4,2,1,3)";

// Hopf link: two components, so arcs do not chain 1..2n.
inline const char* kHopf = "X(1,4,2,3) X(3,2,4,1)";

} // namespace fixtures

// Runs f, which must throw crowell::Error, and reports the kind it threw.
inline crowell::ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const crowell::Error& e) {
        return e.kind();
    }
    FAIL("expected a crowell::Error to be thrown");
    return crowell::ErrorKind::MalformedToken; // not reached
}
