#include <catch2/catch_amalgamated.hpp>

#include "crowell/graph.hpp"
#include "helpers.hpp"

using namespace crowell;

namespace {

void check_degree_invariants(const CrowellGraph& g) {
    REQUIRE(g.num_edges() == 2 * g.n);
    int minus = 0;
    for (const CrowellEdge& e : g.edges)
        if (e.weight == Weight::MinusT) ++minus;
    CHECK(minus == g.n); // half the edges carry -t

    for (int v = 1; v <= g.n; ++v) {
        const auto& in = g.in_edges(v);
        const auto& out = g.out_edges(v);
        CHECK(g.edge(in[0]).head == v);
        CHECK(g.edge(in[1]).head == v);
        CHECK(g.edge(out[0]).tail == v);
        CHECK(g.edge(out[1]).tail == v);
        // one PlusOne and one MinusT incoming at every vertex
        CHECK(g.edge(in[0]).weight != g.edge(in[1]).weight);
        // rotation alternates in, out, in, out
        const auto& rot = g.rotation[static_cast<std::size_t>(v - 1)];
        CHECK(g.edge(rot[0]).head == v);
        CHECK(g.edge(rot[2]).head == v);
        CHECK(g.edge(rot[1]).tail == v);
        CHECK(g.edge(rot[3]).tail == v);
    }
}

void check_edge(const CrowellGraph& g, int id, int tail, int head, Weight w) {
    INFO("edge " << id);
    CHECK(g.edge(id).tail == tail);
    CHECK(g.edge(id).head == head);
    CHECK(g.edge(id).weight == w);
}

} // namespace

TEST_CASE("trefoil state-model graph") {
    CrowellGraph g = build_crowell(fixtures::kTrefoil);
    REQUIRE(g.n == 3);
    check_degree_invariants(g);

    check_edge(g, 1, 2, 1, Weight::PlusOne);
    check_edge(g, 2, 3, 1, Weight::MinusT);
    check_edge(g, 3, 3, 2, Weight::PlusOne);
    check_edge(g, 4, 1, 2, Weight::MinusT);
    check_edge(g, 5, 1, 3, Weight::PlusOne);
    check_edge(g, 6, 2, 3, Weight::MinusT);

    CHECK(g.in_edges(1) == std::array<int, 2>{1, 2});
    CHECK(g.out_edges(1) == std::array<int, 2>{4, 5});
    CHECK(g.rotation[0] == std::array<int, 4>{1, 4, 2, 5});
    CHECK(g.other_in_edge(1, 1) == 2);
    CHECK(g.other_in_edge(1, 2) == 1);

    CHECK(g.prime_diagram);
    CHECK(check_region_compatibility(g));
    CHECK(g.fs.faces.size() == 5);
}

TEST_CASE("figure-eight state-model graph") {
    CrowellGraph g = build_crowell(fixtures::kFigureEight);
    REQUIRE(g.n == 4);
    check_degree_invariants(g);

    check_edge(g, 1, 1, 2, Weight::PlusOne);
    check_edge(g, 2, 1, 4, Weight::PlusOne);
    check_edge(g, 3, 3, 4, Weight::MinusT);
    check_edge(g, 4, 3, 1, Weight::MinusT);
    check_edge(g, 5, 2, 1, Weight::PlusOne);
    check_edge(g, 6, 2, 3, Weight::PlusOne);
    check_edge(g, 7, 4, 3, Weight::MinusT);
    check_edge(g, 8, 4, 2, Weight::MinusT);

    CHECK(g.prime_diagram);
    CHECK(check_region_compatibility(g));
}

TEST_CASE("6_1 graph satisfies the structural invariants") {
    CrowellGraph g = build_crowell(fixtures::kSixOne);
    REQUIRE(g.n == 6);
    check_degree_invariants(g);
    CHECK(g.prime_diagram);
    CHECK(check_region_compatibility(g));
}

TEST_CASE("flipping one edge breaks region compatibility") {
    CrowellGraph g = build_crowell(fixtures::kTrefoil);
    REQUIRE(check_region_compatibility(g));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        CrowellGraph bad = g;
        std::swap(bad.edges[i].tail, bad.edges[i].head);
        CHECK_FALSE(check_region_compatibility(bad));
    }
}

TEST_CASE("granny graph builds but is not a prime diagram") {
    CrowellGraph g = build_crowell(fixtures::kGranny);
    REQUIRE(g.n == 6);
    check_degree_invariants(g);
    CHECK_FALSE(g.prime_diagram);
    CHECK(check_region_compatibility(g));
}

TEST_CASE("rejected diagrams") {
    CHECK(kind_of([] { build_crowell(fixtures::kKinkedTrefoil); }) == ErrorKind::NotReduced);
    CHECK(kind_of([] { build_crowell(fixtures::kKink); }) == ErrorKind::NotReduced);
    CHECK(kind_of([] { build_crowell(fixtures::kNonAlternating); }) == ErrorKind::NotAlternating);
}

TEST_CASE("face cycles are consistently directed") {
    CrowellGraph g = build_crowell(fixtures::kTrefoil);
    // The two under-arrival triangles of the trefoil run as directed
    // 3-cycles of uniform weight: {1,3,5} all +1 and {2,4,6} all -t.
    for (const auto& cycle : g.face_cycles) {
        bool first = cycle.front().second;
        for (auto [e, fwd] : cycle) CHECK(fwd == first);
    }
    Weight w135 = g.edge(1).weight;
    CHECK(g.edge(3).weight == w135);
    CHECK(g.edge(5).weight == w135);
    CHECK(w135 == Weight::PlusOne);
}
