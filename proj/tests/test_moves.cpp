#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "crowell/graph.hpp"
#include "crowell/moves.hpp"
#include "crowell/statespace.hpp"
#include "helpers.hpp"

using namespace crowell;

namespace {

State state_from(const CrowellGraph& g, int root, const std::vector<int>& edges) {
    State s;
    s.root = root;
    s.parent_edge.assign(static_cast<std::size_t>(g.n) + 1, 0);
    for (int e : edges) s.parent_edge[static_cast<std::size_t>(g.edge(e).head)] = e;
    REQUIRE(is_state(g, s));
    return s;
}

void check_exchange_calculus(const std::string& pd) {
    CrowellGraph g = build_crowell(pd);
    for (int root = 1; root <= g.n; ++root) {
        for (const State& s : enumerate_states(g, root)) {
            auto terms = terminal_edges(g, s);
            CHECK(!terms.empty()); // every finite tree has a leaf
            for (auto [v, e] : terms) {
                CHECK(s.parent_edge[static_cast<std::size_t>(v)] == e);
                auto [t, mv] = exchange_move(g, s, v);
                CHECK(is_state(g, t));
                CHECK((mv.degree_delta == 1 || mv.degree_delta == -1));
                CHECK(state_degree(g, t) - state_degree(g, s) == mv.degree_delta);
                CHECK(mv.removed_edge == e);
                CHECK(mv.added_edge == g.other_in_edge(v, e));
                // endpoints differ in exactly the one entry at v
                int diffs = 0;
                for (int u = 1; u <= g.n; ++u)
                    if (s.parent_edge[static_cast<std::size_t>(u)] !=
                        t.parent_edge[static_cast<std::size_t>(u)])
                        ++diffs;
                CHECK(diffs == 1);
                CHECK(exchange(g, t, v) == s); // involution
            }
        }
    }
}

} // namespace

TEST_CASE("trefoil terminal edges: one at the ends, two in the middle") {
    CrowellGraph g = build_crowell(fixtures::kTrefoil);
    State t0 = state_from(g, 1, {3, 5});  // chain 1 -> 3 -> 2, degree 0
    State mid = state_from(g, 1, {4, 5}); // star at 1, degree 1
    State top = state_from(g, 1, {4, 6}); // chain 1 -> 2 -> 3, degree 2

    CHECK(terminal_edges(g, t0) == std::vector<std::pair<int, int>>{{2, 3}});
    CHECK(terminal_edges(g, mid) == std::vector<std::pair<int, int>>{{2, 4}, {3, 5}});
    CHECK(terminal_edges(g, top) == std::vector<std::pair<int, int>>{{3, 6}});
}

TEST_CASE("trefoil exchange at the bottom state's leaf reaches the middle state") {
    CrowellGraph g = build_crowell(fixtures::kTrefoil);
    State t0 = state_from(g, 1, {3, 5});
    auto [t, mv] = exchange_move(g, t0, 2);
    CHECK(t == state_from(g, 1, {4, 5}));
    CHECK(mv == Move{2, 3, 4, 1});
}

TEST_CASE("exchange rejects non-terminal vertices") {
    CrowellGraph g = build_crowell(fixtures::kTrefoil);
    State t0 = state_from(g, 1, {3, 5});
    CHECK(kind_of([&] { exchange(g, t0, 3); }) == ErrorKind::NotTerminal); // 3 has child 2
    CHECK(kind_of([&] { exchange(g, t0, 1); }) == ErrorKind::NotTerminal); // root
    CHECK(kind_of([&] { exchange(g, t0, 9); }) == ErrorKind::NotFound);
}

TEST_CASE("exchange involution and unit degree step across whole state spaces") {
    check_exchange_calculus(fixtures::kTrefoil);
    check_exchange_calculus(fixtures::kFigureEight);
    check_exchange_calculus(fixtures::kSixOne);
}

TEST_CASE("trefoil exchange graph is a 3-path with degrees 0,1,2") {
    CrowellGraph g = build_crowell(fixtures::kTrefoil);
    std::vector<State> states = enumerate_states(g, 1);
    ExchangeGraph xg = exchange_graph(g, states);

    REQUIRE(xg.num_nodes() == 3);
    CHECK(xg.keys == std::vector<std::string>{"3,5", "4,5", "4,6"});
    CHECK(xg.degrees == std::vector<int>{0, 1, 2});
    REQUIRE(xg.edges.size() == 2);
    CHECK(is_connected(xg));
    CHECK(is_simple_path(xg));
    CHECK(lattice_obstruction(xg) == 2);
    for (const auto& e : xg.edges) {
        REQUIRE(e.moves.size() == 1);
        CHECK(std::abs(e.moves[0].degree_delta) == 1);
    }
}

TEST_CASE("figure-eight exchange graph is a 5-node path") {
    CrowellGraph g = build_crowell(fixtures::kFigureEight);
    std::vector<State> states = enumerate_states(g, 1);
    ExchangeGraph xg = exchange_graph(g, states);

    REQUIRE(xg.num_nodes() == 5);
    CHECK(is_connected(xg));
    // worked out by hand from the frozen edge table: the only exchange
    // pairs are (1,6,2)-(1,6,3), (1,6,2)-(1,7,2), (1,7,2)-(8,7,2),
    // (8,6,2)-(8,7,2); vertex 2 is never terminal when its child 3 hangs
    // below it, so (1,6,2)-(8,6,2) is not an edge
    CHECK(xg.edges.size() == 4);
    CHECK(is_simple_path(xg));
    CHECK(lattice_obstruction(xg) == 2);
}

TEST_CASE("six-one exchange graph is connected for every root") {
    CrowellGraph g = build_crowell(fixtures::kSixOne);
    for (int root = 1; root <= g.n; ++root) {
        std::vector<State> states = enumerate_states(g, root);
        ExchangeGraph xg = exchange_graph(g, states);
        CHECK(xg.num_nodes() == 9);
        CHECK(is_connected(xg));
        // the graph is not a tree in general, so no bound on degree-1
        // nodes holds here; connectivity is the claim under test
    }
}

TEST_CASE("DOT export carries degrees, keys and exchange vertices") {
    CrowellGraph g = build_crowell(fixtures::kTrefoil);
    ExchangeGraph xg = exchange_graph(g, enumerate_states(g, 1));
    std::string dot = to_dot(xg);
    CHECK(dot.find("graph exchange {") == 0);
    CHECK(dot.find("n0 [label=\"0\", tooltip=\"3,5\"]") != std::string::npos);
    CHECK(dot.find("n2 [label=\"2\", tooltip=\"4,6\"]") != std::string::npos);
    CHECK(dot.find("n0 -- n1 [label=\"v2\"]") != std::string::npos);
    CHECK(dot.find("n1 -- n2 [label=\"v3\"]") != std::string::npos);
}

TEST_CASE("kink guard: a loop replacement edge is rejected") {
    // Unreachable through build_crowell (kinks fail the reduced check); the
    // guard is exercised on a hand-built corrupt graph.
    CrowellGraph g;
    g.n = 2;
    g.edges = {CrowellEdge{1, 1, 2, Weight::PlusOne}, CrowellEdge{2, 2, 2, Weight::MinusT}};
    g.in_edge_ids = {{2, 0}, {1, 2}};
    g.out_edge_ids = {{1, 0}, {2, 0}};
    State s;
    s.root = 1;
    s.parent_edge = {0, 0, 1};
    REQUIRE(is_terminal_vertex(g, s, 2));
    CHECK(kind_of([&] { exchange_move(g, s, 2); }) == ErrorKind::KinkVertex);
}
