#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sep/errors.hpp"
#include "sep/graph.hpp"
#include "sep/triangulation.hpp"

using namespace sep;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) es.push_back({i, j});
    return Graph(n, es);
}

Graph random_connected(int n, double p, std::mt19937_64& rng) {
    while (true) {
        Graph g = random_graph(n, p, rng);
        if (is_connected(g)) return g;
    }
}

OrientedEdge oe(const Graph& g, int u1, int v1) {
    // 1-based endpoints, oriented u -> v
    int u = u1 - 1, v = v1 - 1;
    int e = g.edge_index(std::min(u, v), std::max(u, v));
    REQUIRE(e >= 0);
    return {e, u < v};
}

} // namespace

TEST_CASE("is_face on the 5-cycle") {
    Graph c5 = cycle_graph(5);
    EdgeOrder order = EdgeOrder::list_order(5);
    auto cycles = enumerate_cycles(c5, 5);

    CHECK_FALSE(is_face(c5, order, {oe(c5, 1, 2), oe(c5, 2, 3), oe(c5, 3, 4)}, cycles));
    CHECK_FALSE(is_face(c5, order, {oe(c5, 1, 2), oe(c5, 2, 1)}, cycles));
    CHECK(is_face(c5, order, {oe(c5, 1, 2), oe(c5, 2, 3)}, cycles));
    CHECK(is_face(c5, order, {}, cycles));
    CHECK(is_face(c5, order, {oe(c5, 1, 2)}, cycles));
}

TEST_CASE("full face counts on small graphs") {
    Graph c4 = cycle_graph(4);
    auto rep = enumerate_faces(c4, EdgeOrder::list_order(4), FaceMode::full);
    CHECK(rep.f == std::vector<BigInt>{1, 8, 18, 12});

    auto naive = oracles::naive_f_vector(c4, EdgeOrder::list_order(4));
    for (size_t i = 0; i < rep.f.size(); ++i) CHECK(rep.f[i] == naive[i]);

    Graph g4 = gn_graph(4);
    auto rep4 = enumerate_faces(g4, EdgeOrder::list_order(5), FaceMode::full);
    CHECK(rep4.f[2] == 24);

    // A tree gives the boundary of the cross-polytope.
    Graph tree = path_graph(4);
    auto rept = enumerate_faces(tree, EdgeOrder::list_order(4), FaceMode::full);
    for (int j = 0; j <= 4; ++j)
        CHECK(rept.f[static_cast<size_t>(j)] == pow2(j) * binomial(4, j));
}

TEST_CASE("up_to mode and complementarity") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(6, 0.5, rng);
        EdgeOrder order = EdgeOrder::shuffled(g.edge_count(), rng());
        auto rep = enumerate_faces(g, order, FaceMode::up_to, 3);
        REQUIRE(rep.f.size() == 4);
        for (size_t i = 0; i < rep.f.size(); ++i)
            CHECK(rep.f[i] + rep.nonfaces[i] ==
                  pow2(static_cast<long long>(i)) * binomial(g.edge_count(), static_cast<long long>(i)));
    }
    CHECK_THROWS_AS(enumerate_faces(Graph(4, {{0, 1}, {2, 3}}), EdgeOrder::list_order(2), FaceMode::full),
                    std::invalid_argument);
}

TEST_CASE("f-vector does not depend on the edge order") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        Graph g = random_connected(n, 0.55, rng);
        auto base = enumerate_faces(g, EdgeOrder::list_order(g.edge_count()), FaceMode::full);
        for (int s = 0; s < 20; ++s) {
            auto alt = enumerate_faces(g, EdgeOrder::shuffled(g.edge_count(), rng()), FaceMode::full);
            CHECK(alt.f == base.f);
        }
    }
}

TEST_CASE("full complexes carry the Euler characteristic of a sphere") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        Graph g = random_connected(n, 0.6, rng);
        auto rep = enumerate_faces(g, EdgeOrder::list_order(g.edge_count()), FaceMode::full);
        BigInt chi = 0;
        for (size_t i = 1; i < rep.f.size(); ++i) chi += i % 2 == 1 ? rep.f[i] : -rep.f[i];
        CHECK(chi == (n % 2 == 0 ? 2 : 0)); // (n-2)-sphere
    }
}

TEST_CASE("nonface counts and bad pairs") {
    Graph c4 = cycle_graph(4);
    CHECK(count_nonfaces(c4, EdgeOrder::list_order(4), 2) == 6);
    CHECK(bad_pair_count(c4, EdgeOrder::list_order(4)) == 6);

    Graph k5 = complete_graph(5);
    CHECK(count_nonfaces(k5, EdgeOrder::list_order(10), 2) == 90);
    CHECK(bad_pair_count(k5, EdgeOrder::list_order(10)) == 90);

    Graph tree = path_graph(5);
    for (int ell = 1; ell <= 3; ++ell)
        CHECK(count_nonfaces(tree, EdgeOrder::list_order(5), ell) == 0);
    CHECK(bad_pair_count(tree, EdgeOrder::list_order(5)) == 0);
}

TEST_CASE("bad pairs equal 2-nonfaces under random orders") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(6, 0.5, rng);
        if (g.edge_count() > 12 || g.edge_count() == 0) continue;
        for (int s = 0; s < 5; ++s) {
            EdgeOrder order = EdgeOrder::shuffled(g.edge_count(), rng());
            CHECK(bad_pair_count(g, order) == count_nonfaces(g, order, 2));
        }
    }
}

TEST_CASE("polytope edges") {
    Graph c5 = cycle_graph(5);
    CHECK(is_polytope_edge(c5, oe(c5, 1, 2), oe(c5, 3, 4)));
    Graph k3 = complete_graph(3);
    CHECK_FALSE(is_polytope_edge(k3, oe(k3, 1, 2), oe(k3, 2, 3)));
    Graph c4 = cycle_graph(4);
    CHECK_FALSE(is_polytope_edge(c4, oe(c4, 1, 2), oe(c4, 3, 4)));
    CHECK_FALSE(is_polytope_edge(c4, oe(c4, 1, 2), oe(c4, 2, 1)));
    CHECK_THROWS_AS(is_polytope_edge(c4, oe(c4, 1, 2), oe(c4, 2, 1), true), std::invalid_argument);
}

TEST_CASE("polytope edges are faces of every triangulation") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_graph(5, 0.6, rng);
        if (g.edge_count() < 2) continue;
        PolytopeEdgeTester tester(g);
        std::vector<Cycle> cycles;
        if (g.vertex_count() >= 3) cycles = enumerate_cycles(g, std::min(g.vertex_count(), 4));
        for (int s = 0; s < 3; ++s) {
            EdgeOrder order = EdgeOrder::shuffled(g.edge_count(), rng());
            for (int x = 0; x < 2 * g.edge_count(); ++x)
                for (int y = x + 1; y < 2 * g.edge_count(); ++y) {
                    if (x / 2 == y / 2) continue;
                    if (tester.is_edge(from_id(x), from_id(y)))
                        CHECK(is_face(g, order, {from_id(x), from_id(y)}, cycles));
                }
        }
    }
}

TEST_CASE("simplicity classifier") {
    CHECK(is_simple_polytope(cycle_graph(4)));
    CHECK_FALSE(is_simple_polytope(cycle_graph(5)));
    CHECK_FALSE(is_simple_polytope(complete_graph(4)));
    CHECK(is_simple_polytope(Graph(2, {{0, 1}})));                    // P1
    CHECK(is_simple_polytope(Graph(4, {{0, 1}, {2, 3}})));            // 2P1
    CHECK(is_simple_polytope(path_graph(2)));                              // P2
    CHECK(is_simple_polytope(cycle_graph(3)));                             // C3
    CHECK_FALSE(is_simple_polytope(Graph(6, {{4, 5}, {0, 1}, {1, 2}, {2, 0}}))); // C3 plus a far edge
    CHECK_THROWS_AS(is_simple_polytope(Graph(3, {})), std::invalid_argument);

    // Isolated vertices are ignored by the classifier.
    CHECK(is_simple_polytope(Graph(6, {{2, 3}, {3, 4}, {2, 4}})));
}

TEST_CASE("simplicity cross-validation against the edge-degree route") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        Graph g = random_graph(n, 0.6, rng);
        if (g.edge_count() == 0) continue;
        CHECK(is_simple_polytope(g) == is_simple_polytope_via_edges(g));
    }
}

TEST_CASE("optimized enumeration equals the naive oracle on small connected graphs") {
    std::mt19937_64 rng(43);
    int done = 0;
    while (done < 40) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = random_graph(n, 0.5, rng);
        if (!is_connected(g) || g.edge_count() > 8) continue;
        ++done;
        EdgeOrder order = EdgeOrder::shuffled(g.edge_count(), rng());
        auto rep = enumerate_faces(g, order, FaceMode::full);
        auto naive = oracles::naive_f_vector(g, order);
        for (size_t i = 0; i < rep.f.size(); ++i) CHECK(rep.f[i] == naive[i]);
        for (size_t i = rep.f.size(); i < naive.size(); ++i) CHECK(naive[i] == 0);
    }
}
