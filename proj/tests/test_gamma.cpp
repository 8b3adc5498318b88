#include <doctest.h>

#include <random>

#include "sep/errors.hpp"
#include "sep/gamma.hpp"
#include "sep/graph.hpp"
#include "sep/serialize.hpp"

using namespace sep;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> xs) {
    std::vector<BigInt> out;
    for (long long x : xs) out.push_back(x);
    return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) es.push_back({i, j});
    return Graph(n, es);
}

} // namespace

TEST_CASE("f_to_h") {
    CHECK(f_to_h(big({1, 8, 18, 12}), 3) == big({1, 5, 5, 1}));
    CHECK(f_to_h(big({1}), 0) == big({1}));
    // boundary of the 5-dimensional cross-polytope
    std::vector<BigInt> f;
    for (int j = 0; j <= 5; ++j) f.push_back(pow2(j) * binomial(5, j));
    std::vector<BigInt> h = f_to_h(f, 5);
    for (int j = 0; j <= 5; ++j) CHECK(h[static_cast<size_t>(j)] == binomial(5, j));
    CHECK(h_to_f(h) == f);
    CHECK_THROWS_AS(f_to_h(big({1, 2}), 3), std::invalid_argument);
}

TEST_CASE("h_to_gamma") {
    CHECK(h_to_gamma(big({1, 5, 5, 1})) == big({1, 2}));
    CHECK(h_to_gamma(big({1, 1, 1, 1})) == big({1, -2}));
    CHECK_THROWS_AS(h_to_gamma(big({1, 2, 1, 1})), std::invalid_argument);
    CHECK(gamma_to_h(big({1, 2}), 3) == big({1, 5, 5, 1}));
}

TEST_CASE("gamma_full on reference graphs") {
    CHECK(gamma_full(complete_graph(5)).gamma == big({1, 12, 6}));

    GammaReport forest = gamma_full(path_graph(6));
    CHECK(forest.gamma == big({1, 0, 0, 0}));
    CHECK(forest.dim == 6);

    Graph remark = Graph::from_edges_1based(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {3, 5}});
    CHECK(gamma_full(remark).gamma == big({1, 4, 4}));
    Graph remark_minus = Graph::from_edges_1based(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    CHECK(gamma_full(remark_minus).gamma == big({1, 2, 6}));
}

TEST_CASE("gamma_full is order independent and consistent") {
    Graph g = gn_graph(5);
    GammaReport base = gamma_full(g);
    for (std::uint64_t seed : {1ull, 99ull}) {
        GammaReport alt = gamma_full(g, {}, seed);
        CHECK(alt.f == base.f);
        CHECK(alt.gamma == base.gamma);
        CHECK(alt.order_seed == seed);
    }
    // palindromic h, sum h = facet count
    BigInt sum = 0;
    for (const auto& x : base.h) sum += x;
    CHECK(sum == base.f.back());
    for (size_t i = 0; i < base.h.size(); ++i) CHECK(base.h[i] == base.h[base.h.size() - 1 - i]);
}

TEST_CASE("gamma_truncated") {
    CHECK(gamma_truncated(complete_graph(5), 2).gamma == big({1, 12, 6}));
    CHECK(gamma_truncated(complete_graph(5), 1).gamma == big({1, 12}));

    // prefix of the full computation
    for (const Graph& g : {cycle_graph(6), gn_graph(6), complete_bipartite(2, 4)}) {
        GammaReport full = gamma_full(g);
        GammaReport trunc = gamma_truncated(g, 2);
        for (int i = 0; i <= 2; ++i)
            CHECK(trunc.gamma[static_cast<size_t>(i)] == full.gamma[static_cast<size_t>(i)]);
        CHECK(trunc.f == std::vector<BigInt>(full.f.begin(), full.f.begin() + 3));
    }

    // gamma_1 = f_0 - 2(n-1) = 2cy on connected graphs
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(6, 0.5, rng);
        GammaReport rep = gamma_truncated(g, 1);
        CHECK(rep.gamma[1] == gamma1(g));
    }

    CHECK_THROWS_AS(gamma_truncated(cycle_graph(4), 2), std::invalid_argument); // dim 3, floor/2 = 1

    // disconnected graphs convolve over components
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(gamma_truncated(two_triangles, 2).gamma == big({1, 4, 4}));
    CHECK(gamma_truncated(two_triangles, 2).gamma ==
          std::vector<BigInt>(gamma_full(two_triangles).gamma.begin(),
                              gamma_full(two_triangles).gamma.begin() + 3));
}

TEST_CASE("gamma1 and gamma2 closed forms") {
    CHECK(gamma1(complete_graph(5)) == 12);
    CHECK(gamma2(complete_graph(5)) == 6);
    CHECK(gamma1(cycle_graph(4)) == 2);
    CHECK(gamma2(cycle_graph(4)) == 0);

    Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(gamma1(bowtie) == 4);
    CHECK(gamma2(bowtie) == 4);

    // disconnected: component product matches the enumerated value
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(gamma2(two_triangles) == 4);
    GammaReport full = gamma_full(two_triangles);
    CHECK(full.gamma[2] == 4);
}

TEST_CASE("gamma_via_blocks") {
    // two K4 glued at a vertex: gamma_2 = 0 + 0 + 4*9
    Graph two_k4(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                     {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
    GammaReport rep = gamma_via_blocks(two_k4);
    CHECK(rep.gamma[1] == 12);
    CHECK(rep.gamma[2] == 36);

    CHECK(gamma_via_blocks(complete_graph(5)).gamma == gamma_full(complete_graph(5)).gamma);
    CHECK(gamma_via_blocks(path_graph(5)).gamma == big({1, 0, 0}));

    std::mt19937_64 rng(17);
    for (int t = 0; t < 15; ++t) {
        Graph g = random_graph(6, 0.45, rng);
        CHECK(gamma_via_blocks(g).gamma == gamma_full(g).gamma);
        CHECK(gamma_via_blocks(g).h == gamma_full(g).h);
    }
}

TEST_CASE("gamma2 zero classification") {
    // K_{2,7} plus a pendant edge
    std::vector<std::pair<int, int>> es;
    for (int b = 2; b < 9; ++b) {
        es.push_back({0, b});
        es.push_back({1, b});
    }
    es.push_back({8, 9});
    Graph k27_pendant(10, es);
    CHECK(classify_gamma2_zero(k27_pendant).zero);

    CHECK_FALSE(classify_gamma2_zero(complete_bipartite(3, 3)).zero);
    CHECK(classify_gamma2_zero(path_graph(5)).zero);
    CHECK(classify_gamma2_zero(complete_graph(4)).zero);
    CHECK(classify_gamma2_zero(gn_graph(7)).zero);
    CHECK_FALSE(classify_gamma2_zero(complete_graph(5)).zero);

    Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK_FALSE(classify_gamma2_zero(bowtie).zero);
}

TEST_CASE("closed forms") {
    CHECK(closed_form_kn(6, 2) == 30);
    CHECK(closed_form_kn(9, 0) == 1);
    CHECK(closed_form_kmn(2, 2, 1) == 2); // gamma_1 of the 4-cycle

    for (int n = 4; n <= 6; ++n) {
        GammaReport rep = gamma_full(complete_graph(n));
        for (size_t i = 0; i < rep.gamma.size(); ++i)
            CHECK(rep.gamma[i] == closed_form_kn(n, static_cast<int>(i)));
    }
    // the complete bipartite form that survives the oracle sweep
    for (int m = 2; m <= 4; ++m)
        for (int n = m; n <= 4; ++n) {
            GammaReport rep = gamma_full(complete_bipartite(m, n));
            for (size_t i = 0; i < rep.gamma.size(); ++i)
                CHECK(rep.gamma[i] == closed_form_kmn(m, n, static_cast<int>(i)));
        }
    // gamma_1(K_{3,3}) = 2cy = 8 pins the transcription
    CHECK(closed_form_kmn(3, 3, 1) == 8);
    CHECK(closed_form_kmn(3, 3, 1) == gamma1(complete_bipartite(3, 3)));
}

TEST_CASE("closed-form and auto reports") {
    GammaReport kn = gamma_closed_form(complete_graph(6));
    CHECK(kn.method == "closed-form");
    CHECK(kn.gamma == big({1, 20, 30}));
    BigInt hsum = 0;
    for (const auto& x : kn.h) hsum += x;
    CHECK(hsum == kn.f.back());
    CHECK(kn.f == gamma_full(complete_graph(6)).f);

    CHECK_THROWS_AS(gamma_closed_form(gn_graph(5)), std::invalid_argument);
    CHECK(gamma_auto(complete_graph(5)).method == "closed-form");
    CHECK(gamma_auto(path_graph(3)).method == "block-product");
    CHECK(gamma_auto(gn_graph(5)).method == "full-enumeration");
    CHECK(gamma_auto(gn_graph(5)).gamma == gamma_full(gn_graph(5)).gamma);
}

TEST_CASE("exhaustive invariants on all graphs with 5 vertices") {
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) all.push_back({i, j});
    for (int mask = 0; mask < (1 << 10); ++mask) {
        std::vector<std::pair<int, int>> es;
        for (int b = 0; b < 10; ++b)
            if (mask >> b & 1) es.push_back(all[static_cast<size_t>(b)]);
        Graph g(5, es);
        GammaReport full = gamma_full(g);
        BigInt g1 = full.gamma.size() > 1 ? full.gamma[1] : BigInt(0);
        BigInt g2 = full.gamma.size() > 2 ? full.gamma[2] : BigInt(0);
        CHECK(g1 == gamma1(g));
        CHECK(g2 == gamma2(g));
        CHECK(g2 >= 0);
        CHECK(classify_gamma2_zero(g).zero == (g2 == 0));
    }
}

TEST_CASE("gamma report JSON shape") {
    auto j = to_json(gamma_full(complete_graph(5)));
    CHECK(j["n"] == 5);
    CHECK(j["dim"] == 4);
    CHECK(j["gamma"].is_array());
    CHECK(j["gamma"][1] == "12");
    CHECK(j["method"] == "full-enumeration");
}
