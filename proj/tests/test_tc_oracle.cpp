#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "reachidx/random_dag.hpp"
#include "reachidx/tc_oracle.hpp"

using namespace reachidx;
using fixtures::v;

TEST_CASE("compute_tc on chain3", "[tc-oracle]") {
    TransitiveClosure tc = compute_tc(fixtures::chain3());
    REQUIRE(tc.pred[v(1)].to_vector() == std::vector<uint32_t>{v(1)});
    REQUIRE(tc.pred[v(2)].to_vector() == std::vector<uint32_t>{v(1), v(2)});
    REQUIRE(tc.pred[v(3)].to_vector() == std::vector<uint32_t>{v(1), v(2), v(3)});
    REQUIRE(tc.total_size == 6);
}

TEST_CASE("compute_tc on the diamond", "[tc-oracle]") {
    TransitiveClosure tc = compute_tc(fixtures::diamond());
    REQUIRE(tc.pred[v(4)].to_vector() == std::vector<uint32_t>{v(1), v(2), v(3), v(4)});
    REQUIRE(tc.total_size == 9);
}

TEST_CASE("compute_tc on an edgeless graph", "[tc-oracle]") {
    TransitiveClosure tc = compute_tc(dag_from_edges(5, {}));
    for (uint32_t i = 0; i < 5; ++i) REQUIRE(tc.pred[i].to_vector() == std::vector<uint32_t>{i});
    REQUIRE(tc.total_size == 5);
}

TEST_CASE("compute_tc refuses graphs above the cap", "[tc-oracle]") {
    Dag g = random_dag(64, 1.0, 3);
    REQUIRE_THROWS_AS(compute_tc(g, 63), std::runtime_error);
}

TEST_CASE("reach answers from pred sets", "[tc-oracle]") {
    Dag d = fixtures::diamond();
    TransitiveClosure tc = compute_tc(d);
    REQUIRE(reach(tc, v(1), v(4)));
    REQUIRE_FALSE(reach(tc, v(2), v(3)));
    for (uint32_t x = 0; x < d.n; ++x) REQUIRE(reach(tc, x, x));
}

TEST_CASE("pred sizes match an independent per-target reverse BFS", "[tc-oracle]") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        Dag g = random_dag(300, 2.0, seed);
        TransitiveClosure tc = compute_tc(g);
        uint64_t total = 0;
        for (uint32_t t = 0; t < g.n; ++t) {
            std::vector<bool> seen(g.n, false);
            std::vector<uint32_t> stack{t};
            seen[t] = true;
            uint64_t cnt = 1;
            while (!stack.empty()) {
                uint32_t x = stack.back();
                stack.pop_back();
                for (uint32_t w : g.in(x))
                    if (!seen[w]) {
                        seen[w] = true;
                        ++cnt;
                        stack.push_back(w);
                    }
            }
            REQUIRE(tc.pred_size(t) == cnt);
            total += cnt;
        }
        REQUIRE(tc.total_size == total);
    }
}

TEST_CASE("sample_positive_pairs draws only reachable pairs", "[tc-oracle]") {
    Dag c = fixtures::chain3();
    std::vector<Edge> pairs = sample_positive_pairs(c, 3, 99);
    std::vector<Edge> universe{{v(1), v(2)}, {v(1), v(3)}, {v(2), v(3)}};
    for (const Edge& p : pairs)
        REQUIRE(std::find(universe.begin(), universe.end(), p) != universe.end());
}

TEST_CASE("sample_positive_pairs fails on an edgeless graph", "[tc-oracle]") {
    REQUIRE_THROWS_AS(sample_positive_pairs(dag_from_edges(4, {}), 1, 0), std::runtime_error);
}

TEST_CASE("sample_positive_pairs is reproducible and oracle-positive", "[tc-oracle]") {
    Dag d = fixtures::diamond();
    TransitiveClosure tc = compute_tc(d);
    std::vector<Edge> a = sample_positive_pairs(d, 1000, 5);
    std::vector<Edge> b = sample_positive_pairs(d, 1000, 5);
    REQUIRE(a == b);
    for (const Edge& p : a) {
        REQUIRE(p.first != p.second);
        REQUIRE(tc.reach(p.first, p.second));
    }
}

TEST_CASE("large-graph sampling path stays positive", "[tc-oracle]") {
    Dag g = random_dag(400, 1.5, 21);
    auto reach_m = fixtures::brute_reach(g);
    // force the BFS fallback with a tiny cap
    std::vector<Edge> pairs = sample_positive_pairs(g, 200, 9, /*vertex_cap=*/16);
    REQUIRE(pairs.size() == 200);
    for (const Edge& p : pairs) {
        REQUIRE(p.first != p.second);
        REQUIRE(reach_m[p.first][p.second]);
    }
}
