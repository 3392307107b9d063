#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "reachidx/dl.hpp"
#include "reachidx/random_dag.hpp"

using namespace reachidx;
using fixtures::v;

TEST_CASE("rank_vertices fixture orders", "[dl]") {
    REQUIRE(rank_vertices(fixtures::chain3()).order ==
            std::vector<uint32_t>{v(2), v(1), v(3)});
    REQUIRE(rank_vertices(fixtures::diamond()).order ==
            std::vector<uint32_t>{v(2), v(3), v(1), v(4)});
    REQUIRE(rank_vertices(dag_from_edges(3, {})).order == std::vector<uint32_t>{0, 1, 2});
}

TEST_CASE("dl_build traces chain3 exactly", "[dl]") {
    Dag c = fixtures::chain3();
    HopLabeling labels = dl_build(c);
    REQUIRE(labels.l_out[v(1)] == std::vector<uint32_t>{v(1), v(2)});
    REQUIRE(labels.l_out[v(2)] == std::vector<uint32_t>{v(2)});
    REQUIRE(labels.l_out[v(3)] == std::vector<uint32_t>{v(3)});
    REQUIRE(labels.l_in[v(1)] == std::vector<uint32_t>{v(1)});
    REQUIRE(labels.l_in[v(2)] == std::vector<uint32_t>{v(2)});
    REQUIRE(labels.l_in[v(3)] == std::vector<uint32_t>{v(2), v(3)});
    REQUIRE(labels.total_entries() == 8);
}

TEST_CASE("dl_build answers the diamond", "[dl]") {
    Dag d = fixtures::diamond();
    HopLabeling labels = dl_build(d);
    REQUIRE(query_hop(labels, v(1), v(4)));
    REQUIRE_FALSE(query_hop(labels, v(4), v(1)));
}

TEST_CASE("dl_build on a single vertex", "[dl]") {
    HopLabeling labels = dl_build(dag_from_edges(1, {}));
    REQUIRE(labels.l_out[0] == std::vector<uint32_t>{0});
    REQUIRE(labels.l_in[0] == std::vector<uint32_t>{0});
}

TEST_CASE("dl labels are complete on fixtures and random dags", "[dl]") {
    std::vector<Dag> graphs{fixtures::chain3(), fixtures::chain4(), fixtures::diamond()};
    for (uint64_t seed = 0; seed < 20; ++seed)
        graphs.push_back(random_dag(50 + static_cast<uint32_t>(seed) * 20, 2.0, seed));
    for (const Dag& g : graphs) {
        TransitiveClosure tc = compute_tc(g);
        HopLabeling labels = dl_build(g);
        for (uint32_t a = 0; a < g.n; ++a)
            for (uint32_t b = 0; b < g.n; ++b)
                REQUIRE(query_hop(labels, a, b) == tc.reach(a, b));
    }
}

TEST_CASE("every vertex records itself on both sides", "[dl]") {
    Dag g = random_dag(150, 2.0, 2);
    HopLabeling labels = dl_build(g);
    for (uint32_t x = 0; x < g.n; ++x) {
        REQUIRE(std::binary_search(labels.l_out[x].begin(), labels.l_out[x].end(), x));
        REQUIRE(std::binary_search(labels.l_in[x].begin(), labels.l_in[x].end(), x));
    }
}

TEST_CASE("label volume stays within twice the closure size", "[dl]") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Dag g = random_dag(200, 2.0, seed);
        TransitiveClosure tc = compute_tc(g);
        REQUIRE(dl_build(g).total_entries() <= 2 * tc.total_size);
    }
}

TEST_CASE("check_non_redundancy confirms the chain3 labels", "[dl]") {
    Dag c = fixtures::chain3();
    TransitiveClosure tc = compute_tc(c);
    HopLabeling labels = dl_build(c);
    REQUIRE(check_non_redundancy(c, labels, tc).ok());
}

TEST_CASE("check_non_redundancy confirms self-hops on an edgeless graph", "[dl]") {
    Dag g = dag_from_edges(4, {});
    REQUIRE(check_non_redundancy(g, dl_build(g), compute_tc(g)).ok());
}

TEST_CASE("check_non_redundancy flags a planted extra hop", "[dl]") {
    Dag c = fixtures::chain3();
    TransitiveClosure tc = compute_tc(c);
    HopLabeling labels = dl_build(c);
    labels.l_out[v(1)].insert(labels.l_out[v(1)].begin(), v(1));  // plant hop 1
    std::sort(labels.l_out[v(1)].begin(), labels.l_out[v(1)].end());
    labels.l_out[v(1)].erase(
        std::unique(labels.l_out[v(1)].begin(), labels.l_out[v(1)].end()),
        labels.l_out[v(1)].end());
    labels.l_in[v(3)].push_back(v(1));
    std::sort(labels.l_in[v(3)].begin(), labels.l_in[v(3)].end());
    RedundancyReport report = check_non_redundancy(c, labels, tc);
    REQUIRE_FALSE(report.ok());
}

TEST_CASE("dl labels are non-redundant on random dags", "[dl]") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        Dag g = random_dag(40 + static_cast<uint32_t>(seed), 1.8, seed);
        TransitiveClosure tc = compute_tc(g);
        RedundancyReport report = check_non_redundancy(g, dl_build(g), tc);
        REQUIRE(report.ok());
    }
}
