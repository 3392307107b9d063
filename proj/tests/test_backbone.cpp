#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "reachidx/backbone.hpp"
#include "reachidx/random_dag.hpp"

using namespace reachidx;
using fixtures::v;

namespace {

std::vector<Edge> pairs_of(const CoverInstance& inst, uint32_t x) {
    std::vector<Edge> out;
    for (uint32_t pid : inst.candidates[x]) out.push_back(inst.ground[pid]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("cover instance on chain4, two-side", "[backbone]") {
    Dag c = fixtures::chain4();
    CoverInstance inst = build_cover_instance(c, 1, BackboneMode::two_side);
    std::vector<Edge> ground = inst.ground;
    std::sort(ground.begin(), ground.end());
    REQUIRE(ground == std::vector<Edge>{{v(1), v(3)}, {v(2), v(4)}});
    REQUIRE(pairs_of(inst, v(2)) == std::vector<Edge>{{v(1), v(3)}});
    REQUIRE(pairs_of(inst, v(3)) == std::vector<Edge>{{v(2), v(4)}});
    REQUIRE(inst.candidates[v(1)].empty());
    REQUIRE(inst.candidates[v(4)].empty());
}

TEST_CASE("cover instance on the diamond, one-side", "[backbone]") {
    Dag d = fixtures::diamond();
    CoverInstance inst = build_cover_instance(d, 2, BackboneMode::one_side);
    REQUIRE(inst.ground == std::vector<Edge>{{v(1), v(4)}});
    for (uint32_t x = 0; x < 4; ++x)
        REQUIRE(pairs_of(inst, x) == std::vector<Edge>{{v(1), v(4)}});
}

TEST_CASE("epsilon beyond the diameter gives an empty ground set", "[backbone]") {
    Dag c = fixtures::chain4();
    CoverInstance inst = build_cover_instance(c, 4, BackboneMode::two_side);
    REQUIRE(inst.ground.empty());
    REQUIRE(greedy_cover(inst, {}).empty());
}

TEST_CASE("greedy_cover picks the fixture backbones", "[backbone]") {
    Dag c = fixtures::chain4();
    CoverInstance inst = build_cover_instance(c, 1, BackboneMode::two_side);
    REQUIRE(greedy_cover(inst, {}) == std::vector<uint32_t>{v(2), v(3)});

    Dag d = fixtures::diamond();
    CoverInstance one = build_cover_instance(d, 2, BackboneMode::one_side);
    REQUIRE(greedy_cover(one, {}) == std::vector<uint32_t>{v(1)});
}

TEST_CASE("greedy_cover keeps the preselection", "[backbone]") {
    Dag c = fixtures::chain4();
    CoverInstance inst = build_cover_instance(c, 1, BackboneMode::two_side);
    std::vector<uint32_t> got = greedy_cover(inst, {v(2)});
    REQUIRE(std::find(got.begin(), got.end(), v(2)) != got.end());
    // still covers both pairs
    Backbone b;
    b.epsilon = 1;
    b.mode = BackboneMode::two_side;
    b.vertices = got;
    b.edges = backbone_edges(c, got, 1, BackboneMode::two_side);
    REQUIRE(verify_backbone(c, b, compute_tc(c)).ok());
}

TEST_CASE("greedy_cover reports uncoverable pairs", "[backbone]") {
    CoverInstance broken;
    broken.epsilon = 1;
    broken.ground = {{0, 2}};
    broken.candidates.resize(3);  // nobody covers the pair
    REQUIRE_THROWS_AS(greedy_cover(broken, {}), std::runtime_error);
}

TEST_CASE("preselect ranks by degree product", "[backbone]") {
    Dag d = fixtures::diamond();
    REQUIRE(preselect(d, 0.25) == std::vector<uint32_t>{v(2)});
    REQUIRE(preselect(d, 0.0).empty());
    REQUIRE(preselect(d, 1.0) == std::vector<uint32_t>{0, 1, 2, 3});
}

TEST_CASE("backbone_edges fixture checks", "[backbone]") {
    Dag c = fixtures::chain4();
    REQUIRE(backbone_edges(c, {v(2), v(3)}, 1, BackboneMode::two_side) ==
            std::vector<Edge>{{v(2), v(3)}});
    Dag d = fixtures::diamond();
    REQUIRE(backbone_edges(d, {v(2), v(4)}, 2, BackboneMode::one_side) ==
            std::vector<Edge>{{v(2), v(4)}});
    REQUIRE(backbone_edges(d, {}, 2, BackboneMode::two_side).empty());
}

TEST_CASE("verify_backbone accepts a valid cover and flags a broken one", "[backbone]") {
    Dag c = fixtures::chain4();
    TransitiveClosure tc = compute_tc(c);

    Backbone good;
    good.epsilon = 1;
    good.mode = BackboneMode::two_side;
    good.vertices = {v(2), v(3)};
    good.edges = backbone_edges(c, good.vertices, 1, BackboneMode::two_side);
    REQUIRE(verify_backbone(c, good, tc).ok());

    Backbone bad;
    bad.epsilon = 1;
    bad.mode = BackboneMode::two_side;
    bad.vertices = {v(2)};
    bad.edges = backbone_edges(c, bad.vertices, 1, BackboneMode::two_side);
    BackboneReport report = verify_backbone(c, bad, tc);
    REQUIRE_FALSE(report.ok());
    REQUIRE(std::find(report.missing_witness.begin(), report.missing_witness.end(),
                      Edge{v(2), v(4)}) != report.missing_witness.end());
}

TEST_CASE("verify_backbone passes vacuously without non-local pairs", "[backbone]") {
    Dag c = fixtures::chain3();
    Backbone b;
    b.epsilon = 2;
    b.mode = BackboneMode::two_side;
    REQUIRE(verify_backbone(c, b, compute_tc(c)).ok());
}

TEST_CASE("greedy covers verify on random dags for several epsilons", "[backbone]") {
    for (uint64_t seed = 0; seed < 12; ++seed) {
        Dag g = random_dag(180, 2.0, seed);
        TransitiveClosure tc = compute_tc(g);
        for (uint32_t eps : {1u, 2u, 3u}) {
            Backbone plain = discover_backbone(g, eps, BackboneMode::two_side);
            REQUIRE(verify_backbone(g, plain, tc).ok());
            Backbone pre = discover_backbone(g, eps, BackboneMode::two_side, 0.05);
            REQUIRE(verify_backbone(g, pre, tc).ok());
        }
    }
}

TEST_CASE("one-side covers leave a midpoint for every critical pair", "[backbone]") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        Dag g = random_dag(150, 2.0, seed);
        uint32_t eps = 2;
        CoverInstance inst = build_cover_instance(g, eps, BackboneMode::one_side);
        std::vector<uint32_t> vstar = greedy_cover(inst, {});
        std::vector<bool> in_star(g.n, false);
        for (uint32_t x : vstar) in_star[x] = true;
        for (const Edge& p : inst.ground) {
            bool found = false;
            for (uint32_t x = 0; x < g.n && !found; ++x) {
                if (!in_star[x]) continue;
                auto d1 = distance(g, p.first, x);
                auto d2 = distance(g, x, p.second);
                found = d1 && d2 && *d1 <= eps && *d2 <= eps;
            }
            REQUIRE(found);
        }
    }
}

TEST_CASE("redundant-edge pruning preserves the backbone property", "[backbone]") {
    for (uint64_t seed = 0; seed < 5; ++seed) {
        Dag g = random_dag(120, 2.0, seed);
        TransitiveClosure tc = compute_tc(g);
        Backbone b = discover_backbone(g, 2, BackboneMode::two_side, 0.0, true);
        REQUIRE(verify_backbone(g, b, tc).ok());
    }
}
