#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "reachidx/commands.hpp"
#include "reachidx/io.hpp"
#include "reachidx/random_dag.hpp"

using namespace reachidx;

namespace {

// reload an index through its serialized form and require identical
// answers on every pair
void require_roundtrip(const Dag& g, const BuildParams& p) {
    BuiltIndex built = build_index(g, p);
    std::string text = built.serialized.dump();
    LoadedIndex loaded = load_index(json::parse(text));
    REQUIRE(loaded.n == g.n);
    REQUIRE(loaded.entries == built.entries);
    for (uint32_t a = 0; a < g.n; ++a)
        for (uint32_t b = 0; b < g.n; ++b)
            REQUIRE(loaded.query(a, b) == built.query(a, b));
}

}  // namespace

TEST_CASE("every index kind round-trips to identical answers", "[io]") {
    Dag g = random_dag(90, 2.0, 13);
    for (IndexKind kind : {IndexKind::dl, IndexKind::hl, IndexKind::tree,
                           IndexKind::tree_sampled, IndexKind::ktree, IndexKind::grail,
                           IndexKind::brute}) {
        BuildParams p;
        p.kind = kind;
        p.seed = 21;
        require_roundtrip(g, p);
    }
}

TEST_CASE("index construction is deterministic per seed", "[io]") {
    Dag g = random_dag(150, 2.0, 4);
    for (IndexKind kind : {IndexKind::dl, IndexKind::hl, IndexKind::tree,
                           IndexKind::tree_sampled, IndexKind::ktree, IndexKind::grail}) {
        BuildParams p;
        p.kind = kind;
        p.seed = 9;
        REQUIRE(build_index(g, p).serialized.dump() == build_index(g, p).serialized.dump());
    }
}

TEST_CASE("treecover-v1 carries the documented fields", "[io]") {
    Dag d = fixtures::diamond();
    TransitiveClosure tc = compute_tc(d);
    TreeCover t = build_tree(exact_weights(d, tc));
    TreeIndex idx = TreeIndex::from(t, compress_tc(d, t));
    json j = to_json(idx);
    REQUIRE(j["format"] == "treecover-v1");
    REQUIRE(j["n"] == 4);
    REQUIRE(j["parent"][0] == -1);  // virtual root encoding
    REQUIRE(j["interval"].size() == 4);
    uint64_t entries = 0;
    for (const auto& l : j["ctc"]) entries += l.size();
    REQUIRE(entries == 5);
}

TEST_CASE("hoplabel-v1 arrays are ascending", "[io]") {
    Dag g = random_dag(60, 2.0, 2);
    json j = to_json(dl_build(g));
    REQUIRE(j["format"] == "hoplabel-v1");
    for (const char* side : {"l_out", "l_in"})
        for (const auto& arr : j[side]) {
            auto vals = arr.get<std::vector<uint32_t>>();
            REQUIRE(std::is_sorted(vals.begin(), vals.end()));
        }
}

TEST_CASE("backbone-v1 round-trips", "[io]") {
    Dag g = random_dag(80, 2.0, 5);
    Backbone b = discover_backbone(g, 2, BackboneMode::two_side, 0.05);
    Backbone back = backbone_from_json(to_json(b));
    REQUIRE(back.epsilon == b.epsilon);
    REQUIRE(back.mode == b.mode);
    REQUIRE(back.vertices == b.vertices);
    REQUIRE(back.edges == b.edges);
}

TEST_CASE("loading a mismatched format fails", "[io]") {
    json j;
    j["format"] = "hoplabel-v1";
    j["l_out"] = json::array();
    j["l_in"] = json::array();
    REQUIRE_THROWS_AS(tree_index_from_json(j), std::runtime_error);
    REQUIRE_THROWS_AS(load_index(json::parse("{\"format\":\"bogus\"}")), std::runtime_error);
}
