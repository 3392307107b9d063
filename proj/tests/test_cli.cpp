#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "reachidx/commands.hpp"

using namespace reachidx;
using fixtures::v;

namespace {

std::string tmp_path(const std::string& name) {
    return std::string("/tmp/reachidx_test_") + name;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(REACH_CLI_PATH) + " " + args + " > /dev/null 2> /dev/null";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string data_file(const std::string& name) {
    return std::string(REACH_TEST_DATA) + "/" + name;
}

}  // namespace

TEST_CASE("cmd_gen writes reproducible edge lists", "[cli]") {
    std::ostringstream stats;
    std::string a = tmp_path("gen_a.txt"), b = tmp_path("gen_b.txt");
    REQUIRE(cmd_gen(4, 1.0, 1, a, stats) == 0);
    REQUIRE(cmd_gen(4, 1.0, 1, b, stats) == 0);
    REQUIRE(read_file(a) == read_file(b));

    std::string single = tmp_path("gen_single.txt");
    REQUIRE(cmd_gen(1, 2.0, 0, single, stats) == 0);
    REQUIRE(read_file(single) == "1 0\n");
}

TEST_CASE("gen round-trips through the parser", "[cli]") {
    std::ostringstream stats;
    std::string path = tmp_path("gen_rt.txt");
    REQUIRE(cmd_gen(1000, 2.0, 7, path, stats) == 0);
    Dag direct = random_dag(1000, 2.0, 7);
    Dag reparsed = load_graph(path);
    REQUIRE(direct == reparsed);
}

TEST_CASE("cmd_build emits the documented index sizes", "[cli]") {
    std::string graph = data_file("chain3.txt");
    std::ostringstream stats;
    BuildParams p;
    p.kind = IndexKind::dl;
    std::string out = tmp_path("chain3_dl.json");
    REQUIRE(cmd_build(graph, out, p, stats) == 0);
    json rec = json::parse(stats.str());
    REQUIRE(rec["cmd"] == "build");
    REQUIRE(rec["kind"] == "dl");
    REQUIRE(rec["index_entries"] == 8);

    std::string dgraph = data_file("diamond.txt");
    std::ostringstream stats2;
    BuildParams pt;
    pt.kind = IndexKind::tree;
    std::string out2 = tmp_path("diamond_tree.json");
    REQUIRE(cmd_build(dgraph, out2, pt, stats2) == 0);
    REQUIRE(json::parse(stats2.str())["index_entries"] == 5);
}

TEST_CASE("build rejects invalid parameters", "[cli]") {
    std::string graph = data_file("chain3.txt");
    BuildParams p;
    p.kind = IndexKind::tree_sampled;
    p.theta = 1.5;
    std::ostringstream stats;
    REQUIRE_THROWS_AS(cmd_build(graph, tmp_path("x.json"), p, stats), std::invalid_argument);
}

TEST_CASE("cmd_query answers pairs in order", "[cli]") {
    std::string graph = data_file("chain3.txt");
    std::ostringstream stats;
    BuildParams p;
    std::string index = tmp_path("q_chain3_dl.json");
    REQUIRE(cmd_build(graph, index, p, stats) == 0);

    std::string pairs = tmp_path("q_pairs.txt");
    write_file(pairs, "0 2\n2 0\n");
    std::string answers = tmp_path("q_answers.txt");
    REQUIRE(cmd_query(index, pairs, answers, stats) == 0);
    REQUIRE(read_file(answers) == "1\n0\n");

    write_file(pairs, "");
    REQUIRE(cmd_query(index, pairs, answers, stats) == 0);
    REQUIRE(read_file(answers).empty());

    write_file(pairs, "0 9\n");
    try {
        cmd_query(index, pairs, answers, stats);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        REQUIRE(e.line() == 1);
    }
}

TEST_CASE("cmd_bench verifies against the oracle", "[cli]") {
    std::ostringstream stats;
    std::string graph = tmp_path("bench_g.txt");
    REQUIRE(cmd_gen(2000, 2.0, 3, graph, stats) == 0);
    for (IndexKind kind : {IndexKind::dl, IndexKind::grail}) {
        BuildParams p;
        p.kind = kind;
        std::ostringstream bench_stats;
        REQUIRE(cmd_bench(graph, p, WorkloadKind::random, 1000, true, bench_stats,
                          std::cerr) == 0);
        json rec = json::parse(bench_stats.str());
        REQUIRE(rec["queries"] == 1000);
    }
    BuildParams p;
    REQUIRE_THROWS_AS(cmd_bench(graph, p, WorkloadKind::random, 0, false, stats, std::cerr),
                      std::invalid_argument);
}

TEST_CASE("bench answers are deterministic per seed", "[cli]") {
    std::string graph = tmp_path("bench_det.txt");
    std::ostringstream stats;
    REQUIRE(cmd_gen(500, 2.0, 11, graph, stats) == 0);
    // same seed, two runs: identical answer streams via identical workloads
    Dag g = load_graph(graph);
    BuildParams p;
    p.seed = 5;
    BuiltIndex idx = build_index(g, p);
    QueryWorkload w1 = make_workload(g, WorkloadKind::equal, 200, p.seed);
    QueryWorkload w2 = make_workload(g, WorkloadKind::equal, 200, p.seed);
    REQUIRE(w1.pairs == w2.pairs);
}

TEST_CASE("cmd_verify passes on the diamond and flags mutilated labels", "[cli]") {
    std::string graph = data_file("diamond.txt");
    std::ostringstream report;
    REQUIRE(cmd_verify(graph, {2}, std::nullopt, 0.05, kDefaultOracleCap, report) == 0);
    REQUIRE(report.str().find("FAIL") == std::string::npos);

    // drop one hop from a complete labeling and expect a completeness failure
    Dag d = load_graph(graph);
    HopLabeling labels = dl_build(d);
    labels.l_in[v(4)].erase(labels.l_in[v(4)].begin());
    std::string labels_path = tmp_path("verify_bad_labels.json");
    write_json_file(labels_path, to_json(labels));
    std::ostringstream bad;
    REQUIRE(cmd_verify(graph, {2}, labels_path, 0.05, kDefaultOracleCap, bad) == 2);
    REQUIRE(bad.str().find("FAIL labels-complete witness") != std::string::npos);
}

TEST_CASE("cmd_verify is vacuous on an edgeless graph", "[cli]") {
    std::string graph = tmp_path("verify_edgeless.txt");
    write_file(graph, "5 0\n");
    std::ostringstream report;
    REQUIRE(cmd_verify(graph, {1, 2}, std::nullopt, 0.05, kDefaultOracleCap, report) == 0);
}

TEST_CASE("the binary wires subcommands to exit codes", "[cli]") {
    std::string graph = tmp_path("bin_g.txt");
    std::string index = tmp_path("bin_dl.json");
    std::string pairs = tmp_path("bin_pairs.txt");
    std::string answers = tmp_path("bin_answers.txt");
    write_file(pairs, "0 1\n");

    REQUIRE(run_cli("gen --n 64 --deg 2 --seed 1 --out " + graph) == 0);
    REQUIRE(run_cli("build --input " + graph + " --kind dl --out " + index) == 0);
    REQUIRE(run_cli("query --index " + index + " --pairs " + pairs + " --out " + answers) == 0);
    REQUIRE(run_cli("bench --input " + graph + " --kind grail --count 100 --verify") == 0);
    REQUIRE(run_cli("verify --input " + graph + " --epsilon 1 2") == 0);

    REQUIRE(run_cli("build --input " + graph + " --kind dl --theta 2.0 --out " + index) == 1);
    REQUIRE(run_cli("build --input " + graph + " --kind nosuch --out " + index) == 1);
    REQUIRE(run_cli("bench --input " + graph + " --count 0") == 1);
    REQUIRE(run_cli("nosuchcommand") == 1);
    REQUIRE(run_cli("build --input /nonexistent.txt --kind dl --out " + index) == 1);
}
