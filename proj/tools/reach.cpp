// Command-line front end: graph generation, index construction for every
// method, query execution, benchmarking, and oracle-backed verification.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reachidx/commands.hpp"

using namespace reachidx;

int main(int argc, char** argv) {
    CLI::App app{"reachability indexing toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a seeded random DAG edge list");
    uint32_t gen_n = 1000;
    double gen_deg = 2.0;
    uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--deg", gen_deg, "average out-degree");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--out", gen_out, "output edge-list path")->required();

    // shared build knobs
    BuildParams params;
    std::string kind_str = "dl";
    auto add_build_options = [&](CLI::App* cmd) {
        cmd->add_option("--kind", kind_str, "dl|hl|tree|tree-sampled|ktree|grail|brute");
        cmd->add_option("--epsilon", params.epsilon, "locality threshold");
        cmd->add_option("--theta", params.theta, "sampling accuracy target");
        cmd->add_option("--delta", params.delta, "sampling failure probability");
        cmd->add_option("--groups", params.groups, "tree count for ktree");
        cmd->add_option("--group-size", params.group_size, "vertices per conditional pass");
        cmd->add_option("--levels", params.levels, "max hierarchy levels");
        cmd->add_option("--core-limit", params.core_limit, "hierarchy core size bound");
        cmd->add_option("--iters", params.iters, "max ktree refinement iterations");
        cmd->add_option("--alpha", params.alpha, "preselection fraction");
        cmd->add_option("--c", params.c, "GRAIL traversal count");
        cmd->add_option("--seed", params.seed, "random seed");
        cmd->add_option("--oracle-cap", params.oracle_cap, "oracle vertex cap");
    };

    // build
    auto* build = app.add_subcommand("build", "build an index file from an edge list");
    std::string build_input, build_out;
    build->add_option("--input", build_input, "edge-list path")->required();
    build->add_option("--out", build_out, "index output path")->required();
    add_build_options(build);

    // query
    auto* query = app.add_subcommand("query", "answer pairs from an index file");
    std::string query_index, query_pairs, query_out;
    query->add_option("--index", query_index, "index file")->required();
    query->add_option("--pairs", query_pairs, "pairs file, one 'u v' per line")->required();
    query->add_option("--out", query_out, "answers output path")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "build an index and time a query workload");
    std::string bench_input, bench_workload = "random";
    uint64_t bench_count = 100000;
    bool bench_verify = false;
    bench->add_option("--input", bench_input, "edge-list path")->required();
    bench->add_option("--workload", bench_workload, "equal|random");
    bench->add_option("--count", bench_count, "number of queries");
    bench->add_flag("--verify", bench_verify, "cross-check answers against the oracle");
    add_build_options(bench);

    // verify
    auto* verify = app.add_subcommand("verify", "run the property suite against the oracle");
    std::string verify_input, verify_labels;
    std::vector<uint32_t> verify_eps{2};
    double verify_alpha = 0.05;
    uint32_t verify_cap = kDefaultOracleCap;
    verify->add_option("--input", verify_input, "edge-list path")->required();
    verify->add_option("--epsilon", verify_eps, "locality thresholds to test");
    verify->add_option("--labels", verify_labels, "hop-label index file to check instead");
    verify->add_option("--alpha", verify_alpha, "preselection fraction");
    verify->add_option("--oracle-cap", verify_cap, "oracle vertex cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_n, gen_deg, gen_seed, gen_out, std::cout);
        std::optional<IndexKind> kind = parse_index_kind(kind_str);
        if ((build->parsed() || bench->parsed()) && !kind) {
            std::cerr << "error: unknown index kind '" << kind_str << "'\n";
            return 1;
        }
        if (kind) params.kind = *kind;
        if (build->parsed()) return cmd_build(build_input, build_out, params, std::cout);
        if (query->parsed()) return cmd_query(query_index, query_pairs, query_out, std::cout);
        if (bench->parsed()) {
            if (bench_workload != "equal" && bench_workload != "random") {
                std::cerr << "error: unknown workload '" << bench_workload << "'\n";
                return 1;
            }
            WorkloadKind w =
                bench_workload == "equal" ? WorkloadKind::equal : WorkloadKind::random;
            return cmd_bench(bench_input, params, w, bench_count, bench_verify, std::cout,
                             std::cerr);
        }
        if (verify->parsed()) {
            std::optional<std::string> labels;
            if (!verify_labels.empty()) labels = verify_labels;
            return cmd_verify(verify_input, verify_eps, labels, verify_alpha, verify_cap,
                              std::cout);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
