#ifndef REACHIDX_COMMANDS_HPP
#define REACHIDX_COMMANDS_HPP

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "reachidx/condense.hpp"
#include "reachidx/dl.hpp"
#include "reachidx/edge_list.hpp"
#include "reachidx/grail.hpp"
#include "reachidx/hl.hpp"
#include "reachidx/io.hpp"
#include "reachidx/random_dag.hpp"
#include "reachidx/tree_cover.hpp"
#include "reachidx/workload.hpp"

namespace reachidx {

enum class IndexKind { dl, hl, tree, tree_sampled, ktree, grail, brute };

inline const char* to_string(IndexKind k) {
    switch (k) {
        case IndexKind::dl: return "dl";
        case IndexKind::hl: return "hl";
        case IndexKind::tree: return "tree";
        case IndexKind::tree_sampled: return "tree-sampled";
        case IndexKind::ktree: return "ktree";
        case IndexKind::grail: return "grail";
        case IndexKind::brute: return "brute";
    }
    return "?";
}

inline std::optional<IndexKind> parse_index_kind(const std::string& s) {
    if (s == "dl") return IndexKind::dl;
    if (s == "hl") return IndexKind::hl;
    if (s == "tree") return IndexKind::tree;
    if (s == "tree-sampled") return IndexKind::tree_sampled;
    if (s == "ktree") return IndexKind::ktree;
    if (s == "grail") return IndexKind::grail;
    if (s == "brute") return IndexKind::brute;
    return std::nullopt;
}

// Build knobs shared by the build/bench commands; defaults follow the
// toolkit's standing choices (epsilon 2, c=5, alpha 0.05, theta=delta=0.05,
// group size 1024, 10 levels, core limit 10000).
struct BuildParams {
    IndexKind kind = IndexKind::dl;
    uint32_t epsilon = 2;
    double theta = 0.05;
    double delta = 0.05;
    uint32_t groups = 2;  // ktree tree count
    uint32_t group_size = 1024;
    uint32_t levels = 10;
    uint32_t core_limit = 10000;
    uint32_t iters = 10;
    double alpha = 0.05;
    uint32_t c = 5;
    uint64_t seed = 0;
    uint32_t oracle_cap = kDefaultOracleCap;

    void validate() const {
        if (epsilon < 1) throw std::invalid_argument("epsilon must be >= 1");
        if (!(theta > 0 && theta < 1)) throw std::invalid_argument("theta must be in (0,1)");
        if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must be in (0,1)");
        if (c < 1) throw std::invalid_argument("c must be >= 1");
        if (alpha < 0 || alpha > 1) throw std::invalid_argument("alpha must be in [0,1]");
        if (groups < 1) throw std::invalid_argument("groups must be >= 1");
        if (group_size < 1) throw std::invalid_argument("group-size must be >= 1");
    }
};

struct BuiltIndex {
    IndexKind kind = IndexKind::dl;
    json serialized;
    std::function<bool(uint32_t, uint32_t)> query;
    uint64_t entries = 0;
    uint32_t n = 0;
};

inline BuiltIndex build_index(const Dag& g, const BuildParams& p) {
    p.validate();
    BuiltIndex out;
    out.kind = p.kind;
    out.n = g.n;
    switch (p.kind) {
        case IndexKind::dl:
        case IndexKind::hl: {
            auto labels = std::make_shared<HopLabeling>(
                p.kind == IndexKind::dl ? dl_build(g)
                                        : hl_build(g, p.epsilon, p.levels, p.core_limit));
            out.serialized = to_json(*labels);
            out.entries = labels->total_entries();
            out.query = [labels](uint32_t u, uint32_t v) { return query_hop(*labels, u, v); };
            break;
        }
        case IndexKind::tree:
        case IndexKind::tree_sampled: {
            TreeCover t;
            if (p.kind == IndexKind::tree) {
                uint32_t k = std::max<uint32_t>(1, (g.n + p.group_size - 1) / p.group_size);
                t = build_tree(batched_weights(g, k, p.seed));
            } else {
                t = sampled_tree(g, p.theta, p.delta, p.group_size, p.seed).first;
            }
            auto idx = std::make_shared<TreeIndex>(TreeIndex::from(t, compress_tc(g, t)));
            out.serialized = to_json(*idx);
            out.entries = idx->entries();
            out.query = [idx](uint32_t u, uint32_t v) { return idx->query(u, v); };
            break;
        }
        case IndexKind::ktree: {
            auto idx = std::make_shared<KTreeIndex>(
                KTreeIndex::from(ktree_refine(g, p.groups, p.iters, p.seed)));
            out.serialized = to_json(*idx);
            out.entries = idx->entries();
            out.query = [idx](uint32_t u, uint32_t v) { return idx->query(u, v); };
            break;
        }
        case IndexKind::grail: {
            auto idx = std::make_shared<GrailIndex>();
            idx->graph = g;
            idx->labels = grail_build(g, p.c, p.seed);
            out.serialized = to_json(*idx);
            out.entries = idx->entries();
            out.query = [idx](uint32_t u, uint32_t v) { return idx->query(u, v); };
            break;
        }
        case IndexKind::brute: {
            auto idx = std::make_shared<BruteIndex>(BruteIndex::from(compute_tc(g, p.oracle_cap)));
            out.serialized = to_json(*idx);
            out.entries = idx->entries();
            out.query = [idx](uint32_t u, uint32_t v) { return idx->query(u, v); };
            break;
        }
    }
    return out;
}

struct LoadedIndex {
    std::string kind;
    uint32_t n = 0;
    uint64_t entries = 0;
    std::function<bool(uint32_t, uint32_t)> query;
};

// per-run measurements behind the emitted stats record
struct QueryStats {
    uint64_t build_ms = 0;
    uint64_t index_entries = 0;
    uint64_t index_bytes = 0;
    uint64_t query_ns_total = 0;
    uint64_t positives_answered = 0;
};

inline LoadedIndex load_index(const json& j) {
    LoadedIndex out;
    std::string format = j.is_object() ? j.value("format", "") : "";
    if (format == "hoplabel-v1") {
        auto labels = std::make_shared<HopLabeling>(hop_labels_from_json(j));
        out.n = static_cast<uint32_t>(labels->l_out.size());
        out.entries = labels->total_entries();
        out.query = [labels](uint32_t u, uint32_t v) { return query_hop(*labels, u, v); };
    } else if (format == "treecover-v1") {
        auto idx = std::make_shared<TreeIndex>(tree_index_from_json(j));
        out.n = idx->n;
        out.entries = idx->entries();
        out.query = [idx](uint32_t u, uint32_t v) { return idx->query(u, v); };
    } else if (format == "ktree-v1") {
        auto idx = std::make_shared<KTreeIndex>(ktree_index_from_json(j));
        out.n = idx->n;
        out.entries = idx->entries();
        out.query = [idx](uint32_t u, uint32_t v) { return idx->query(u, v); };
    } else if (format == "grail-v1") {
        auto idx = std::make_shared<GrailIndex>(grail_index_from_json(j));
        out.n = idx->graph.n;
        out.entries = idx->entries();
        out.query = [idx](uint32_t u, uint32_t v) { return idx->query(u, v); };
    } else if (format == "brute-v1") {
        auto idx = std::make_shared<BruteIndex>(brute_index_from_json(j));
        out.n = idx->n;
        out.entries = idx->entries();
        out.query = [idx](uint32_t u, uint32_t v) { return idx->query(u, v); };
    } else {
        throw std::runtime_error("unrecognized index format");
    }
    out.kind = format;
    return out;
}

inline Dag load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    EdgeList edges = parse_edge_list(in);
    return condense(edges).first;
}

namespace detail {

inline json stats_record(const std::string& cmd, const std::string& kind, uint32_t n, uint64_t m,
                         uint64_t build_ms, uint64_t index_entries, uint64_t index_bytes,
                         uint64_t query_ns_total, uint64_t queries) {
    json j;
    j["cmd"] = cmd;
    j["kind"] = kind;
    j["n"] = n;
    j["m"] = m;
    j["build_ms"] = build_ms;
    j["index_entries"] = index_entries;
    j["index_bytes"] = index_bytes;
    j["query_ns_total"] = query_ns_total;
    j["queries"] = queries;
    return j;
}

inline uint64_t ms_since(std::chrono::steady_clock::time_point start) {
    return static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - start)
                                     .count());
}

// "u v" per line, ids checked against n; errors carry the line number
inline std::vector<Edge> read_pairs(const std::string& path, uint32_t n) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::vector<Edge> pairs;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        uint32_t a, b;
        if (!parse_two_u32(line.substr(start), a, b))
            throw parse_error("malformed pair", lineno);
        if (a >= n || b >= n) throw parse_error("id out of range", lineno);
        pairs.emplace_back(a, b);
    }
    return pairs;
}

}  // namespace detail

inline int cmd_gen(uint32_t n, double avg_deg, uint64_t seed, const std::string& out_path,
                   std::ostream& stats) {
    auto start = std::chrono::steady_clock::now();
    Dag g = random_dag(n, avg_deg, seed);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    write_edge_list(out, g.n, g.edge_vector());
    stats << detail::stats_record("gen", "graph", g.n, g.m, detail::ms_since(start), 0, 0, 0, 0)
                 .dump()
          << '\n';
    return 0;
}

inline int cmd_build(const std::string& input, const std::string& out_path, const BuildParams& p,
                     std::ostream& stats) {
    p.validate();
    Dag g = load_graph(input);
    auto start = std::chrono::steady_clock::now();
    BuiltIndex idx = build_index(g, p);
    uint64_t build_ms = detail::ms_since(start);
    std::string text = idx.serialized.dump();
    {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text << '\n';
    }
    stats << detail::stats_record("build", to_string(p.kind), g.n, g.m, build_ms, idx.entries,
                                  text.size() + 1, 0, 0)
                 .dump()
          << '\n';
    return 0;
}

inline int cmd_query(const std::string& index_path, const std::string& pairs_path,
                     const std::string& answers_path, std::ostream& stats) {
    std::ifstream in(index_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + index_path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    LoadedIndex idx = load_index(json::parse(text));
    std::vector<Edge> pairs = detail::read_pairs(pairs_path, idx.n);
    std::ofstream out(answers_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + answers_path);
    QueryStats qs;
    qs.index_entries = idx.entries;
    qs.index_bytes = text.size();
    auto start = std::chrono::steady_clock::now();
    std::string buf;
    for (const Edge& p : pairs) {
        bool r = idx.query(p.first, p.second);
        qs.positives_answered += r;
        buf += r ? "1\n" : "0\n";
    }
    qs.query_ns_total = static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                             start)
            .count());
    out << buf;
    stats << detail::stats_record("query", idx.kind, idx.n, 0, qs.build_ms, qs.index_entries,
                                  qs.index_bytes, qs.query_ns_total, pairs.size())
                 .dump()
          << '\n';
    return 0;
}

inline int cmd_bench(const std::string& input, const BuildParams& p, WorkloadKind workload,
                     uint64_t count, bool verify, std::ostream& stats, std::ostream& err) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    p.validate();
    Dag g = load_graph(input);
    QueryStats qs;
    auto start = std::chrono::steady_clock::now();
    BuiltIndex idx = build_index(g, p);
    qs.build_ms = detail::ms_since(start);
    qs.index_entries = idx.entries;
    qs.index_bytes = idx.serialized.dump().size() + 1;

    QueryWorkload w = make_workload(g, workload, count, p.seed, p.oracle_cap);
    std::vector<char> answers(w.pairs.size());
    auto qstart = std::chrono::steady_clock::now();
    for (size_t i = 0; i < w.pairs.size(); ++i) {
        answers[i] = idx.query(w.pairs[i].first, w.pairs[i].second);
        qs.positives_answered += answers[i];
    }
    qs.query_ns_total = static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                             qstart)
            .count());

    stats << detail::stats_record("bench", to_string(p.kind), g.n, g.m, qs.build_ms,
                                  qs.index_entries, qs.index_bytes, qs.query_ns_total,
                                  w.pairs.size())
                 .dump()
          << '\n';

    if (verify) {
        TransitiveClosure tc = compute_tc(g, p.oracle_cap);
        for (size_t i = 0; i < w.pairs.size(); ++i) {
            if (static_cast<bool>(answers[i]) != tc.reach(w.pairs[i].first, w.pairs[i].second)) {
                err << "verification failed on pair " << w.pairs[i].first << " "
                    << w.pairs[i].second << "\n";
                return 2;
            }
        }
    }
    return 0;
}

// Property suite over one graph: backbone covers for each epsilon, label
// completeness for DL and HL (or a supplied label file), DL non-redundancy
// on small inputs. One PASS/FAIL line per property; exit 2 on any FAIL.
inline int cmd_verify(const std::string& input, const std::vector<uint32_t>& epsilons,
                      const std::optional<std::string>& labels_path, double alpha,
                      uint32_t oracle_cap, std::ostream& out) {
    Dag g = load_graph(input);
    TransitiveClosure tc = compute_tc(g, oracle_cap);
    bool all_ok = true;

    // exhaustive pair check up to 1024 vertices, sampled beyond that
    auto check_labels = [&](const HopLabeling& labels, const std::string& name) {
        auto fail = [&](uint32_t a, uint32_t b) {
            out << "FAIL " << name << " witness " << a << " " << b << "\n";
            all_ok = false;
        };
        if (g.n <= 1024) {
            for (uint32_t a = 0; a < g.n; ++a)
                for (uint32_t b = 0; b < g.n; ++b)
                    if (query_hop(labels, a, b) != tc.reach(a, b)) return fail(a, b);
        } else {
            Rng rng(7);
            std::vector<Edge> pairs;
            if (g.m > 0) pairs = sample_positive_pairs(g, 50000, 7, oracle_cap);
            for (uint32_t i = 0; i < 50000; ++i)
                pairs.emplace_back(static_cast<uint32_t>(rng.below(g.n)),
                                   static_cast<uint32_t>(rng.below(g.n)));
            for (const Edge& p : pairs)
                if (query_hop(labels, p.first, p.second) != tc.reach(p.first, p.second))
                    return fail(p.first, p.second);
        }
        out << "PASS " << name << "\n";
    };

    if (labels_path) {
        check_labels(hop_labels_from_json(read_json_file(*labels_path)), "labels-complete");
    } else {
        check_labels(dl_build(g), "dl-complete");
        for (uint32_t eps : epsilons)
            check_labels(hl_build(g, eps, 10, 10000), "hl-complete eps=" + std::to_string(eps));
    }

    std::vector<double> alphas{0.0};
    if (alpha > 0) alphas.push_back(alpha);
    for (uint32_t eps : epsilons) {
        for (double a : alphas) {
            Backbone b = discover_backbone(g, eps, BackboneMode::two_side, a);
            BackboneReport report = verify_backbone(g, b, tc);
            std::string name = "backbone eps=" + std::to_string(eps) +
                               (a > 0 ? " preselect" : "");
            if (report.ok()) {
                out << "PASS " << name << "\n";
            } else {
                const Edge& w = report.missing_witness.empty() ? report.false_witness.front()
                                                               : report.missing_witness.front();
                out << "FAIL " << name << " witness " << w.first << " " << w.second << "\n";
                all_ok = false;
            }
        }
    }

    if (!labels_path) {
        if (g.n <= 64) {
            RedundancyReport report = check_non_redundancy(g, dl_build(g), tc);
            if (report.ok()) {
                out << "PASS dl-non-redundant\n";
            } else {
                out << "FAIL dl-non-redundant vertex " << report.removable.front().vertex
                    << " hop " << report.removable.front().hop << "\n";
                all_ok = false;
            }
        } else {
            out << "SKIP dl-non-redundant (n > 64)\n";
        }
    }
    return all_ok ? 0 : 2;
}

}  // namespace reachidx

#endif
