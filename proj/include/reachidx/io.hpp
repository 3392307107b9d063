#ifndef REACHIDX_IO_HPP
#define REACHIDX_IO_HPP

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "reachidx/backbone.hpp"
#include "reachidx/dag.hpp"
#include "reachidx/grail.hpp"
#include "reachidx/hop_labels.hpp"
#include "reachidx/tc_oracle.hpp"
#include "reachidx/tree_cover.hpp"

namespace reachidx {

using json = nlohmann::ordered_json;

// Queryable, graph-independent snapshots of each index family. These are
// what the index files round-trip through; key order is fixed so a given
// build is byte-stable.

struct TreeIndex {
    uint32_t n = 0;
    std::vector<uint32_t> parent;  // kNoVertex = virtual root
    std::vector<Interval> interval;
    std::vector<std::vector<Interval>> lists;  // per vertex, ordered by start

    static TreeIndex from(const TreeCover& t, const CompressedTC& c) {
        TreeIndex idx;
        idx.n = t.n;
        idx.parent = t.parent;
        idx.interval = t.interval;
        idx.lists.resize(t.n);
        for (uint32_t v = 0; v < t.n; ++v)
            for (uint32_t r : c.roots[v]) idx.lists[v].push_back(t.interval[r]);
        return idx;
    }

    bool query(uint32_t u, uint32_t v) const {
        const std::vector<Interval>& list = lists[u];
        const Interval& iv = interval[v];
        auto it = std::upper_bound(list.begin(), list.end(), iv.pre,
                                   [](uint32_t key, const Interval& i) { return key < i.pre; });
        if (it == list.begin()) return false;
        return iv.post <= std::prev(it)->post;
    }

    uint64_t entries() const {
        uint64_t t = 0;
        for (const auto& l : lists) t += l.size();
        return t;
    }
};

struct KTreeIndex {
    uint32_t n = 0;
    uint32_t k = 0;
    std::vector<uint32_t> assignment;
    std::vector<std::vector<uint32_t>> tree_parent;
    std::vector<std::vector<Interval>> tree_interval;  // per tree
    std::vector<std::vector<Interval>> lists;          // under the assigned tree

    static KTreeIndex from(const MultiTreeIndex& m) {
        KTreeIndex idx;
        idx.n = static_cast<uint32_t>(m.assignment.size());
        idx.k = m.k;
        idx.assignment = m.assignment;
        for (const TreeCover& t : m.trees) {
            idx.tree_parent.push_back(t.parent);
            idx.tree_interval.push_back(t.interval);
        }
        idx.lists.resize(idx.n);
        for (uint32_t v = 0; v < idx.n; ++v)
            for (uint32_t r : m.lists[v])
                idx.lists[v].push_back(m.trees[m.assignment[v]].interval[r]);
        return idx;
    }

    bool query(uint32_t u, uint32_t v) const {
        const std::vector<Interval>& list = lists[u];
        const Interval& iv = tree_interval[assignment[u]][v];
        auto it = std::upper_bound(list.begin(), list.end(), iv.pre,
                                   [](uint32_t key, const Interval& i) { return key < i.pre; });
        if (it == list.begin()) return false;
        return iv.post <= std::prev(it)->post;
    }

    uint64_t entries() const {
        uint64_t t = 0;
        for (const auto& l : lists) t += l.size();
        return t;
    }
};

struct GrailIndex {
    Dag graph;
    GrailLabels labels;

    bool query(uint32_t u, uint32_t v) const { return query_online(graph, labels, u, v); }
    uint64_t entries() const { return static_cast<uint64_t>(labels.c) * labels.n; }
};

struct BruteIndex {
    uint32_t n = 0;
    std::vector<std::vector<uint32_t>> pred;  // sorted member lists

    static BruteIndex from(const TransitiveClosure& tc) {
        BruteIndex idx;
        idx.n = static_cast<uint32_t>(tc.pred.size());
        idx.pred.resize(idx.n);
        for (uint32_t v = 0; v < idx.n; ++v) idx.pred[v] = tc.pred[v].to_vector();
        return idx;
    }

    bool query(uint32_t u, uint32_t v) const {
        return std::binary_search(pred[v].begin(), pred[v].end(), u);
    }

    uint64_t entries() const {
        uint64_t t = 0;
        for (const auto& p : pred) t += p.size();
        return t;
    }
};

namespace detail {

inline json intervals_json(const std::vector<Interval>& v) {
    json arr = json::array();
    for (const Interval& i : v) arr.push_back({i.pre, i.post});
    return arr;
}

inline std::vector<Interval> intervals_from(const json& arr) {
    std::vector<Interval> out;
    for (const auto& e : arr) out.push_back({e.at(0).get<uint32_t>(), e.at(1).get<uint32_t>()});
    return out;
}

inline json parent_json(const std::vector<uint32_t>& parent) {
    json arr = json::array();
    for (uint32_t p : parent) arr.push_back(p == kNoVertex ? -1 : static_cast<int64_t>(p));
    return arr;
}

inline std::vector<uint32_t> parent_from(const json& arr) {
    std::vector<uint32_t> out;
    for (const auto& e : arr) {
        int64_t p = e.get<int64_t>();
        out.push_back(p < 0 ? kNoVertex : static_cast<uint32_t>(p));
    }
    return out;
}

inline void expect_format(const json& j, const std::string& want) {
    if (!j.is_object() || j.value("format", "") != want)
        throw std::runtime_error("index file is not " + want);
}

}  // namespace detail

inline json to_json(const TreeIndex& idx) {
    json j;
    j["format"] = "treecover-v1";
    j["n"] = idx.n;
    j["parent"] = detail::parent_json(idx.parent);
    j["interval"] = detail::intervals_json(idx.interval);
    json lists = json::array();
    for (const auto& l : idx.lists) lists.push_back(detail::intervals_json(l));
    j["ctc"] = lists;
    return j;
}

inline TreeIndex tree_index_from_json(const json& j) {
    detail::expect_format(j, "treecover-v1");
    TreeIndex idx;
    idx.n = j.at("n").get<uint32_t>();
    idx.parent = detail::parent_from(j.at("parent"));
    idx.interval = detail::intervals_from(j.at("interval"));
    for (const auto& l : j.at("ctc")) idx.lists.push_back(detail::intervals_from(l));
    if (idx.parent.size() != idx.n || idx.interval.size() != idx.n || idx.lists.size() != idx.n)
        throw std::runtime_error("treecover-v1: array sizes do not match n");
    return idx;
}

inline json to_json(const HopLabeling& labels) {
    json j;
    j["format"] = "hoplabel-v1";
    j["n"] = labels.l_out.size();
    j["l_out"] = labels.l_out;
    j["l_in"] = labels.l_in;
    return j;
}

inline HopLabeling hop_labels_from_json(const json& j) {
    detail::expect_format(j, "hoplabel-v1");
    HopLabeling labels;
    labels.l_out = j.at("l_out").get<std::vector<std::vector<uint32_t>>>();
    labels.l_in = j.at("l_in").get<std::vector<std::vector<uint32_t>>>();
    if (labels.l_out.size() != j.at("n").get<size_t>() || labels.l_in.size() != labels.l_out.size())
        throw std::runtime_error("hoplabel-v1: array sizes do not match n");
    return labels;
}

inline json to_json(const Backbone& b) {
    json j;
    j["format"] = "backbone-v1";
    j["epsilon"] = b.epsilon;
    j["mode"] = b.mode == BackboneMode::two_side ? "two_side" : "one_side";
    j["vertices"] = b.vertices;
    json edges = json::array();
    for (const Edge& e : b.edges) edges.push_back({e.first, e.second});
    j["edges"] = edges;
    return j;
}

inline Backbone backbone_from_json(const json& j) {
    detail::expect_format(j, "backbone-v1");
    Backbone b;
    b.epsilon = j.at("epsilon").get<uint32_t>();
    b.mode = j.at("mode").get<std::string>() == "one_side" ? BackboneMode::one_side
                                                           : BackboneMode::two_side;
    b.vertices = j.at("vertices").get<std::vector<uint32_t>>();
    for (const auto& e : j.at("edges"))
        b.edges.emplace_back(e.at(0).get<uint32_t>(), e.at(1).get<uint32_t>());
    return b;
}

inline json to_json(const KTreeIndex& idx) {
    json j;
    j["format"] = "ktree-v1";
    j["n"] = idx.n;
    j["k"] = idx.k;
    j["assignment"] = idx.assignment;
    json trees = json::array();
    for (uint32_t i = 0; i < idx.k; ++i) {
        json t;
        t["parent"] = detail::parent_json(idx.tree_parent[i]);
        t["interval"] = detail::intervals_json(idx.tree_interval[i]);
        trees.push_back(std::move(t));
    }
    j["trees"] = trees;
    json lists = json::array();
    for (const auto& l : idx.lists) lists.push_back(detail::intervals_json(l));
    j["lists"] = lists;
    return j;
}

inline KTreeIndex ktree_index_from_json(const json& j) {
    detail::expect_format(j, "ktree-v1");
    KTreeIndex idx;
    idx.n = j.at("n").get<uint32_t>();
    idx.k = j.at("k").get<uint32_t>();
    idx.assignment = j.at("assignment").get<std::vector<uint32_t>>();
    for (const auto& t : j.at("trees")) {
        idx.tree_parent.push_back(detail::parent_from(t.at("parent")));
        idx.tree_interval.push_back(detail::intervals_from(t.at("interval")));
    }
    for (const auto& l : j.at("lists")) idx.lists.push_back(detail::intervals_from(l));
    if (idx.assignment.size() != idx.n || idx.lists.size() != idx.n ||
        idx.tree_interval.size() != idx.k)
        throw std::runtime_error("ktree-v1: array sizes do not match n/k");
    for (uint32_t a : idx.assignment)
        if (a >= idx.k) throw std::runtime_error("ktree-v1: assignment out of range");
    for (const auto& iv : idx.tree_interval)
        if (iv.size() != idx.n) throw std::runtime_error("ktree-v1: interval table size mismatch");
    return idx;
}

inline json to_json(const GrailIndex& idx) {
    json j;
    j["format"] = "grail-v1";
    j["n"] = idx.graph.n;
    j["c"] = idx.labels.c;
    json edges = json::array();
    for (const Edge& e : idx.graph.edge_vector()) edges.push_back({e.first, e.second});
    j["edges"] = edges;
    json intervals = json::array();
    for (uint32_t v = 0; v < idx.graph.n; ++v) {
        json per_vertex = json::array();
        for (uint32_t t = 0; t < idx.labels.c; ++t) {
            size_t base = static_cast<size_t>(t) * idx.labels.n;
            per_vertex.push_back({idx.labels.low[base + v], idx.labels.post[base + v]});
        }
        intervals.push_back(std::move(per_vertex));
    }
    j["intervals"] = intervals;
    return j;
}

inline GrailIndex grail_index_from_json(const json& j) {
    detail::expect_format(j, "grail-v1");
    GrailIndex idx;
    uint32_t n = j.at("n").get<uint32_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<uint32_t>(), e.at(1).get<uint32_t>());
    idx.graph = dag_from_edges(n, edges);
    idx.labels.n = n;
    idx.labels.c = j.at("c").get<uint32_t>();
    idx.labels.low.resize(static_cast<size_t>(idx.labels.c) * n);
    idx.labels.post.resize(static_cast<size_t>(idx.labels.c) * n);
    if (j.at("intervals").size() != n)
        throw std::runtime_error("grail-v1: interval table size mismatch");
    uint32_t v = 0;
    for (const auto& per_vertex : j.at("intervals")) {
        if (per_vertex.size() != idx.labels.c)
            throw std::runtime_error("grail-v1: traversal count mismatch");
        uint32_t t = 0;
        for (const auto& iv : per_vertex) {
            size_t base = static_cast<size_t>(t) * n;
            idx.labels.low[base + v] = iv.at(0).get<uint32_t>();
            idx.labels.post[base + v] = iv.at(1).get<uint32_t>();
            ++t;
        }
        ++v;
    }
    return idx;
}

inline json to_json(const BruteIndex& idx) {
    json j;
    j["format"] = "brute-v1";
    j["n"] = idx.n;
    j["pred"] = idx.pred;
    return j;
}

inline BruteIndex brute_index_from_json(const json& j) {
    detail::expect_format(j, "brute-v1");
    BruteIndex idx;
    idx.n = j.at("n").get<uint32_t>();
    idx.pred = j.at("pred").get<std::vector<std::vector<uint32_t>>>();
    if (idx.pred.size() != idx.n) throw std::runtime_error("brute-v1: pred size mismatch");
    return idx;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump() << '\n';
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    return json::parse(in);
}

}  // namespace reachidx

#endif
