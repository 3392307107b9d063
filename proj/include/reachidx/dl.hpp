#ifndef REACHIDX_DL_HPP
#define REACHIDX_DL_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "reachidx/dag.hpp"
#include "reachidx/hop_labels.hpp"
#include "reachidx/tc_oracle.hpp"

namespace reachidx {

// Total vertex order, highest rank first. score(v) = (outdeg+1)*(indeg+1)
// counts the pairs within distance 2 that v can cover; ties go to the
// smaller vertex id.
struct VertexRank {
    std::vector<uint32_t> order;     // order[0] = highest-ranked vertex
    std::vector<uint32_t> position;  // vertex -> position in order
    std::vector<uint64_t> score;
};

inline VertexRank rank_vertices(const Dag& g) {
    VertexRank r;
    r.score.resize(g.n);
    r.order.resize(g.n);
    for (uint32_t v = 0; v < g.n; ++v) {
        r.score[v] = (static_cast<uint64_t>(g.out_degree(v)) + 1) * (g.in_degree(v) + 1);
        r.order[v] = v;
    }
    std::sort(r.order.begin(), r.order.end(), [&](uint32_t a, uint32_t b) {
        if (r.score[a] != r.score[b]) return r.score[a] > r.score[b];
        return a < b;
    });
    r.position.resize(g.n);
    for (uint32_t i = 0; i < g.n; ++i) r.position[r.order[i]] = i;
    return r;
}

// Distributes each vertex, in rank order, as a hop into the labels of the
// vertices its pruned reverse/forward BFS still reaches. A visited vertex
// whose labels already witness the pair is pruned together with its BFS
// descendants; what remains is exactly the non-redundant hop set. Labels
// are kept in rank-position space during the build (appends arrive in
// ascending position) and translated to sorted vertex ids at the end.
inline HopLabeling dl_build(const Dag& g, const VertexRank& rank) {
    std::vector<std::vector<uint32_t>> out_pos(g.n), in_pos(g.n);

    std::vector<uint32_t> mark(g.n, 0), visited(g.n, 0);
    uint32_t stamp = 0;

    // true iff some position in `label` is marked with the current stamp
    auto hits_mark = [&](const std::vector<uint32_t>& label) {
        for (uint32_t p : label)
            if (mark[p] == stamp) return true;
        return false;
    };

    auto sweep = [&](uint32_t vi, uint32_t pos, Dir dir, std::vector<std::vector<uint32_t>>& fill,
                     const std::vector<std::vector<uint32_t>>& check) {
        ++stamp;
        for (uint32_t p : (dir == Dir::reverse ? in_pos[vi] : out_pos[vi])) mark[p] = stamp;
        std::vector<uint32_t> frontier{vi};
        visited[vi] = stamp;
        while (!frontier.empty()) {
            std::vector<uint32_t> next;
            for (uint32_t u : frontier) {  // frontier kept in ascending id order
                if (hits_mark(check[u])) continue;  // covered: prune u and its descendants
                fill[u].push_back(pos);
                for (uint32_t w : g.neighbors(u, dir)) {
                    if (visited[w] != stamp) {
                        visited[w] = stamp;
                        next.push_back(w);
                    }
                }
            }
            std::sort(next.begin(), next.end());
            frontier = std::move(next);
        }
    };

    for (uint32_t pos = 0; pos < g.n; ++pos) {
        uint32_t vi = rank.order[pos];
        sweep(vi, pos, Dir::reverse, out_pos, out_pos);
        sweep(vi, pos, Dir::forward, in_pos, in_pos);
    }

    HopLabeling labels;
    labels.l_out.resize(g.n);
    labels.l_in.resize(g.n);
    for (uint32_t v = 0; v < g.n; ++v) {
        for (uint32_t p : out_pos[v]) labels.l_out[v].push_back(rank.order[p]);
        for (uint32_t p : in_pos[v]) labels.l_in[v].push_back(rank.order[p]);
        std::sort(labels.l_out[v].begin(), labels.l_out[v].end());
        std::sort(labels.l_in[v].begin(), labels.l_in[v].end());
    }
    return labels;
}

inline HopLabeling dl_build(const Dag& g) { return dl_build(g, rank_vertices(g)); }

struct RemovableHop {
    uint32_t vertex = 0;
    uint32_t hop = 0;
    bool in_side = false;  // false: L_out(vertex), true: L_in(vertex)
};

struct RedundancyReport {
    std::vector<RemovableHop> removable;
    bool ok() const { return removable.empty(); }
};

// A hop is removable when deleting it from one label still leaves every
// reachable pair with a common hop. Oracle-backed, test scale only.
inline RedundancyReport check_non_redundancy(const Dag& g, const HopLabeling& labels,
                                             const TransitiveClosure& tc) {
    RedundancyReport report;
    auto intersect_skipping = [](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                                 uint32_t skip) {
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) {
                if (a[i] != skip) return true;
                ++i;
                ++j;
            } else if (a[i] < b[j]) {
                ++i;
            } else {
                ++j;
            }
        }
        return false;
    };

    for (uint32_t x = 0; x < g.n; ++x) {
        for (uint32_t h : labels.l_out[x]) {
            bool essential = false;
            for (uint32_t v = 0; v < g.n && !essential; ++v)
                if (tc.reach(x, v) && !intersect_skipping(labels.l_out[x], labels.l_in[v], h))
                    essential = true;
            if (!essential) report.removable.push_back({x, h, false});
        }
        for (uint32_t h : labels.l_in[x]) {
            bool essential = false;
            for (uint32_t u = 0; u < g.n && !essential; ++u)
                if (tc.reach(u, x) && !intersect_skipping(labels.l_out[u], labels.l_in[x], h))
                    essential = true;
            if (!essential) report.removable.push_back({x, h, true});
        }
    }
    return report;
}

}  // namespace reachidx

#endif
