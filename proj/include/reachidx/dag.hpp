#ifndef REACHIDX_DAG_HPP
#define REACHIDX_DAG_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

#include "reachidx/edge_list.hpp"

namespace reachidx {

enum class Dir { forward, reverse };

constexpr uint32_t kNoVertex = UINT32_MAX;

// Condensed DAG in compact adjacency (CSR) form. Immutable after
// construction; the stored topological order is Kahn's with min-id
// tie-break, so every edge goes from lower to higher topo position.
struct Dag {
    uint32_t n = 0;
    uint64_t m = 0;
    std::vector<uint32_t> fwd_off, fwd_adj;  // per-vertex sorted successors
    std::vector<uint32_t> rev_off, rev_adj;  // exact transpose
    std::vector<uint32_t> topo;      // topo[i] = vertex at position i
    std::vector<uint32_t> topo_pos;  // inverse permutation

    std::span<const uint32_t> out(uint32_t v) const {
        return {fwd_adj.data() + fwd_off[v], fwd_adj.data() + fwd_off[v + 1]};
    }
    std::span<const uint32_t> in(uint32_t v) const {
        return {rev_adj.data() + rev_off[v], rev_adj.data() + rev_off[v + 1]};
    }
    uint32_t out_degree(uint32_t v) const { return fwd_off[v + 1] - fwd_off[v]; }
    uint32_t in_degree(uint32_t v) const { return rev_off[v + 1] - rev_off[v]; }

    std::span<const uint32_t> neighbors(uint32_t v, Dir d) const {
        return d == Dir::forward ? out(v) : in(v);
    }

    std::vector<Edge> edge_vector() const {
        std::vector<Edge> edges;
        edges.reserve(m);
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v : out(u)) edges.emplace_back(u, v);
        return edges;
    }

    bool operator==(const Dag&) const = default;
};

// Kahn's algorithm with a min-id heap; throws if the input has a cycle.
inline std::vector<uint32_t> topological_order(const Dag& g) {
    std::vector<uint32_t> indeg(g.n);
    std::priority_queue<uint32_t, std::vector<uint32_t>, std::greater<>> ready;
    for (uint32_t v = 0; v < g.n; ++v) {
        indeg[v] = g.in_degree(v);
        if (indeg[v] == 0) ready.push(v);
    }
    std::vector<uint32_t> order;
    order.reserve(g.n);
    while (!ready.empty()) {
        uint32_t v = ready.top();
        ready.pop();
        order.push_back(v);
        for (uint32_t w : g.out(v))
            if (--indeg[w] == 0) ready.push(w);
    }
    if (order.size() != g.n) throw std::runtime_error("cycle detected in supposed DAG");
    return order;
}

namespace detail {

inline void build_csr(uint32_t n, const std::vector<Edge>& edges, bool transpose,
                      std::vector<uint32_t>& off, std::vector<uint32_t>& adj) {
    off.assign(n + 1, 0);
    adj.resize(edges.size());
    for (const Edge& e : edges) ++off[(transpose ? e.second : e.first) + 1];
    for (uint32_t v = 0; v < n; ++v) off[v + 1] += off[v];
    std::vector<uint32_t> cursor(off.begin(), off.end() - 1);
    for (const Edge& e : edges) {
        uint32_t src = transpose ? e.second : e.first;
        uint32_t dst = transpose ? e.first : e.second;
        adj[cursor[src]++] = dst;
    }
    for (uint32_t v = 0; v < n; ++v)
        std::sort(adj.begin() + off[v], adj.begin() + off[v + 1]);
}

}  // namespace detail

// edges must be normalized (no duplicates/self-loops) and acyclic.
inline Dag dag_from_edges(uint32_t n, const std::vector<Edge>& edges) {
    for (const Edge& e : edges)
        if (e.first >= n || e.second >= n)
            throw std::invalid_argument("dag_from_edges: vertex id out of range");
    Dag g;
    g.n = n;
    g.m = edges.size();
    detail::build_csr(n, edges, false, g.fwd_off, g.fwd_adj);
    detail::build_csr(n, edges, true, g.rev_off, g.rev_adj);
    g.topo = topological_order(g);
    g.topo_pos.resize(n);
    for (uint32_t i = 0; i < n; ++i) g.topo_pos[g.topo[i]] = i;
    return g;
}

// All vertices within <= k edges of v (v included), ascending.
inline std::vector<uint32_t> k_neighborhood(const Dag& g, uint32_t v, uint32_t k, Dir dir) {
    std::vector<uint32_t> visited{v};
    std::vector<bool> seen(g.n, false);
    seen[v] = true;
    std::vector<uint32_t> frontier{v};
    for (uint32_t depth = 0; depth < k && !frontier.empty(); ++depth) {
        std::vector<uint32_t> next;
        for (uint32_t u : frontier) {
            for (uint32_t w : g.neighbors(u, dir)) {
                if (!seen[w]) {
                    seen[w] = true;
                    next.push_back(w);
                    visited.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(visited.begin(), visited.end());
    return visited;
}

// Minimum hop count from u to v, or nullopt if v is unreachable.
inline std::optional<uint32_t> distance(const Dag& g, uint32_t u, uint32_t v) {
    if (u == v) return 0;
    std::vector<bool> seen(g.n, false);
    seen[u] = true;
    std::vector<uint32_t> frontier{u};
    uint32_t depth = 0;
    while (!frontier.empty()) {
        ++depth;
        std::vector<uint32_t> next;
        for (uint32_t x : frontier) {
            for (uint32_t w : g.out(x)) {
                if (w == v) return depth;
                if (!seen[w]) {
                    seen[w] = true;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

}  // namespace reachidx

#endif
