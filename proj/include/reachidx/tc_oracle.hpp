#ifndef REACHIDX_TC_ORACLE_HPP
#define REACHIDX_TC_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reachidx/bits.hpp"
#include "reachidx/dag.hpp"
#include "reachidx/rng.hpp"

namespace reachidx {

constexpr uint32_t kDefaultOracleCap = 1u << 17;

// Brute-force ground truth: per-vertex self-inclusive predecessor sets.
// Desk-scale only; construction refuses graphs above the vertex cap.
struct TransitiveClosure {
    std::vector<BitSet> pred;  // pred[v] = vertices reaching v, v included
    uint64_t total_size = 0;   // sum of |pred(v)|

    bool reach(uint32_t u, uint32_t v) const { return pred[v].test(u); }
    uint64_t pred_size(uint32_t v) const { return pred[v].count(); }
};

inline TransitiveClosure compute_tc(const Dag& g, uint32_t vertex_cap = kDefaultOracleCap) {
    if (g.n > vertex_cap)
        throw std::runtime_error("compute_tc: graph exceeds oracle vertex cap (" +
                                 std::to_string(vertex_cap) + ")");
    TransitiveClosure tc;
    tc.pred.assign(g.n, BitSet{});
    for (uint32_t v : g.topo) {
        BitSet p(g.n);
        p.set(v);
        for (uint32_t u : g.in(v)) p.or_with(tc.pred[u]);
        tc.total_size += p.count();
        tc.pred[v] = std::move(p);
    }
    return tc;
}

inline bool reach(const TransitiveClosure& tc, uint32_t u, uint32_t v) { return tc.reach(u, v); }

namespace detail {

// kth (0-based) member of the set, skipping `skip` if present before it
inline uint32_t select_pred_member(const BitSet& set, uint64_t k, uint32_t skip) {
    uint32_t found = kNoVertex;
    uint64_t i = 0;
    set.for_each([&](uint32_t u) {
        if (u == skip) return;
        if (i++ == k) found = u;
    });
    return found;
}

}  // namespace detail

// Positive query pairs (u,v) with u -> v and u != v, deterministic per seed.
// Uniform over the transitive closure when the oracle fits the cap; larger
// graphs fall back to seeded forward-BFS sampling from random sources
// (documented: per-pair uniformity is not guaranteed on that path).
inline std::vector<Edge> sample_positive_pairs(const Dag& g, uint64_t count, uint64_t seed,
                                               uint32_t vertex_cap = kDefaultOracleCap) {
    if (g.m == 0) throw std::runtime_error("sample_positive_pairs: no positive pair exists");
    Rng rng(seed);
    std::vector<Edge> out;
    out.reserve(count);

    if (g.n <= vertex_cap) {
        TransitiveClosure tc = compute_tc(g, vertex_cap);
        // cumulative counts of non-self pairs per target
        std::vector<uint64_t> cum(g.n + 1, 0);
        for (uint32_t v = 0; v < g.n; ++v) cum[v + 1] = cum[v] + (tc.pred_size(v) - 1);
        uint64_t universe = cum[g.n];
        for (uint64_t i = 0; i < count; ++i) {
            uint64_t k = rng.below(universe);
            uint32_t v = static_cast<uint32_t>(
                std::upper_bound(cum.begin(), cum.end(), k) - cum.begin() - 1);
            uint32_t u = detail::select_pred_member(tc.pred[v], k - cum[v], v);
            out.emplace_back(u, v);
        }
        return out;
    }

    constexpr size_t kBfsBudget = 4096;
    std::vector<uint32_t> reached;
    std::vector<bool> seen(g.n, false);
    std::vector<uint32_t> touched;
    while (out.size() < count) {
        uint32_t src = static_cast<uint32_t>(rng.below(g.n));
        reached.clear();
        touched.clear();
        seen[src] = true;
        touched.push_back(src);
        std::vector<uint32_t> frontier{src};
        while (!frontier.empty() && reached.size() < kBfsBudget) {
            std::vector<uint32_t> next;
            for (uint32_t x : frontier) {
                for (uint32_t w : g.out(x)) {
                    if (!seen[w]) {
                        seen[w] = true;
                        touched.push_back(w);
                        reached.push_back(w);
                        if (reached.size() >= kBfsBudget) break;
                        next.push_back(w);
                    }
                }
                if (reached.size() >= kBfsBudget) break;
            }
            frontier = std::move(next);
        }
        if (!reached.empty())
            out.emplace_back(src, reached[rng.below(reached.size())]);
        for (uint32_t t : touched) seen[t] = false;
    }
    return out;
}

}  // namespace reachidx

#endif
