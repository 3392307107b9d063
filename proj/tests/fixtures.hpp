#ifndef REACHIDX_TESTS_FIXTURES_HPP
#define REACHIDX_TESTS_FIXTURES_HPP

#include <cstdint>
#include <vector>

#include "reachidx/dag.hpp"
#include "reachidx/rng.hpp"

namespace fixtures {

using reachidx::Dag;
using reachidx::Edge;

// The named fixture graphs use 1-based names in the docs; vertices are
// stored 0-based, so vertex "k" is id k-1.
inline Dag chain3() { return reachidx::dag_from_edges(3, {{0, 1}, {1, 2}}); }
inline Dag chain4() { return reachidx::dag_from_edges(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline Dag diamond() { return reachidx::dag_from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

constexpr uint32_t v(uint32_t name) { return name - 1; }

// Independent reachability oracle: plain forward BFS, no shared code with
// the transitive-closure module.
inline std::vector<std::vector<bool>> brute_reach(const Dag& g) {
    std::vector<std::vector<bool>> reach(g.n, std::vector<bool>(g.n, false));
    for (uint32_t s = 0; s < g.n; ++s) {
        std::vector<uint32_t> stack{s};
        reach[s][s] = true;
        while (!stack.empty()) {
            uint32_t x = stack.back();
            stack.pop_back();
            for (uint32_t w : g.out(x)) {
                if (!reach[s][w]) {
                    reach[s][w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return reach;
}

// random digraph (cycles allowed) as a raw edge list
inline std::vector<Edge> random_digraph_edges(uint32_t n, uint32_t m, uint64_t seed) {
    reachidx::Rng rng(seed);
    std::vector<Edge> edges;
    for (uint32_t i = 0; i < m; ++i) {
        uint32_t a = static_cast<uint32_t>(rng.below(n));
        uint32_t b = static_cast<uint32_t>(rng.below(n));
        if (a != b) edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace fixtures

#endif
