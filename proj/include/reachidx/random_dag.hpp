#ifndef REACHIDX_RANDOM_DAG_HPP
#define REACHIDX_RANDOM_DAG_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "reachidx/dag.hpp"
#include "reachidx/rng.hpp"

namespace reachidx {

// Seeded random DAG: draws round(n * avg_out_degree) vertex pairs and
// orients each from lower to higher position in a random permutation, so
// the result is acyclic by construction. Duplicates are dropped, which
// leaves m slightly below the target on dense settings.
inline Dag random_dag(uint32_t n, double avg_out_degree, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_dag: n must be >= 1");
    if (avg_out_degree < 0) throw std::invalid_argument("random_dag: negative degree");

    Rng rng(seed);
    std::vector<uint32_t> rank_of = random_permutation(n, rng);

    uint64_t target = static_cast<uint64_t>(std::llround(avg_out_degree * n));
    std::vector<Edge> edges;
    edges.reserve(target);
    if (n > 1) {
        for (uint64_t i = 0; i < target; ++i) {
            uint32_t a = static_cast<uint32_t>(rng.below(n));
            uint32_t b = static_cast<uint32_t>(rng.below(n - 1));
            if (b >= a) ++b;
            if (rank_of[a] < rank_of[b])
                edges.emplace_back(a, b);
            else
                edges.emplace_back(b, a);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return dag_from_edges(n, edges);
}

}  // namespace reachidx

#endif
