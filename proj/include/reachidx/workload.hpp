#ifndef REACHIDX_WORKLOAD_HPP
#define REACHIDX_WORKLOAD_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reachidx/dag.hpp"
#include "reachidx/grail.hpp"
#include "reachidx/rng.hpp"
#include "reachidx/tc_oracle.hpp"

namespace reachidx {

enum class WorkloadKind { equal, random };

inline const char* to_string(WorkloadKind k) {
    return k == WorkloadKind::equal ? "equal" : "random";
}

struct QueryWorkload {
    WorkloadKind kind = WorkloadKind::random;
    uint64_t seed = 0;
    std::vector<Edge> pairs;
};

// equal: ceil(count/2) oracle-positive pairs plus rejection-sampled
// negatives; random: uniform id pairs. Deterministic per seed.
inline QueryWorkload make_workload(const Dag& g, WorkloadKind kind, uint64_t count, uint64_t seed,
                                   uint32_t oracle_cap = kDefaultOracleCap) {
    if (count < 1) throw std::invalid_argument("make_workload: count >= 1");
    QueryWorkload w;
    w.kind = kind;
    w.seed = seed;

    if (kind == WorkloadKind::random) {
        Rng rng(seed);
        w.pairs.reserve(count);
        for (uint64_t i = 0; i < count; ++i)
            w.pairs.emplace_back(static_cast<uint32_t>(rng.below(g.n)),
                                 static_cast<uint32_t>(rng.below(g.n)));
        return w;
    }

    uint64_t positives = (count + 1) / 2;
    w.pairs = sample_positive_pairs(g, positives, seed, oracle_cap);

    // rejection test: oracle when it fits, exact pruned search otherwise
    std::function<bool(uint32_t, uint32_t)> is_reachable;
    TransitiveClosure tc;
    GrailLabels gl;
    if (g.n <= oracle_cap) {
        tc = compute_tc(g, oracle_cap);
        is_reachable = [&tc](uint32_t u, uint32_t v) { return tc.reach(u, v); };
    } else {
        gl = grail_build(g, 5, seed ^ 0x6a09e667f3bcc909ull);
        is_reachable = [&g, &gl](uint32_t u, uint32_t v) { return query_online(g, gl, u, v); };
    }

    Rng rng(seed + 0x517cc1b727220a95ull);
    uint64_t negatives = count - positives;
    uint64_t attempts = 0;
    const uint64_t max_attempts = negatives * 1000 + 1000;
    while (negatives > 0) {
        if (++attempts > max_attempts)
            throw std::runtime_error("make_workload: could not sample unreachable pairs");
        uint32_t u = static_cast<uint32_t>(rng.below(g.n));
        uint32_t v = static_cast<uint32_t>(rng.below(g.n));
        if (is_reachable(u, v)) continue;
        w.pairs.emplace_back(u, v);
        --negatives;
    }
    return w;
}

}  // namespace reachidx

#endif
