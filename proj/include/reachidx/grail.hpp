#ifndef REACHIDX_GRAIL_HPP
#define REACHIDX_GRAIL_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "reachidx/dag.hpp"
#include "reachidx/rng.hpp"

namespace reachidx {

// Random-DFS interval labels. Per traversal a vertex gets
// [min post-order rank in its reachable set, own post-order rank]; if any
// traversal's interval of v is not contained in u's, u cannot reach v.
struct GrailLabels {
    uint32_t c = 0;
    uint32_t n = 0;
    std::vector<uint32_t> low;   // c * n, traversal-major
    std::vector<uint32_t> post;  // c * n

    // containment of v's intervals in u's across every traversal
    bool may_reach(uint32_t u, uint32_t v) const {
        for (uint32_t t = 0; t < c; ++t) {
            size_t base = static_cast<size_t>(t) * n;
            if (low[base + u] > low[base + v] || post[base + v] > post[base + u]) return false;
        }
        return true;
    }
};

inline GrailLabels grail_build(const Dag& g, uint32_t c, uint64_t seed) {
    if (c < 1) throw std::invalid_argument("grail_build: c >= 1");
    GrailLabels gl;
    gl.c = c;
    gl.n = g.n;
    gl.low.resize(static_cast<size_t>(c) * g.n);
    gl.post.resize(static_cast<size_t>(c) * g.n);

    std::vector<uint32_t> roots;
    for (uint32_t v = 0; v < g.n; ++v)
        if (g.in_degree(v) == 0) roots.push_back(v);

    std::vector<uint32_t> order;
    std::vector<bool> seen(g.n);
    struct Frame {
        uint32_t v;
        uint32_t next;
    };
    std::vector<Frame> stack;
    std::vector<std::vector<uint32_t>> shuffled(g.n);

    for (uint32_t t = 0; t < c; ++t) {
        Rng rng(seed ^ (static_cast<uint64_t>(t) * 0x9e3779b97f4a7c15ull + t));
        for (uint32_t v = 0; v < g.n; ++v) {
            auto out = g.out(v);
            shuffled[v].assign(out.begin(), out.end());
            rng.shuffle(shuffled[v]);
        }
        std::vector<uint32_t> root_order = roots;
        rng.shuffle(root_order);

        size_t base = static_cast<size_t>(t) * g.n;
        std::fill(seen.begin(), seen.end(), false);
        uint32_t clock = 0;
        for (uint32_t r : root_order) {
            if (seen[r]) continue;
            seen[r] = true;
            stack.push_back({r, 0});
            while (!stack.empty()) {
                Frame& f = stack.back();
                if (f.next < shuffled[f.v].size()) {
                    uint32_t w = shuffled[f.v][f.next++];
                    if (!seen[w]) {
                        seen[w] = true;
                        stack.push_back({w, 0});
                    }
                } else {
                    gl.post[base + f.v] = ++clock;
                    stack.pop_back();
                }
            }
        }
        // low = min post rank over the reachable set, by reverse topo sweep
        for (uint32_t v = 0; v < g.n; ++v) gl.low[base + v] = gl.post[base + v];
        for (auto it = g.topo.rbegin(); it != g.topo.rend(); ++it) {
            uint32_t v = *it;
            for (uint32_t w : g.out(v))
                gl.low[base + v] = std::min(gl.low[base + v], gl.low[base + w]);
        }
    }
    return gl;
}

// GRAIL-pruned DFS from u toward v; exact because pruning is sound.
// expansions, when given, counts vertices whose out-edges were walked.
inline bool query_online(const Dag& g, const GrailLabels& gl, uint32_t u, uint32_t v,
                         uint64_t* expansions = nullptr) {
    if (u == v) return true;
    if (!gl.may_reach(u, v)) return false;
    std::vector<bool> seen(g.n, false);
    seen[u] = true;
    std::vector<uint32_t> stack{u};
    while (!stack.empty()) {
        uint32_t x = stack.back();
        stack.pop_back();
        if (expansions) ++(*expansions);
        for (uint32_t w : g.out(x)) {
            if (w == v) return true;
            if (!seen[w] && gl.may_reach(w, v)) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return false;
}

}  // namespace reachidx

#endif
