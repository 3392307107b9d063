#ifndef REACHIDX_BACKBONE_HPP
#define REACHIDX_BACKBONE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "reachidx/bits.hpp"
#include "reachidx/dag.hpp"
#include "reachidx/tc_oracle.hpp"

namespace reachidx {

enum class BackboneMode { two_side, one_side };

// Set-cover instance for backbone vertex discovery. The ground set holds
// the pairs at the critical distance (epsilon+1 two-side, epsilon
// one-side); C_x holds the ground pairs x can mediate with both legs
// within epsilon.
struct CoverInstance {
    uint32_t epsilon = 0;
    BackboneMode mode = BackboneMode::two_side;
    std::vector<Edge> ground;                       // pair id -> (u,v)
    std::vector<std::vector<uint32_t>> candidates;  // vertex -> pair ids
};

namespace detail {

// vertices at exact BFS depth `depth` from v, and all within <= depth
inline void bounded_bfs(const Dag& g, uint32_t v, uint32_t depth, Dir dir,
                        std::vector<uint32_t>& within, std::vector<uint32_t>& at_depth) {
    within.clear();
    at_depth.clear();
    if (depth == 0) {
        within.push_back(v);
        at_depth.push_back(v);
        return;
    }
    static thread_local std::vector<uint32_t> seen_stamp;
    static thread_local uint32_t stamp = 0;
    if (seen_stamp.size() < g.n) seen_stamp.assign(g.n, 0);
    ++stamp;
    if (stamp == 0) {  // stamp wrapped
        seen_stamp.assign(g.n, 0);
        stamp = 1;
    }
    seen_stamp[v] = stamp;
    within.push_back(v);
    std::vector<uint32_t> frontier{v};
    for (uint32_t d = 1; d <= depth && !frontier.empty(); ++d) {
        std::vector<uint32_t> next;
        for (uint32_t x : frontier) {
            for (uint32_t w : g.neighbors(x, dir)) {
                if (seen_stamp[w] != stamp) {
                    seen_stamp[w] = stamp;
                    within.push_back(w);
                    next.push_back(w);
                }
            }
        }
        if (d == depth) at_depth = next;
        frontier = std::move(next);
    }
}

struct PairHash {
    size_t operator()(const Edge& e) const {
        return (static_cast<size_t>(e.first) << 32) ^ e.second;
    }
};

}  // namespace detail

inline CoverInstance build_cover_instance(const Dag& g, uint32_t epsilon, BackboneMode mode) {
    if (epsilon < 1) throw std::invalid_argument("build_cover_instance: epsilon >= 1");
    CoverInstance inst;
    inst.epsilon = epsilon;
    inst.mode = mode;
    uint32_t critical = mode == BackboneMode::two_side ? epsilon + 1 : epsilon;

    std::unordered_map<Edge, uint32_t, detail::PairHash> pair_id;
    std::vector<uint32_t> within, at_depth;
    for (uint32_t u = 0; u < g.n; ++u) {
        detail::bounded_bfs(g, u, critical, Dir::forward, within, at_depth);
        for (uint32_t v : at_depth) {
            pair_id.emplace(Edge{u, v}, static_cast<uint32_t>(inst.ground.size()));
            inst.ground.emplace_back(u, v);
        }
    }

    inst.candidates.resize(g.n);
    std::vector<uint32_t> fwd, rev, tmp;
    for (uint32_t x = 0; x < g.n; ++x) {
        detail::bounded_bfs(g, x, epsilon, Dir::forward, fwd, tmp);
        detail::bounded_bfs(g, x, epsilon, Dir::reverse, rev, tmp);
        for (uint32_t u : rev) {
            for (uint32_t v : fwd) {
                auto it = pair_id.find({u, v});
                if (it != pair_id.end()) inst.candidates[x].push_back(it->second);
            }
        }
        std::sort(inst.candidates[x].begin(), inst.candidates[x].end());
    }
    return inst;
}

// Lazy greedy cover: pairs already covered by the preselected vertices go
// straight into R, then vertices are picked by maximal fresh coverage
// (ties to the smallest id) until the ground set is exhausted.
inline std::vector<uint32_t> greedy_cover(const CoverInstance& inst,
                                          const std::vector<uint32_t>& preselected) {
    std::vector<bool> covered(inst.ground.size(), false);
    size_t remaining = inst.ground.size();
    std::vector<bool> chosen(inst.candidates.size(), false);

    auto take = [&](uint32_t x) {
        chosen[x] = true;
        for (uint32_t pid : inst.candidates[x]) {
            if (!covered[pid]) {
                covered[pid] = true;
                --remaining;
            }
        }
    };
    for (uint32_t x : preselected) take(x);

    // max-heap of (stale-able gain, smallest id first)
    using Entry = std::pair<uint32_t, uint32_t>;  // (gain, id)
    auto cmp = [](const Entry& a, const Entry& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
    for (uint32_t x = 0; x < inst.candidates.size(); ++x)
        if (!chosen[x] && !inst.candidates[x].empty())
            heap.push({static_cast<uint32_t>(inst.candidates[x].size()), x});

    std::vector<uint32_t> picked(preselected);
    while (remaining > 0) {
        if (heap.empty()) throw std::runtime_error("greedy_cover: uncoverable ground pair");
        auto [gain, x] = heap.top();
        heap.pop();
        if (chosen[x]) continue;
        uint32_t fresh = 0;
        for (uint32_t pid : inst.candidates[x])
            if (!covered[pid]) ++fresh;
        if (fresh != gain) {
            if (fresh > 0) heap.push({fresh, x});
            continue;
        }
        if (fresh == 0) continue;
        take(x);
        picked.push_back(x);
    }
    std::sort(picked.begin(), picked.end());
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    return picked;
}

// Top ceil(alpha*n) vertices by indegree*outdegree, ties to smaller id.
inline std::vector<uint32_t> preselect(const Dag& g, double alpha) {
    if (alpha < 0 || alpha > 1) throw std::invalid_argument("preselect: alpha in [0,1]");
    uint32_t want = static_cast<uint32_t>(std::ceil(alpha * g.n));
    if (want == 0) return {};
    std::vector<uint32_t> order(g.n);
    for (uint32_t v = 0; v < g.n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        uint64_t ia = static_cast<uint64_t>(g.in_degree(a)) * g.out_degree(a);
        uint64_t ib = static_cast<uint64_t>(g.in_degree(b)) * g.out_degree(b);
        if (ia != ib) return ia > ib;
        return a < b;
    });
    order.resize(std::min<size_t>(want, order.size()));
    std::sort(order.begin(), order.end());
    return order;
}

struct Backbone {
    uint32_t epsilon = 0;
    BackboneMode mode = BackboneMode::two_side;
    std::vector<uint32_t> vertices;  // sorted
    std::vector<Edge> edges;         // sorted, over original vertex ids
};

// Two-side edges link backbone pairs at distance <= epsilon; one-side uses
// <= epsilon+1. With prune_redundant an edge is dropped when another
// backbone vertex bridges it with both legs within epsilon.
inline std::vector<Edge> backbone_edges(const Dag& g, const std::vector<uint32_t>& vstar,
                                        uint32_t epsilon, BackboneMode mode,
                                        bool prune_redundant = false) {
    uint32_t reach_depth = mode == BackboneMode::two_side ? epsilon : epsilon + 1;
    std::vector<bool> is_star(g.n, false);
    for (uint32_t v : vstar) is_star[v] = true;

    std::vector<Edge> edges;
    std::vector<uint32_t> within, within_eps, tmp;
    std::unordered_map<Edge, bool, detail::PairHash> near;  // d <= epsilon pairs in V*
    for (uint32_t u : vstar) {
        detail::bounded_bfs(g, u, reach_depth, Dir::forward, within, tmp);
        for (uint32_t v : within)
            if (v != u && is_star[v]) edges.emplace_back(u, v);
        if (prune_redundant) {
            detail::bounded_bfs(g, u, epsilon, Dir::forward, within_eps, tmp);
            for (uint32_t v : within_eps)
                if (v != u && is_star[v]) near[{u, v}] = true;
        }
    }
    if (prune_redundant) {
        std::vector<Edge> kept;
        for (const Edge& e : edges) {
            bool redundant = false;
            for (uint32_t x : vstar) {
                if (x == e.first || x == e.second) continue;
                if (near.count({e.first, x}) && near.count({x, e.second})) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) kept.push_back(e);
        }
        edges = std::move(kept);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

inline Backbone discover_backbone(const Dag& g, uint32_t epsilon, BackboneMode mode,
                                  double preselect_alpha = 0.0, bool prune_redundant = false) {
    CoverInstance inst = build_cover_instance(g, epsilon, mode);
    std::vector<uint32_t> pre = preselect(g, preselect_alpha);
    Backbone b;
    b.epsilon = epsilon;
    b.mode = mode;
    b.vertices = greedy_cover(inst, pre);
    b.edges = backbone_edges(g, b.vertices, epsilon, mode, prune_redundant);
    return b;
}

struct BackboneReport {
    std::vector<Edge> missing_witness;  // reachable non-local pairs with no entry/exit chain
    std::vector<Edge> false_witness;    // unreachable pairs that acquired one
    bool ok() const { return missing_witness.empty() && false_witness.empty(); }
};

// Brute-force check of the backbone definition against the oracle.
inline BackboneReport verify_backbone(const Dag& g, const Backbone& b,
                                      const TransitiveClosure& tc) {
    BackboneReport report;
    uint32_t ns = static_cast<uint32_t>(b.vertices.size());
    std::vector<uint32_t> star_id(g.n, kNoVertex);
    for (uint32_t i = 0; i < ns; ++i) star_id[b.vertices[i]] = i;

    // closure of the backbone graph, rows over local backbone ids
    std::vector<std::vector<uint32_t>> adj(ns);
    for (const Edge& e : b.edges) adj[star_id[e.first]].push_back(star_id[e.second]);
    std::vector<BitSet> closure(ns, BitSet(ns));
    for (uint32_t s = 0; s < ns; ++s) {
        std::vector<uint32_t> stack{s};
        closure[s].set(s);
        while (!stack.empty()) {
            uint32_t x = stack.back();
            stack.pop_back();
            for (uint32_t y : adj[x]) {
                if (!closure[s].test(y)) {
                    closure[s].set(y);
                    stack.push_back(y);
                }
            }
        }
    }

    // local entries per source / exits per target
    std::vector<std::vector<uint32_t>> entries(g.n), exits(g.n);
    std::vector<uint32_t> within, tmp;
    for (uint32_t v = 0; v < g.n; ++v) {
        detail::bounded_bfs(g, v, b.epsilon, Dir::forward, within, tmp);
        for (uint32_t x : within)
            if (star_id[x] != kNoVertex) entries[v].push_back(star_id[x]);
        detail::bounded_bfs(g, v, b.epsilon, Dir::reverse, within, tmp);
        for (uint32_t x : within)
            if (star_id[x] != kNoVertex) exits[v].push_back(star_id[x]);
    }

    std::vector<BitSet> local(g.n);  // d(u,.) <= epsilon
    for (uint32_t u = 0; u < g.n; ++u) {
        detail::bounded_bfs(g, u, b.epsilon, Dir::forward, within, tmp);
        local[u] = BitSet(g.n);
        for (uint32_t x : within) local[u].set(x);
    }

    BitSet reach_from_entries(ns);
    for (uint32_t u = 0; u < g.n; ++u) {
        reach_from_entries.clear();
        for (uint32_t e : entries[u]) reach_from_entries.or_with(closure[e]);
        for (uint32_t v = 0; v < g.n; ++v) {
            if (u == v) continue;
            bool witness = false;
            for (uint32_t x : exits[v]) {
                if (reach_from_entries.test(x)) {
                    witness = true;
                    break;
                }
            }
            if (tc.reach(u, v)) {
                if (!local[u].test(v) && !witness) report.missing_witness.emplace_back(u, v);
            } else if (witness) {
                report.false_witness.emplace_back(u, v);
            }
        }
    }
    return report;
}

}  // namespace reachidx

#endif
