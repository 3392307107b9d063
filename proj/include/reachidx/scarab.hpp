#ifndef REACHIDX_SCARAB_HPP
#define REACHIDX_SCARAB_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "reachidx/backbone.hpp"
#include "reachidx/dag.hpp"
#include "reachidx/dl.hpp"
#include "reachidx/grail.hpp"
#include "reachidx/hop_labels.hpp"

namespace reachidx {

// Query composition over a two-side backbone: bidirectional local search
// answers local pairs, the reachability join test over the materialized
// access-vertex sets answers the rest through an inner index on the
// backbone graph. GRAIL intervals on the full graph prune join candidates.
struct ScarabIndex {
    Backbone backbone;
    std::vector<uint32_t> star_id;  // original id -> backbone-local id or kNoVertex
    Dag star_graph;                 // backbone graph over local ids
    HopLabeling inner;              // complete index on star_graph
    std::vector<std::vector<uint32_t>> b_out;  // reduced access sets, backbone-local ids
    std::vector<std::vector<uint32_t>> b_in;
    // unreduced sets are kept only when requested (test support)
    std::vector<std::vector<uint32_t>> full_out;
    std::vector<std::vector<uint32_t>> full_in;
};

inline ScarabIndex build_scarab(const Dag& g, Backbone backbone, bool keep_full_sets = false) {
    ScarabIndex idx;
    idx.backbone = std::move(backbone);
    const std::vector<uint32_t>& stars = idx.backbone.vertices;
    uint32_t ns = static_cast<uint32_t>(stars.size());

    idx.star_id.assign(g.n, kNoVertex);
    for (uint32_t i = 0; i < ns; ++i) idx.star_id[stars[i]] = i;

    std::vector<Edge> local_edges;
    local_edges.reserve(idx.backbone.edges.size());
    for (const Edge& e : idx.backbone.edges)
        local_edges.emplace_back(idx.star_id[e.first], idx.star_id[e.second]);
    idx.star_graph = dag_from_edges(ns, local_edges);
    idx.inner = dl_build(idx.star_graph);

    // membership masks of the star graph's direct relations, used for the
    // first-accessed reduction: a backbone vertex is dropped when another
    // local one reaches it within epsilon (an edge of the backbone graph)
    std::vector<uint32_t> within, tmp;
    idx.b_out.resize(g.n);
    idx.b_in.resize(g.n);
    if (keep_full_sets) {
        idx.full_out.resize(g.n);
        idx.full_in.resize(g.n);
    }
    std::vector<bool> in_set(ns, false);
    for (uint32_t v = 0; v < g.n; ++v) {
        for (Dir dir : {Dir::forward, Dir::reverse}) {
            detail::bounded_bfs(g, v, idx.backbone.epsilon, dir, within, tmp);
            std::vector<uint32_t> members;
            for (uint32_t x : within)
                if (idx.star_id[x] != kNoVertex) members.push_back(idx.star_id[x]);
            std::sort(members.begin(), members.end());
            for (uint32_t m : members) in_set[m] = true;
            std::vector<uint32_t> reduced;
            for (uint32_t m : members) {
                bool dominated = false;
                auto covers = dir == Dir::forward ? idx.star_graph.in(m) : idx.star_graph.out(m);
                for (uint32_t o : covers) {
                    if (in_set[o]) {
                        dominated = true;
                        break;
                    }
                }
                if (!dominated) reduced.push_back(m);
            }
            for (uint32_t m : members) in_set[m] = false;
            if (dir == Dir::forward) {
                if (keep_full_sets) idx.full_out[v] = members;
                idx.b_out[v] = std::move(reduced);
            } else {
                if (keep_full_sets) idx.full_in[v] = members;
                idx.b_in[v] = std::move(reduced);
            }
        }
    }
    return idx;
}

inline ScarabIndex build_scarab(const Dag& g, uint32_t epsilon, double preselect_alpha = 0.0,
                                bool keep_full_sets = false) {
    return build_scarab(g, discover_backbone(g, epsilon, BackboneMode::two_side, preselect_alpha),
                        keep_full_sets);
}

namespace detail {

// forward to ceil(eps/2), reverse to floor(eps/2); expansion halts at
// backbone vertices. Returns true on a meet.
inline bool bidirectional_local_meet(const Dag& g, const ScarabIndex& idx, uint32_t u,
                                     uint32_t v) {
    uint32_t fwd_depth = (idx.backbone.epsilon + 1) / 2;
    uint32_t rev_depth = idx.backbone.epsilon / 2;

    std::vector<bool> in_fwd(g.n, false);
    in_fwd[u] = true;
    std::vector<uint32_t> frontier{u};
    for (uint32_t d = 0; d < fwd_depth && !frontier.empty(); ++d) {
        std::vector<uint32_t> next;
        for (uint32_t x : frontier) {
            if (idx.star_id[x] != kNoVertex && x != u) continue;
            for (uint32_t w : g.out(x)) {
                if (!in_fwd[w]) {
                    in_fwd[w] = true;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    if (in_fwd[v]) return true;

    std::vector<bool> in_rev(g.n, false);
    in_rev[v] = true;
    frontier = {v};
    for (uint32_t d = 0; d < rev_depth && !frontier.empty(); ++d) {
        std::vector<uint32_t> next;
        for (uint32_t x : frontier) {
            if (idx.star_id[x] != kNoVertex && x != v) continue;
            for (uint32_t w : g.in(x)) {
                if (!in_rev[w]) {
                    if (in_fwd[w]) return true;
                    in_rev[w] = true;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return false;
}

}  // namespace detail

// FastReach composition; exact for every pair.
inline bool scarab_query(const Dag& g, const ScarabIndex& idx, const GrailLabels& gl, uint32_t u,
                         uint32_t v) {
    if (u == v) return true;
    if (!gl.may_reach(u, v)) return false;
    if (detail::bidirectional_local_meet(g, idx, u, v)) return true;
    for (uint32_t x : idx.b_out[u]) {
        uint32_t ox = idx.backbone.vertices[x];
        if (!gl.may_reach(ox, v)) continue;
        for (uint32_t y : idx.b_in[v]) {
            uint32_t oy = idx.backbone.vertices[y];
            if (!gl.may_reach(ox, oy)) continue;
            if (query_hop(idx.inner, x, y)) return true;
        }
    }
    return false;
}

// Online variant: reverse BFS from v flags backbone targets, then one
// shared recursive traversal of the backbone graph serves every entry
// point found by the forward BFS from u.
inline bool scarab_online_search(const Dag& g, const Backbone& b,
                                 const std::vector<uint32_t>& star_id, const Dag& star_graph,
                                 const GrailLabels& gl, uint32_t u, uint32_t v) {
    if (u == v) return true;
    if (!gl.may_reach(u, v)) return false;
    uint32_t eps = b.epsilon;

    uint32_t ns = star_graph.n;
    std::vector<bool> target(ns, false);
    {
        std::vector<bool> seen(g.n, false);
        seen[v] = true;
        std::vector<uint32_t> frontier{v};
        for (uint32_t d = 0; d < eps && !frontier.empty(); ++d) {
            std::vector<uint32_t> next;
            for (uint32_t x : frontier) {
                if (star_id[x] != kNoVertex && x != v) continue;  // no need to explore past it
                for (uint32_t w : g.in(x)) {
                    if (w == u) return true;
                    if (!seen[w] && gl.may_reach(u, w)) {
                        seen[w] = true;
                        next.push_back(w);
                    }
                }
            }
            frontier = std::move(next);
        }
        // flag every backbone vertex seen by the reverse sweep
        for (uint32_t x = 0; x < g.n; ++x)
            if (seen[x] && star_id[x] != kNoVertex) target[star_id[x]] = true;
        if (star_id[v] != kNoVertex) target[star_id[v]] = true;
    }

    std::vector<bool> visited_star(ns, false);
    std::vector<uint32_t> star_stack;
    auto enter_backbone = [&](uint32_t s) {
        if (visited_star[s]) return false;
        visited_star[s] = true;
        star_stack.push_back(s);
        while (!star_stack.empty()) {
            uint32_t x = star_stack.back();
            star_stack.pop_back();
            if (target[x]) return true;
            for (uint32_t y : star_graph.out(x)) {
                if (!visited_star[y] && gl.may_reach(b.vertices[y], v)) {
                    visited_star[y] = true;
                    star_stack.push_back(y);
                }
            }
        }
        return false;
    };

    std::vector<bool> seen(g.n, false);
    seen[u] = true;
    std::vector<uint32_t> frontier{u};
    for (uint32_t d = 0; d <= eps && !frontier.empty(); ++d) {
        std::vector<uint32_t> next;
        for (uint32_t x : frontier) {
            if (x == v) return true;
            if (star_id[x] != kNoVertex) {
                if (target[star_id[x]]) return true;
                if (enter_backbone(star_id[x])) return true;
                continue;  // halt the graph BFS at backbone vertices
            }
            if (d == eps) continue;
            for (uint32_t w : g.out(x)) {
                if (!seen[w] && gl.may_reach(w, v)) {
                    seen[w] = true;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return false;
}

inline bool scarab_online_search(const Dag& g, const ScarabIndex& idx, const GrailLabels& gl,
                                 uint32_t u, uint32_t v) {
    return scarab_online_search(g, idx.backbone, idx.star_id, idx.star_graph, gl, u, v);
}

}  // namespace reachidx

#endif
