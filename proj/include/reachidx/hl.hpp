#ifndef REACHIDX_HL_HPP
#define REACHIDX_HL_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "reachidx/backbone.hpp"
#include "reachidx/bits.hpp"
#include "reachidx/dag.hpp"
#include "reachidx/hop_labels.hpp"

namespace reachidx {

// Recursive one-side backbone decomposition. levels[0] is the input graph;
// levels[i+1] is a one-side backbone of levels[i]. Each level keeps its own
// compact graph plus the mapping to original vertex ids.
struct HierarchyLevel {
    std::vector<uint32_t> verts;     // original ids, ascending; local id = index
    Dag graph;                       // over local ids
    std::vector<uint32_t> local_of;  // original id -> local id or kNoVertex
};

struct Hierarchy {
    uint32_t epsilon = 2;
    std::vector<HierarchyLevel> levels;
    std::vector<uint32_t> level_of;  // original vertex -> its unique level
    // star_reach[i][a]: backbone members of level i+1 within epsilon of
    // member a inside levels[i].graph (indices are level-(i+1) local ids)
    std::vector<std::vector<BitSet>> star_reach;

    uint32_t h() const { return static_cast<uint32_t>(levels.size()) - 1; }
};

namespace detail {

inline HierarchyLevel restrict_level(const HierarchyLevel& parent,
                                     const std::vector<uint32_t>& keep_local,
                                     std::vector<Edge> local_edges, uint32_t original_n) {
    HierarchyLevel next;
    next.verts.reserve(keep_local.size());
    std::vector<uint32_t> renum(parent.verts.size(), kNoVertex);
    for (uint32_t i = 0; i < keep_local.size(); ++i) {
        renum[keep_local[i]] = i;
        next.verts.push_back(parent.verts[keep_local[i]]);
    }
    for (Edge& e : local_edges) e = {renum[e.first], renum[e.second]};
    next.graph = dag_from_edges(static_cast<uint32_t>(keep_local.size()), local_edges);
    next.local_of.assign(original_n, kNoVertex);
    for (uint32_t i = 0; i < next.verts.size(); ++i) next.local_of[next.verts[i]] = i;
    return next;
}

}  // namespace detail

inline Hierarchy decompose(const Dag& g, uint32_t epsilon, uint32_t max_levels,
                           uint32_t core_limit) {
    if (epsilon < 1) throw std::invalid_argument("decompose: epsilon >= 1");
    Hierarchy hier;
    hier.epsilon = epsilon;

    HierarchyLevel base;
    base.verts.resize(g.n);
    base.local_of.resize(g.n);
    for (uint32_t v = 0; v < g.n; ++v) base.verts[v] = base.local_of[v] = v;
    base.graph = g;
    hier.levels.push_back(std::move(base));

    while (hier.h() < max_levels && hier.levels.back().verts.size() > core_limit) {
        const HierarchyLevel& cur = hier.levels.back();
        CoverInstance inst = build_cover_instance(cur.graph, epsilon, BackboneMode::one_side);
        std::vector<uint32_t> vstar = greedy_cover(inst, {});
        if (vstar.empty() || vstar.size() >= cur.verts.size()) break;
        std::vector<Edge> estar =
            backbone_edges(cur.graph, vstar, epsilon, BackboneMode::one_side);
        hier.levels.push_back(detail::restrict_level(cur, vstar, std::move(estar), g.n));
    }

    hier.level_of.assign(g.n, 0);
    for (uint32_t i = 1; i < hier.levels.size(); ++i)
        for (uint32_t v : hier.levels[i].verts) hier.level_of[v] = i;

    // epsilon-reach among next-level members inside each level graph,
    // used by the access-set domination rule
    hier.star_reach.resize(hier.h());
    for (uint32_t i = 0; i < hier.h(); ++i) {
        const HierarchyLevel& cur = hier.levels[i];
        const HierarchyLevel& up = hier.levels[i + 1];
        uint32_t ns = static_cast<uint32_t>(up.verts.size());
        hier.star_reach[i].assign(ns, BitSet(ns));
        std::vector<uint32_t> within, tmp;
        for (uint32_t a = 0; a < ns; ++a) {
            uint32_t src = cur.local_of[up.verts[a]];
            detail::bounded_bfs(cur.graph, src, epsilon, Dir::forward, within, tmp);
            for (uint32_t x : within) {
                uint32_t b = up.local_of[cur.verts[x]];
                if (b != kNoVertex && b != a) hier.star_reach[i][a].set(b);
            }
        }
    }
    return hier;
}

// Dominating backbone access sets of v (level(v) = i < h) inside level i:
// members of level i+1 within epsilon, minus any member reachable through
// another such member with both legs within epsilon. Returns original ids.
inline std::pair<std::vector<uint32_t>, std::vector<uint32_t>> access_sets(const Hierarchy& hier,
                                                                           uint32_t level,
                                                                           uint32_t v) {
    const HierarchyLevel& cur = hier.levels[level];
    const HierarchyLevel& up = hier.levels[level + 1];
    uint32_t local = cur.local_of[v];

    auto collect = [&](Dir dir) {
        std::vector<uint32_t> within, tmp, members;
        detail::bounded_bfs(cur.graph, local, hier.epsilon, dir, within, tmp);
        for (uint32_t x : within) {
            uint32_t b = up.local_of[cur.verts[x]];
            if (b != kNoVertex) members.push_back(b);
        }
        std::vector<uint32_t> kept;
        for (uint32_t u : members) {
            bool dominated = false;
            for (uint32_t x : members) {
                if (x == u) continue;
                bool covers = dir == Dir::forward ? hier.star_reach[level][x].test(u)
                                                  : hier.star_reach[level][u].test(x);
                if (covers) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) kept.push_back(up.verts[u]);
        }
        std::sort(kept.begin(), kept.end());
        return kept;
    };
    return {collect(Dir::forward), collect(Dir::reverse)};
}

// Core labeling: ceil(eps/2)-neighborhoods when the core diameter fits in
// epsilon, otherwise the full per-source closure on the (small) core.
inline HopLabeling label_core(const Hierarchy& hier) {
    const HierarchyLevel& core = hier.levels.back();
    const Dag& gh = core.graph;
    uint32_t original_n = static_cast<uint32_t>(hier.level_of.size());
    HopLabeling labels;
    labels.l_out.resize(original_n);
    labels.l_in.resize(original_n);

    uint32_t diameter = 0;
    std::vector<std::vector<uint32_t>> reach_sets(gh.n);
    for (uint32_t v = 0; v < gh.n; ++v) {
        std::vector<bool> seen(gh.n, false);
        seen[v] = true;
        std::vector<uint32_t> frontier{v};
        reach_sets[v].push_back(v);
        uint32_t depth = 0;
        while (!frontier.empty()) {
            std::vector<uint32_t> next;
            for (uint32_t x : frontier)
                for (uint32_t w : gh.out(x))
                    if (!seen[w]) {
                        seen[w] = true;
                        next.push_back(w);
                        reach_sets[v].push_back(w);
                    }
            if (!next.empty()) ++depth;
            frontier = std::move(next);
        }
        diameter = std::max(diameter, depth);
    }

    uint32_t half = (hier.epsilon + 1) / 2;
    for (uint32_t v = 0; v < gh.n; ++v) {
        uint32_t orig = core.verts[v];
        if (diameter <= hier.epsilon) {
            for (uint32_t x : k_neighborhood(gh, v, half, Dir::forward))
                labels.l_out[orig].push_back(core.verts[x]);
            for (uint32_t x : k_neighborhood(gh, v, half, Dir::reverse))
                labels.l_in[orig].push_back(core.verts[x]);
        } else {
            for (uint32_t x : reach_sets[v]) labels.l_out[orig].push_back(core.verts[x]);
            labels.l_in[orig].push_back(orig);
        }
        detail::sort_unique(labels.l_out[orig]);
        detail::sort_unique(labels.l_in[orig]);
    }
    return labels;
}

inline HopLabeling hl_build_from(const Hierarchy& hier) {
    const uint32_t h = hier.h();
    HopLabeling labels = label_core(hier);
    uint32_t half = (hier.epsilon + 1) / 2;

    for (uint32_t i = h; i-- > 0;) {
        const HierarchyLevel& cur = hier.levels[i];
        // higher-level vertices first pick up their local neighborhoods at
        // this level, then the level's own vertices broadcast from them
        for (uint32_t local = 0; local < cur.verts.size(); ++local) {
            uint32_t orig = cur.verts[local];
            if (hier.level_of[orig] <= i) continue;
            for (uint32_t x : k_neighborhood(cur.graph, local, half, Dir::forward))
                labels.l_out[orig].push_back(cur.verts[x]);
            for (uint32_t x : k_neighborhood(cur.graph, local, half, Dir::reverse))
                labels.l_in[orig].push_back(cur.verts[x]);
            detail::sort_unique(labels.l_out[orig]);
            detail::sort_unique(labels.l_in[orig]);
        }
        for (uint32_t local = 0; local < cur.verts.size(); ++local) {
            uint32_t orig = cur.verts[local];
            if (hier.level_of[orig] != i) continue;
            auto [bout, bin] = access_sets(hier, i, orig);
            for (uint32_t x : k_neighborhood(cur.graph, local, half, Dir::forward))
                labels.l_out[orig].push_back(cur.verts[x]);
            for (uint32_t u : bout)
                labels.l_out[orig].insert(labels.l_out[orig].end(), labels.l_out[u].begin(),
                                          labels.l_out[u].end());
            for (uint32_t x : k_neighborhood(cur.graph, local, half, Dir::reverse))
                labels.l_in[orig].push_back(cur.verts[x]);
            for (uint32_t u : bin)
                labels.l_in[orig].insert(labels.l_in[orig].end(), labels.l_in[u].begin(),
                                         labels.l_in[u].end());
            detail::sort_unique(labels.l_out[orig]);
            detail::sort_unique(labels.l_in[orig]);
        }
    }
    return labels;
}

inline HopLabeling hl_build(const Dag& g, uint32_t epsilon = 2, uint32_t max_levels = 10,
                            uint32_t core_limit = 10000) {
    return hl_build_from(decompose(g, epsilon, max_levels, core_limit));
}

}  // namespace reachidx

#endif
