#ifndef REACHIDX_CONDENSE_HPP
#define REACHIDX_CONDENSE_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "reachidx/dag.hpp"
#include "reachidx/edge_list.hpp"

namespace reachidx {

struct CondensationMap {
    std::vector<uint32_t> component_of;           // original vertex -> dag vertex
    std::vector<std::vector<uint32_t>> components;  // dag vertex -> original vertices
};

namespace detail {

// Iterative Tarjan; assigns a component id to every vertex. Components are
// then relabeled by their smallest original member so that acyclic inputs
// condense to the identity map.
inline std::vector<uint32_t> tarjan_scc(uint32_t n, const std::vector<uint32_t>& off,
                                        const std::vector<uint32_t>& adj, uint32_t& num_comps) {
    constexpr uint32_t kUnset = UINT32_MAX;
    std::vector<uint32_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
    std::vector<bool> on_stack(n, false);
    std::vector<uint32_t> stack;
    uint32_t next_index = 0;
    num_comps = 0;

    struct Frame {
        uint32_t v;
        uint32_t edge;
    };
    std::vector<Frame> call;

    for (uint32_t root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        call.push_back({root, off[root]});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge < off[f.v + 1]) {
                uint32_t w = adj[f.edge++];
                if (index[w] == kUnset) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, off[w]});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                uint32_t v = f.v;
                call.pop_back();
                if (low[v] == index[v]) {
                    uint32_t c = num_comps++;
                    uint32_t w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = c;
                    } while (w != v);
                }
                if (!call.empty()) {
                    uint32_t parent = call.back().v;
                    low[parent] = std::min(low[parent], low[v]);
                }
            }
        }
    }
    return comp;
}

}  // namespace detail

// SCC condensation: two original vertices share a dag vertex iff they are
// mutually reachable in the input digraph.
inline std::pair<Dag, CondensationMap> condense(const EdgeList& g) {
    std::vector<uint32_t> off, adj;
    detail::build_csr(g.num_vertices, g.edges, false, off, adj);

    uint32_t num_comps = 0;
    std::vector<uint32_t> raw = detail::tarjan_scc(g.num_vertices, off, adj, num_comps);

    // relabel components by smallest original member
    std::vector<uint32_t> min_member(num_comps, UINT32_MAX);
    for (uint32_t v = 0; v < g.num_vertices; ++v)
        min_member[raw[v]] = std::min(min_member[raw[v]], v);
    std::vector<uint32_t> by_min(num_comps);
    for (uint32_t c = 0; c < num_comps; ++c) by_min[c] = c;
    std::sort(by_min.begin(), by_min.end(),
              [&](uint32_t a, uint32_t b) { return min_member[a] < min_member[b]; });
    std::vector<uint32_t> relabel(num_comps);
    for (uint32_t i = 0; i < num_comps; ++i) relabel[by_min[i]] = i;

    CondensationMap map;
    map.component_of.resize(g.num_vertices);
    map.components.resize(num_comps);
    for (uint32_t v = 0; v < g.num_vertices; ++v) {
        uint32_t c = relabel[raw[v]];
        map.component_of[v] = c;
        map.components[c].push_back(v);
    }

    std::vector<Edge> comp_edges;
    comp_edges.reserve(g.edges.size());
    for (const Edge& e : g.edges) {
        uint32_t a = map.component_of[e.first], b = map.component_of[e.second];
        if (a != b) comp_edges.emplace_back(a, b);
    }
    std::sort(comp_edges.begin(), comp_edges.end());
    comp_edges.erase(std::unique(comp_edges.begin(), comp_edges.end()), comp_edges.end());

    return {dag_from_edges(num_comps, comp_edges), std::move(map)};
}

}  // namespace reachidx

#endif
