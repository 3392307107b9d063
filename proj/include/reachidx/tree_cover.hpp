#ifndef REACHIDX_TREE_COVER_HPP
#define REACHIDX_TREE_COVER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "reachidx/bits.hpp"
#include "reachidx/dag.hpp"
#include "reachidx/rng.hpp"
#include "reachidx/tc_oracle.hpp"

namespace reachidx {

// Edge weight of (v',v) is |pred(v')|, the tail's self-inclusive
// predecessor count. In-edge weights are stored aligned with the reverse
// adjacency; best_parent picks the max-weight in-edge with ties broken to
// the smallest parent id (vertices without in-edges hang off the virtual
// root at weight 0).
struct WeightTable {
    uint32_t n = 0;
    std::vector<uint64_t> in_edge_weight;  // aligned with Dag::rev_adj
    std::vector<uint32_t> parent;          // kNoVertex = virtual root
    std::vector<uint64_t> parent_weight;
};

inline WeightTable weights_from_tail_counts(const Dag& g, const std::vector<uint64_t>& count) {
    WeightTable w;
    w.n = g.n;
    w.in_edge_weight.resize(g.m);
    w.parent.assign(g.n, kNoVertex);
    w.parent_weight.assign(g.n, 0);
    for (uint32_t v = 0; v < g.n; ++v) {
        bool have = false;
        uint64_t best = 0;
        uint32_t best_u = kNoVertex;
        uint32_t base = g.rev_off[v];
        auto in = g.in(v);
        for (uint32_t i = 0; i < in.size(); ++i) {
            uint64_t wt = count[in[i]];
            w.in_edge_weight[base + i] = wt;
            if (!have || wt > best) {  // in-neighbors ascend, so ties keep the smaller id
                have = true;
                best = wt;
                best_u = in[i];
            }
        }
        if (have) {
            w.parent[v] = best_u;
            w.parent_weight[v] = best;
        }
    }
    return w;
}

inline WeightTable exact_weights(const Dag& g, const TransitiveClosure& tc) {
    std::vector<uint64_t> count(g.n);
    for (uint32_t v = 0; v < g.n; ++v) count[v] = tc.pred_size(v);
    return weights_from_tail_counts(g, count);
}

// |pred(v) ∩ group| for every v, by a topological sweep that carries only
// the bits of the active group. A vertex's partial set is released as soon
// as all of its out-neighbors have consumed it, which bounds the working
// memory by n * |group| bits.
inline std::vector<uint64_t> conditional_pass(const Dag& g, const BitSet& group) {
    std::vector<uint32_t> members = group.to_vector();
    std::vector<uint32_t> slot(g.n, kNoVertex);
    for (uint32_t i = 0; i < members.size(); ++i) slot[members[i]] = i;

    std::vector<uint64_t> count(g.n, 0);
    std::vector<BitSet> partial(g.n);
    std::vector<uint32_t> pending_out(g.n);
    for (uint32_t v = 0; v < g.n; ++v) pending_out[v] = g.out_degree(v);

    for (uint32_t v : g.topo) {
        BitSet p(static_cast<uint32_t>(members.size()));
        if (slot[v] != kNoVertex) p.set(slot[v]);
        for (uint32_t u : g.in(v)) {
            p.or_with(partial[u]);
            if (--pending_out[u] == 0) partial[u].release();
        }
        count[v] = p.count();
        if (pending_out[v] == 0)
            p.release();
        partial[v] = std::move(p);
    }
    return count;
}

// Disjoint equal-size (+-1) vertex groups from a seeded shuffle.
struct GroupPartition {
    uint32_t k = 0;
    std::vector<uint32_t> group_of;
    std::vector<BitSet> members;
};

inline GroupPartition random_partition(uint32_t n, uint32_t k, uint64_t seed) {
    if (k < 1) throw std::invalid_argument("random_partition: k must be >= 1");
    k = std::min(k, std::max(n, 1u));
    GroupPartition p;
    p.k = k;
    p.group_of.resize(n);
    p.members.assign(k, BitSet(n));
    Rng rng(seed);
    std::vector<uint32_t> perm = random_permutation(n, rng);
    for (uint32_t i = 0; i < n; ++i) {
        uint32_t grp = i % k;
        p.group_of[perm[i]] = grp;
        p.members[grp].set(perm[i]);
    }
    return p;
}

// Sums K conditional passes; by the decomposition identity the result
// equals exact_weights edge for edge, without ever holding the full TC.
inline WeightTable batched_weights(const Dag& g, uint32_t k, uint64_t seed) {
    GroupPartition part = random_partition(g.n, k, seed);
    std::vector<uint64_t> count(g.n, 0);
    for (uint32_t grp = 0; grp < part.k; ++grp) {
        std::vector<uint64_t> partial = conditional_pass(g, part.members[grp]);
        for (uint32_t v = 0; v < g.n; ++v) count[v] += partial[v];
    }
    return weights_from_tail_counts(g, count);
}

struct Interval {
    uint32_t pre = 0, post = 0;  // 1-based DFS entry/exit numbers
    bool contains(const Interval& o) const { return pre <= o.pre && o.post <= post; }
    bool operator==(const Interval&) const = default;
};

// Spanning arborescence under the virtual root plus its DFS intervals.
// Ancestry in the tree is exactly interval containment.
struct TreeCover {
    uint32_t n = 0;
    std::vector<uint32_t> parent;  // kNoVertex = virtual root
    std::vector<Interval> interval;
    uint64_t total_weight = 0;  // W under the weight table the tree was built from

    bool is_ancestor(uint32_t u, uint32_t v) const { return interval[u].contains(interval[v]); }
    bool operator==(const TreeCover&) const = default;
};

inline TreeCover build_tree(const WeightTable& w) {
    TreeCover t;
    t.n = w.n;
    t.parent = w.parent;
    t.interval.assign(w.n, Interval{});
    for (uint32_t v = 0; v < w.n; ++v) t.total_weight += w.parent_weight[v];

    // children in ascending id order; iterating v ascending preserves that
    std::vector<std::vector<uint32_t>> children(w.n);
    std::vector<uint32_t> roots;
    for (uint32_t v = 0; v < w.n; ++v) {
        if (w.parent[v] == kNoVertex)
            roots.push_back(v);
        else
            children[w.parent[v]].push_back(v);
    }

    uint32_t clock = 0;
    struct Frame {
        uint32_t v;
        uint32_t next_child;
    };
    std::vector<Frame> stack;
    for (uint32_t r : roots) {
        stack.push_back({r, 0});
        t.interval[r].pre = ++clock;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next_child < children[f.v].size()) {
                uint32_t c = children[f.v][f.next_child++];
                t.interval[c].pre = ++clock;
                stack.push_back({c, 0});
            } else {
                t.interval[f.v].post = ++clock;
                stack.pop_back();
            }
        }
    }
    return t;
}

// Per-vertex minimal list of subtree intervals (kept as their subtree
// roots, ordered by interval start) whose union is exactly the vertex's
// self-inclusive successor set.
struct CompressedTC {
    std::vector<std::vector<uint32_t>> roots;
    uint64_t total_entries = 0;
};

inline CompressedTC compress_tc(const Dag& g, const TreeCover& t) {
    CompressedTC c;
    c.roots.resize(g.n);
    std::vector<uint32_t> merged;
    for (auto it = g.topo.rbegin(); it != g.topo.rend(); ++it) {
        uint32_t u = *it;
        merged.clear();
        merged.push_back(u);
        for (uint32_t w : g.out(u))
            merged.insert(merged.end(), c.roots[w].begin(), c.roots[w].end());
        std::sort(merged.begin(), merged.end(),
                  [&](uint32_t a, uint32_t b) { return t.interval[a].pre < t.interval[b].pre; });
        // intervals are laminar: after sorting by start, an interval is
        // subsumed iff it ends before the last kept interval does
        std::vector<uint32_t>& keep = c.roots[u];
        uint32_t last_post = 0;
        for (uint32_t r : merged) {
            if (t.interval[r].pre > last_post) {
                keep.push_back(r);
                last_post = t.interval[r].post;
            }
        }
        c.total_entries += keep.size();
    }
    return c;
}

inline bool query_tree(const CompressedTC& c, const TreeCover& t, uint32_t u, uint32_t v) {
    const std::vector<uint32_t>& list = c.roots[u];
    uint32_t pv = t.interval[v].pre;
    auto it = std::upper_bound(list.begin(), list.end(), pv, [&](uint32_t key, uint32_t r) {
        return key < t.interval[r].pre;
    });
    if (it == list.begin()) return false;
    return t.interval[v].post <= t.interval[*std::prev(it)].post;
}

// Hoeffding machinery for the sampled tree.
struct SampleEstimate {
    uint64_t samples = 0;  // vertices sampled so far (the bound's n)
    uint64_t total = 0;    // N
    uint32_t groups_used = 0;
    uint32_t groups_total = 0;
    double what = 0;  // unbiased estimator of W(T) for the current best tree
    double eps1 = 0;
    double delta1 = 0;
    double theta = 0;
    double delta = 0;
    bool stopped_early = false;
    std::vector<uint64_t> partial_tail_counts;
};

inline uint64_t required_sample_size(double eps1, double delta1) {
    return static_cast<uint64_t>(std::ceil(std::log(2.0 / delta1) / (2.0 * eps1 * eps1)));
}

// Processes randomly partitioned groups one at a time, keeping the best
// tree under the running weight estimates, and stops as soon as
// 2*eps1*N / (What - eps1*N) <= theta with eps1 = sqrt(ln(2/delta1)/(2n)),
// delta1 = delta/2. Consuming every group degenerates to the exact tree.
inline std::pair<TreeCover, SampleEstimate> sampled_tree(const Dag& g, double theta, double delta,
                                                         uint32_t group_size, uint64_t seed) {
    if (!(theta > 0 && theta < 1)) throw std::invalid_argument("sampled_tree: theta in (0,1)");
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("sampled_tree: delta in (0,1)");
    if (group_size < 1) throw std::invalid_argument("sampled_tree: group_size >= 1");

    uint32_t k = static_cast<uint32_t>((g.n + group_size - 1) / group_size);
    GroupPartition part = random_partition(g.n, k, seed);

    SampleEstimate est;
    est.total = g.n;
    est.groups_total = part.k;
    est.theta = theta;
    est.delta = delta;
    est.delta1 = delta / 2.0;

    std::vector<uint64_t> count(g.n, 0);
    WeightTable w;
    for (uint32_t grp = 0; grp < part.k; ++grp) {
        std::vector<uint64_t> partial = conditional_pass(g, part.members[grp]);
        for (uint32_t v = 0; v < g.n; ++v) count[v] += partial[v];
        est.samples += part.members[grp].count();
        ++est.groups_used;

        w = weights_from_tail_counts(g, count);
        uint64_t raw = 0;
        for (uint32_t v = 0; v < g.n; ++v) raw += w.parent_weight[v];
        double n_s = static_cast<double>(est.samples);
        double big_n = static_cast<double>(est.total);
        est.what = static_cast<double>(raw) * big_n / n_s;
        est.eps1 = std::sqrt(std::log(2.0 / est.delta1) / (2.0 * n_s));

        if (grp + 1 < part.k) {
            double slack = est.what - est.eps1 * big_n;
            if (slack > 0 && 2.0 * est.eps1 * big_n / slack <= theta) {
                est.stopped_early = true;
                break;
            }
        }
    }
    est.partial_tail_counts = std::move(count);
    return {build_tree(w), est};
}

// K-Tree refinement: alternate assigning each vertex to the tree giving it
// the smallest compressed closure and rebuilding each group's optimal tree
// (a group's objective reduces to one conditional pass). The recorded
// objective sequence is non-increasing.
struct MultiTreeIndex {
    uint32_t k = 0;
    std::vector<TreeCover> trees;
    std::vector<uint32_t> assignment;            // vertex -> tree index
    std::vector<std::vector<uint32_t>> lists;    // subtree roots under the assigned tree
    uint64_t objective = 0;                      // sum of list sizes
    std::vector<uint64_t> objective_history;
};

inline MultiTreeIndex ktree_refine(const Dag& g, uint32_t k, uint32_t max_iters, uint64_t seed) {
    if (k < 1) throw std::invalid_argument("ktree_refine: k must be >= 1");
    MultiTreeIndex idx;
    GroupPartition part = random_partition(g.n, k, seed);
    idx.k = part.k;

    std::vector<BitSet> groups;
    for (uint32_t i = 0; i < idx.k; ++i) groups.push_back(part.members[i]);
    idx.trees.resize(idx.k);
    for (uint32_t i = 0; i < idx.k; ++i)
        idx.trees[i] = build_tree(weights_from_tail_counts(g, conditional_pass(g, groups[i])));

    idx.assignment.assign(g.n, 0);
    uint32_t rebuilds = 0;
    while (true) {
        std::vector<CompressedTC> ctcs(idx.k);
        for (uint32_t i = 0; i < idx.k; ++i) ctcs[i] = compress_tc(g, idx.trees[i]);

        uint64_t objective = 0;
        for (uint32_t v = 0; v < g.n; ++v) {
            uint32_t best = 0;
            size_t best_size = ctcs[0].roots[v].size();
            for (uint32_t i = 1; i < idx.k; ++i) {
                if (ctcs[i].roots[v].size() < best_size) {
                    best = i;
                    best_size = ctcs[i].roots[v].size();
                }
            }
            idx.assignment[v] = best;
            objective += best_size;
        }
        idx.lists.assign(g.n, {});
        for (uint32_t v = 0; v < g.n; ++v) idx.lists[v] = ctcs[idx.assignment[v]].roots[v];
        idx.objective = objective;
        idx.objective_history.push_back(objective);

        size_t h = idx.objective_history.size();
        bool improved = h < 2 || idx.objective_history[h - 2] > objective;
        if (!improved || rebuilds >= max_iters) break;

        for (uint32_t i = 0; i < idx.k; ++i) groups[i] = BitSet(g.n);
        for (uint32_t v = 0; v < g.n; ++v) groups[idx.assignment[v]].set(v);
        for (uint32_t i = 0; i < idx.k; ++i)
            idx.trees[i] = build_tree(weights_from_tail_counts(g, conditional_pass(g, groups[i])));
        ++rebuilds;
    }
    return idx;
}

inline bool query_multitree(const MultiTreeIndex& idx, uint32_t u, uint32_t v) {
    const TreeCover& t = idx.trees[idx.assignment[u]];
    const std::vector<uint32_t>& list = idx.lists[u];
    uint32_t pv = t.interval[v].pre;
    auto it = std::upper_bound(list.begin(), list.end(), pv, [&](uint32_t key, uint32_t r) {
        return key < t.interval[r].pre;
    });
    if (it == list.begin()) return false;
    return t.interval[v].post <= t.interval[*std::prev(it)].post;
}

}  // namespace reachidx

#endif
