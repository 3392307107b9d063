#ifndef REACHIDX_HOP_LABELS_HPP
#define REACHIDX_HOP_LABELS_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace reachidx {

// Per-vertex sorted hop lists. u reaches v iff L_out(u) and L_in(v) share
// a hop; the shared output type of both labeling algorithms.
struct HopLabeling {
    std::vector<std::vector<uint32_t>> l_out;
    std::vector<std::vector<uint32_t>> l_in;

    uint64_t total_entries() const {
        uint64_t t = 0;
        for (const auto& l : l_out) t += l.size();
        for (const auto& l : l_in) t += l.size();
        return t;
    }
    bool operator==(const HopLabeling&) const = default;
};

// Sorted-merge intersection test with early exit on the first common hop.
inline bool query_hop(const HopLabeling& labels, uint32_t u, uint32_t v) {
    const std::vector<uint32_t>& a = labels.l_out[u];
    const std::vector<uint32_t>& b = labels.l_in[v];
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

namespace detail {

inline void sort_unique(std::vector<uint32_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

}  // namespace reachidx

#endif
