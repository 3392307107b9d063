#ifndef REACHIDX_EDGE_LIST_HPP
#define REACHIDX_EDGE_LIST_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reachidx {

using Edge = std::pair<uint32_t, uint32_t>;

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, size_t line)
        : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}
    size_t line() const { return line_; }

private:
    size_t line_;
};

// Normalized directed edge list: ids in [0, num_vertices), edges sorted,
// no duplicates, no self-loops.
struct EdgeList {
    uint32_t num_vertices = 0;
    std::vector<Edge> edges;
    uint32_t self_loops_removed = 0;
    uint32_t duplicates_removed = 0;

    void normalize() {
        size_t kept = 0;
        uint32_t loops = 0;
        for (const Edge& e : edges) {
            if (e.first == e.second) {
                ++loops;
            } else {
                edges[kept++] = e;
            }
        }
        edges.resize(kept);
        std::sort(edges.begin(), edges.end());
        size_t before = edges.size();
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        self_loops_removed += loops;
        duplicates_removed += static_cast<uint32_t>(before - edges.size());
    }
};

namespace detail {

inline bool parse_two_u32(const std::string& line, uint32_t& a, uint32_t& b) {
    const char* s = line.c_str();
    char* end = nullptr;
    unsigned long x = std::strtoul(s, &end, 10);
    if (end == s || *end != ' ') return false;
    s = end + 1;
    unsigned long y = std::strtoul(s, &end, 10);
    if (end == s) return false;
    while (*end == ' ' || *end == '\r') ++end;
    if (*end != '\0') return false;
    if (x > UINT32_MAX || y > UINT32_MAX) return false;
    a = static_cast<uint32_t>(x);
    b = static_cast<uint32_t>(y);
    return true;
}

}  // namespace detail

// Text format: lines "u v" with 0-based decimal ids, '#' starts a comment
// line, and an optional leading "N M" counts line. The counts line is
// recognized when M equals the number of edge lines that follow (files
// written by this tool always carry it).
inline EdgeList parse_edge_list(std::istream& in) {
    struct Row {
        uint32_t a, b;
        size_t line;
    };
    std::vector<Row> rows;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        uint32_t a, b;
        if (!detail::parse_two_u32(line.substr(start), a, b))
            throw parse_error("malformed line", lineno);
        rows.push_back({a, b, lineno});
    }

    EdgeList out;
    size_t first_edge = 0;
    if (!rows.empty() && rows[0].b == rows.size() - 1 && (rows[0].a > 0 || rows.size() == 1)) {
        out.num_vertices = rows[0].a;
        first_edge = 1;
    } else {
        uint32_t max_id = 0;
        for (const Row& r : rows) max_id = std::max({max_id, r.a, r.b});
        out.num_vertices = rows.empty() ? 0 : max_id + 1;
    }

    out.edges.reserve(rows.size() - first_edge);
    for (size_t i = first_edge; i < rows.size(); ++i) {
        if (rows[i].a >= out.num_vertices || rows[i].b >= out.num_vertices)
            throw parse_error("id out of range", rows[i].line);
        out.edges.emplace_back(rows[i].a, rows[i].b);
    }
    out.normalize();
    return out;
}

inline EdgeList parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline void write_edge_list(std::ostream& out, uint32_t n, const std::vector<Edge>& edges) {
    out << n << ' ' << edges.size() << '\n';
    for (const Edge& e : edges) out << e.first << ' ' << e.second << '\n';
}

}  // namespace reachidx

#endif
