#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclemagic/graph.hpp"

namespace cyclemagic {

class UnsupportedLength : public std::invalid_argument {
public:
    explicit UnsupportedLength(Int len)
        : std::invalid_argument("unsupported cycle length " + std::to_string(len) +
                                " (only 3 and 4)") {}
};

class ForeignCycle : public std::invalid_argument {
public:
    explicit ForeignCycle(const Edge& e)
        : std::invalid_argument("cycle uses non-edge {" + e.first + ", " + e.second + "}") {}
};

namespace detail {

inline std::vector<std::string> common_neighbors(const Graph& g, const std::string& a,
                                                 const std::string& b) {
    const auto& na = g.neighbors(a);
    const auto& nb = g.neighbors(b);
    std::vector<std::string> out;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
    return out;
}

}  // namespace detail

// All triangles, one canonical copy each, found by intersecting the sorted
// adjacency lists of each edge's endpoints.
inline std::vector<Cycle> enumerate_triangles(const Graph& g) {
    std::vector<Cycle> out;
    for (const Edge& e : g.edges())
        for (const std::string& w : detail::common_neighbors(g, e.first, e.second))
            if (w > e.second) out.emplace_back(std::vector<std::string>{e.first, e.second, w});
    std::sort(out.begin(), out.end());
    return out;
}

// All 4-cycles: for every vertex pair, each 2-subset of their common
// neighborhood closes a 4-cycle through the pair. A 4-cycle is any closed
// walk on 4 distinct vertices; with include_chorded=false, cycles whose
// diagonal pairs are adjacent are dropped.
inline std::vector<Cycle> enumerate_quadrilaterals(const Graph& g, bool include_chorded = true) {
    std::set<Cycle> found;
    const auto vs = g.sorted_vertices();
    for (std::size_t x = 0; x < vs.size(); ++x)
        for (std::size_t y = x + 1; y < vs.size(); ++y) {
            auto common = detail::common_neighbors(g, vs[x], vs[y]);
            for (std::size_t p = 0; p < common.size(); ++p)
                for (std::size_t q = p + 1; q < common.size(); ++q) {
                    if (!include_chorded &&
                        (g.has_edge(vs[x], vs[y]) || g.has_edge(common[p], common[q])))
                        continue;
                    found.emplace(
                        std::vector<std::string>{vs[x], common[p], vs[y], common[q]});
                }
        }
    return {found.begin(), found.end()};
}

inline std::vector<Cycle> enumerate_cycles(const Graph& g, Int length,
                                           bool include_chorded = true) {
    if (length == 3) return enumerate_triangles(g);
    if (length == 4) return enumerate_quadrilaterals(g, include_chorded);
    throw UnsupportedLength(length);
}

struct CoveringCheck {
    bool ok = false;
    std::vector<Edge> uncovered;
};

// True iff the union of the cycles' edge sets equals E(g); the uncovered
// edges come back alongside the flag.
inline CoveringCheck check_covering(const Graph& g, const std::vector<Cycle>& cycles) {
    std::set<Edge> covered;
    for (const Cycle& c : cycles)
        for (const Edge& e : c.edges()) {
            if (!g.has_edge(e.first, e.second)) throw ForeignCycle(e);
            covered.insert(e);
        }
    CoveringCheck result;
    for (const Edge& e : g.edges())
        if (!covered.count(e)) result.uncovered.push_back(e);
    result.ok = result.uncovered.empty();
    return result;
}

}  // namespace cyclemagic
