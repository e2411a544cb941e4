#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclemagic/graph.hpp"

namespace cyclemagic {

// A total labeling: bijection from V u E onto {1..v+e}, vertex labels first
// ({1..v}) when the super property holds. Construction does not enforce the
// bijection; the verifier checks it.
struct TotalLabeling {
    std::map<std::string, Int> vertex_labels;
    std::map<Edge, Int> edge_labels;

    Int vertex(const std::string& v) const { return vertex_labels.at(v); }
    Int edge(const std::string& a, const std::string& b) const {
        return edge_labels.at(make_edge(a, b));
    }
    Int edge(const Edge& e) const { return edge_labels.at(e); }

    void set_vertex(const std::string& v, Int label) { vertex_labels[v] = label; }
    void set_edge(const std::string& a, const std::string& b, Int label) {
        edge_labels[make_edge(a, b)] = label;
    }

    std::vector<Int> all_labels() const {
        std::vector<Int> out;
        out.reserve(vertex_labels.size() + edge_labels.size());
        for (const auto& [v, lab] : vertex_labels) out.push_back(lab);
        for (const auto& [e, lab] : edge_labels) out.push_back(lab);
        return out;
    }

    bool operator==(const TotalLabeling& o) const {
        return vertex_labels == o.vertex_labels && edge_labels == o.edge_labels;
    }
};

// A bijective vertex labeling onto {1..v} together with its multiset of edge
// endpoint sums S = {lab(x)+lab(y) : xy in E}.
struct PartialVertexLabeling {
    std::map<std::string, Int> vertex_labels;
    std::vector<Int> edge_sums;  // sorted

    static PartialVertexLabeling of(const Graph& g, std::map<std::string, Int> labels) {
        PartialVertexLabeling p;
        p.vertex_labels = std::move(labels);
        for (const Edge& e : g.edges())
            p.edge_sums.push_back(p.vertex_labels.at(e.first) + p.vertex_labels.at(e.second));
        std::sort(p.edge_sums.begin(), p.edge_sums.end());
        return p;
    }
};

class NotConsecutive : public std::runtime_error {
public:
    explicit NotConsecutive(const std::vector<Int>& sums)
        : std::runtime_error("edge sums are not e consecutive integers: " + fmt(sums)) {}

private:
    static std::string fmt(const std::vector<Int>& sums) {
        std::string s = "{";
        for (std::size_t i = 0; i < sums.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(sums[i]);
        }
        return s + "}";
    }
};

// Extends a vertex labeling whose edge sums are e consecutive integers to a
// total labeling with every edge triple lab(x)+lab(y)+lab(xy) = v+e+min(S).
// Edge labels come out as exactly {v+1..v+e}.
inline TotalLabeling sem_extend(const PartialVertexLabeling& p, const Graph& g) {
    const Int v = g.vertex_count();
    const Int e = g.edge_count();
    std::vector<Int> sums;
    for (const Edge& ed : g.edges())
        sums.push_back(p.vertex_labels.at(ed.first) + p.vertex_labels.at(ed.second));
    std::sort(sums.begin(), sums.end());
    for (std::size_t i = 0; i + 1 < sums.size(); ++i)
        if (sums[i + 1] != sums[i] + 1) throw NotConsecutive(sums);
    if (sums.empty()) throw NotConsecutive(sums);

    const Int c = v + e + sums.front();
    TotalLabeling lab;
    lab.vertex_labels = p.vertex_labels;
    for (const Edge& ed : g.edges())
        lab.edge_labels[ed] = c - p.vertex_labels.at(ed.first) - p.vertex_labels.at(ed.second);
    return lab;
}

// The path forest mP_n: m disjoint paths v[1][j]..v[n][j].
inline Graph path_forest(Int m, Int n) {
    Graph g;
    for (Int j = 1; j <= m; ++j) {
        g.add_vertex(vid("v", {1, j}));
        for (Int i = 1; i + 1 <= n; ++i) g.add_edge(vid("v", {i, j}), vid("v", {i + 1, j}));
    }
    return g;
}

// (m+2,2)-edge-antimagic vertex labeling of mP_n: column-major consecutive
// numbering makes the edge sums the arithmetic sequence m+2, m+4, ...,
// m+2m(n-1).
inline PartialVertexLabeling eav_path_forest(Int m, Int n) {
    if (m < 2) throw ParameterOutOfRange("m", "m >= 2");
    if (n < 2) throw ParameterOutOfRange("n", "n >= 2");
    std::map<std::string, Int> labels;
    for (Int j = 1; j <= m; ++j)
        for (Int i = 1; i <= n; ++i) labels[vid("v", {i, j})] = j + m * (i - 1);
    return PartialVertexLabeling::of(path_forest(m, n), std::move(labels));
}

}  // namespace cyclemagic
