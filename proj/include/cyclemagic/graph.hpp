#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclemagic/family.hpp"

namespace cyclemagic {

// Unordered edge stored with endpoints in lexicographic order.
using Edge = std::pair<std::string, std::string>;

inline Edge make_edge(std::string a, std::string b) {
    if (a == b) throw std::invalid_argument("self-loop " + a);
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

// Canonical vertex identifiers matching the subscript notation of the source
// families: c[j], v[i][j], u[i][j], w[i][j], a[i][t], b[i][t], p[i][j][k].
inline std::string vid(const std::string& base, std::initializer_list<Int> idx) {
    std::string s = base;
    for (Int i : idx) s += "[" + std::to_string(i) + "]";
    return s;
}

// Simple undirected graph over string vertex ids. No self-loops or
// multi-edges; adjacency lists kept sorted.
class Graph {
public:
    void add_vertex(const std::string& v) {
        if (adjacency_.emplace(v, std::vector<std::string>{}).second) vertices_.push_back(v);
    }

    void add_edge(const std::string& a, const std::string& b) {
        Edge e = make_edge(a, b);
        if (!edges_.insert(e).second) return;
        add_vertex(a);
        add_vertex(b);
        insert_sorted(adjacency_[a], b);
        insert_sorted(adjacency_[b], a);
    }

    bool has_vertex(const std::string& v) const { return adjacency_.count(v) != 0; }
    bool has_edge(const std::string& a, const std::string& b) const {
        return edges_.count(make_edge(a, b)) != 0;
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::set<Edge>& edges() const { return edges_; }

    const std::vector<std::string>& neighbors(const std::string& v) const {
        auto it = adjacency_.find(v);
        if (it == adjacency_.end()) throw std::out_of_range("no such vertex: " + v);
        return it->second;
    }

    Int vertex_count() const { return static_cast<Int>(vertices_.size()); }
    Int edge_count() const { return static_cast<Int>(edges_.size()); }

    // Vertices in insertion order (construction order of the family), which
    // tests and serialization sort as needed.
    std::vector<std::string> sorted_vertices() const {
        std::vector<std::string> vs = vertices_;
        std::sort(vs.begin(), vs.end());
        return vs;
    }

private:
    static void insert_sorted(std::vector<std::string>& vec, const std::string& x) {
        vec.insert(std::upper_bound(vec.begin(), vec.end(), x), x);
    }

    std::vector<std::string> vertices_;
    std::set<Edge> edges_;
    std::map<std::string, std::vector<std::string>> adjacency_;
};

// An ordered closed walk of distinct vertices. Canonical form: starts at the
// lexicographically least vertex, and the second vertex is the lesser of the
// first vertex's two cycle neighbors.
class Cycle {
public:
    Cycle() = default;

    explicit Cycle(std::vector<std::string> verts) : vertices_(std::move(verts)) {
        canonicalize();
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    Int length() const { return static_cast<Int>(vertices_.size()); }

    std::vector<Edge> edges() const {
        std::vector<Edge> es;
        es.reserve(vertices_.size());
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            es.push_back(make_edge(vertices_[i], vertices_[(i + 1) % vertices_.size()]));
        return es;
    }

    bool operator==(const Cycle& o) const { return vertices_ == o.vertices_; }
    bool operator<(const Cycle& o) const { return vertices_ < o.vertices_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i) s += " ";
            s += vertices_[i];
        }
        return s + ")";
    }

private:
    void canonicalize() {
        if (vertices_.size() < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
        {
            std::set<std::string> uniq(vertices_.begin(), vertices_.end());
            if (uniq.size() != vertices_.size())
                throw std::invalid_argument("cycle vertices not distinct");
        }
        auto least = std::min_element(vertices_.begin(), vertices_.end());
        std::rotate(vertices_.begin(), least, vertices_.end());
        if (vertices_.back() < vertices_[1])
            std::reverse(vertices_.begin() + 1, vertices_.end());
    }

    std::vector<std::string> vertices_;
};

}  // namespace cyclemagic
