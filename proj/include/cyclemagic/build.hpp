#pragma once

#include <string>
#include <vector>

#include "cyclemagic/family.hpp"
#include "cyclemagic/graph.hpp"

namespace cyclemagic {

namespace detail {

// Antiprism vertex with the first coordinate wrapped modulo m, so that
// p[m+1][j][k] means p[1][j][k].
inline std::string apv(Int i, Int j, Int k, Int m) {
    return vid("p", {(i - 1) % m + 1, j, k});
}

inline void build_fan_copy(Graph& g, Int j, Int b) {
    for (Int i = 1; i <= b; ++i) g.add_edge(vid("c", {j}), vid("v", {i, j}));
    for (Int i = 1; i + 1 <= b; ++i) g.add_edge(vid("v", {i, j}), vid("v", {i + 1, j}));
}

inline void build_ladder_copy(Graph& g, const std::string& top, const std::string& bot, Int j,
                              Int b) {
    for (Int i = 1; i <= b; ++i) g.add_edge(vid(top, {i, j}), vid(bot, {i, j}));
    for (Int i = 1; i + 1 <= b; ++i) {
        g.add_edge(vid(top, {i, j}), vid(top, {i + 1, j}));
        g.add_edge(vid(bot, {i, j}), vid(bot, {i + 1, j}));
    }
}

// Structural minimums: the loosest parameters under which the family is a
// well-formed simple graph at all. The search front-end builds with these so
// it can explore instances outside the theorems' ranges (e.g. a single fan).
inline void validate_structural(const FamilySpec& spec) {
    auto need = [](bool ok, const char* p, const char* range) {
        if (!ok) throw ParameterOutOfRange(p, range);
    };
    switch (spec.family) {
        case Family::Fans:
            need(spec.m >= 1, "m", "m >= 1");
            need(spec.n >= 2, "n", "n >= 2");
            break;
        case Family::Ladders:
        case Family::TriangularLadders:
            need(spec.m >= 1, "m", "m >= 1");
            need(spec.n >= 2, "n", "n >= 2");
            break;
        case Family::Wheels:
            need(spec.m >= 1, "m", "m >= 1");
            need(spec.n >= 3, "n", "n >= 3");
            break;
        case Family::Books:
            need(spec.m >= 1, "m", "m >= 1");
            need(spec.n >= 1, "n", "n >= 1");
            break;
        case Family::Antiprism:
            need(spec.l >= 1, "l", "l >= 1");
            need(spec.m >= 3, "m", "m >= 3");
            need(spec.n >= 2, "n", "n >= 2");
            break;
        case Family::FanUnion:
            need(spec.s >= 1, "s", "s >= 1");
            need(spec.k >= 1, "k", "k >= 1");
            need(spec.n >= 3, "n", "n >= 3");
            break;
        case Family::LadderUnion:
            need(spec.s >= 1, "s", "s >= 1");
            need(spec.k >= 1, "k", "k >= 1");
            need(spec.n >= 3, "n", "n >= 3");
            break;
    }
}

inline Graph build_unchecked(const FamilySpec& spec) {
    Graph g;
    const Int m = spec.m, n = spec.n, s = spec.s, k = spec.k, l = spec.l;
    switch (spec.family) {
        case Family::Fans:
            for (Int j = 1; j <= m; ++j) build_fan_copy(g, j, n);
            break;
        case Family::Ladders:
            for (Int j = 1; j <= m; ++j) build_ladder_copy(g, "u", "v", j, n);
            break;
        case Family::TriangularLadders:
            for (Int j = 1; j <= m; ++j) {
                build_ladder_copy(g, "u", "v", j, n);
                for (Int i = 1; i + 1 <= n; ++i)
                    g.add_edge(vid("u", {i + 1, j}), vid("v", {i, j}));
            }
            break;
        case Family::Wheels:
            for (Int j = 1; j <= m; ++j) {
                build_fan_copy(g, j, n);
                g.add_edge(vid("v", {n, j}), vid("v", {1, j}));
            }
            break;
        case Family::Books:
            for (Int j = 1; j <= m; ++j) {
                g.add_edge(vid("u", {1, j}), vid("u", {2, j}));
                for (Int i = 1; i <= n; ++i) {
                    g.add_edge(vid("u", {1, j}), vid("w", {i, j}));
                    g.add_edge(vid("u", {2, j}), vid("v", {i, j}));
                    g.add_edge(vid("v", {i, j}), vid("w", {i, j}));
                }
            }
            break;
        case Family::Antiprism:
            for (Int c = 1; c <= l; ++c)
                for (Int i = 1; i <= m; ++i) {
                    for (Int j = 1; j + 1 <= n; ++j) {
                        g.add_edge(apv(i, j, c, m), apv(i, j + 1, c, m));
                        g.add_edge(apv(i, j + 1, c, m), apv(i + 1, j, c, m));
                    }
                    for (Int j = 1; j <= n; ++j)
                        g.add_edge(apv(i, j, c, m), apv(i + 1, j, c, m));
                }
            break;
        case Family::FanUnion:
            for (Int j = 1; j <= s + k; ++j) build_fan_copy(g, j, spec.union_path_length(j));
            break;
        case Family::LadderUnion:
            for (Int j = 1; j <= s; ++j) build_ladder_copy(g, "u", "v", j, n);
            for (Int t = 1; t <= k; ++t) build_ladder_copy(g, "a", "b", t, n - 1);
            break;
    }
    return g;
}

}  // namespace detail

// Builds the family's graph with exactly its defining vertex and edge sets.
inline Graph build_graph(const FamilySpec& spec) {
    spec.validate();
    return detail::build_unchecked(spec);
}

// Like build_graph but only requires the graph to be structurally well
// formed, not inside the theorem's parameter range.
inline Graph build_graph_structural(const FamilySpec& spec) {
    detail::validate_structural(spec);
    return detail::build_unchecked(spec);
}

// The designated cycle family each theorem sums over. Every edge of the
// family's graph lies in at least one of these cycles.
inline std::vector<Cycle> covering_cycles(const FamilySpec& spec) {
    spec.validate();
    std::vector<Cycle> out;
    const Int m = spec.m, n = spec.n, s = spec.s, k = spec.k, l = spec.l;
    auto fan_triangles = [&out](Int j, Int b) {
        for (Int i = 1; i + 1 <= b; ++i)
            out.emplace_back(
                std::vector<std::string>{vid("c", {j}), vid("v", {i, j}), vid("v", {i + 1, j})});
    };
    auto rung_squares = [&out](const std::string& top, const std::string& bot, Int j, Int b) {
        for (Int i = 1; i + 1 <= b; ++i)
            out.emplace_back(std::vector<std::string>{vid(top, {i, j}), vid(top, {i + 1, j}),
                                                      vid(bot, {i + 1, j}), vid(bot, {i, j})});
    };
    switch (spec.family) {
        case Family::Fans:
            for (Int j = 1; j <= m; ++j) fan_triangles(j, n);
            break;
        case Family::Ladders:
            for (Int j = 1; j <= m; ++j) rung_squares("u", "v", j, n);
            break;
        case Family::TriangularLadders:
            for (Int j = 1; j <= m; ++j)
                for (Int i = 1; i + 1 <= n; ++i) {
                    out.emplace_back(std::vector<std::string>{
                        vid("u", {i, j}), vid("u", {i + 1, j}), vid("v", {i, j})});
                    out.emplace_back(std::vector<std::string>{
                        vid("u", {i + 1, j}), vid("v", {i + 1, j}), vid("v", {i, j})});
                }
            break;
        case Family::Wheels:
            for (Int j = 1; j <= m; ++j) {
                fan_triangles(j, n);
                out.emplace_back(
                    std::vector<std::string>{vid("c", {j}), vid("v", {n, j}), vid("v", {1, j})});
            }
            break;
        case Family::Books:
            for (Int j = 1; j <= m; ++j)
                for (Int i = 1; i <= n; ++i)
                    out.emplace_back(std::vector<std::string>{vid("u", {1, j}), vid("u", {2, j}),
                                                              vid("v", {i, j}), vid("w", {i, j})});
            break;
        case Family::Antiprism:
            for (Int c = 1; c <= l; ++c)
                for (Int i = 1; i <= m; ++i)
                    for (Int j = 1; j + 1 <= n; ++j) {
                        using detail::apv;
                        out.emplace_back(std::vector<std::string>{
                            apv(i, j, c, m), apv(i + 1, j, c, m), apv(i, j + 1, c, m)});
                        out.emplace_back(std::vector<std::string>{
                            apv(i, j + 1, c, m), apv(i + 1, j + 1, c, m), apv(i + 1, j, c, m)});
                    }
            break;
        case Family::FanUnion:
            for (Int j = 1; j <= s + k; ++j) fan_triangles(j, spec.union_path_length(j));
            break;
        case Family::LadderUnion:
            for (Int j = 1; j <= s; ++j) rung_squares("u", "v", j, n);
            for (Int t = 1; t <= k; ++t) rung_squares("a", "b", t, n - 1);
            break;
    }
    return out;
}

}  // namespace cyclemagic
