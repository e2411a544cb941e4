#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "cyclemagic/graph.hpp"
#include "cyclemagic/labeling.hpp"

using namespace cyclemagic;

namespace {

Graph path_graph(Int n) { return path_forest(1, n); }

Graph cycle_graph(Int n) {
    Graph g = path_forest(1, n);
    g.add_edge(vid("v", {n, 1}), vid("v", {1, 1}));
    return g;
}

bool sums_consecutive(const Graph& g, const std::map<std::string, Int>& labels) {
    std::vector<Int> sums;
    for (const Edge& e : g.edges()) sums.push_back(labels.at(e.first) + labels.at(e.second));
    std::sort(sums.begin(), sums.end());
    for (std::size_t i = 0; i + 1 < sums.size(); ++i)
        if (sums[i + 1] != sums[i] + 1) return false;
    return !sums.empty();
}

// Odd positions first, then even: a vertex labeling of P_n (or, for odd n,
// C_n) whose edge sums are consecutive.
std::map<std::string, Int> zigzag_labels(Int n) {
    std::map<std::string, Int> labels;
    for (Int i = 1; i <= n; ++i)
        labels[vid("v", {i, 1})] = i % 2 == 1 ? (i + 1) / 2 : (n + 1) / 2 + i / 2;
    return labels;
}

}  // namespace

TEST_CASE("sem_extend on the pinned examples") {
    const Graph p3 = path_graph(3);

    std::map<std::string, Int> labels{{vid("v", {1, 1}), 1},
                                      {vid("v", {2, 1}), 3},
                                      {vid("v", {3, 1}), 2}};
    const TotalLabeling lab = sem_extend(PartialVertexLabeling::of(p3, labels), p3);
    CHECK(lab.edge(vid("v", {1, 1}), vid("v", {2, 1})) == 5);
    CHECK(lab.edge(vid("v", {2, 1}), vid("v", {3, 1})) == 4);
    for (const Edge& e : p3.edges())
        CHECK(lab.vertex(e.first) + lab.vertex(e.second) + lab.edge(e) == 9);

    const Graph p2 = path_graph(2);
    std::map<std::string, Int> two{{vid("v", {1, 1}), 1}, {vid("v", {2, 1}), 2}};
    const TotalLabeling lab2 = sem_extend(PartialVertexLabeling::of(p2, two), p2);
    CHECK(lab2.edge(vid("v", {1, 1}), vid("v", {2, 1})) == 3);

    std::map<std::string, Int> gap{{vid("v", {1, 1}), 1},
                                   {vid("v", {2, 1}), 2},
                                   {vid("v", {3, 1}), 3}};
    CHECK_THROWS_AS(sem_extend(PartialVertexLabeling::of(p3, gap), p3), NotConsecutive);
}

TEST_CASE("sem_extend property over random consecutive-sum labelings") {
    std::mt19937 rng(20240811);
    int accepted = 0, rejected_checked = 0;
    while (accepted < 100) {
        const Int n = 2 + static_cast<Int>(rng() % 7);  // 2..8
        const bool use_cycle = n >= 3 && n % 2 == 1 && rng() % 2 == 0;
        const Graph g = use_cycle ? cycle_graph(n) : path_graph(n);

        std::vector<Int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        std::map<std::string, Int> labels;
        bool ok = false;
        for (int tries = 0; tries < 400 && !ok; ++tries) {
            std::shuffle(perm.begin(), perm.end(), rng);
            for (Int i = 1; i <= n; ++i) labels[vid("v", {i, 1})] = perm[i - 1];
            ok = sums_consecutive(g, labels);
            if (!ok && rejected_checked < 100) {
                ++rejected_checked;
                CHECK_THROWS_AS(sem_extend(PartialVertexLabeling::of(g, labels), g),
                                NotConsecutive);
            }
        }
        if (!ok) {
            labels = zigzag_labels(n);  // guaranteed consecutive fallback
            REQUIRE(sums_consecutive(g, labels));
        }

        const PartialVertexLabeling part = PartialVertexLabeling::of(g, labels);
        const TotalLabeling lab = sem_extend(part, g);
        const Int v = g.vertex_count();
        const Int e = g.edge_count();
        const Int c = v + e + part.edge_sums.front();
        for (const Edge& ed : g.edges())
            CHECK(lab.vertex(ed.first) + lab.vertex(ed.second) + lab.edge(ed) == c);
        std::vector<Int> edge_labels;
        for (const auto& [ed, x] : lab.edge_labels) edge_labels.push_back(x);
        std::sort(edge_labels.begin(), edge_labels.end());
        for (Int i = 0; i < e; ++i) CHECK(edge_labels[i] == v + 1 + i);
        ++accepted;
    }
    CHECK(rejected_checked == 100);
}

TEST_CASE("eav_path_forest pinned examples") {
    const PartialVertexLabeling p22 = eav_path_forest(2, 2);
    CHECK(p22.edge_sums == std::vector<Int>{4, 6});
    CHECK(p22.vertex_labels.at(vid("v", {1, 1})) == 1);
    CHECK(p22.vertex_labels.at(vid("v", {2, 1})) == 3);
    CHECK(p22.vertex_labels.at(vid("v", {1, 2})) == 2);
    CHECK(p22.vertex_labels.at(vid("v", {2, 2})) == 4);

    CHECK(eav_path_forest(2, 3).edge_sums == std::vector<Int>{4, 6, 8, 10});
    CHECK_THROWS_AS(eav_path_forest(1, 2), ParameterOutOfRange);
    CHECK_THROWS_AS(eav_path_forest(2, 1), ParameterOutOfRange);
}

TEST_CASE("eav_path_forest is minimal by exhaustive search at (2,2)") {
    // Independent oracle: over all 4! labelings of 2P_2, an edge-sum pair
    // forming an AP with difference 2 starts no lower than m+2 = 4.
    std::vector<Int> perm{1, 2, 3, 4};
    std::sort(perm.begin(), perm.end());
    Int best_start = 1 << 20;
    do {
        const Int s1 = perm[0] + perm[1];  // path 1: vertices 1,2
        const Int s2 = perm[2] + perm[3];  // path 2: vertices 3,4
        const Int lo = std::min(s1, s2);
        const Int hi = std::max(s1, s2);
        if (hi - lo == 2) best_start = std::min(best_start, lo);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(best_start == 4);
}

TEST_CASE("eav_path_forest sums form the (m+2,2) progression on the grid") {
    for (Int m = 2; m <= 5; ++m)
        for (Int n = 2; n <= 8; ++n) {
            const PartialVertexLabeling p = eav_path_forest(m, n);
            const Int count = m * (n - 1);
            REQUIRE(static_cast<Int>(p.edge_sums.size()) == count);
            for (Int i = 0; i < count; ++i) {
                INFO("m=" << m << " n=" << n << " i=" << i);
                CHECK(p.edge_sums[i] == m + 2 + 2 * i);
            }
            // bijective onto {1..mn}
            std::vector<Int> labels;
            for (const auto& [v, x] : p.vertex_labels) labels.push_back(x);
            std::sort(labels.begin(), labels.end());
            for (Int i = 0; i < m * n; ++i) REQUIRE(labels[i] == i + 1);
        }
}

TEST_CASE("sem_extend over eav output needs no gap") {
    // Theorem-1 sums have difference 2, not 1, so Lemma 1 does not apply
    // directly; sem_extend must reject them.
    const Graph g = path_forest(2, 3);
    const PartialVertexLabeling p = eav_path_forest(2, 3);
    CHECK_THROWS_AS(sem_extend(p, g), NotConsecutive);
}
