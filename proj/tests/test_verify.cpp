#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "cyclemagic/build.hpp"
#include "cyclemagic/labelers.hpp"
#include "cyclemagic/verify.hpp"

using namespace cyclemagic;

namespace {

Graph triangle() {
    Graph g;
    g.add_edge("x[1]", "x[2]");
    g.add_edge("x[2]", "x[3]");
    g.add_edge("x[1]", "x[3]");
    return g;
}

}  // namespace

TEST_CASE("verify accepts the ladder construction") {
    const FamilySpec sp = FamilySpec::ladders(2, 2);
    const VerificationReport rep = verify_spec(sp, label_ladders(2, 2), VerifyMode::Covering);
    CHECK(rep.valid());
    CHECK(rep.magic_constant == 68);
    CHECK(rep.first_violation.empty());
    CHECK(rep.weights.size() == 2);
}

TEST_CASE("any arrangement labels K_3 with constant 21") {
    const Graph g = triangle();
    std::vector<Int> vperm{1, 2, 3}, eperm{4, 5, 6};
    do {
        do {
            TotalLabeling lab;
            lab.set_vertex("x[1]", vperm[0]);
            lab.set_vertex("x[2]", vperm[1]);
            lab.set_vertex("x[3]", vperm[2]);
            lab.set_edge("x[1]", "x[2]", eperm[0]);
            lab.set_edge("x[2]", "x[3]", eperm[1]);
            lab.set_edge("x[1]", "x[3]", eperm[2]);
            const VerificationReport rep = verify(g, lab, 3, VerifyMode::Strict);
            CHECK(rep.valid());
            CHECK(rep.magic_constant == 21);
        } while (std::next_permutation(eperm.begin(), eperm.end()));
    } while (std::next_permutation(vperm.begin(), vperm.end()));
}

TEST_CASE("a vertex swap breaks exactly two square weights") {
    const FamilySpec sp = FamilySpec::ladders(2, 2);
    TotalLabeling lab = label_ladders(2, 2);
    std::swap(lab.vertex_labels.at(vid("u", {1, 1})), lab.vertex_labels.at(vid("u", {1, 2})));
    const VerificationReport rep = verify_spec(sp, lab, VerifyMode::Covering);
    CHECK_FALSE(rep.valid());
    CHECK(rep.bijective);
    CHECK(rep.super);
    CHECK(rep.covering_ok);
    CHECK_FALSE(rep.magic_constant.has_value());
    REQUIRE(rep.weights.size() == 2);
    const Int w1 = rep.weights[0].second, w2 = rep.weights[1].second;
    CHECK(w1 != w2);
    CHECK(w1 + w2 == 2 * 68);  // shifted by +-1
    CHECK_FALSE(rep.first_violation.empty());
}

TEST_CASE("verify reports domain mismatches") {
    const Graph g = triangle();
    TotalLabeling lab;
    lab.set_vertex("x[1]", 1);
    lab.set_vertex("x[2]", 2);
    lab.set_vertex("x[9]", 3);  // unknown vertex
    lab.set_edge("x[1]", "x[2]", 4);
    lab.set_edge("x[2]", "x[3]", 5);
    lab.set_edge("x[1]", "x[3]", 6);
    CHECK_THROWS_AS(verify(g, lab, 3, VerifyMode::Strict), DomainMismatch);

    TotalLabeling missing;
    missing.set_vertex("x[1]", 1);
    CHECK_THROWS_AS(verify(g, missing, 3, VerifyMode::Strict), DomainMismatch);
}

TEST_CASE("verify is independent of label insertion order") {
    const FamilySpec sp = FamilySpec::fans(2, 3);
    const TotalLabeling lab = label_fans(2, 3);
    // rebuild the maps in reverse insertion order; std::map normalizes, so
    // the reports must be identical
    TotalLabeling reversed;
    for (auto it = lab.vertex_labels.rbegin(); it != lab.vertex_labels.rend(); ++it)
        reversed.vertex_labels.insert(*it);
    for (auto it = lab.edge_labels.rbegin(); it != lab.edge_labels.rend(); ++it)
        reversed.edge_labels.insert(*it);
    const VerificationReport a = verify_spec(sp, lab, VerifyMode::Covering);
    const VerificationReport b = verify_spec(sp, reversed, VerifyMode::Covering);
    CHECK(a.valid() == b.valid());
    CHECK(a.magic_constant == b.magic_constant);
    CHECK(a.weights == b.weights);
}

TEST_CASE("random transpositions never fool the verifier") {
    const FamilySpec sp = FamilySpec::fans(2, 4);
    const Graph g = build_graph(sp);
    const auto designated = covering_cycles(sp);
    std::mt19937 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        TotalLabeling lab = label_family(sp);
        // transpose two random vertex labels or two random edge labels, so
        // bijectivity and the super split survive
        if (rng() % 2 == 0) {
            auto a = std::next(lab.vertex_labels.begin(), rng() % lab.vertex_labels.size());
            auto b = std::next(lab.vertex_labels.begin(), rng() % lab.vertex_labels.size());
            std::swap(a->second, b->second);
        } else {
            auto a = std::next(lab.edge_labels.begin(), rng() % lab.edge_labels.size());
            auto b = std::next(lab.edge_labels.begin(), rng() % lab.edge_labels.size());
            std::swap(a->second, b->second);
        }
        const VerificationReport rep = verify(g, lab, 3, VerifyMode::Covering, designated);
        // soundness: a report claiming validity must really have equal weights
        if (rep.valid()) {
            std::set<Int> weights;
            for (const Cycle& c : designated) weights.insert(cycle_weight(c, lab));
            CHECK(weights.size() == 1);
            CHECK(*weights.begin() == *rep.magic_constant);
        } else {
            CHECK_FALSE(rep.first_violation.empty());
        }
    }
}

TEST_CASE("strict and covering agree where the designated cycles are all cycles") {
    std::vector<FamilySpec> agree = {
        FamilySpec::fans(2, 3),       FamilySpec::fans(3, 5),
        FamilySpec::ladders(2, 2),    FamilySpec::ladders(3, 4),
        FamilySpec::triangular_ladders(2, 4), FamilySpec::books(2, 3),
        FamilySpec::wheels(2, 4),     FamilySpec::wheels(2, 5),
        FamilySpec::antiprism(2, 4, 3),
    };
    for (const FamilySpec& sp : agree) {
        INFO(family_name(sp.family) << " n=" << sp.n << " m=" << sp.m);
        const TotalLabeling lab = label_family(sp);
        const VerificationReport cov = verify_spec(sp, lab, VerifyMode::Covering);
        const VerificationReport strict = verify_spec(sp, lab, VerifyMode::Strict);
        CHECK(cov.valid());
        CHECK(strict.valid());
        CHECK(cov.magic_constant == strict.magic_constant);
        // the cycle sets themselves coincide
        auto designated = covering_cycles(sp);
        std::sort(designated.begin(), designated.end());
        const auto all = enumerate_cycles(build_graph(sp), sp.cycle_length());
        CHECK(designated == all);
    }
}

TEST_CASE("strict mode flags the exceptional families without contradicting them") {
    for (const FamilySpec& sp :
         {FamilySpec::wheels(2, 3), FamilySpec::antiprism(2, 3, 3)}) {
        const TotalLabeling lab = label_family(sp);
        CHECK(verify_spec(sp, lab, VerifyMode::Covering).valid());
        const VerificationReport strict = verify_spec(sp, lab, VerifyMode::Strict);
        CHECK_FALSE(strict.valid());
        CHECK(strict.designated_only_claim);
    }
}

TEST_CASE("predicted constants, pinned") {
    CHECK(predicted_constant(FamilySpec::fans(2, 3)) == 57);
    CHECK(predicted_constant(FamilySpec::wheels(2, 6)) == 99);
    CHECK(predicted_constant(FamilySpec::antiprism(2, 3, 3)) == 141);
    CHECK(predicted_constant(FamilySpec::ladders(2, 2)) == 68);
    CHECK(predicted_constant(FamilySpec::books(2, 2)) == 98);
    CHECK(predicted_constant(FamilySpec::fan_union(1, 1, 3)) == 48);
    CHECK(predicted_constant(FamilySpec::ladder_union(1, 1, 3)) == 85);
    CHECK_THROWS_AS(predicted_constant(FamilySpec::fans(1, 3)), ParameterOutOfRange);
}

TEST_CASE("labeler constants equal predictions across a verification grid") {
    std::vector<FamilySpec> grid;
    for (Int m = 2; m <= 4; ++m)
        for (Int n = 3; n <= 9; ++n) {
            grid.push_back(FamilySpec::fans(m, n));
            grid.push_back(FamilySpec::wheels(m, n));
            grid.push_back(FamilySpec::books(m, n));
        }
    for (const FamilySpec& sp : grid) {
        INFO(family_name(sp.family) << " m=" << sp.m << " n=" << sp.n);
        const VerificationReport rep = verify_spec(sp, label_family(sp), VerifyMode::Covering);
        REQUIRE(rep.valid());
        CHECK(rep.magic_constant == predicted_constant(sp));
    }
}
