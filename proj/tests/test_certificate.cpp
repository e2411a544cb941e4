#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>

#include "cyclemagic/certificate.hpp"
#include "cyclemagic/dot.hpp"
#include "cyclemagic/labelers.hpp"

using namespace cyclemagic;

namespace {

Certificate sample_certificate(const FamilySpec& sp) {
    const TotalLabeling lab = label_family(sp);
    const VerificationReport rep = verify_spec(sp, lab, VerifyMode::Covering);
    Certificate cert;
    cert.family = family_name(sp.family);
    cert.params = sp.params();
    cert.cycle_length = sp.cycle_length();
    cert.mode = mode_name(rep.mode);
    cert.labeling = lab;
    cert.magic_constant = rep.magic_constant;
    cert.valid = rep.valid();
    cert.tool_version = std::string(kToolName) + " " + kVersion;
    cert.typo_corrections = corrections_applied(sp);
    return cert;
}

}  // namespace

TEST_CASE("certificates round-trip losslessly") {
    for (const FamilySpec& sp : {FamilySpec::fans(2, 3), FamilySpec::antiprism(2, 3, 3),
                                 FamilySpec::ladder_union(2, 1, 3)}) {
        const Certificate cert = sample_certificate(sp);
        const std::string text = emit_certificate(cert);
        const Certificate back = parse_certificate(text);
        CHECK(back == cert);
        CHECK(emit_certificate(back) == text);  // byte-stable
    }
}

TEST_CASE("emission is byte-stable across construction order") {
    const Certificate a = sample_certificate(FamilySpec::fans(2, 4));
    const Certificate b = sample_certificate(FamilySpec::fans(2, 4));
    CHECK(emit_certificate(a) == emit_certificate(b));
    // single line, sorted keys
    const std::string text = emit_certificate(a);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1);
    CHECK(text.find("\"cycle_length\"") < text.find("\"edge_labels\""));
    CHECK(text.find("\"edge_labels\"") < text.find("\"family\""));
}

TEST_CASE("a valid certificate re-verifies from file alone") {
    const Certificate cert = sample_certificate(FamilySpec::fans(2, 3));
    const std::string path = "cert_roundtrip_test.json";
    write_certificate(cert, path);
    const Certificate loaded = read_certificate(path);
    std::remove(path.c_str());
    CHECK(loaded == cert);
    const VerificationReport rep = verify_certificate(loaded, VerifyMode::Covering);
    CHECK(rep.valid());
    CHECK(rep.magic_constant == 57);
}

TEST_CASE("a transposed label invalidates the certificate") {
    Certificate cert = sample_certificate(FamilySpec::fans(2, 3));
    auto first = cert.labeling.edge_labels.begin();
    auto second = std::next(first);
    std::swap(first->second, second->second);
    const Certificate back = parse_certificate(emit_certificate(cert));
    const VerificationReport rep = verify_certificate(back, VerifyMode::Covering);
    CHECK_FALSE(rep.valid());
    CHECK(rep.first_violation.find("cycle") != std::string::npos);
}

TEST_CASE("strict re-verification marks the designated-only families") {
    const Certificate cert = sample_certificate(FamilySpec::wheels(2, 3));
    const VerificationReport strict = verify_certificate(cert, VerifyMode::Strict);
    CHECK_FALSE(strict.valid());
    CHECK(strict.designated_only_claim);
    CHECK(verify_certificate(cert, VerifyMode::Covering).valid());
}

TEST_CASE("malformed certificates throw CertificateError") {
    CHECK_THROWS_AS(parse_certificate("not json"), CertificateError);
    CHECK_THROWS_AS(parse_certificate("{\"family\":\"fans\"}"), CertificateError);
    CHECK_THROWS_AS(read_certificate("no_such_file.json"), CertificateError);
}

TEST_CASE("custom certificates rebuild their graph from the labels") {
    Graph g;
    g.add_edge("x[1]", "x[2]");
    g.add_edge("x[2]", "x[3]");
    g.add_edge("x[1]", "x[3]");
    TotalLabeling lab;
    lab.set_vertex("x[1]", 1);
    lab.set_vertex("x[2]", 2);
    lab.set_vertex("x[3]", 3);
    lab.set_edge("x[1]", "x[2]", 6);
    lab.set_edge("x[2]", "x[3]", 4);
    lab.set_edge("x[1]", "x[3]", 5);

    Certificate cert;
    cert.family = "custom";
    cert.cycle_length = 3;
    cert.mode = "strict";
    cert.labeling = lab;
    cert.magic_constant = 21;
    cert.valid = true;
    cert.tool_version = std::string(kToolName) + " " + kVersion;

    const Certificate back = parse_certificate(emit_certificate(cert));
    CHECK(back == cert);
    const Graph rebuilt = back.graph();
    CHECK(rebuilt.vertex_count() == 3);
    CHECK(rebuilt.edge_count() == 3);
    CHECK(verify_certificate(back, VerifyMode::Strict).valid());
    CHECK_THROWS_AS(back.spec(), CertificateError);
}

TEST_CASE("DOT export is deterministic and carries counts") {
    const FamilySpec sp = FamilySpec::books(2, 2);
    const Graph g = build_graph(sp);
    const std::string dot = to_dot(g, "books_m2_n2");
    CHECK(dot == to_dot(g, "books_m2_n2"));
    // 12 nodes, 14 edges
    CHECK(std::count(dot.begin(), dot.end(), ';') == 12 + 14);
    CHECK(dot.find(" -- ") != std::string::npos);
    CHECK(dot.rfind("graph \"books_m2_n2\" {", 0) == 0);
}

TEST_CASE("DOT labels match the certificate labels") {
    const FamilySpec sp = FamilySpec::fans(2, 3);
    const Certificate cert = sample_certificate(sp);
    const Graph g = build_graph(sp);
    const std::string dot = to_dot(g, "fans", &cert.labeling);
    for (const auto& [v, lab] : cert.labeling.vertex_labels)
        CHECK(dot.find("\"" + v + "\" [label=\"" + v + "=" + std::to_string(lab) + "\"]") !=
              std::string::npos);
    const Edge e = make_edge(vid("c", {1}), vid("v", {1, 1}));
    CHECK(dot.find("[label=\"" + std::to_string(cert.labeling.edge_labels.at(e)) + "\"]") !=
          std::string::npos);
}
