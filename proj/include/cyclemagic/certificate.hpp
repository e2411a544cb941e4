#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclemagic/build.hpp"
#include "cyclemagic/family.hpp"
#include "cyclemagic/graph.hpp"
#include "cyclemagic/labeling.hpp"
#include "cyclemagic/verify.hpp"
#include "cyclemagic/version.hpp"

namespace cyclemagic {

class CertificateError : public std::runtime_error {
public:
    explicit CertificateError(const std::string& what)
        : std::runtime_error("certificate: " + what) {}
};

// A serialized, independently re-verifiable record of a labeling and its
// magic constant. family "custom" marks a search result over an explicit
// edge list; its graph is recovered from the labels themselves.
struct Certificate {
    std::string family;                      // family_name() or "custom"
    std::map<std::string, Int> params;
    Int cycle_length = 3;
    std::string mode = "covering";
    TotalLabeling labeling;
    std::optional<Int> magic_constant;
    bool valid = false;
    std::string tool_version;
    std::vector<std::string> typo_corrections;

    bool is_custom() const { return family == "custom"; }

    FamilySpec spec() const {
        if (is_custom()) throw CertificateError("custom certificate has no family spec");
        return FamilySpec::from_params(family_from_name(family), params);
    }

    // Rebuilds the labeled graph: from family parameters when present,
    // otherwise from the certificate's own edge list.
    Graph graph() const {
        if (!is_custom()) return build_graph(spec());
        Graph g;
        for (const auto& [v, lab] : labeling.vertex_labels) g.add_vertex(v);
        for (const auto& [e, lab] : labeling.edge_labels) g.add_edge(e.first, e.second);
        return g;
    }

    bool operator==(const Certificate& o) const {
        return family == o.family && params == o.params && cycle_length == o.cycle_length &&
               mode == o.mode && labeling == o.labeling && magic_constant == o.magic_constant &&
               valid == o.valid && tool_version == o.tool_version &&
               typo_corrections == o.typo_corrections;
    }
};

// Single-line JSON with sorted keys; edges as [u, v, label] triples with
// u < v, sorted. Byte-stable across runs.
inline std::string emit_certificate(const Certificate& c) {
    nlohmann::json j;
    j["family"] = c.family;
    j["params"] = c.params;
    j["cycle_length"] = c.cycle_length;
    j["mode"] = c.mode;
    j["vertex_labels"] = c.labeling.vertex_labels;
    auto& edges = j["edge_labels"] = nlohmann::json::array();
    for (const auto& [e, lab] : c.labeling.edge_labels)
        edges.push_back({e.first, e.second, lab});
    if (c.magic_constant)
        j["magic_constant"] = *c.magic_constant;
    else
        j["magic_constant"] = nullptr;
    j["valid"] = c.valid;
    j["tool_version"] = c.tool_version;
    j["typo_corrections"] = c.typo_corrections;
    return j.dump() + "\n";
}

inline Certificate parse_certificate(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw CertificateError(std::string("parse failure: ") + e.what());
    }
    try {
        Certificate c;
        c.family = j.at("family").get<std::string>();
        c.params = j.at("params").get<std::map<std::string, Int>>();
        c.cycle_length = j.at("cycle_length").get<Int>();
        c.mode = j.at("mode").get<std::string>();
        c.labeling.vertex_labels = j.at("vertex_labels").get<std::map<std::string, Int>>();
        for (const auto& triple : j.at("edge_labels")) {
            if (!triple.is_array() || triple.size() != 3)
                throw CertificateError("edge entry is not a [u, v, label] triple");
            c.labeling.edge_labels[make_edge(triple[0].get<std::string>(),
                                             triple[1].get<std::string>())] =
                triple[2].get<Int>();
        }
        if (!j.at("magic_constant").is_null())
            c.magic_constant = j.at("magic_constant").get<Int>();
        c.valid = j.at("valid").get<bool>();
        c.tool_version = j.at("tool_version").get<std::string>();
        c.typo_corrections = j.at("typo_corrections").get<std::vector<std::string>>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw CertificateError(std::string("malformed certificate: ") + e.what());
    }
}

inline void write_certificate(const Certificate& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CertificateError("cannot open " + path + " for writing");
    out << emit_certificate(c);
}

inline Certificate read_certificate(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CertificateError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_certificate(ss.str());
}

// Re-verifies a certificate from its contents alone. Covering mode on a
// custom certificate falls back to strict (no designated family exists).
inline VerificationReport verify_certificate(const Certificate& c, VerifyMode mode) {
    const Graph g = c.graph();
    if (mode == VerifyMode::Covering && !c.is_custom()) {
        return verify(g, c.labeling, c.cycle_length, mode, covering_cycles(c.spec()));
    }
    VerificationReport rep = verify(g, c.labeling, c.cycle_length, VerifyMode::Strict);
    if (!c.is_custom() && mode == VerifyMode::Strict && !rep.valid()) {
        const FamilySpec spec = c.spec();
        if ((spec.family == Family::Wheels && spec.n == 3) ||
            (spec.family == Family::Antiprism && spec.m == 3))
            rep.designated_only_claim = true;
    }
    return rep;
}

}  // namespace cyclemagic
