// Command-line front door: generate, verify, search, sweep, export.
//
// Exit codes: 0 valid, 1 verification failure, 2 usage/parameter error,
// 3 internal regression (a constructive labeler failed its own verification).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclemagic/cyclemagic.hpp"

namespace cm = cyclemagic;

namespace {

struct ParamOpts {
    cm::Int m = 0, n = 0, s = 0, k = 0, l = 0;
    std::string family;

    cm::FamilySpec spec() const {
        cm::FamilySpec sp;
        sp.family = cm::family_from_name(family);
        sp.m = m;
        sp.n = n;
        sp.s = s;
        sp.k = k;
        sp.l = l;
        return sp;
    }
};

void add_param_options(CLI::App* cmd, ParamOpts& p, bool family_required = true) {
    auto* fam = cmd->add_option("--family", p.family, "graph family");
    if (family_required) fam->required();
    cmd->add_option("--m", p.m, "copy count");
    cmd->add_option("--n", p.n, "size index");
    cmd->add_option("--s", p.s, "larger copies (unions)");
    cmd->add_option("--k", p.k, "smaller copies (unions)");
    cmd->add_option("--l", p.l, "copy count (antiprism)");
}

std::string param_str(const cm::FamilySpec& sp) {
    std::string out;
    for (const auto& [key, value] : sp.params()) {
        if (!out.empty()) out += " ";
        out += key + "=" + std::to_string(value);
    }
    return out;
}

cm::Certificate make_family_certificate(const cm::FamilySpec& sp, const cm::TotalLabeling& lab,
                                        const cm::VerificationReport& rep) {
    cm::Certificate cert;
    cert.family = cm::family_name(sp.family);
    cert.params = sp.params();
    cert.cycle_length = sp.cycle_length();
    cert.mode = cm::mode_name(rep.mode);
    cert.labeling = lab;
    cert.magic_constant = rep.magic_constant;
    cert.valid = rep.valid();
    cert.tool_version = std::string(cm::kToolName) + " " + cm::kVersion;
    cert.typo_corrections = cm::corrections_applied(sp);
    return cert;
}

void print_report(const cm::VerificationReport& rep, std::ostream& out) {
    out << "mode: " << cm::mode_name(rep.mode) << "\n";
    out << "bijective: " << (rep.bijective ? "yes" : "no") << "\n";
    out << "super: " << (rep.super ? "yes" : "no") << "\n";
    out << "covering: " << (rep.covering_ok ? "yes" : "no");
    if (!rep.covering_ok) out << " (" << rep.uncovered.size() << " uncovered)";
    out << "\n";
    out << "cycles: " << rep.weights.size() << "\n";
    if (rep.magic_constant) out << "c = " << *rep.magic_constant << "\n";
    if (rep.valid()) {
        out << "valid: yes\n";
    } else {
        out << "valid: no\n";
        out << "first_violation: " << rep.first_violation << "\n";
        if (rep.designated_only_claim)
            out << "note: designated_only_claim (the construction's claim covers only its "
                   "designated cycles; extra cycles of this length exist)\n";
    }
}

int run_generate(const ParamOpts& p, const std::string& out_path) {
    const cm::FamilySpec sp = p.spec();
    sp.validate();
    const cm::TotalLabeling lab = cm::label_family(sp);
    const cm::VerificationReport rep = cm::verify_spec(sp, lab, cm::VerifyMode::Covering);
    const cm::Certificate cert = make_family_certificate(sp, lab, rep);
    if (out_path.empty())
        std::cout << cm::emit_certificate(cert);
    else
        cm::write_certificate(cert, out_path);
    if (!rep.valid()) {
        std::cerr << "generate: labeler output failed verification: " << rep.first_violation
                  << "\n";
        return 3;
    }
    std::cerr << "generated " << cert.family << " " << param_str(sp) << ": c = "
              << *rep.magic_constant << "\n";
    return 0;
}

int run_verify(const std::string& cert_path, const std::string& mode_str) {
    const cm::Certificate cert = cm::read_certificate(cert_path);
    const cm::VerifyMode mode = cm::mode_from_name(mode_str);
    const cm::VerificationReport rep = cm::verify_certificate(cert, mode);
    std::cout << "family: " << cert.family << "\n";
    print_report(rep, std::cout);
    return rep.valid() ? 0 : 1;
}

cm::Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list " + path);
    cm::Graph g;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string u, v;
        if (!(ss >> u >> v)) throw std::runtime_error("bad edge-list line: " + line);
        g.add_edge(u, v);
    }
    return g;
}

int run_search(const ParamOpts& p, const std::string& edge_list, bool k3, cm::Int cycle,
               cm::Int limit, cm::Int budget, std::optional<cm::Int> target, cm::Int seed,
               const std::string& out_dir) {
    cm::Graph g;
    if (k3) {
        g.add_edge("x[1]", "x[2]");
        g.add_edge("x[2]", "x[3]");
        g.add_edge("x[1]", "x[3]");
    } else if (!edge_list.empty()) {
        g = read_edge_list(edge_list);
    } else if (!p.family.empty()) {
        g = cm::build_graph_structural(p.spec());
    } else {
        std::cerr << "search: need --family, --edge-list or --k3\n";
        return 2;
    }

    cm::SearchConfig cfg;
    cfg.cycle_length = cycle;
    cfg.limit = limit;
    cfg.node_budget = budget;
    cfg.target_constant = target;
    cfg.seed = static_cast<std::uint64_t>(seed);
    const cm::SearchOutcome outcome = cm::find_labelings(g, cfg);

    std::cout << "solutions: " << outcome.labelings.size() << "\n";
    std::cout << "constants_seen:";
    for (cm::Int c : outcome.constants_seen) std::cout << " " << c;
    std::cout << "\n";
    std::cout << "exhausted: " << (outcome.exhausted ? "yes" : "no") << "\n";
    std::cout << "nodes_used: " << outcome.nodes_used << "\n";

    if (!out_dir.empty()) {
        for (std::size_t i = 0; i < outcome.labelings.size(); ++i) {
            cm::Certificate cert;
            cert.family = "custom";
            cert.cycle_length = cycle;
            cert.mode = "strict";
            cert.labeling = outcome.labelings[i];
            cm::VerificationReport rep =
                cm::verify(g, cert.labeling, cycle, cm::VerifyMode::Strict);
            cert.magic_constant = rep.magic_constant;
            cert.valid = rep.valid();
            cert.tool_version = std::string(cm::kToolName) + " " + cm::kVersion;
            char name[32];
            std::snprintf(name, sizeof(name), "sol_%05zu.json", i + 1);
            cm::write_certificate(cert, out_dir + "/" + name);
        }
        std::cerr << "wrote " << outcome.labelings.size() << " certificate(s) to " << out_dir
                  << "\n";
    }
    return 0;
}

struct Range {
    cm::Int lo = 0, hi = -1;  // empty by default
    bool given = false;
};

Range parse_range(const std::string& text) {
    Range r;
    r.given = true;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoll(text);
        } else {
            r.lo = std::stoll(text.substr(0, dots));
            r.hi = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected N or LO..HI, got '" + text + "'");
    }
    return r;
}

int run_sweep(const std::string& family_str, const Range& rm, const Range& rn, const Range& rs,
              const Range& rk, const Range& rl, const std::string& format,
              const std::string& out_path) {
    const cm::Family family = cm::family_from_name(family_str);
    std::vector<cm::FamilySpec> grid;
    auto span = [](const Range& r) {
        std::vector<cm::Int> out;
        for (cm::Int x = r.lo; x <= r.hi; ++x) out.push_back(x);
        if (!r.given) out = {0};
        return out;
    };
    for (cm::Int l : span(rl))
        for (cm::Int m : span(rm))
            for (cm::Int n : span(rn))
                for (cm::Int s : span(rs))
                    for (cm::Int k : span(rk)) {
                        cm::FamilySpec sp;
                        sp.family = family;
                        sp.m = m;
                        sp.n = n;
                        sp.s = s;
                        sp.k = k;
                        sp.l = l;
                        grid.push_back(sp);
                    }

    std::ostringstream body;
    bool all_match = true;
    nlohmann::json jrows = nlohmann::json::array();
    if (format == "csv")
        body << "family,l,m,n,s,k,v,e,c_predicted,c_verified,match\n";
    for (const cm::FamilySpec& sp : grid) {
        sp.validate();  // exit 2 if any grid point is out of range
        const cm::Int cpred = cm::predicted_constant(sp);
        const cm::TotalLabeling lab = cm::label_family(sp);
        const cm::VerificationReport rep = cm::verify_spec(sp, lab, cm::VerifyMode::Covering);
        const bool match = rep.valid() && rep.magic_constant == cpred;
        all_match = all_match && match;
        const cm::Int cver = rep.magic_constant.value_or(-1);
        if (format == "csv") {
            body << cm::family_name(sp.family) << "," << sp.l << "," << sp.m << "," << sp.n << ","
                 << sp.s << "," << sp.k << "," << sp.vertex_count() << "," << sp.edge_count()
                 << "," << cpred << "," << cver << "," << (match ? "true" : "false") << "\n";
        } else {
            nlohmann::json row;
            row["family"] = cm::family_name(sp.family);
            row["params"] = sp.params();
            row["v"] = sp.vertex_count();
            row["e"] = sp.edge_count();
            row["c_predicted"] = cpred;
            row["c_verified"] = cver;
            row["match"] = match;
            jrows.push_back(row);
        }
    }
    std::string text = format == "csv" ? body.str() : jrows.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        out << text;
    }
    return all_match ? 0 : 1;
}

int run_export(const ParamOpts& p, const std::string& format, bool with_labels,
               const std::string& out_path) {
    if (format != "dot") {
        std::cerr << "export: unknown format '" << format << "'\n";
        return 2;
    }
    const cm::FamilySpec sp = p.spec();
    const cm::Graph g = cm::build_graph(sp);
    std::string name = cm::family_name(sp.family);
    for (const auto& [key, value] : sp.params()) name += "_" + key + std::to_string(value);
    std::string text;
    if (with_labels) {
        const cm::TotalLabeling lab = cm::label_family(sp);
        text = cm::to_dot(g, name, &lab);
    } else {
        text = cm::to_dot(g, name);
    }
    if (out_path.empty())
        std::cout << text;
    else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycle-supermagic labeling toolkit"};
    app.require_subcommand(1);

    ParamOpts gen_params;
    std::string gen_out;
    auto* gen = app.add_subcommand("generate",
                                   "build a family, label it, verify, write a certificate");
    add_param_options(gen, gen_params);
    gen->add_option("--out", gen_out, "certificate path (default: stdout)");

    std::string ver_path, ver_mode = "covering";
    auto* ver = app.add_subcommand("verify", "re-verify a certificate from file alone");
    ver->add_option("certificate", ver_path, "certificate file")->required();
    ver->add_option("--mode", ver_mode, "covering|strict")
        ->check(CLI::IsMember({"covering", "strict"}));

    ParamOpts search_params;
    std::string search_edge_list, search_out_dir, search_target_str;
    bool search_k3 = false;
    cm::Int search_cycle = 3, search_limit = 1000, search_seed = 0;
    cm::Int search_budget = 10'000'000;
    if (const char* env = std::getenv("CYCLEMAGIC_NODE_BUDGET")) search_budget = std::atoll(env);
    auto* sea = app.add_subcommand("search", "find labelings from scratch by backtracking");
    add_param_options(sea, search_params, false);
    sea->add_option("--edge-list", search_edge_list, "file with one 'u v' pair per line");
    sea->add_flag("--k3", search_k3, "search the triangle K_3");
    sea->add_option("--cycle", search_cycle, "cycle length (3 or 4)")->required();
    sea->add_option("--limit", search_limit, "max labelings to return");
    sea->add_option("--budget", search_budget, "max search-tree nodes");
    sea->add_option("--target", search_target_str, "restrict to one magic constant");
    sea->add_option("--seed", search_seed, "deterministic tie-break key");
    sea->add_option("--out-dir", search_out_dir, "write solutions as certificates here");

    std::string sweep_family, sweep_format = "csv", sweep_out;
    std::string sw_m, sw_n, sw_s, sw_k, sw_l;
    auto* swp = app.add_subcommand("sweep",
                                   "tabulate predicted vs verified constants over a grid");
    swp->add_option("--family", sweep_family, "graph family")->required();
    swp->add_option("--m", sw_m, "range N or LO..HI");
    swp->add_option("--n", sw_n, "range N or LO..HI");
    swp->add_option("--s", sw_s, "range N or LO..HI");
    swp->add_option("--k", sw_k, "range N or LO..HI");
    swp->add_option("--l", sw_l, "range N or LO..HI");
    swp->add_option("--format", sweep_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    swp->add_option("--out", sweep_out, "output path (default: stdout)");

    ParamOpts exp_params;
    std::string exp_format = "dot", exp_out;
    bool exp_labels = false;
    auto* exp = app.add_subcommand("export", "emit the graph in DOT");
    add_param_options(exp, exp_params);
    exp->add_option("--format", exp_format, "dot");
    exp->add_flag("--labels", exp_labels, "attach labeling as element attributes");
    exp->add_option("--out", exp_out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_generate(gen_params, gen_out);
        if (ver->parsed()) return run_verify(ver_path, ver_mode);
        if (sea->parsed()) {
            std::optional<cm::Int> target;
            if (!search_target_str.empty()) {
                try {
                    target = std::stoll(search_target_str);
                } catch (const std::exception&) {
                    std::cerr << "error: --target expects an integer, got '" << search_target_str
                              << "'\n";
                    return 2;
                }
            }
            return run_search(search_params, search_edge_list, search_k3, search_cycle,
                              search_limit, search_budget, target, search_seed, search_out_dir);
        }
        if (swp->parsed())
            return run_sweep(sweep_family, sw_m.empty() ? Range{} : parse_range(sw_m),
                             sw_n.empty() ? Range{} : parse_range(sw_n),
                             sw_s.empty() ? Range{} : parse_range(sw_s),
                             sw_k.empty() ? Range{} : parse_range(sw_k),
                             sw_l.empty() ? Range{} : parse_range(sw_l), sweep_format, sweep_out);
        if (exp->parsed()) return run_export(exp_params, exp_format, exp_labels, exp_out);
    } catch (const cm::ParameterOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cm::CertificateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cm::DomainMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cm::NoCovering& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
