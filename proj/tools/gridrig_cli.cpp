// Command line front end: family generation, format conversion, exact
// checks, and the claim suite.
//
// Exit codes: 0 success, 1 property violated or check failed, 2 usage or
// input error, 3 search budget exhausted. Primary output goes to stdout
// and is byte-deterministic; timing goes to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gridrig/claim_suite.hpp"
#include "gridrig/constructions.hpp"
#include "gridrig/graph.hpp"
#include "gridrig/graph_io.hpp"
#include "gridrig/lifting.hpp"
#include "gridrig/minor_search.hpp"
#include "gridrig/rig.hpp"
#include "gridrig/serialization.hpp"
#include "gridrig/tree_decomposition.hpp"

namespace {

using namespace gridrig;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_line(const std::string& text) {
    size_t nl = text.find('\n');
    std::string line = nl == std::string::npos ? text : text.substr(0, nl);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    return line;
}

Graph graph_from_text(const std::string& format, const std::string& text) {
    if (format == "graph6") return from_graph6(first_line(text));
    if (format == "dimacs") {
        std::istringstream in(text);
        return read_dimacs(in);
    }
    if (format == "json") return graph_from_json(nlohmann::json::parse(text));
    throw std::runtime_error("unknown format " + format);
}

std::string graph_to_text(const std::string& format, const Graph& g) {
    if (format == "graph6") return to_graph6(g) + "\n";
    if (format == "dimacs") {
        std::ostringstream out;
        write_dimacs(g, out);
        return out.str();
    }
    if (format == "json") return graph_to_json(g).dump(2) + "\n";
    throw std::runtime_error("unknown format " + format);
}

std::string format_of_path(const std::string& path) {
    size_t dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "g6" || ext == "graph6") return "graph6";
    if (ext == "dimacs" || ext == "col") return "dimacs";
    if (ext == "json") return "json";
    throw std::runtime_error("cannot tell the format of " + path +
                             " (expected .g6, .dimacs, .col, or .json)");
}

// A graph argument is either a named pattern (k5, c6, p4, k4s1, grid3x4)
// or a path to a graph file.
Graph parse_graph_spec(const std::string& spec) {
    auto all_digits = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    if (spec.size() >= 2 && (spec[0] == 'k' || spec[0] == 'c' || spec[0] == 'p')) {
        std::string rest = spec.substr(1);
        size_t sub = rest.find('s');
        std::string count = sub == std::string::npos ? rest : rest.substr(0, sub);
        std::string depth = sub == std::string::npos ? "" : rest.substr(sub + 1);
        if (all_digits(count) && (sub == std::string::npos || all_digits(depth))) {
            int n = std::stoi(count);
            Graph g = spec[0] == 'k'   ? complete_graph(n)
                      : spec[0] == 'c' ? cycle_graph(n)
                                       : path_graph(n);
            if (!depth.empty()) g = subdivide(g, std::stoi(depth));
            return g;
        }
    }
    if (spec.rfind("grid", 0) == 0) {
        size_t x = spec.find('x', 4);
        if (x != std::string::npos && all_digits(spec.substr(4, x - 4)) &&
            all_digits(spec.substr(x + 1)))
            return grid_graph(std::stoi(spec.substr(4, x - 4)), std::stoi(spec.substr(x + 1)));
    }
    return graph_from_text(format_of_path(spec), read_file(spec));
}

long long default_budget() {
    const char* env = std::getenv("GRIDRIG_BUDGET");
    if (!env || !*env) return -1;
    return std::stoll(env);
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Found: return "found";
        case Outcome::Absent: return "absent";
        default: return "unknown";
    }
}

int outcome_exit(Outcome o) {
    switch (o) {
        case Outcome::Found: return 0;
        case Outcome::Absent: return 1;
        default: return 3;
    }
}

nlohmann::json claim_to_json(const ClaimVerdict& v) {
    nlohmann::json j;
    j["holds"] = v.holds;
    if (!v.holds) j["witness"] = v.witness;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph family construction and exact verification workbench"};
    app.require_subcommand(1);
    int rc = 0;

    // gen
    std::string gen_family, gen_format = "json";
    int gen_n = 1, gen_g = 1;
    CLI::App* gen = app.add_subcommand("gen", "construct a family member and print it");
    gen->add_option("family", gen_family, "apex-grid, pd-grid, bn, bn-prime, g, or gg")
        ->required()
        ->check(CLI::IsMember({"apex-grid", "pd-grid", "bn", "bn-prime", "g", "gg"}));
    gen->add_option("--n", gen_n, "family size parameter")->required();
    gen->add_option("--g", gen_g, "subdivision or stretch parameter");
    gen->add_option("--format", gen_format, "graph6, dimacs, or json")
        ->check(CLI::IsMember({"graph6", "dimacs", "json"}));
    gen->callback([&] {
        std::optional<ConstructionBundle> bundle;
        Graph graph;
        if (gen_family == "apex-grid") graph = apex_grid(gen_n);
        else if (gen_family == "pd-grid") graph = pd_grid(gen_n);
        else if (gen_family == "bn") graph = build_bn(gen_g, gen_n);
        else if (gen_family == "bn-prime") bundle = build_bn_prime(gen_g, gen_n);
        else if (gen_family == "g") bundle = build_g(gen_n);
        else bundle = build_gg(gen_g, gen_n);
        if (bundle && gen_format == "json")
            std::cout << bundle_to_json(*bundle).dump(2) << "\n";
        else
            std::cout << graph_to_text(gen_format, bundle ? bundle->graph : graph);
    });

    // convert
    std::string conv_from, conv_to;
    CLI::App* conv = app.add_subcommand("convert", "convert a graph between formats (stdin to stdout)");
    conv->add_option("--from", conv_from)->required()
        ->check(CLI::IsMember({"graph6", "dimacs", "json"}));
    conv->add_option("--to", conv_to)->required()
        ->check(CLI::IsMember({"graph6", "dimacs", "json"}));
    conv->callback([&] {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        std::cout << graph_to_text(conv_to, graph_from_text(conv_from, ss.str()));
    });

    // check
    CLI::App* check = app.add_subcommand("check", "exact checks and verifications");
    check->require_subcommand(1);

    std::string girth_spec;
    CLI::App* c_girth = check->add_subcommand("girth", "shortest cycle length");
    c_girth->add_option("graph", girth_spec)->required();
    c_girth->callback([&] {
        GirthValue gv = girth(parse_graph_spec(girth_spec));
        if (gv.is_unbounded()) std::cout << "unbounded\n";
        else std::cout << gv.length() << "\n";
    });

    std::string m_pattern, m_host;
    long long m_budget = default_budget();
    int m_jobs = 1;
    bool m_emit = false;
    for (const char* name : {"minor", "induced-minor"}) {
        CLI::App* c = check->add_subcommand(name, std::string(name) + " model search");
        c->add_option("--pattern", m_pattern)->required();
        c->add_option("--host", m_host)->required();
        c->add_option("--budget", m_budget, "search node budget, -1 for unlimited");
        c->add_option("--jobs", m_jobs, "worker threads");
        c->add_flag("--emit", m_emit, "print the model when found");
        bool induced = std::string(name) == "induced-minor";
        c->callback([&, induced] {
            SearchOptions opt;
            opt.budget = m_budget;
            opt.jobs = m_jobs;
            SearchOutcome so = find_model(parse_graph_spec(m_pattern), parse_graph_spec(m_host),
                                          induced ? ModelKind::Induced : ModelKind::Ordinary, opt);
            std::cout << outcome_name(so.outcome) << "\n";
            if (so.outcome == Outcome::Found && m_emit)
                std::cout << model_to_json(*so.model).dump(2) << "\n";
            std::cerr << "nodes " << so.nodes_used << "\n";
            rc = outcome_exit(so.outcome);
        });
    }

    std::string rf_graph, rf_host;
    long long rf_budget = default_budget();
    int rf_max_region = -1;
    CLI::App* c_rig = check->add_subcommand("rig-find", "search for a region representation");
    c_rig->add_option("--graph", rf_graph)->required();
    c_rig->add_option("--host", rf_host)->required();
    c_rig->add_option("--max-region", rf_max_region, "largest allowed region, -1 for no cap");
    c_rig->add_option("--budget", rf_budget, "search node budget, -1 for unlimited");
    c_rig->callback([&] {
        RigSearchOutcome ro = find_rig_representation(parse_graph_spec(rf_graph),
                                                      parse_graph_spec(rf_host), rf_max_region,
                                                      rf_budget);
        std::cout << outcome_name(ro.outcome) << "\n";
        if (ro.outcome == Outcome::Found) std::cout << rep_to_json(*ro.rep).dump(2) << "\n";
        std::cerr << "nodes " << ro.nodes_used << "\n";
        rc = outcome_exit(ro.outcome);
    });

    std::string vm_pattern, vm_host, vm_model;
    CLI::App* c_vm = check->add_subcommand("verify-model", "verify a minor model");
    c_vm->add_option("--pattern", vm_pattern)->required();
    c_vm->add_option("--host", vm_host)->required();
    c_vm->add_option("--model", vm_model, "model JSON file")->required();
    c_vm->callback([&] {
        MinorModel m = model_from_json(nlohmann::json::parse(read_file(vm_model)));
        VerifyResult r = verify_model(parse_graph_spec(vm_pattern), parse_graph_spec(vm_host), m);
        std::cout << (r.ok ? "ok" : r.violation) << "\n";
        rc = r.ok ? 0 : 1;
    });

    std::string vr_graph, vr_rep;
    CLI::App* c_vr = check->add_subcommand("verify-rep", "verify a region representation");
    c_vr->add_option("--graph", vr_graph)->required();
    c_vr->add_option("--rep", vr_rep, "representation JSON file")->required();
    c_vr->callback([&] {
        RIGRepresentation rep = rep_from_json(nlohmann::json::parse(read_file(vr_rep)));
        VerifyResult r = verify_representation(parse_graph_spec(vr_graph), rep);
        std::cout << (r.ok ? "ok" : r.violation) << "\n";
        rc = r.ok ? 0 : 1;
    });

    std::string vt_graph, vt_td;
    CLI::App* c_vt = check->add_subcommand("verify-td", "verify a tree decomposition");
    c_vt->add_option("--graph", vt_graph)->required();
    c_vt->add_option("--td", vt_td, "decomposition JSON file")->required();
    c_vt->callback([&] {
        TreeDecomposition td = td_from_json(nlohmann::json::parse(read_file(vt_td)));
        TdVerifyResult r = verify_td(parse_graph_spec(vt_graph), td);
        if (r.ok) std::cout << "ok width=" << r.width << " adhesion=" << r.adhesion << "\n";
        else std::cout << r.violation << "\n";
        rc = r.ok ? 0 : 1;
    });

    int lift_n = 2, lift_g = 0;
    std::string lift_model;
    CLI::App* c_lift = check->add_subcommand(
        "lift", "normalize a subdivided-clique model and lift it to the ordered family");
    c_lift->add_option("--n", lift_n, "family size parameter")->required();
    c_lift->add_option("--g", lift_g, "stretch parameter (0 for the girth-5 family)");
    c_lift->add_option("--model", lift_model, "induced model JSON file")->required();
    c_lift->callback([&] {
        ConstructionBundle gb = lift_g >= 2 ? build_gg(lift_g, lift_n) : build_g(lift_n);
        SubdividedCliqueModel scm;
        scm.model = model_from_json(nlohmann::json::parse(read_file(lift_model)));
        int parts = (int)scm.model.assignment.size();
        int s = 2;
        while (s * (s + 1) / 2 < parts) ++s;
        if (s * (s + 1) / 2 != parts)
            throw std::runtime_error("model part count does not fit any subdivided clique");
        scm.s = s;
        nlohmann::json out;
        NormalizeOutcome norm = normalize_model(scm, gb);
        out["normalized"] = norm.ok;
        if (!norm.ok) {
            out["obstruction"] = norm.obstruction;
            std::cout << out.dump(2) << "\n";
            rc = 1;
            return;
        }
        out["model"] = model_to_json(norm.model.model);
        ClaimReport claims = check_claims(norm.model, gb);
        out["claims"] = {{"nestedInterval", claim_to_json(claims.nested_interval)},
                         {"twoCover", claim_to_json(claims.two_cover)},
                         {"triple", claim_to_json(claims.triple)}};
        LiftResult lr = lift_to_bprime(norm.model, gb);
        out["lift"] = {{"coreSets", gridrig::detail::vertex_sets_to_json(lr.core_sets)},
                       {"branchSets", gridrig::detail::vertex_sets_to_json(lr.branch_sets)},
                       {"pairwiseDisjoint", lr.pairwise_disjoint},
                       {"allConnected", lr.all_connected},
                       {"pairwiseAdjacent", lr.pairwise_adjacent},
                       {"verified", lr.verdict.ok}};
        if (!lr.verdict.ok) out["lift"]["violation"] = lr.verdict.violation;
        std::cout << out.dump(2) << "\n";
        rc = lr.verdict.ok ? 0 : 1;
    });

    // suite
    std::string suite_level = "fast";
    CLI::App* suite = app.add_subcommand("suite", "run the claim suite");
    suite->add_option("--level", suite_level, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}));
    suite->callback([&] {
        SuiteReport report = run_suite(suite_level == "full" ? SuiteLevel::Full : SuiteLevel::Fast);
        write_suite_report(report, std::cout, std::cerr);
        rc = report.all_pass() ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
