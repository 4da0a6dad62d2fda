#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "branchpair/branchings.hpp"
#include "branchpair/catalog.hpp"
#include "branchpair/connectivity.hpp"
#include "branchpair/constructions.hpp"
#include "branchpair/digraph.hpp"
#include "branchpair/verifier.hpp"

namespace bp = branchpair;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExpectationFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bp::ArgumentError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw bp::ArgumentError("cannot write '" + path + "'");
    out << content;
}

bp::Digraph load(const std::string& path) { return bp::parse_digraph(read_file(path)); }

void print_matrix(const bp::Digraph& d, const std::vector<std::vector<bool>>& matrix) {
    std::cout << "good-pair matrix (rows: out-root u, columns: in-root v)\n";
    std::cout << "      ";
    for (int v = 0; v < d.vertex_count(); ++v) std::cout << d.display_name(v) << ' ';
    std::cout << '\n';
    for (int u = 0; u < d.vertex_count(); ++u) {
        std::cout << "  " << d.display_name(u) << " : ";
        for (int v = 0; v < d.vertex_count(); ++v) {
            std::cout << (matrix[static_cast<size_t>(u)][static_cast<size_t>(v)] ? '1' : '0')
                      << ' ';
        }
        std::cout << '\n';
    }
}

void print_certificate(const bp::Digraph& d, const bp::GoodPair& pair) {
    auto arcs = [&](const std::vector<int>& ids) {
        std::string s;
        for (int id : ids) s += bp::verifier::arc_string(d, id) + " ";
        return s;
    };
    std::cout << "  out-branching (root " << d.display_name(pair.out_branching.root)
              << "): " << arcs(pair.out_branching.arc_ids) << '\n';
    std::cout << "  in-branching  (root " << d.display_name(pair.in_branching.root)
              << "): " << arcs(pair.in_branching.arc_ids) << '\n';
}

int cmd_check(const std::string& file) {
    bp::Digraph d = load(file);
    std::cout << "vertices: " << d.vertex_count() << ", arcs: " << d.arc_count()
              << (d.simple() ? "" : " (multigraph)") << '\n';
    bool strong = bp::is_strong(d);
    bp::ConnectivityCertificate cert = bp::arc_strong_connectivity(d);
    std::cout << "strong: " << (strong ? "yes" : "no") << '\n';
    std::cout << "arc-strong connectivity: " << cert.k << '\n';
    if (cert.witness_cut) {
        std::cout << "witness cut:";
        for (int id : *cert.witness_cut) std::cout << ' ' << bp::verifier::arc_string(d, id);
        std::cout << '\n';
    }
    std::cout << "semicomplete: " << (bp::is_semicomplete(d) ? "yes" : "no") << '\n';
    if (auto split = bp::recognize_semicomplete_split(d)) {
        std::cout << "semicomplete split partition: V1 = {";
        for (size_t i = 0; i < split->v1.size(); ++i) {
            std::cout << (i ? ", " : " ") << d.display_name(split->v1[i]);
        }
        std::cout << " }, V2 = {";
        for (size_t i = 0; i < split->v2.size(); ++i) {
            std::cout << (i ? ", " : " ") << d.display_name(split->v2[i]);
        }
        std::cout << " }\n";
    } else {
        std::cout << "semicomplete split partition: none\n";
    }
    if (cert.k < 2) {
        std::cout << "NOT 2-arc-strong\n";
        return kExitExpectationFailed;
    }
    std::cout << "2-arc-strong: yes\n";
    return kExitOk;
}

int cmd_goodpair(const std::string& file, const std::string& u_label, const std::string& v_label,
                 bool certificate, const std::string& dot_path) {
    bp::Digraph d = load(file);
    int u = d.require_vertex(u_label);
    int v = d.require_vertex(v_label);
    auto pair = bp::find_good_pair(d, u, v);
    if (!pair) {
        std::cout << "no good (" << u_label << "," << v_label << ")-pair\n";
        return kExitExpectationFailed;
    }
    std::cout << "good (" << u_label << "," << v_label << ")-pair found\n";
    if (certificate) print_certificate(d, *pair);
    if (!dot_path.empty()) write_file(dot_path, bp::to_dot(d, *pair));
    return kExitOk;
}

int cmd_matrix(const std::string& file, const std::string& json_path) {
    bp::Digraph d = load(file);
    bp::verifier::VerificationReport report = bp::verifier::exhaustive_report(d);
    print_matrix(d, report.matrix);
    std::cout << "all_good: " << (report.all_good ? "true" : "false") << '\n';
    if (!json_path.empty()) write_file(json_path, bp::verifier::to_json(report).dump(2) + "\n");
    return kExitOk;
}

int cmd_decompose(const std::string& file) {
    bp::Digraph d = load(file);
    auto dec = bp::find_strong_arc_decomposition(d);
    if (!dec) {
        std::cout << "strong arc decomposition: none\n";
        return kExitOk;
    }
    auto arcs = [&](const std::vector<int>& ids) {
        std::string s;
        for (int id : ids) s += bp::verifier::arc_string(d, id) + " ";
        return s;
    };
    std::cout << "strong arc decomposition found\n";
    std::cout << "  a1: " << arcs(dec->a1) << '\n';
    std::cout << "  a2: " << arcs(dec->a2) << '\n';
    return kExitOk;
}

int cmd_verify_catalog(const std::string& scope_name, const std::string& json_path) {
    bp::verifier::Scope scope = bp::verifier::scope_from_name(scope_name);
    bp::verifier::VerificationOutcome outcome = bp::verifier::verify_catalog(scope);
    for (const auto& report : outcome.reports) {
        std::cout << report.graph << ": n=" << report.n << " k=" << report.k_arc_strong
                  << " all_good=" << (report.all_good ? "true" : "false") << '\n';
    }
    if (!json_path.empty()) {
        write_file(json_path, bp::verifier::to_json(outcome, scope).dump(2) + "\n");
    }
    if (!outcome.passed()) {
        for (const auto& issue : outcome.issues) {
            std::cerr << "FAIL " << issue.graph << " [" << issue.phase << "]"
                      << (issue.pair.empty() ? "" : " pair " + issue.pair) << ": " << issue.message
                      << '\n';
        }
        std::cout << outcome.issues.size() << " expectation failure(s)\n";
        return kExitExpectationFailed;
    }
    std::cout << "all expectations met (" << outcome.reports.size() << " graphs)\n";
    return kExitOk;
}

int cmd_randomized(const std::string& file, int samples, std::uint64_t seed,
                   const std::string& json_path) {
    bp::Digraph d = load(file);
    bp::verifier::VerificationReport report = bp::verifier::randomized_check(d, samples, seed);
    print_matrix(d, report.matrix);
    std::cout << "all_good: " << (report.all_good ? "true" : "false") << " (samples=" << samples
              << ", seed=" << seed << ")\n";
    if (!json_path.empty()) write_file(json_path, bp::verifier::to_json(report).dump(2) + "\n");
    return kExitOk;
}

int cmd_export_catalog(const std::string& dir) {
    fs::create_directories(dir);
    for (const bp::catalog::CatalogKey& key : bp::catalog::export_keys()) {
        bp::Digraph d = bp::catalog::build(key);
        write_file((fs::path(dir) / (key.name() + ".arcs")).string(), bp::format_arc_list(d));
        write_file((fs::path(dir) / (key.name() + ".dot")).string(), bp::to_dot(d, key.name()));
    }
    std::cout << "exported " << bp::catalog::export_keys().size() << " catalog graphs to " << dir
              << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arc-disjoint branchings and strong arc decompositions in directed multigraphs"};
    app.require_subcommand(1);

    std::string file, u_label, v_label, dot_path, json_path, scope = "full", dir;
    bool certificate = false;
    int samples = 2000;
    std::uint64_t seed = 124;

    auto* check = app.add_subcommand("check", "Connectivity and structure recognizers");
    check->add_option("file", file)->required();

    auto* goodpair = app.add_subcommand("goodpair", "Find a good (u,v)-pair");
    goodpair->add_option("file", file)->required();
    goodpair->add_option("u", u_label)->required();
    goodpair->add_option("v", v_label)->required();
    goodpair->add_flag("--certificate", certificate, "Print the branchings");
    goodpair->add_option("--dot", dot_path, "Write a DOT rendering of the pair");

    auto* matrix = app.add_subcommand("matrix", "Good-pair matrix over all ordered vertex pairs");
    matrix->add_option("file", file)->required();
    matrix->add_option("--json", json_path, "Write the JSON report");

    auto* decompose = app.add_subcommand("decompose", "Search for a strong arc decomposition");
    decompose->add_option("file", file)->required();

    auto* verify = app.add_subcommand("verify-catalog", "Deterministic catalog verification");
    verify->add_option("--scope", scope, "paper16 | all-combinations | full")
        ->capture_default_str();
    verify->add_option("--json", json_path, "Write the JSON report list");

    auto* randomized = app.add_subcommand("randomized", "Monte-Carlo good-pair matrix");
    randomized->add_option("file", file)->required();
    randomized->add_option("--samples", samples)->capture_default_str();
    randomized->add_option("--seed", seed)->capture_default_str();
    randomized->add_option("--json", json_path, "Write the JSON report");

    auto* exportc = app.add_subcommand("export-catalog", "Write every catalog graph as fixtures");
    exportc->add_option("dir", dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(file);
        if (app.got_subcommand(goodpair)) return cmd_goodpair(file, u_label, v_label, certificate, dot_path);
        if (app.got_subcommand(matrix)) return cmd_matrix(file, json_path);
        if (app.got_subcommand(decompose)) return cmd_decompose(file);
        if (app.got_subcommand(verify)) return cmd_verify_catalog(scope, json_path);
        if (app.got_subcommand(randomized)) return cmd_randomized(file, samples, seed, json_path);
        if (app.got_subcommand(exportc)) return cmd_export_catalog(dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
