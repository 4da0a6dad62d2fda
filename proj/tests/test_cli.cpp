#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "branchpair/catalog.hpp"
#include "branchpair/digraph.hpp"

using namespace branchpair;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "branchpair_cli_test";
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args) {
    fs::path out = temp_dir() / "out.txt";
    std::string cmd = std::string(BRANCHPAIR_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.output = buf.str();
    return r;
}

fs::path write_graph(const std::string& name, const Digraph& d) {
    fs::path p = temp_dir() / name;
    std::ofstream(p) << format_arc_list(d);
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("check: S4 is 2-arc-strong, exit 0") {
    fs::path p = write_graph("s4.arcs", catalog::build_s4());
    RunResult r = run_cli("check " + p.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("arc-strong connectivity: 2") != std::string::npos);
    CHECK(r.output.find("semicomplete: yes") != std::string::npos);
}

TEST_CASE("check: S4 minus one arc is flagged, exit 1") {
    Digraph s4 = catalog::build_s4();
    Digraph corrupted(0);
    for (int v = 0; v < s4.vertex_count(); ++v) corrupted.add_vertex(s4.label(v));
    for (const Arc& a : s4.arcs()) {
        if (a.id != 0) corrupted.add_arc(a.tail, a.head);
    }
    fs::path p = write_graph("s4_minus_arc.arcs", corrupted);
    RunResult r = run_cli("check " + p.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("NOT 2-arc-strong") != std::string::npos);
}

TEST_CASE("check: unreadable file exits 2") {
    RunResult r = run_cli("check /nonexistent/missing.arcs");
    CHECK(r.exit_code == 2);
}

TEST_CASE("check: malformed file exits 2") {
    fs::path p = temp_dir() / "malformed.arcs";
    std::ofstream(p) << "v1 v2 v3\n";
    RunResult r = run_cli("check " + p.string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("goodpair: certificate for the Lemma 2.1 pair") {
    fs::path p = write_graph("s4.arcs", catalog::build_s4());
    RunResult r = run_cli("goodpair " + p.string() + " v1 v2 --certificate");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("out-branching (root v1)") != std::string::npos);
    CHECK(r.output.find("in-branching  (root v2)") != std::string::npos);
}

TEST_CASE("goodpair: none exits 1, unknown label exits 2") {
    Digraph d(0);
    d.add_vertex("u");
    d.add_vertex("v");
    d.add_arc(0, 1);
    d.add_arc(1, 0);
    fs::path p = write_graph("two_cycle.arcs", d);
    CHECK(run_cli("goodpair " + p.string() + " u v").exit_code == 1);
    CHECK(run_cli("goodpair " + p.string() + " u nope").exit_code == 2);
}

TEST_CASE("goodpair: DOT export contains both edge classes") {
    fs::path p = write_graph("s4.arcs", catalog::build_s4());
    fs::path dot = temp_dir() / "pair.dot";
    RunResult r = run_cli("goodpair " + p.string() + " v1 v2 --dot " + dot.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(dot);
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("color=red") != std::string::npos);
    CHECK(buf.str().find("color=green") != std::string::npos);
}

TEST_CASE("matrix: S4 is all good") {
    fs::path p = write_graph("s4.arcs", catalog::build_s4());
    RunResult r = run_cli("matrix " + p.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all_good: true") != std::string::npos);
}

TEST_CASE("decompose: S4 reports none with exit 0") {
    fs::path p = write_graph("s4.arcs", catalog::build_s4());
    RunResult r = run_cli("decompose " + p.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("none") != std::string::npos);
}

TEST_CASE("decompose: complete digraph reports a decomposition") {
    Digraph k3(3);
    for (int u = 0; u < 3; ++u) {
        for (int v = 0; v < 3; ++v) {
            if (u != v) k3.add_arc(u, v);
        }
    }
    fs::path p = write_graph("k3.arcs", k3);
    RunResult r = run_cli("decompose " + p.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("decomposition found") != std::string::npos);
}

TEST_CASE("verify-catalog: paper16 passes and writes a JSON report") {
    fs::path json = temp_dir() / "paper16.json";
    RunResult r = run_cli("verify-catalog --scope paper16 --json " + json.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all expectations met") != std::string::npos);
    auto parsed = nlohmann::ordered_json::parse(std::ifstream(json));
    CHECK(parsed.at("scope") == "paper16");
    CHECK(parsed.at("all_passed") == true);
    CHECK(parsed.at("reports").size() == 16);
}

TEST_CASE("verify-catalog: unknown scope exits 2") {
    CHECK(run_cli("verify-catalog --scope everything").exit_code == 2);
}

TEST_CASE("randomized: S4 with the script parameters") {
    fs::path p = write_graph("s4.arcs", catalog::build_s4());
    RunResult r = run_cli("randomized " + p.string() + " --samples 2000 --seed 124");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all_good: true") != std::string::npos);
}

TEST_CASE("export-catalog: fixtures parse back to their builders") {
    fs::path dir = temp_dir() / "fixtures";
    RunResult r = run_cli("export-catalog " + dir.string());
    CHECK(r.exit_code == 0);
    for (auto key : catalog::export_keys()) {
        fs::path arcs = dir / (key.name() + ".arcs");
        REQUIRE(fs::exists(arcs));
        std::ifstream in(arcs);
        std::ostringstream buf;
        buf << in.rdbuf();
        CHECK(parse_digraph(buf.str()) == catalog::build(key));
        CHECK(fs::exists(dir / (key.name() + ".dot")));
    }
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate x").exit_code == 2);
}

TEST_CASE("BRANCHPAIR_LIMIT lowers the resource guard") {
    fs::path p = write_graph("s4.arcs", catalog::build_s4());
    fs::path out = temp_dir() / "limit_out.txt";
    std::string cmd = "BRANCHPAIR_LIMIT=4 " + std::string(BRANCHPAIR_CLI_PATH) + " decompose " +
                      p.string() + " > " + out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 2);
    std::ifstream in(out);
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("BRANCHPAIR_LIMIT") != std::string::npos);
}

TEST_SUITE_END();
