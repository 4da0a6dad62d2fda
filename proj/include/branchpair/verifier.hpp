#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "branchpair/branchings.hpp"
#include "branchpair/catalog.hpp"
#include "branchpair/connectivity.hpp"

#include <json.hpp>

namespace branchpair {
namespace verifier {

enum class Scope { Paper16, AllCombinations, Full };

std::string scope_name(Scope s);
Scope scope_from_name(const std::string& name);

struct RandomizedParams {
    std::uint64_t seed = 0;
    int samples = 0;

    bool operator==(const RandomizedParams&) const = default;
};

struct CertificateText {
    std::vector<std::string> out_arcs;
    std::vector<std::string> in_arcs;

    bool operator==(const CertificateText&) const = default;
};

/// Per-graph verification result. Matrix rows are out-roots, columns
/// in-roots. Arcs serialize as "tail>head#id".
struct VerificationReport {
    std::string graph;
    int n = 0;
    std::vector<std::string> arcs;
    std::string mode = "exhaustive";
    std::optional<RandomizedParams> randomized;
    int k_arc_strong = 0;
    std::vector<std::vector<bool>> matrix;
    bool all_good = false;
    std::map<std::string, CertificateText> certificates;
    std::optional<ArcDecomposition> decomposition;
    double runtime_ms = 0.0;

    bool operator==(const VerificationReport&) const = default;
};

struct VerificationIssue {
    std::string graph;
    std::string phase;  // connectivity | matrix | constructive | decomposition | recognizer | certificate
    std::string pair;   // "u,v" or empty
    std::string message;
};

struct VerificationOutcome {
    std::vector<VerificationReport> reports;
    std::vector<VerificationIssue> issues;

    bool passed() const { return issues.empty(); }
};

/// Runs the catalog verification: connectivity expectations, exhaustive
/// good-pair matrices, constructive cross-checks, decomposition searches
/// where the exceptional graphs demand "none", and the split recognizer
/// checks for the special structures.
VerificationOutcome verify_catalog(Scope scope);

/// Monte-Carlo port of the verification script: per cell (i, j) repeatedly
/// samples a spanning tree of the underlying graph, keeps it when it is an
/// in-branching at v_j, and tests the residual digraph for an out-branching
/// at v_i. One-sided: a true cell is backed by an explicit certificate, a
/// false cell only means no sample succeeded. Reproducible: cell seeds are
/// derived from (seed, i, j), so evaluation order does not matter.
VerificationReport randomized_check(const Digraph& d, int samples, std::uint64_t seed,
                                    const std::string& name = "user");

/// Exhaustive single-graph report (connectivity, matrix, certificates).
VerificationReport exhaustive_report(const Digraph& d, const std::string& name = "user",
                                     bool with_decomposition = false);

std::string arc_string(const Digraph& d, int arc_id);

nlohmann::ordered_json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const VerificationOutcome& outcome, Scope scope);

}  // namespace verifier
}  // namespace branchpair
