#include <doctest.h>

#include "branchpair/catalog.hpp"
#include "branchpair/verifier.hpp"

using namespace branchpair;
using namespace branchpair::verifier;

namespace {

nlohmann::ordered_json strip_runtime(nlohmann::ordered_json j) {
    if (j.is_object()) {
        j.erase("runtime_ms");
        for (auto& [key, value] : j.items()) {
            (void)key;
            value = strip_runtime(value);
        }
    } else if (j.is_array()) {
        for (auto& value : j) value = strip_runtime(value);
    }
    return j;
}

}  // namespace

TEST_SUITE_BEGIN("verifier");

TEST_CASE("paper16 scope passes with 16 all-true reports") {
    VerificationOutcome outcome = verify_catalog(Scope::Paper16);
    CHECK(outcome.passed());
    REQUIRE(outcome.reports.size() == 16);
    for (const auto& report : outcome.reports) {
        CHECK(report.all_good);
        CHECK(report.k_arc_strong == 2);
        size_t pairs = static_cast<size_t>(report.n) * static_cast<size_t>(report.n);
        CHECK(report.certificates.size() == pairs);
    }
    // 5 basic cases on 5 vertices, 11 combinations on 6.
    CHECK(outcome.reports[0].n == 5);
    CHECK(outcome.reports[15].n == 6);
}

TEST_CASE("verify-catalog output is deterministic modulo timing") {
    auto a = to_json(verify_catalog(Scope::Paper16), Scope::Paper16);
    auto b = to_json(verify_catalog(Scope::Paper16), Scope::Paper16);
    CHECK(strip_runtime(a) == strip_runtime(b));
}

TEST_CASE("JSON reports round-trip") {
    Digraph s4 = catalog::build_s4();
    VerificationReport report = exhaustive_report(s4, "s4", /*with_decomposition=*/true);
    auto j = to_json(report);
    CHECK(report_from_json(j) == report);
    // And through a serialization cycle.
    auto parsed = nlohmann::ordered_json::parse(j.dump());
    CHECK(report_from_json(parsed) == report);
}

TEST_CASE("randomized: zero samples yields the all-false matrix") {
    VerificationReport r = randomized_check(catalog::build_s4(), 0, 124);
    CHECK_FALSE(r.all_good);
    for (const auto& row : r.matrix) {
        for (bool cell : row) CHECK_FALSE(cell);
    }
}

TEST_CASE("randomized: S4 at the script's parameters is all-true and one-sided") {
    Digraph s4 = catalog::build_s4();
    VerificationReport random = randomized_check(s4, 2000, 124);
    CHECK(random.all_good);
    VerificationReport exact = exhaustive_report(s4, "s4");
    for (size_t i = 0; i < random.matrix.size(); ++i) {
        for (size_t j = 0; j < random.matrix[i].size(); ++j) {
            if (random.matrix[i][j]) CHECK(exact.matrix[i][j]);
        }
    }
}

TEST_CASE("randomized: reproducible for a fixed seed") {
    Digraph d = catalog::build_appendix(3);
    auto a = randomized_check(d, 50, 9001);
    auto b = randomized_check(d, 50, 9001);
    CHECK(a.matrix == b.matrix);
    CHECK(a.certificates == b.certificates);
}

TEST_CASE("randomized: certificates validate") {
    Digraph d = catalog::build_appendix(1);
    VerificationReport r = randomized_check(d, 2000, 124);
    CHECK(r.all_good);
    CHECK(r.mode == "randomized");
    REQUIRE(r.randomized.has_value());
    CHECK(r.randomized->seed == 124);
}

TEST_CASE("full scope covers the special structures") {
    VerificationOutcome outcome = verify_catalog(Scope::Full);
    for (const auto& issue : outcome.issues) {
        CAPTURE(issue.graph);
        CAPTURE(issue.phase);
        CAPTURE(issue.pair);
        CAPTURE(issue.message);
        CHECK(false);
    }
    bool saw_ce2 = false, saw_d1 = false;
    for (const auto& report : outcome.reports) {
        if (report.graph == "ce2") saw_ce2 = true;
        if (report.graph == "d1") saw_d1 = true;
    }
    CHECK(saw_ce2);
    CHECK(saw_d1);
}

TEST_SUITE_END();
