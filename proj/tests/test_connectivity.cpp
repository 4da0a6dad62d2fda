#include <doctest.h>

#include <random>

#include "branchpair/catalog.hpp"
#include "branchpair/connectivity.hpp"

using namespace branchpair;

namespace {

Digraph directed_cycle(int n) {
    Digraph d(n);
    for (int v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
    return d;
}

// Seeded random simple digraphs for the flow/brute-force agreement suite.
// The seed is part of the test contract; regenerating must reproduce the
// exact same 200 graphs.
std::vector<Digraph> random_digraphs(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Digraph> graphs;
    while (static_cast<int>(graphs.size()) < count) {
        int n = 2 + static_cast<int>(rng() % 5);  // 2..6
        Digraph d(n);
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u != v && rng() % 2 == 0) d.add_arc(u, v);
            }
        }
        graphs.push_back(std::move(d));
    }
    return graphs;
}

}  // namespace

TEST_SUITE_BEGIN("connectivity");

TEST_CASE("is_strong basics") {
    CHECK(is_strong(Digraph(1)));
    Digraph path(3);
    path.add_arc(0, 1);
    path.add_arc(1, 2);
    CHECK_FALSE(is_strong(path));
    CHECK(is_strong(catalog::build_s4()));
}

TEST_CASE("arc_strong_connectivity: S4 is exactly 2-arc-strong") {
    auto cert = arc_strong_connectivity(catalog::build_s4());
    CHECK(cert.k == 2);
    REQUIRE(cert.witness_cut.has_value());
    CHECK(cert.witness_cut->size() == 2);
}

TEST_CASE("arc_strong_connectivity: directed 3-cycle has k = 1") {
    auto cert = arc_strong_connectivity(directed_cycle(3));
    CHECK(cert.k == 1);
}

TEST_CASE("arc_strong_connectivity: non-strong digraph gets k = 0") {
    Digraph path(2);
    path.add_arc(0, 1);
    auto cert = arc_strong_connectivity(path);
    CHECK(cert.k == 0);
    CHECK_FALSE(cert.witness_cut.has_value());
}

TEST_CASE("witness cut disconnects, smaller sets never do") {
    for (auto key : {catalog::CatalogKey::s4(), catalog::CatalogKey::multigraph(4),
                     catalog::CatalogKey::appendix(11), catalog::CatalogKey::d1()}) {
        Digraph d = catalog::build(key);
        auto cert = arc_strong_connectivity(d);
        REQUIRE(cert.witness_cut.has_value());
        CHECK(static_cast<int>(cert.witness_cut->size()) == cert.k);
        Digraph cut_graph(0, d.simple());
        for (int v = 0; v < d.vertex_count(); ++v) cut_graph.add_vertex(d.label(v));
        for (const Arc& a : d.arcs()) {
            bool removed = false;
            for (int id : *cert.witness_cut) removed = removed || id == a.id;
            if (!removed) cut_graph.add_arc(a.tail, a.head);
        }
        CHECK_FALSE(is_strong(cut_graph));
        CHECK(is_k_arc_strong_bruteforce(d, cert.k));
    }
}

TEST_CASE("bruteforce oracle on the examples") {
    CHECK(is_k_arc_strong_bruteforce(catalog::build_s4(), 2));
    CHECK_FALSE(is_k_arc_strong_bruteforce(catalog::build_s4(), 3));
    CHECK_FALSE(is_k_arc_strong_bruteforce(directed_cycle(3), 2));
}

TEST_CASE("appendix graphs are 2-arc-strong") {
    for (const Digraph& d : catalog::all_appendix_graphs()) {
        CHECK(arc_strong_connectivity(d).k == 2);
        CHECK(is_k_arc_strong_bruteforce(d, 2));
        CHECK_FALSE(is_k_arc_strong_bruteforce(d, 3));
    }
}

TEST_CASE("flow value agrees with the brute-force oracle") {
    std::vector<Digraph> graphs;
    for (auto key : {catalog::CatalogKey::s4(), catalog::CatalogKey::multigraph(2),
                     catalog::CatalogKey::basic(catalog::BasicCase::iii, true),
                     catalog::CatalogKey::combination(catalog::BasicCase::v, catalog::BasicCase::i),
                     catalog::CatalogKey::d1(), catalog::CatalogKey::structure_ce2()}) {
        graphs.push_back(catalog::build(key));
    }
    for (const Digraph& d : random_digraphs(40, 124)) graphs.push_back(d);
    for (const Digraph& d : graphs) {
        int k = arc_strong_connectivity(d).k;
        for (int probe = 1; probe <= 3; ++probe) {
            CHECK((k >= probe) == is_k_arc_strong_bruteforce(d, probe));
        }
    }
}

TEST_CASE("adding an arc never decreases k") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        Digraph d(n);
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u != v && rng() % 3 != 0) d.add_arc(u, v);
            }
        }
        int before = arc_strong_connectivity(d).k;
        // Append one missing arc if any remain.
        bool added = false;
        for (int u = 0; u < n && !added; ++u) {
            for (int v = 0; v < n && !added; ++v) {
                if (u != v && !d.has_arc(u, v)) {
                    d.add_arc(u, v);
                    added = true;
                }
            }
        }
        if (!added) continue;
        CHECK(arc_strong_connectivity(d).k >= before);
    }
}

TEST_CASE("reversal symmetry of k") {
    for (auto key : catalog::export_keys()) {
        Digraph d = catalog::build(key);
        CHECK(arc_strong_connectivity(d).k == arc_strong_connectivity(d.reversed()).k);
    }
}

TEST_CASE("resource guard trips on oversized subset counts") {
    Digraph big(10, false);
    for (int r = 0; r < 8; ++r) {
        for (int u = 0; u < 10; ++u) {
            for (int v = 0; v < 10; ++v) {
                if (u != v) big.add_arc(u, v);
            }
        }
    }
    // 720 arcs, k = 4 would need C(720, <=3) ~ 6e7 subsets > default limit.
    CHECK_THROWS_AS(is_k_arc_strong_bruteforce(big, 4), ResourceLimitError);
}

TEST_SUITE_END();
