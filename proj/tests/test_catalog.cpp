#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "branchpair/catalog.hpp"
#include "branchpair/connectivity.hpp"

using namespace branchpair;
using namespace branchpair::catalog;

namespace {

using LabelArc = std::pair<std::string, std::string>;

std::multiset<LabelArc> arcs_of(const Digraph& d,
                                const std::map<std::string, std::string>& relabel = {}) {
    std::multiset<LabelArc> s;
    auto mapped = [&](const std::string& l) {
        auto it = relabel.find(l);
        return it == relabel.end() ? l : it->second;
    };
    for (const Arc& a : d.arcs()) s.insert({mapped(d.label(a.tail)), mapped(d.label(a.head))});
    return s;
}

}  // namespace

TEST_SUITE_BEGIN("catalog");

TEST_CASE("S4 is the 8-arc digraph from the exception figure") {
    Digraph s4 = build_s4();
    CHECK(s4.vertex_count() == 4);
    CHECK(s4.arc_count() == 8);
    std::vector<LabelArc> expected = {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v1"},
                                      {"v1", "v3"}, {"v2", "v4"}, {"v3", "v1"}, {"v4", "v2"}};
    for (size_t i = 0; i < expected.size(); ++i) {
        CHECK(s4.label(s4.arc(static_cast<int>(i)).tail) == expected[i].first);
        CHECK(s4.label(s4.arc(static_cast<int>(i)).head) == expected[i].second);
    }
}

TEST_CASE("builders are deterministic") {
    for (auto key : export_keys()) {
        CHECK(build(key) == build(key));
    }
}

TEST_CASE("multigraph arc counts match the figure") {
    CHECK(build_multigraph(1).arc_count() == 9);
    CHECK(build_multigraph(2).arc_count() == 9);
    CHECK(build_multigraph(3).arc_count() == 10);
    CHECK(build_multigraph(4).arc_count() == 10);
    CHECK(build_multigraph(5).arc_count() == 10);
    CHECK(build_multigraph(6).arc_count() == 11);
    CHECK_THROWS_AS(build_multigraph(0), ArgumentError);
    CHECK_THROWS_AS(build_multigraph(7), ArgumentError);
}

TEST_CASE("multigraphs extend S4 and are 2-arc-strong") {
    auto s4 = arcs_of(build_s4());
    for (int i = 1; i <= 6; ++i) {
        Digraph m = build_multigraph(i);
        auto arcs = arcs_of(m);
        for (const auto& a : s4) CHECK(arcs.count(a) >= 1);
        CHECK(arc_strong_connectivity(m).k == 2);
    }
}

TEST_CASE("D1 is a subdigraph of every barred basic case") {
    auto d1 = arcs_of(build_d1());
    for (BasicCase e : kBasicCases) {
        auto basic = arcs_of(build_basic(e, true));
        for (const auto& a : d1) CHECK(basic.count(a) == 1);
    }
}

TEST_CASE("barred basic case = unbarred plus v3v1") {
    for (BasicCase e : kBasicCases) {
        auto barred = arcs_of(build_basic(e, true));
        auto unbarred = arcs_of(build_basic(e, false));
        CHECK(barred.size() == unbarred.size() + 1);
        unbarred.insert({"v3", "v1"});
        CHECK(barred == unbarred);
    }
}

TEST_CASE("combination = unbarred basic union unbarred star, common core shared") {
    for (BasicCase e : kBasicCases) {
        for (BasicCase f : kBasicCases) {
            auto comb = arcs_of(build_combination(e, f));
            std::multiset<LabelArc> expected;
            for (const auto& a : arcs_of(build_basic(e, false))) expected.insert(a);
            for (const auto& a : arcs_of(build_basic_star(f, false))) {
                if (expected.count(a) == 0) expected.insert(a);
            }
            CHECK(comb == expected);
            CHECK(build_combination(e, f).vertex_count() == 6);
        }
    }
}

TEST_CASE("combination (i) x (i)* has 14 arcs") {
    CHECK(build_combination(BasicCase::i, BasicCase::i).arc_count() == 14);
}

TEST_CASE("dashed variants append exactly the optional arcs") {
    CHECK(build_basic(BasicCase::iv, true, true).arc_count() ==
          build_basic(BasicCase::iv, true, false).arc_count() + 1);
    CHECK(build_basic(BasicCase::i, true, true) == build_basic(BasicCase::i, true, false));
    CHECK(build_combination(BasicCase::iv, BasicCase::v, true).arc_count() ==
          build_combination(BasicCase::iv, BasicCase::v, false).arc_count() + 2);
}

TEST_CASE("reversing a combination gives the swapped combination up to relabeling") {
    const std::map<std::string, std::string> rotate = {{"v1", "v4"}, {"v2", "v3"}, {"v3", "v2"},
                                                       {"v4", "v1"}, {"a", "b"},   {"b", "a"}};
    for (BasicCase e : kBasicCases) {
        for (BasicCase f : kBasicCases) {
            Digraph rev = build_combination(e, f).reversed();
            CHECK(arcs_of(rev, rotate) == arcs_of(build_combination(f, e)));
            CHECK(are_isomorphic(rev, build_combination(f, e)).has_value());
        }
    }
}

TEST_CASE("appendix edge sets 1-5 are the barred basic cases") {
    const std::map<std::string, std::string> relabel = {{"a1", "a"}};
    for (int i = 1; i <= 5; ++i) {
        AppendixInfo info = appendix_info(i);
        CHECK(info.is_basic);
        CHECK(arcs_of(build_appendix(i), relabel) == arcs_of(build_basic(info.e, true)));
    }
}

TEST_CASE("appendix edge sets 6-16 are combinations") {
    const std::map<std::string, std::string> relabel = {{"a1", "a"}, {"a2", "b"}};
    for (int i = 6; i <= 16; ++i) {
        AppendixInfo info = appendix_info(i);
        CHECK_FALSE(info.is_basic);
        CHECK(arcs_of(build_appendix(i), relabel) == arcs_of(build_combination(info.e, info.f)));
    }
}

TEST_CASE("appendix graph 6 is the (i) x (i)* combination") {
    AppendixInfo info = appendix_info(6);
    CHECK(info.e == BasicCase::i);
    CHECK(info.f == BasicCase::i);
}

TEST_CASE("all 16 appendix graphs exist and are 2-arc-strong") {
    auto graphs = all_appendix_graphs();
    CHECK(graphs.size() == 16);
    for (const Digraph& d : graphs) {
        CHECK(arc_strong_connectivity(d).k == 2);
        CHECK(is_k_arc_strong_bruteforce(d, 2));
    }
}

TEST_CASE("catalog graphs in the verification scope are exactly 2-arc-strong") {
    std::vector<CatalogKey> keys = {CatalogKey::s4(), CatalogKey::structure_ce1(CE1Variant::V1Single),
                                    CatalogKey::structure_ce1(CE1Variant::V1Pair)};
    for (BasicCase e : kBasicCases) keys.push_back(CatalogKey::basic(e, true));
    for (BasicCase e : kBasicCases) {
        for (BasicCase f : kBasicCases) {
            keys.push_back(CatalogKey::combination(e, f));
            keys.push_back(CatalogKey::combination(e, f, true));
        }
    }
    for (const auto& key : keys) {
        Digraph d = build(key);
        CHECK(arc_strong_connectivity(d).k == 2);
        CHECK(is_k_arc_strong_bruteforce(d, 2));
        CHECK_FALSE(is_k_arc_strong_bruteforce(d, 3));
    }
}

TEST_CASE("CE1 single-vertex variant realizes the S4 pattern") {
    Digraph d = build_structure_ce1(CE1Variant::V1Single);
    CHECK(d.vertex_count() == 4);
    auto witness = are_isomorphic(d, build_s4());
    CHECK(witness.has_value());
}

TEST_CASE("CE1 pair variant satisfies the stated neighbourhoods") {
    Digraph d = build_structure_ce1(CE1Variant::V1Pair);
    CHECK(d.vertex_count() == 5);
    CHECK(d.arc_count() == 11);
    auto out_nbrs = [&](const std::string& l) {
        std::set<std::string> s;
        int v = d.require_vertex(l);
        for (int id : d.out_arcs(v)) s.insert(d.label(d.arc(id).head));
        return s;
    };
    auto in_nbrs = [&](const std::string& l) {
        std::set<std::string> s;
        int v = d.require_vertex(l);
        for (int id : d.in_arcs(v)) s.insert(d.label(d.arc(id).tail));
        return s;
    };
    CHECK(out_nbrs("u") == std::set<std::string>{"x1", "x3"});
    CHECK(in_nbrs("u") == std::set<std::string>{"x1", "x2"});
    CHECK(out_nbrs("x1") == std::set<std::string>{"x2", "u"});
    CHECK(out_nbrs("x2") == std::set<std::string>{"v", "u"});
    // The forced arcs: x3x1, vx3, and the completion v->x1, x3->v.
    CHECK(d.has_arc(d.require_vertex("x3"), d.require_vertex("x1")));
    CHECK(d.has_arc(d.require_vertex("v"), d.require_vertex("x3")));
    CHECK(d.has_arc(d.require_vertex("v"), d.require_vertex("x1")));
    CHECK(d.has_arc(d.require_vertex("x3"), d.require_vertex("v")));
}

TEST_CASE("CE2 instance: 7 vertices, u and c non-adjacent") {
    Digraph d = build_ce2_instance();
    CHECK(d.vertex_count() == 7);
    int u = d.require_vertex("u");
    int c = d.require_vertex("c");
    CHECK_FALSE(d.has_arc(u, c));
    CHECK_FALSE(d.has_arc(c, u));
}

TEST_CASE("key names are unique") {
    std::set<std::string> names;
    for (auto key : export_keys()) names.insert(key.name());
    CHECK(names.size() == export_keys().size());
}

TEST_CASE("committed fixtures are the golden corpus") {
    for (auto key : export_keys()) {
        std::string path =
            std::string(BRANCHPAIR_SOURCE_DIR) + "/fixtures/" + key.name() + ".arcs";
        std::ifstream in(path);
        REQUIRE_MESSAGE(in.good(), path);
        std::ostringstream buf;
        buf << in.rdbuf();
        CHECK(parse_digraph(buf.str()) == build(key));
    }
}

TEST_SUITE_END();
