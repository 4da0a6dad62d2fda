#include <doctest.h>

#include <algorithm>

#include "branchpair/catalog.hpp"
#include "branchpair/digraph.hpp"

using namespace branchpair;

TEST_SUITE_BEGIN("digraph");

TEST_CASE("parse: two-line document") {
    Digraph d = parse_digraph("v1 v2\nv2 v3");
    CHECK(d.vertex_count() == 3);
    CHECK(d.arc_count() == 2);
    CHECK(d.label(0) == "v1");
    CHECK(d.arc(0).tail == 0);
    CHECK(d.arc(1).head == 2);
    CHECK(d.simple());
}

TEST_CASE("parse: comments, blank lines, whitespace") {
    Digraph d = parse_digraph("# header\n\n  v1 v2  \n\n# more\nv2 v1\n");
    CHECK(d.vertex_count() == 2);
    CHECK(d.arc_count() == 2);
}

TEST_CASE("parse: the S4 arc list equals build_s4") {
    std::string text =
        "v1 v2\nv2 v3\nv3 v4\nv4 v1\nv1 v3\nv2 v4\nv3 v1\nv4 v2\n";
    CHECK(parse_digraph(text) == catalog::build_s4());
}

TEST_CASE("parse: loop arc rejected") {
    CHECK_THROWS_AS(parse_digraph("v1 v1"), ValidationError);
}

TEST_CASE("parse: duplicate arc rejected in simple mode, allowed after header") {
    CHECK_THROWS_AS(parse_digraph("v1 v2\nv1 v2"), ValidationError);
    Digraph d = parse_digraph("!multigraph\nv1 v2\nv1 v2");
    CHECK(d.arc_count() == 2);
    CHECK_FALSE(d.simple());
}

TEST_CASE("parse: malformed line carries its number") {
    try {
        parse_digraph("v1 v2\nv1 v2 v3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("parse: header after arcs rejected") {
    CHECK_THROWS_AS(parse_digraph("v1 v2\n!multigraph\n"), ParseError);
}

TEST_CASE("arc-list round trip") {
    for (auto key : {catalog::CatalogKey::s4(), catalog::CatalogKey::multigraph(3),
                     catalog::CatalogKey::combination(catalog::BasicCase::ii,
                                                      catalog::BasicCase::iv)}) {
        Digraph d = catalog::build(key);
        CHECK(parse_digraph(format_arc_list(d)) == d);
    }
}

TEST_CASE("reverse is an involution preserving arc ids") {
    for (auto key : {catalog::CatalogKey::s4(), catalog::CatalogKey::multigraph(6),
                     catalog::CatalogKey::d1(), catalog::CatalogKey::appendix(7)}) {
        Digraph d = catalog::build(key);
        Digraph r = d.reversed();
        CHECK(r.reversed() == d);
        for (const Arc& a : d.arcs()) {
            CHECK(r.arc(a.id).tail == a.head);
            CHECK(r.arc(a.id).head == a.tail);
        }
    }
}

TEST_CASE("reverse of a single arc") {
    Digraph d = parse_digraph("u v");
    Digraph r = d.reversed();
    CHECK(r.arc(0).tail == d.require_vertex("v"));
    CHECK(r.arc(0).head == d.require_vertex("u"));
}

TEST_CASE("is_semicomplete") {
    CHECK(is_semicomplete(catalog::build_s4()));
    Digraph no_arcs(2);
    CHECK_FALSE(is_semicomplete(no_arcs));
    // a and b are non-adjacent in every combination.
    CHECK_FALSE(is_semicomplete(
        catalog::build_combination(catalog::BasicCase::i, catalog::BasicCase::i)));
    CHECK(is_semicomplete(Digraph(1)));
}

TEST_CASE("is_semicomplete invariant under reversal") {
    for (auto key : catalog::export_keys()) {
        Digraph d = catalog::build(key);
        CHECK(is_semicomplete(d) == is_semicomplete(d.reversed()));
    }
}

TEST_CASE("recognize_semicomplete_split: S4 yields the lexicographically first V1") {
    Digraph s4 = catalog::build_s4();
    auto split = recognize_semicomplete_split(s4);
    REQUIRE(split.has_value());
    CHECK(split->v1 == std::vector<int>{0});
    CHECK(split->v2 == std::vector<int>{1, 2, 3});
    CHECK(validate_split_partition(s4, *split));
}

TEST_CASE("recognize_semicomplete_split: CE1 pair structure") {
    Digraph d = catalog::build_structure_ce1(catalog::CE1Variant::V1Pair);
    auto split = recognize_semicomplete_split(d);
    REQUIRE(split.has_value());
    std::vector<std::string> v1;
    for (int v : split->v1) v1.push_back(d.label(v));
    CHECK(v1 == std::vector<std::string>{"u", "v"});
    std::vector<std::string> v2;
    for (int v : split->v2) v2.push_back(d.label(v));
    std::sort(v2.begin(), v2.end());
    CHECK(v2 == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(validate_split_partition(d, *split));
}

TEST_CASE("recognize_semicomplete_split: CE2 has none") {
    Digraph d = catalog::build_ce2_instance();
    CHECK_FALSE(recognize_semicomplete_split(d).has_value());
}

TEST_CASE("recognize_semicomplete_split: recognized partitions re-validate") {
    for (auto key : catalog::export_keys()) {
        Digraph d = catalog::build(key);
        if (auto split = recognize_semicomplete_split(d)) {
            CHECK(validate_split_partition(d, *split));
        }
    }
}

TEST_CASE("are_isomorphic: identity on self") {
    Digraph s4 = catalog::build_s4();
    auto map = are_isomorphic(s4, s4);
    REQUIRE(map.has_value());
    CHECK(*map == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("are_isomorphic: S4 vs its reverse") {
    Digraph s4 = catalog::build_s4();
    auto map = are_isomorphic(s4, s4.reversed());
    REQUIRE(map.has_value());
    // First witness in lexicographic permutation order: v1->v1, v2->v4,
    // v3->v3, v4->v2.
    CHECK(*map == std::vector<int>{0, 3, 2, 1});
}

TEST_CASE("are_isomorphic: arc multiplicities distinguish S4 from S4,1") {
    CHECK_FALSE(are_isomorphic(catalog::build_s4(), catalog::build_multigraph(1)).has_value());
}

TEST_CASE("are_isomorphic: symmetric with invertible witness") {
    Digraph a =
        catalog::build_combination(catalog::BasicCase::ii, catalog::BasicCase::iii).reversed();
    Digraph b = catalog::build_combination(catalog::BasicCase::iii, catalog::BasicCase::ii);
    auto fwd = are_isomorphic(a, b);
    auto bwd = are_isomorphic(b, a);
    REQUIRE(fwd.has_value());
    REQUIRE(bwd.has_value());
    for (int v = 0; v < a.vertex_count(); ++v) {
        for (int w = 0; w < a.vertex_count(); ++w) {
            if (v == w) continue;
            CHECK(a.arc_multiplicity(v, w) ==
                  b.arc_multiplicity((*fwd)[static_cast<size_t>(v)],
                                     (*fwd)[static_cast<size_t>(w)]));
        }
    }
}

TEST_CASE("loops are rejected at construction") {
    Digraph d(2, false);
    CHECK_THROWS_AS(d.add_arc(1, 1), ValidationError);
}

TEST_CASE("DOT export lists one edge per arc instance") {
    Digraph d = catalog::build_multigraph(1);  // 9 arcs, one doubled
    std::string dot = to_dot(d);
    size_t count = 0;
    for (size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) {
        ++count;
    }
    CHECK(count == 9);
}

TEST_SUITE_END();
