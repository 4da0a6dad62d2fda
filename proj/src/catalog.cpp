#include "branchpair/catalog.hpp"

#include <array>
#include <map>

namespace branchpair {
namespace catalog {

std::string basic_case_name(BasicCase c) {
    switch (c) {
        case BasicCase::i: return "i";
        case BasicCase::ii: return "ii";
        case BasicCase::iii: return "iii";
        case BasicCase::iv: return "iv";
        case BasicCase::v: return "v";
    }
    throw ArgumentError("bad basic case");
}

BasicCase basic_case_from_name(const std::string& name) {
    for (BasicCase c : kBasicCases) {
        if (basic_case_name(c) == name) return c;
    }
    throw ArgumentError("unknown basic case '" + name + "'");
}

CatalogKey CatalogKey::s4() { return CatalogKey{Family::S4}; }

CatalogKey CatalogKey::multigraph(int index) {
    if (index < 1 || index > 6) throw ArgumentError("multigraph index must be 1..6");
    CatalogKey k{Family::S4Multi};
    k.index = index;
    return k;
}

CatalogKey CatalogKey::d1() { return CatalogKey{Family::D1}; }

CatalogKey CatalogKey::basic(BasicCase e, bool barred, bool dashed) {
    CatalogKey k{Family::Basic};
    k.e = e;
    k.barred = barred;
    k.dashed = dashed;
    return k;
}

CatalogKey CatalogKey::basic_star(BasicCase f, bool barred, bool dashed) {
    CatalogKey k{Family::BasicStar};
    k.f = f;
    k.barred = barred;
    k.dashed = dashed;
    return k;
}

CatalogKey CatalogKey::combination(BasicCase e, BasicCase f, bool dashed) {
    CatalogKey k{Family::Combination};
    k.e = e;
    k.f = f;
    k.dashed = dashed;
    return k;
}

CatalogKey CatalogKey::appendix(int index) {
    if (index < 1 || index > 16) throw ArgumentError("appendix edge set index must be 1..16");
    CatalogKey k{Family::AppendixEdgeSet};
    k.index = index;
    return k;
}

CatalogKey CatalogKey::structure_ce1(CE1Variant variant) {
    CatalogKey k{Family::StructureCE1};
    k.ce1 = variant;
    return k;
}

CatalogKey CatalogKey::structure_ce2() { return CatalogKey{Family::StructureCE2}; }

std::string CatalogKey::name() const {
    switch (family) {
        case Family::S4: return "s4";
        case Family::S4Multi: return "s4_" + std::to_string(index);
        case Family::D1: return "d1";
        case Family::Basic:
            return "basic_" + basic_case_name(e) + (barred ? "_barred" : "") +
                   (dashed ? "_dashed" : "");
        case Family::BasicStar:
            return "star_" + basic_case_name(f) + (barred ? "_barred" : "") +
                   (dashed ? "_dashed" : "");
        case Family::Combination:
            return "comb_" + basic_case_name(e) + "_" + basic_case_name(f) +
                   (dashed ? "_dashed" : "");
        case Family::AppendixEdgeSet: {
            std::string i = std::to_string(index);
            return "appendix_" + std::string(i.size() < 2 ? "0" : "") + i;
        }
        case Family::StructureCE1:
            return ce1 == CE1Variant::V1Single ? "ce1_v1_single" : "ce1_v1_pair";
        case Family::StructureCE2: return "ce2";
    }
    throw ArgumentError("bad catalog key");
}

namespace {

using ArcSpec = std::pair<const char*, const char*>;

Digraph from_specs(const std::vector<std::string>& vertices, const std::vector<ArcSpec>& arcs,
                   bool simple = true) {
    Digraph d(0, simple);
    std::map<std::string, int> idx;
    for (const auto& v : vertices) idx[v] = d.add_vertex(v);
    for (const auto& [t, h] : arcs) d.add_arc(idx.at(t), idx.at(h));
    return d;
}

const std::vector<ArcSpec> kCore6 = {
    {"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v1"}, {"v1", "v3"}, {"v2", "v4"},
};

// Figure order of the five basic cases: core with v3v1, then the a-arcs.
const std::vector<ArcSpec> kCore7 = {
    {"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v1"},
    {"v1", "v3"}, {"v3", "v1"}, {"v2", "v4"},
};

std::vector<ArcSpec> a_arcs(BasicCase e, bool dashed) {
    std::vector<ArcSpec> arcs;
    switch (e) {
        case BasicCase::i: arcs = {{"a", "v2"}, {"a", "v4"}, {"v4", "a"}, {"v2", "a"}}; break;
        case BasicCase::ii: arcs = {{"a", "v2"}, {"v2", "a"}, {"v4", "a"}, {"a", "v1"}}; break;
        case BasicCase::iii: arcs = {{"a", "v2"}, {"a", "v4"}, {"v4", "a"}, {"v1", "a"}}; break;
        case BasicCase::iv:
            arcs = {{"a", "v2"}, {"v2", "a"}, {"v4", "a"}, {"a", "v3"}};
            if (dashed) arcs.push_back({"a", "v4"});
            break;
        case BasicCase::v:
            arcs = {{"a", "v2"}, {"a", "v4"}, {"v4", "a"}, {"v3", "a"}};
            if (dashed) arcs.push_back({"v2", "a"});
            break;
    }
    return arcs;
}

std::vector<ArcSpec> b_arcs(BasicCase f, bool dashed) {
    std::vector<ArcSpec> arcs;
    switch (f) {
        case BasicCase::i: arcs = {{"b", "v1"}, {"b", "v3"}, {"v3", "b"}, {"v1", "b"}}; break;
        case BasicCase::ii: arcs = {{"b", "v1"}, {"b", "v3"}, {"v3", "b"}, {"v4", "b"}}; break;
        case BasicCase::iii: arcs = {{"b", "v1"}, {"b", "v4"}, {"v1", "b"}, {"v3", "b"}}; break;
        case BasicCase::iv:
            arcs = {{"b", "v1"}, {"b", "v3"}, {"v3", "b"}, {"v2", "b"}};
            if (dashed) arcs.push_back({"v1", "b"});
            break;
        case BasicCase::v:
            arcs = {{"b", "v1"}, {"v1", "b"}, {"v3", "b"}, {"b", "v2"}};
            if (dashed) arcs.push_back({"b", "v3"});
            break;
    }
    return arcs;
}

void append(std::vector<ArcSpec>& into, const std::vector<ArcSpec>& more) {
    into.insert(into.end(), more.begin(), more.end());
}

}  // namespace

Digraph build_s4() {
    return from_specs({"v1", "v2", "v3", "v4"},
                      {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v1"},
                       {"v1", "v3"}, {"v2", "v4"}, {"v3", "v1"}, {"v4", "v2"}});
}

Digraph build_multigraph(int index) {
    // Parallel arcs added on top of the S4 base, transcribed from the
    // bend-annotated duplicates in the exception figure.
    static const std::array<std::vector<ArcSpec>, 6> extras = {{
        {{"v1", "v3"}},                                // S4,1
        {{"v1", "v2"}},                                // S4,2
        {{"v1", "v3"}, {"v4", "v2"}},                  // S4,3
        {{"v1", "v2"}, {"v1", "v3"}},                  // S4,4
        {{"v1", "v2"}, {"v4", "v2"}},                  // S4,5
        {{"v1", "v2"}, {"v1", "v3"}, {"v4", "v2"}},    // S4,6
    }};
    if (index < 1 || index > 6) throw ArgumentError("multigraph index must be 1..6");
    std::vector<ArcSpec> arcs = {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v1"},
                                 {"v1", "v3"}, {"v2", "v4"}, {"v3", "v1"}, {"v4", "v2"}};
    append(arcs, extras[static_cast<size_t>(index - 1)]);
    return from_specs({"v1", "v2", "v3", "v4"}, arcs, /*simple=*/false);
}

Digraph build_d1() {
    std::vector<ArcSpec> arcs = kCore7;
    append(arcs, {{"a", "v2"}, {"v4", "a"}});
    return from_specs({"v1", "v2", "v3", "v4", "a"}, arcs);
}

Digraph build_basic(BasicCase e, bool barred, bool dashed) {
    std::vector<ArcSpec> arcs = barred ? kCore7 : kCore6;
    append(arcs, a_arcs(e, dashed));
    return from_specs({"v1", "v2", "v3", "v4", "a"}, arcs);
}

Digraph build_basic_star(BasicCase f, bool barred, bool dashed) {
    std::vector<ArcSpec> arcs = kCore6;
    // The barred star mirrors the barred basic case: reversing and rotating
    // v3v1 yields v4v2.
    if (barred) arcs.push_back({"v4", "v2"});
    append(arcs, b_arcs(f, dashed));
    return from_specs({"v1", "v2", "v3", "v4", "b"}, arcs);
}

Digraph build_combination(BasicCase e, BasicCase f, bool dashed) {
    return build_combination(e, f, dashed, dashed);
}

Digraph build_combination(BasicCase e, BasicCase f, bool dash_a, bool dash_b) {
    std::vector<ArcSpec> arcs = kCore6;
    append(arcs, a_arcs(e, dash_a));
    append(arcs, b_arcs(f, dash_b));
    return from_specs({"v1", "v2", "v3", "v4", "a", "b"}, arcs);
}

namespace {

// Edge vectors of the verification script, verbatim.
const std::vector<ArcSpec> kCommonSet = {
    {"v1", "v2"}, {"v2", "v4"}, {"v3", "v4"}, {"v1", "v3"}, {"v4", "v1"}, {"v2", "v3"},
};

std::vector<ArcSpec> a1_type(int t) {
    switch (t) {
        case 1: return {{"v2", "a1"}, {"a1", "v2"}, {"a1", "v4"}, {"v4", "a1"}};
        case 2: return {{"v2", "a1"}, {"a1", "v2"}, {"a1", "v1"}, {"v4", "a1"}};
        case 3: return {{"a1", "v2"}, {"v1", "a1"}, {"a1", "v4"}, {"v4", "a1"}};
        case 4: return {{"v2", "a1"}, {"a1", "v2"}, {"a1", "v3"}, {"v4", "a1"}};
        case 5: return {{"a1", "v2"}, {"v3", "a1"}, {"a1", "v4"}, {"v4", "a1"}};
    }
    throw ArgumentError("bad a1 type");
}

std::vector<ArcSpec> a2_type(int t) {
    switch (t) {
        case 1: return {{"a2", "v1"}, {"v1", "a2"}, {"a2", "v3"}, {"v3", "a2"}};
        case 2: return {{"a2", "v1"}, {"v4", "a2"}, {"v3", "a2"}, {"a2", "v3"}};
        case 3: return {{"v1", "a2"}, {"a2", "v1"}, {"a2", "v4"}, {"v3", "a2"}};
        case 4: return {{"a2", "v1"}, {"v2", "a2"}, {"a2", "v3"}, {"v3", "a2"}};
        case 5: return {{"a2", "v1"}, {"v1", "a2"}, {"a2", "v2"}, {"v3", "a2"}};
    }
    throw ArgumentError("bad a2 type");
}

// (a1 type, a2 type) per combination edge set 6..16.
const std::array<std::pair<int, int>, 11> kCombinationSets = {{
    {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {3, 5}, {4, 4},
}};

}  // namespace

Digraph build_appendix(int index) {
    if (index < 1 || index > 16) throw ArgumentError("appendix edge set index must be 1..16");
    std::vector<ArcSpec> arcs = kCommonSet;
    std::vector<std::string> vertices = {"v1", "v2", "v4", "v3"};  // first-appearance order
    if (index <= 5) {
        arcs.push_back({"v3", "v1"});
        append(arcs, a1_type(index));
        vertices.push_back("a1");
    } else {
        auto [ta, tb] = kCombinationSets[static_cast<size_t>(index - 6)];
        append(arcs, a1_type(ta));
        append(arcs, a2_type(tb));
        vertices.push_back("a1");
        vertices.push_back("a2");
    }
    return from_specs(vertices, arcs);
}

std::vector<Digraph> all_appendix_graphs() {
    std::vector<Digraph> graphs;
    for (int i = 1; i <= 16; ++i) graphs.push_back(build_appendix(i));
    return graphs;
}

AppendixInfo appendix_info(int index) {
    if (index < 1 || index > 16) throw ArgumentError("appendix edge set index must be 1..16");
    if (index <= 5) {
        return AppendixInfo{index, true, kBasicCases[static_cast<size_t>(index - 1)],
                            BasicCase::i};
    }
    auto [ta, tb] = kCombinationSets[static_cast<size_t>(index - 6)];
    return AppendixInfo{index, false, kBasicCases[static_cast<size_t>(ta - 1)],
                        kBasicCases[static_cast<size_t>(tb - 1)]};
}

Digraph build_structure_ce1(CE1Variant variant) {
    if (variant == CE1Variant::V1Single) {
        // V1 = {u}: the structure's degree constraints on 4 vertices force the
        // S4 pattern (u, x3, x1, x2 standing for v1, v2, v3, v4).
        return from_specs({"u", "x3", "x1", "x2"},
                          {{"u", "x3"}, {"x3", "x1"}, {"x1", "x2"}, {"x2", "u"},
                           {"u", "x1"}, {"x3", "x2"}, {"x1", "u"}, {"x2", "x3"}});
    }
    // V1 = {u, v}: the nine drawn arcs, then the two completion arcs forced by
    // the constraints. v->x1: x1's out-neighbourhood is fixed to {x2, u}, so
    // the v-x1 adjacency required of a semicomplete split digraph must be
    // realized by v->x1. x3->v: v needs a second in-arc to be 2-arc-strong and
    // u->v, x1->v, x2->v (beyond the drawn one) are all excluded.
    return from_specs({"u", "x3", "x1", "x2", "v"},
                      {{"u", "x3"}, {"x1", "x2"}, {"x2", "u"}, {"u", "x1"}, {"x1", "u"},
                       {"x2", "v"}, {"x3", "x1"}, {"x3", "x2"}, {"v", "x3"},
                       {"v", "x1"}, {"x3", "v"}});
}

Digraph build_ce2_instance() {
    // One concrete 7-vertex instantiation of the (2)-structure with distinct
    // u+, v+. Only the non-membership in semicomplete split matters: u and c
    // are non-adjacent.
    return from_specs({"a", "u", "u+", "c", "v", "b", "v+"},
                      {{"a", "u"}, {"u", "u+"}, {"c", "v"}, {"v", "b"}, {"a", "b"},
                       {"b", "u"}, {"u", "a"}, {"v", "v+"}, {"b", "v"}, {"c", "a"},
                       {"b", "c"}});
}

Digraph build(const CatalogKey& key) {
    switch (key.family) {
        case Family::S4: return build_s4();
        case Family::S4Multi: return build_multigraph(key.index);
        case Family::D1: return build_d1();
        case Family::Basic: return build_basic(key.e, key.barred, key.dashed);
        case Family::BasicStar: return build_basic_star(key.f, key.barred, key.dashed);
        case Family::Combination: return build_combination(key.e, key.f, key.dashed);
        case Family::AppendixEdgeSet: return build_appendix(key.index);
        case Family::StructureCE1: return build_structure_ce1(key.ce1);
        case Family::StructureCE2: return build_ce2_instance();
    }
    throw ArgumentError("bad catalog key");
}

std::vector<CatalogKey> export_keys() {
    std::vector<CatalogKey> keys;
    keys.push_back(CatalogKey::s4());
    for (int i = 1; i <= 6; ++i) keys.push_back(CatalogKey::multigraph(i));
    keys.push_back(CatalogKey::d1());
    for (BasicCase e : kBasicCases) {
        for (bool barred : {false, true}) {
            keys.push_back(CatalogKey::basic(e, barred));
            if (e == BasicCase::iv || e == BasicCase::v) {
                keys.push_back(CatalogKey::basic(e, barred, /*dashed=*/true));
            }
        }
    }
    for (BasicCase f : kBasicCases) {
        for (bool barred : {false, true}) {
            keys.push_back(CatalogKey::basic_star(f, barred));
            if (f == BasicCase::iv || f == BasicCase::v) {
                keys.push_back(CatalogKey::basic_star(f, barred, /*dashed=*/true));
            }
        }
    }
    for (BasicCase e : kBasicCases) {
        for (BasicCase f : kBasicCases) {
            keys.push_back(CatalogKey::combination(e, f));
            keys.push_back(CatalogKey::combination(e, f, /*dashed=*/true));
        }
    }
    for (int i = 1; i <= 16; ++i) keys.push_back(CatalogKey::appendix(i));
    keys.push_back(CatalogKey::structure_ce1(CE1Variant::V1Single));
    keys.push_back(CatalogKey::structure_ce1(CE1Variant::V1Pair));
    keys.push_back(CatalogKey::structure_ce2());
    return keys;
}

}  // namespace catalog
}  // namespace branchpair
