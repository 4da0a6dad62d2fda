#pragma once

#include <array>
#include <string>
#include <vector>

#include "branchpair/digraph.hpp"

namespace branchpair {
namespace catalog {

enum class BasicCase { i, ii, iii, iv, v };

constexpr std::array<BasicCase, 5> kBasicCases = {BasicCase::i, BasicCase::ii, BasicCase::iii,
                                                  BasicCase::iv, BasicCase::v};

std::string basic_case_name(BasicCase c);
BasicCase basic_case_from_name(const std::string& name);

enum class CE1Variant { V1Single, V1Pair };

enum class Family { S4, S4Multi, D1, Basic, BasicStar, Combination, AppendixEdgeSet, StructureCE1,
                    StructureCE2 };

/// Identifies one catalog digraph. Every key builds a unique labeled digraph;
/// building twice yields identical arc lists.
struct CatalogKey {
    Family family = Family::S4;
    int index = 0;  // S4Multi: 1..6, AppendixEdgeSet: 1..16
    BasicCase e = BasicCase::i;
    BasicCase f = BasicCase::i;
    bool barred = false;
    bool dashed = false;  // include the optional dashed arcs of (iv)/(v) variants
    CE1Variant ce1 = CE1Variant::V1Single;

    static CatalogKey s4();
    static CatalogKey multigraph(int index);
    static CatalogKey d1();
    static CatalogKey basic(BasicCase e, bool barred, bool dashed = false);
    static CatalogKey basic_star(BasicCase f, bool barred, bool dashed = false);
    static CatalogKey combination(BasicCase e, BasicCase f, bool dashed = false);
    static CatalogKey appendix(int index);
    static CatalogKey structure_ce1(CE1Variant variant);
    static CatalogKey structure_ce2();

    /// Stable snake-case identifier used for fixtures and reports.
    std::string name() const;

    bool operator==(const CatalogKey&) const = default;
};

Digraph build(const CatalogKey& key);

Digraph build_s4();
Digraph build_multigraph(int index);  // 1..6 for S4,1 .. S4,6
Digraph build_d1();
Digraph build_basic(BasicCase e, bool barred, bool dashed = false);
Digraph build_basic_star(BasicCase f, bool barred, bool dashed = false);
Digraph build_combination(BasicCase e, BasicCase f, bool dashed = false);
/// Combination with independently controlled dashed arcs on the a- and b-side.
Digraph build_combination(BasicCase e, BasicCase f, bool dash_a, bool dash_b);
Digraph build_appendix(int index);  // 1..16, script labels v1..v4/a1/a2
Digraph build_structure_ce1(CE1Variant variant);
Digraph build_ce2_instance();

/// The 16 graphs of the verification script, in script order.
std::vector<Digraph> all_appendix_graphs();

/// What each appendix edge set reconstructs: sets 1-5 are the barred basic
/// cases, sets 6-16 are combinations (e) x (f)*.
struct AppendixInfo {
    int index;
    bool is_basic;
    BasicCase e;
    BasicCase f;  // meaningful only when !is_basic
};
AppendixInfo appendix_info(int index);

/// Every key the catalog can export as a fixture.
std::vector<CatalogKey> export_keys();

}  // namespace catalog
}  // namespace branchpair
