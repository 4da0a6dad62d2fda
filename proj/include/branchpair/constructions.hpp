#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "branchpair/branchings.hpp"
#include "branchpair/catalog.hpp"

namespace branchpair {
namespace constructions {

/// No construction branch applies. On catalog inputs this signals a
/// transcription bug, never a missing case; verification treats it as fatal.
struct ConstructionGapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Good pairs for all 16 ordered vertex pairs of S4 (vertices indexed as in
/// catalog::build_s4(): v1..v4 = 0..3). The four explicitly listed pairs are
/// stored verbatim; the rest are closed under the automorphism group.
struct S4PairTable {
    std::array<std::array<GoodPair, 4>, 4> entries;
};

const S4PairTable& s4_pair_table();
GoodPair s4_good_pair(int u, int v);

/// All vertex permutations of S4 preserving arcs, in lexicographic order.
const std::vector<std::vector<int>>& s4_automorphisms();

/// Constructive good pair in a barred basic case (optionally with its dashed
/// arc), following the case analysis of the lifting proof: root pairs among
/// v1..v4 substitute or augment through the v4-a-v2 path, root a uses the
/// type 1/type 2 branches over a's out-neighbours, in-root a the mirrored
/// type 1'/type 2' branches.
GoodPair lift_to_basic_case(const Digraph& d, int u, int v);

/// Constructive good pair in a combination (e) x (f)*: pairs rooted in
/// {v1..v4, a} reduce through the b-contraction to the barred basic case,
/// pairs rooted in {v1..v4, b} through the a-contraction plus reversal, and
/// the (a, b)/(b, a) pairs go through the special structures, the displayed
/// certificates, and the reversal symmetry.
GoodPair lift_to_combination(const Digraph& d, int u, int v);

}  // namespace constructions
}  // namespace branchpair
