#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "branchpair/digraph.hpp"

namespace branchpair {

enum class Direction { Out, In };

/// Spanning out- or in-tree: root plus n-1 arc ids. Out: every non-root
/// vertex has exactly one branching arc entering it and is reachable from the
/// root. In: the mirror conditions.
struct Branching {
    int root = 0;
    Direction direction = Direction::Out;
    std::vector<int> arc_ids;  // sorted ascending

    bool operator==(const Branching&) const = default;
};

/// Arc-disjoint out-branching (rooted u) and in-branching (rooted v).
struct GoodPair {
    Branching out_branching;
    Branching in_branching;

    bool operator==(const GoodPair&) const = default;
};

/// Bipartition of the arc set into two spanning strong subdigraphs.
struct ArcDecomposition {
    std::vector<int> a1;
    std::vector<int> a2;

    bool operator==(const ArcDecomposition&) const = default;
};

/// Checks every Branching invariant of b inside d. Unknown arc ids throw
/// ValidationError.
bool validate_branching(const Digraph& d, const Branching& b);

/// Both branchings valid, roots/directions as required, arc sets disjoint.
bool validate_good_pair(const Digraph& d, const GoodPair& p);

bool validate_arc_decomposition(const Digraph& d, const ArcDecomposition& dec);

/// Visits every spanning out-branching rooted at `root` exactly once, in the
/// deterministic order given by recursive in-arc choice (vertices by index,
/// arcs by id). Return false from the visitor to stop early.
void enumerate_out_branchings(const Digraph& d, int root,
                              const std::function<bool(const Branching&)>& visit);

std::vector<Branching> all_out_branchings(const Digraph& d, int root);

/// In-branchings are enumerated as out-branchings of reverse(d) and mapped
/// back onto the original arc ids.
std::vector<Branching> all_in_branchings(const Digraph& d, int root);

/// Directed matrix-tree count of spanning out-branchings rooted at `root`,
/// by fraction-free elimination of the in-degree Laplacian minor.
std::uint64_t count_out_branchings(const Digraph& d, int root);

/// Exact decision: enumerates out-branchings at u in order; a candidate B
/// succeeds iff every vertex still reaches v in D minus B, in which case the
/// in-branching is extracted greedily (smallest arc id per attached vertex).
std::optional<GoodPair> find_good_pair(const Digraph& d, int u, int v);

/// Entry (i, j): row = out-root u, column = in-root v.
struct GoodPairMatrix {
    std::vector<std::vector<bool>> good;
    std::vector<std::vector<std::optional<GoodPair>>> certificates;

    bool all_good() const;
};

GoodPairMatrix good_pair_matrix(const Digraph& d);

/// Exhaustive search over arc bipartitions in ascending bitmask order
/// (bit set = arc in a1), pruned by per-side degree requirements; returns
/// the first bipartition whose sides are both spanning strong. Throws
/// ResourceLimitError when 2^|A| exceeds resource_limit().
std::optional<ArcDecomposition> find_strong_arc_decomposition(const Digraph& d);

/// DOT export with the pair's arcs split into two edge classes
/// (out-branching red, in-branching green, remaining arcs gray).
std::string to_dot(const Digraph& d, const GoodPair& p, const std::string& name = "D");

}  // namespace branchpair
