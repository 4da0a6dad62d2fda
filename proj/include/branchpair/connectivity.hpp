#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "branchpair/digraph.hpp"

namespace branchpair {

/// Work limit for exhaustive searches (subset enumeration, arc bipartitions).
/// Defaults to 1 << 22 states; override with the BRANCHPAIR_LIMIT environment
/// variable.
std::uint64_t resource_limit();

/// Certificate for arc-strong connectivity k: deleting any k-1 arcs keeps the
/// digraph strong, and witness_cut (when present, size k) disconnects it.
struct ConnectivityCertificate {
    int k = 0;
    std::optional<std::vector<int>> witness_cut;
};

/// Every vertex reaches every other by a directed path. Single vertex: true.
bool is_strong(const Digraph& d);

/// k = min over ordered vertex pairs (s, t) of the maximum number of
/// arc-disjoint s->t paths (unit-capacity max-flow); witness_cut is taken
/// from a minimizing cut. Non-strong digraphs get k = 0 and no witness.
ConnectivityCertificate arc_strong_connectivity(const Digraph& d);

/// Literal transcription of the definition: true iff D minus S is strong for
/// every arc subset S with |S| <= k-1. Throws ResourceLimitError when the
/// number of subsets exceeds resource_limit().
bool is_k_arc_strong_bruteforce(const Digraph& d, int k);

}  // namespace branchpair
