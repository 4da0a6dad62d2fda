#include "branchpair/connectivity.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <queue>

namespace branchpair {

std::uint64_t resource_limit() {
    static const std::uint64_t limit = [] {
        if (const char* env = std::getenv("BRANCHPAIR_LIMIT")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t{1} << 22;
    }();
    return limit;
}

namespace {

// Reachability over arcs not in `removed` (removed indexed by arc id, may be
// empty), following arcs forward or backward.
int reach_count(const Digraph& d, int start, const std::vector<bool>& removed, bool forward) {
    std::vector<bool> seen(static_cast<size_t>(d.vertex_count()), false);
    std::vector<int> stack{start};
    seen[static_cast<size_t>(start)] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        const auto& ids = forward ? d.out_arcs(v) : d.in_arcs(v);
        for (int id : ids) {
            if (!removed.empty() && removed[static_cast<size_t>(id)]) continue;
            const Arc& a = d.arc(id);
            int w = forward ? a.head : a.tail;
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                stack.push_back(w);
                ++count;
            }
        }
    }
    return count;
}

bool strong_minus(const Digraph& d, const std::vector<bool>& removed) {
    if (d.vertex_count() <= 1) return true;
    return reach_count(d, 0, removed, true) == d.vertex_count() &&
           reach_count(d, 0, removed, false) == d.vertex_count();
}

// Unit-capacity max-flow (BFS augmenting paths). flow_forward[id] records
// whether arc id carries flow s->t. Returns the flow value.
struct FlowResult {
    int value = 0;
    std::vector<bool> used;  // arc carries flow
};

FlowResult max_flow_unit(const Digraph& d, int s, int t) {
    FlowResult r;
    r.used.assign(static_cast<size_t>(d.arc_count()), false);
    if (s == t) return r;
    for (;;) {
        // BFS over the residual graph: forward along unused arcs, backward
        // along used ones.
        std::vector<int> parent_arc(static_cast<size_t>(d.vertex_count()), -1);
        std::vector<bool> parent_fwd(static_cast<size_t>(d.vertex_count()), false);
        std::vector<bool> seen(static_cast<size_t>(d.vertex_count()), false);
        std::queue<int> q;
        q.push(s);
        seen[static_cast<size_t>(s)] = true;
        while (!q.empty() && !seen[static_cast<size_t>(t)]) {
            int v = q.front();
            q.pop();
            for (int id : d.out_arcs(v)) {
                if (r.used[static_cast<size_t>(id)]) continue;
                int w = d.arc(id).head;
                if (seen[static_cast<size_t>(w)]) continue;
                seen[static_cast<size_t>(w)] = true;
                parent_arc[static_cast<size_t>(w)] = id;
                parent_fwd[static_cast<size_t>(w)] = true;
                q.push(w);
            }
            for (int id : d.in_arcs(v)) {
                if (!r.used[static_cast<size_t>(id)]) continue;
                int w = d.arc(id).tail;
                if (seen[static_cast<size_t>(w)]) continue;
                seen[static_cast<size_t>(w)] = true;
                parent_arc[static_cast<size_t>(w)] = id;
                parent_fwd[static_cast<size_t>(w)] = false;
                q.push(w);
            }
        }
        if (!seen[static_cast<size_t>(t)]) break;
        for (int v = t; v != s;) {
            int id = parent_arc[static_cast<size_t>(v)];
            if (parent_fwd[static_cast<size_t>(v)]) {
                r.used[static_cast<size_t>(id)] = true;
                v = d.arc(id).tail;
            } else {
                r.used[static_cast<size_t>(id)] = false;
                v = d.arc(id).head;
            }
        }
        ++r.value;
    }
    return r;
}

// Min-cut arcs from the final residual reachability of a finished max-flow.
std::vector<int> min_cut_arcs(const Digraph& d, int s, const FlowResult& flow) {
    std::vector<bool> side(static_cast<size_t>(d.vertex_count()), false);
    std::vector<int> stack{s};
    side[static_cast<size_t>(s)] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int id : d.out_arcs(v)) {
            if (flow.used[static_cast<size_t>(id)]) continue;
            int w = d.arc(id).head;
            if (!side[static_cast<size_t>(w)]) {
                side[static_cast<size_t>(w)] = true;
                stack.push_back(w);
            }
        }
        for (int id : d.in_arcs(v)) {
            if (!flow.used[static_cast<size_t>(id)]) continue;
            int w = d.arc(id).tail;
            if (!side[static_cast<size_t>(w)]) {
                side[static_cast<size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    std::vector<int> cut;
    for (const Arc& a : d.arcs()) {
        if (side[static_cast<size_t>(a.tail)] && !side[static_cast<size_t>(a.head)]) {
            cut.push_back(a.id);
        }
    }
    return cut;
}

}  // namespace

bool is_strong(const Digraph& d) {
    if (d.vertex_count() == 0) return true;
    return strong_minus(d, {});
}

ConnectivityCertificate arc_strong_connectivity(const Digraph& d) {
    ConnectivityCertificate cert;
    int n = d.vertex_count();
    if (n <= 1) return cert;
    if (!is_strong(d)) return cert;

    // Global arc connectivity equals the minimum of lambda(0, t) and
    // lambda(t, 0) over all t, which also ranges over all ordered pairs.
    int best = std::numeric_limits<int>::max();
    int best_s = -1, best_t = -1;
    for (int v = 0; v < n; ++v) {
        best = std::min(best, std::min(d.out_degree(v), d.in_degree(v)));
    }
    for (int t = 1; t < n; ++t) {
        for (auto [s, u] : {std::pair{0, t}, std::pair{t, 0}}) {
            FlowResult f = max_flow_unit(d, s, u);
            if (f.value < best) {
                best = f.value;
                best_s = s;
                best_t = u;
            }
        }
    }
    cert.k = best;
    if (best_s >= 0) {
        FlowResult f = max_flow_unit(d, best_s, best_t);
        cert.witness_cut = min_cut_arcs(d, best_s, f);
    } else {
        // The degree bound was already tight; rerun the flow that meets it.
        for (int t = 1; t < n && !cert.witness_cut; ++t) {
            for (auto [s, u] : {std::pair{0, t}, std::pair{t, 0}}) {
                FlowResult f = max_flow_unit(d, s, u);
                if (f.value == best) {
                    cert.witness_cut = min_cut_arcs(d, s, f);
                    break;
                }
            }
        }
    }
    return cert;
}

bool is_k_arc_strong_bruteforce(const Digraph& d, int k) {
    if (k < 1) throw ArgumentError("k must be positive");
    int m = d.arc_count();
    std::uint64_t subsets = 1;  // empty subset
    std::uint64_t binom = 1;
    for (int i = 1; i <= k - 1 && i <= m; ++i) {
        binom = binom * static_cast<std::uint64_t>(m - i + 1) / static_cast<std::uint64_t>(i);
        subsets += binom;
        if (subsets > resource_limit()) {
            throw ResourceLimitError("subset count exceeds BRANCHPAIR_LIMIT");
        }
    }

    std::vector<bool> removed(static_cast<size_t>(m), false);
    std::vector<int> chosen;
    // Enumerates all subsets of size <= k-1 by recursive choice.
    auto rec = [&](auto&& self, int from) -> bool {
        if (!strong_minus(d, removed)) return false;
        if (static_cast<int>(chosen.size()) == k - 1) return true;
        for (int id = from; id < m; ++id) {
            removed[static_cast<size_t>(id)] = true;
            chosen.push_back(id);
            bool ok = self(self, id + 1);
            chosen.pop_back();
            removed[static_cast<size_t>(id)] = false;
            if (!ok) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

}  // namespace branchpair
