#include "branchpair/branchings.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "branchpair/connectivity.hpp"

namespace branchpair {

namespace {

// Reachability within an arc-id subset (or its complement).
int reach_within(const Digraph& d, int start, const std::vector<bool>& allowed, bool forward) {
    std::vector<bool> seen(static_cast<size_t>(d.vertex_count()), false);
    std::vector<int> stack{start};
    seen[static_cast<size_t>(start)] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        const auto& ids = forward ? d.out_arcs(v) : d.in_arcs(v);
        for (int id : ids) {
            if (!allowed[static_cast<size_t>(id)]) continue;
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

std::vector<bool> arc_mask(const Digraph& d, const std::vector<int>& ids) {
    std::vector<bool> mask(static_cast<size_t>(d.arc_count()), false);
    for (int id : ids) {
        if (id < 0 || id >= d.arc_count()) {
            throw ValidationError("unknown arc id " + std::to_string(id));
        }
        mask[static_cast<size_t>(id)] = true;
    }
    return mask;
}

}  // namespace

bool validate_branching(const Digraph& d, const Branching& b) {
    int n = d.vertex_count();
    if (b.root < 0 || b.root >= n) return false;
    if (static_cast<int>(b.arc_ids.size()) != n - 1) return false;
    std::vector<bool> mask = arc_mask(d, b.arc_ids);
    if (static_cast<int>(std::count(mask.begin(), mask.end(), true)) != n - 1) return false;

    // Out: every non-root vertex has exactly one branching arc entering it,
    // the root none. In: the mirror over leaving arcs.
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (int id : b.arc_ids) {
        const Arc& a = d.arc(id);
        int v = b.direction == Direction::Out ? a.head : a.tail;
        ++deg[static_cast<size_t>(v)];
    }
    for (int v = 0; v < n; ++v) {
        int expected = v == b.root ? 0 : 1;
        if (deg[static_cast<size_t>(v)] != expected) return false;
    }
    return reach_within(d, b.root, mask, b.direction == Direction::Out) == n;
}

bool validate_good_pair(const Digraph& d, const GoodPair& p) {
    if (p.out_branching.direction != Direction::Out) return false;
    if (p.in_branching.direction != Direction::In) return false;
    if (!validate_branching(d, p.out_branching)) return false;
    if (!validate_branching(d, p.in_branching)) return false;
    for (int id : p.out_branching.arc_ids) {
        if (std::find(p.in_branching.arc_ids.begin(), p.in_branching.arc_ids.end(), id) !=
            p.in_branching.arc_ids.end()) {
            return false;
        }
    }
    return true;
}

bool validate_arc_decomposition(const Digraph& d, const ArcDecomposition& dec) {
    int m = d.arc_count();
    if (dec.a1.empty() || dec.a2.empty()) return false;
    if (static_cast<int>(dec.a1.size() + dec.a2.size()) != m) return false;
    std::vector<bool> seen(static_cast<size_t>(m), false);
    for (const auto* side : {&dec.a1, &dec.a2}) {
        for (int id : *side) {
            if (id < 0 || id >= m || seen[static_cast<size_t>(id)]) return false;
            seen[static_cast<size_t>(id)] = true;
        }
    }
    auto side_strong = [&](const std::vector<int>& ids) {
        std::vector<bool> mask = arc_mask(d, ids);
        if (d.vertex_count() <= 1) return true;
        return reach_within(d, 0, mask, true) == d.vertex_count() &&
               reach_within(d, 0, mask, false) == d.vertex_count();
    };
    return side_strong(dec.a1) && side_strong(dec.a2);
}

namespace {

struct BranchingEnumerator {
    const Digraph& d;
    int root;
    const std::function<bool(const Branching&)>& visit;
    std::vector<int> parent_arc;  // chosen in-arc per vertex, -1 = unassigned
    bool stopped = false;

    BranchingEnumerator(const Digraph& d_, int root_,
                        const std::function<bool(const Branching&)>& visit_)
        : d(d_), root(root_), visit(visit_) {
        parent_arc.assign(static_cast<size_t>(d.vertex_count()), -1);
    }

    // True when assigning `arc` as v's in-arc would close a cycle not through
    // the root: walk the already-assigned parent chain from the arc's tail.
    bool closes_cycle(int v, int arc) const {
        int x = d.arc(arc).tail;
        while (x != root) {
            if (x == v) return true;
            int pa = parent_arc[static_cast<size_t>(x)];
            if (pa < 0) return false;
            x = d.arc(pa).tail;
        }
        return false;
    }

    void run(int v) {
        if (stopped) return;
        if (v == d.vertex_count()) {
            Branching b;
            b.root = root;
            b.direction = Direction::Out;
            for (int w = 0; w < d.vertex_count(); ++w) {
                if (w != root) b.arc_ids.push_back(parent_arc[static_cast<size_t>(w)]);
            }
            std::sort(b.arc_ids.begin(), b.arc_ids.end());
            if (!visit(b)) stopped = true;
            return;
        }
        if (v == root) {
            run(v + 1);
            return;
        }
        for (int id : sorted_in_arcs(v)) {
            if (closes_cycle(v, id)) continue;
            parent_arc[static_cast<size_t>(v)] = id;
            run(v + 1);
            parent_arc[static_cast<size_t>(v)] = -1;
            if (stopped) return;
        }
    }

    std::vector<int> sorted_in_arcs(int v) const {
        std::vector<int> ids = d.in_arcs(v);
        std::sort(ids.begin(), ids.end());
        return ids;
    }
};

}  // namespace

void enumerate_out_branchings(const Digraph& d, int root,
                              const std::function<bool(const Branching&)>& visit) {
    int n = d.vertex_count();
    if (root < 0 || root >= n) throw ArgumentError("root out of range");
    if (n == 1) {
        visit(Branching{root, Direction::Out, {}});
        return;
    }
    BranchingEnumerator e(d, root, visit);
    e.run(0);
}

std::vector<Branching> all_out_branchings(const Digraph& d, int root) {
    std::vector<Branching> out;
    enumerate_out_branchings(d, root, [&](const Branching& b) {
        out.push_back(b);
        return true;
    });
    return out;
}

std::vector<Branching> all_in_branchings(const Digraph& d, int root) {
    std::vector<Branching> result;
    Digraph rev = d.reversed();
    enumerate_out_branchings(rev, root, [&](const Branching& b) {
        result.push_back(Branching{root, Direction::In, b.arc_ids});
        return true;
    });
    return result;
}

std::uint64_t count_out_branchings(const Digraph& d, int root) {
    int n = d.vertex_count();
    if (root < 0 || root >= n) throw ArgumentError("root out of range");
    if (n <= 1) return 1;

    // In-degree Laplacian with row/column `root` deleted; the determinant
    // counts spanning out-trees diverging from the root.
    int m = n - 1;
    std::vector<std::vector<__int128>> a(static_cast<size_t>(m),
                                         std::vector<__int128>(static_cast<size_t>(m), 0));
    auto idx = [&](int v) { return v < root ? v : v - 1; };
    for (int v = 0; v < n; ++v) {
        if (v == root) continue;
        a[static_cast<size_t>(idx(v))][static_cast<size_t>(idx(v))] = d.in_degree(v);
    }
    for (const Arc& arc : d.arcs()) {
        if (arc.tail == arc.head) continue;
        if (arc.tail != root && arc.head != root) {
            a[static_cast<size_t>(idx(arc.tail))][static_cast<size_t>(idx(arc.head))] -= 1;
        }
    }

    // Bareiss fraction-free elimination; divisions are exact.
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < m; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < m; ++r) {
                if (a[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) return 0;
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(pivot)]);
            sign = -sign;
        }
        for (int r = k + 1; r < m; ++r) {
            for (int c = k + 1; c < m; ++c) {
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    (a[static_cast<size_t>(r)][static_cast<size_t>(c)] *
                         a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                     a[static_cast<size_t>(r)][static_cast<size_t>(k)] *
                         a[static_cast<size_t>(k)][static_cast<size_t>(c)]) /
                    prev;
            }
            a[static_cast<size_t>(r)][static_cast<size_t>(k)] = 0;
        }
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    __int128 det = sign * a[static_cast<size_t>(m - 1)][static_cast<size_t>(m - 1)];
    return det < 0 ? 0 : static_cast<std::uint64_t>(det);
}

namespace {

// Greedy in-branching inside an allowed arc set: grow the tree backwards from
// the root, always attaching via the smallest eligible arc id.
std::optional<Branching> extract_in_branching(const Digraph& d, int root,
                                              const std::vector<bool>& allowed) {
    int n = d.vertex_count();
    std::vector<bool> in_tree(static_cast<size_t>(n), false);
    in_tree[static_cast<size_t>(root)] = true;
    Branching b{root, Direction::In, {}};
    for (int step = 1; step < n; ++step) {
        int best = -1;
        for (const Arc& a : d.arcs()) {
            if (!allowed[static_cast<size_t>(a.id)]) continue;
            if (in_tree[static_cast<size_t>(a.head)] && !in_tree[static_cast<size_t>(a.tail)]) {
                best = a.id;
                break;  // arcs() is id-ordered
            }
        }
        if (best < 0) return std::nullopt;
        in_tree[static_cast<size_t>(d.arc(best).tail)] = true;
        b.arc_ids.push_back(best);
    }
    std::sort(b.arc_ids.begin(), b.arc_ids.end());
    return b;
}

}  // namespace

std::optional<GoodPair> find_good_pair(const Digraph& d, int u, int v) {
    int n = d.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n) throw ArgumentError("root out of range");
    if (n == 1) {
        return GoodPair{Branching{u, Direction::Out, {}}, Branching{v, Direction::In, {}}};
    }

    std::optional<GoodPair> found;
    enumerate_out_branchings(d, u, [&](const Branching& b) {
        std::vector<bool> allowed(static_cast<size_t>(d.arc_count()), true);
        for (int id : b.arc_ids) allowed[static_cast<size_t>(id)] = false;
        if (reach_within(d, v, allowed, false) != n) return true;
        std::optional<Branching> in_b = extract_in_branching(d, v, allowed);
        if (!in_b) return true;  // cannot happen when reachability holds
        found = GoodPair{b, *in_b};
        return false;
    });
    return found;
}

bool GoodPairMatrix::all_good() const {
    for (const auto& row : good) {
        for (bool cell : row) {
            if (!cell) return false;
        }
    }
    return true;
}

GoodPairMatrix good_pair_matrix(const Digraph& d) {
    int n = d.vertex_count();
    GoodPairMatrix m;
    m.good.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    m.certificates.assign(static_cast<size_t>(n),
                          std::vector<std::optional<GoodPair>>(static_cast<size_t>(n)));
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            auto pair = find_good_pair(d, u, v);
            m.good[static_cast<size_t>(u)][static_cast<size_t>(v)] = pair.has_value();
            m.certificates[static_cast<size_t>(u)][static_cast<size_t>(v)] = std::move(pair);
        }
    }
    return m;
}

std::optional<ArcDecomposition> find_strong_arc_decomposition(const Digraph& d) {
    int m = d.arc_count();
    int n = d.vertex_count();
    if (m >= 63 || (std::uint64_t{1} << m) > resource_limit()) {
        throw ResourceLimitError("arc bipartition count exceeds BRANCHPAIR_LIMIT");
    }
    if (n <= 1 || m < 2) return std::nullopt;

    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
        // Both sides must give every vertex in- and out-degree >= 1.
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            std::array<bool, 4> covered{};  // a1-out, a1-in, a2-out, a2-in
            for (int id : d.out_arcs(v)) covered[(mask >> id) & 1 ? 0 : 2] = true;
            for (int id : d.in_arcs(v)) covered[(mask >> id) & 1 ? 1 : 3] = true;
            ok = covered[0] && covered[1] && covered[2] && covered[3];
        }
        if (!ok) continue;
        std::vector<bool> m1(static_cast<size_t>(m), false), m2(static_cast<size_t>(m), false);
        for (int id = 0; id < m; ++id) {
            ((mask >> id) & 1 ? m1 : m2)[static_cast<size_t>(id)] = true;
        }
        auto strong_in = [&](const std::vector<bool>& side) {
            return reach_within(d, 0, side, true) == n && reach_within(d, 0, side, false) == n;
        };
        if (!strong_in(m1) || !strong_in(m2)) continue;
        ArcDecomposition dec;
        for (int id = 0; id < m; ++id) {
            ((mask >> id) & 1 ? dec.a1 : dec.a2).push_back(id);
        }
        return dec;
    }
    return std::nullopt;
}

std::string to_dot(const Digraph& d, const GoodPair& p, const std::string& name) {
    std::vector<int> cls(static_cast<size_t>(d.arc_count()), 0);
    for (int id : p.out_branching.arc_ids) cls[static_cast<size_t>(id)] = 1;
    for (int id : p.in_branching.arc_ids) cls[static_cast<size_t>(id)] = 2;
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (int v = 0; v < d.vertex_count(); ++v) {
        out << "  \"" << d.display_name(v) << "\";\n";
    }
    for (const Arc& a : d.arcs()) {
        out << "  \"" << d.display_name(a.tail) << "\" -> \"" << d.display_name(a.head) << "\"";
        switch (cls[static_cast<size_t>(a.id)]) {
            case 1:
                out << " [color=red, label=\"out\"]";
                break;
            case 2:
                out << " [color=green, label=\"in\"]";
                break;
            default:
                out << " [color=gray]";
                break;
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace branchpair
