#include "branchpair/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace branchpair {
namespace constructions {

using catalog::BasicCase;

namespace {

using LabelArc = std::pair<std::string, std::string>;

std::multiset<LabelArc> label_arcs(const Digraph& d) {
    std::multiset<LabelArc> s;
    for (const Arc& a : d.arcs()) s.insert({d.label(a.tail), d.label(a.head)});
    return s;
}

int require_arc(const Digraph& d, const std::string& t, const std::string& h) {
    auto id = d.find_arc(d.require_vertex(t), d.require_vertex(h));
    if (!id) throw ConstructionGapError("required arc " + t + ">" + h + " missing");
    return *id;
}

Branching make_branching(int root, Direction dir, std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    return Branching{root, dir, std::move(ids)};
}

GoodPair checked(const Digraph& d, GoodPair p, const std::string& context) {
    if (!validate_good_pair(d, p)) {
        throw ConstructionGapError("constructed pair fails validation: " + context);
    }
    return p;
}

GoodPair checked(const Digraph& d, Branching out, Branching in, const std::string& context) {
    return checked(d, GoodPair{std::move(out), std::move(in)}, context);
}

// Branching from "t>h" label specs.
Branching branching_from_specs(const Digraph& d, int root, Direction dir,
                               const std::vector<LabelArc>& specs) {
    std::vector<int> ids;
    for (const auto& [t, h] : specs) ids.push_back(require_arc(d, t, h));
    return make_branching(root, dir, std::move(ids));
}

}  // namespace

const std::vector<std::vector<int>>& s4_automorphisms() {
    static const std::vector<std::vector<int>> autos = [] {
        Digraph s4 = catalog::build_s4();
        std::vector<std::vector<int>> result;
        std::vector<int> perm(4);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (const Arc& a : s4.arcs()) {
                if (!s4.has_arc(perm[static_cast<size_t>(a.tail)],
                                perm[static_cast<size_t>(a.head)])) {
                    ok = false;
                    break;
                }
            }
            if (ok) result.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return result;
    }();
    return autos;
}

namespace {

GoodPair map_pair_through(const Digraph& s4, const std::vector<int>& perm, const GoodPair& p) {
    auto map_branching = [&](const Branching& b) {
        std::vector<int> ids;
        for (int id : b.arc_ids) {
            const Arc& a = s4.arc(id);
            auto mapped = s4.find_arc(perm[static_cast<size_t>(a.tail)],
                                      perm[static_cast<size_t>(a.head)]);
            if (!mapped) throw ConstructionGapError("automorphism image arc missing");
            ids.push_back(*mapped);
        }
        return make_branching(perm[static_cast<size_t>(b.root)], b.direction, std::move(ids));
    };
    return GoodPair{map_branching(p.out_branching), map_branching(p.in_branching)};
}

}  // namespace

const S4PairTable& s4_pair_table() {
    static const S4PairTable table = [] {
        Digraph s4 = catalog::build_s4();
        auto arcs = [&](const std::vector<LabelArc>& specs, int root, Direction dir) {
            return branching_from_specs(s4, root, dir, specs);
        };

        // The four pairs listed in the proof, verbatim.
        struct BaseEntry {
            int u, v;
            GoodPair pair;
        };
        std::vector<BaseEntry> base;
        base.push_back({0, 0,
                        GoodPair{arcs({{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}}, 0, Direction::Out),
                                 arcs({{"v2", "v4"}, {"v4", "v1"}, {"v3", "v1"}}, 0, Direction::In)}});
        base.push_back({0, 1,
                        GoodPair{arcs({{"v1", "v3"}, {"v3", "v4"}, {"v4", "v2"}}, 0, Direction::Out),
                                 arcs({{"v3", "v1"}, {"v4", "v1"}, {"v1", "v2"}}, 1, Direction::In)}});
        base.push_back({1, 0,
                        GoodPair{arcs({{"v2", "v4"}, {"v4", "v1"}, {"v1", "v3"}}, 1, Direction::Out),
                                 arcs({{"v4", "v2"}, {"v2", "v3"}, {"v3", "v1"}}, 0, Direction::In)}});
        base.push_back({0, 2,
                        GoodPair{arcs({{"v1", "v3"}, {"v3", "v4"}, {"v4", "v2"}}, 0, Direction::Out),
                                 arcs({{"v4", "v1"}, {"v1", "v2"}, {"v2", "v3"}}, 2, Direction::In)}});

        S4PairTable t;
        std::array<std::array<bool, 4>, 4> filled{};
        for (const auto& e : base) {
            t.entries[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] = e.pair;
            filled[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] = true;
        }
        // Close the table under the automorphism group (vertex-transitivity
        // carries the four checked pairs to all sixteen).
        for (const auto& perm : s4_automorphisms()) {
            for (const auto& e : base) {
                int u = perm[static_cast<size_t>(e.u)];
                int v = perm[static_cast<size_t>(e.v)];
                if (filled[static_cast<size_t>(u)][static_cast<size_t>(v)]) continue;
                GoodPair image = map_pair_through(s4, perm, e.pair);
                if (!validate_good_pair(s4, image)) {
                    throw ConstructionGapError("automorphic table entry fails validation");
                }
                t.entries[static_cast<size_t>(u)][static_cast<size_t>(v)] = image;
                filled[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
            }
        }
        for (int u = 0; u < 4; ++u) {
            for (int v = 0; v < 4; ++v) {
                if (!filled[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
                    throw ConstructionGapError("automorphism closure left a hole in the S4 table");
                }
            }
        }
        return t;
    }();
    return table;
}

GoodPair s4_good_pair(int u, int v) {
    if (u < 0 || u > 3 || v < 0 || v > 3) throw ArgumentError("S4 vertex out of range");
    return s4_pair_table().entries[static_cast<size_t>(u)][static_cast<size_t>(v)];
}

namespace {

// ---- shared lifting machinery ------------------------------------------

// Second out-/in-neighbour of a (besides v2 / v4) in each basic case, read
// off the solid arcs of the figures.
std::string a_second_out(BasicCase e) {
    switch (e) {
        case BasicCase::i: return "v4";
        case BasicCase::ii: return "v1";
        case BasicCase::iii: return "v4";
        case BasicCase::iv: return "v3";
        case BasicCase::v: return "v4";
    }
    throw ArgumentError("bad basic case");
}

std::string a_second_in(BasicCase e) {
    switch (e) {
        case BasicCase::i: return "v2";
        case BasicCase::ii: return "v2";
        case BasicCase::iii: return "v1";
        case BasicCase::iv: return "v2";
        case BasicCase::v: return "v3";
    }
    throw ArgumentError("bad basic case");
}

// Second out-/in-neighbour of b (besides v1 / v3) in each starred case.
std::string b_second_out(BasicCase f) {
    switch (f) {
        case BasicCase::i: return "v3";
        case BasicCase::ii: return "v3";
        case BasicCase::iii: return "v4";
        case BasicCase::iv: return "v3";
        case BasicCase::v: return "v2";
    }
    throw ArgumentError("bad basic case");
}

std::string b_second_in(BasicCase f) {
    switch (f) {
        case BasicCase::i: return "v1";
        case BasicCase::ii: return "v4";
        case BasicCase::iii: return "v1";
        case BasicCase::iv: return "v2";
        case BasicCase::v: return "v1";
    }
    throw ArgumentError("bad basic case");
}

struct BasicInfo {
    BasicCase e;
    bool dashed;
};

std::optional<BasicInfo> match_basic(const Digraph& d) {
    if (d.vertex_count() != 5) return std::nullopt;
    auto got = label_arcs(d);
    for (BasicCase e : catalog::kBasicCases) {
        for (bool dashed : {false, true}) {
            if (dashed && e != BasicCase::iv && e != BasicCase::v) continue;
            if (got == label_arcs(catalog::build_basic(e, /*barred=*/true, dashed))) {
                return BasicInfo{e, dashed};
            }
        }
    }
    return std::nullopt;
}

struct CombinationInfo {
    BasicCase e;
    BasicCase f;
    bool dash_a;
    bool dash_b;
};

std::optional<CombinationInfo> match_combination(const Digraph& d) {
    if (d.vertex_count() != 6) return std::nullopt;
    auto got = label_arcs(d);
    for (BasicCase e : catalog::kBasicCases) {
        for (BasicCase f : catalog::kBasicCases) {
            for (bool da : {false, true}) {
                if (da && e != BasicCase::iv && e != BasicCase::v) continue;
                for (bool db : {false, true}) {
                    if (db && f != BasicCase::iv && f != BasicCase::v) continue;
                    if (got == label_arcs(catalog::build_combination(e, f, da, db))) {
                        return CombinationInfo{e, f, da, db};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// First S4 good pair for roots (x, y) satisfying `pred`, scanning
// out-branchings then in-branchings in enumeration order.
template <typename Pred>
std::optional<GoodPair> find_s4_pair(const Digraph& s4, int x, int y, Pred pred) {
    std::vector<Branching> outs = all_out_branchings(s4, x);
    std::vector<Branching> ins = all_in_branchings(s4, y);
    for (const Branching& t : outs) {
        for (const Branching& w : ins) {
            bool disjoint = true;
            for (int id : t.arc_ids) {
                if (std::find(w.arc_ids.begin(), w.arc_ids.end(), id) != w.arc_ids.end()) {
                    disjoint = false;
                    break;
                }
            }
            if (disjoint && pred(t, w)) return GoodPair{t, w};
        }
    }
    return std::nullopt;
}

bool contains_arc(const Branching& b, int id) {
    return std::find(b.arc_ids.begin(), b.arc_ids.end(), id) != b.arc_ids.end();
}

std::vector<int> without_arc(const std::vector<int>& ids, int id) {
    std::vector<int> out;
    for (int x : ids) {
        if (x != id) out.push_back(x);
    }
    return out;
}

// Maps S4 arc ids into the host digraph by endpoint labels.
std::vector<int> translate(const Digraph& s4, const Digraph& host, const std::vector<int>& ids) {
    std::vector<int> out;
    for (int id : ids) {
        const Arc& a = s4.arc(id);
        out.push_back(require_arc(host, s4.label(a.tail), s4.label(a.head)));
    }
    return out;
}

}  // namespace

GoodPair lift_to_basic_case(const Digraph& d, int u, int v) {
    auto info = match_basic(d);
    if (!info) {
        throw ConstructionGapError("digraph is not one of the (barred) basic cases");
    }
    int n = d.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n) throw ArgumentError("root out of range");

    const Digraph s4 = catalog::build_s4();
    const int s4_v4v2 = *s4.find_arc(3, 1);
    const int a_vertex = d.require_vertex("a");
    const std::string vm = a_second_out(info->e);
    const std::string vn = a_second_in(info->e);
    const int id_av2 = require_arc(d, "a", "v2");
    const int id_v4a = require_arc(d, "v4", "a");
    const int id_avm = require_arc(d, "a", vm);
    const int id_vna = require_arc(d, vn, "a");

    auto s4_vertex_of = [&](int host_vertex) { return s4.require_vertex(d.label(host_vertex)); };
    auto context = [&] {
        return "basic case (" + catalog::basic_case_name(info->e) + "), roots " +
               d.display_name(u) + "," + d.display_name(v);
    };

    if (u != a_vertex && v != a_vertex) {
        GoodPair base = s4_good_pair(s4_vertex_of(u), s4_vertex_of(v));
        const Branching& t = base.out_branching;
        const Branching& w = base.in_branching;
        if (contains_arc(w, s4_v4v2)) {
            // Substitute the missing arc through the path v4-a-v2 inside the
            // in-branching; the out-branching picks up a through vn.
            std::vector<int> in_ids = translate(s4, d, without_arc(w.arc_ids, s4_v4v2));
            in_ids.push_back(id_v4a);
            in_ids.push_back(id_av2);
            std::vector<int> out_ids = translate(s4, d, t.arc_ids);
            out_ids.push_back(id_vna);
            return checked(d, make_branching(u, Direction::Out, std::move(out_ids)),
                           make_branching(v, Direction::In, std::move(in_ids)), context());
        }
        if (contains_arc(t, s4_v4v2)) {
            std::vector<int> out_ids = translate(s4, d, without_arc(t.arc_ids, s4_v4v2));
            out_ids.push_back(id_v4a);
            out_ids.push_back(id_av2);
            std::vector<int> in_ids = translate(s4, d, w.arc_ids);
            in_ids.push_back(id_avm);
            return checked(d, make_branching(u, Direction::Out, std::move(out_ids)),
                           make_branching(v, Direction::In, std::move(in_ids)), context());
        }
        std::vector<int> out_ids = translate(s4, d, t.arc_ids);
        out_ids.push_back(id_v4a);
        std::vector<int> in_ids = translate(s4, d, w.arc_ids);
        in_ids.push_back(id_av2);
        return checked(d, make_branching(u, Direction::Out, std::move(out_ids)),
                       make_branching(v, Direction::In, std::move(in_ids)), context());
    }

    if (u == a_vertex && v == a_vertex) {
        // Hang a off both sides of the (v2, v4) pair.
        GoodPair base = s4_good_pair(1, 3);
        std::vector<int> out_ids = translate(s4, d, base.out_branching.arc_ids);
        out_ids.push_back(id_av2);
        std::vector<int> in_ids = translate(s4, d, base.in_branching.arc_ids);
        in_ids.push_back(id_v4a);
        return checked(d, make_branching(u, Direction::Out, std::move(out_ids)),
                       make_branching(v, Direction::In, std::move(in_ids)), context());
    }

    if (u == a_vertex) {
        int vi = s4_vertex_of(v);
        // Type 1: a (v2, vi) pair whose in-branching avoids v4v2.
        if (auto base = find_s4_pair(s4, 1, vi, [&](const Branching&, const Branching& w) {
                return !contains_arc(w, s4_v4v2);
            })) {
            std::vector<int> out_ids = translate(s4, d, base->out_branching.arc_ids);
            out_ids.push_back(id_av2);
            std::vector<int> in_ids = translate(s4, d, base->in_branching.arc_ids);
            in_ids.push_back(id_avm);
            return checked(d, make_branching(u, Direction::Out, std::move(out_ids)),
                           make_branching(v, Direction::In, std::move(in_ids)), context());
        }
        // Type 2: a (vm, vi) pair whose in-branching contains v4v2.
        int vm_s4 = s4.require_vertex(vm);
        if (auto base = find_s4_pair(s4, vm_s4, vi, [&](const Branching&, const Branching& w) {
                return contains_arc(w, s4_v4v2);
            })) {
            std::vector<int> in_ids =
                translate(s4, d, without_arc(base->in_branching.arc_ids, s4_v4v2));
            in_ids.push_back(id_v4a);
            in_ids.push_back(id_av2);
            std::vector<int> out_ids = translate(s4, d, base->out_branching.arc_ids);
            out_ids.push_back(id_avm);
            return checked(d, make_branching(u, Direction::Out, std::move(out_ids)),
                           make_branching(v, Direction::In, std::move(in_ids)), context());
        }
        throw ConstructionGapError("no type 1/type 2 branch applies: " + context());
    }

    // v == a_vertex.
    int ui = s4_vertex_of(u);
    // Type 1': a (ui, v4) pair whose out-branching avoids v4v2.
    if (auto base = find_s4_pair(s4, ui, 3, [&](const Branching& t, const Branching&) {
            return !contains_arc(t, s4_v4v2);
        })) {
        std::vector<int> in_ids = translate(s4, d, base->in_branching.arc_ids);
        in_ids.push_back(id_v4a);
        std::vector<int> out_ids = translate(s4, d, base->out_branching.arc_ids);
        out_ids.push_back(id_vna);
        return checked(d, make_branching(u, Direction::Out, std::move(out_ids)),
                       make_branching(v, Direction::In, std::move(in_ids)), context());
    }
    // Type 2': a (ui, vn) pair whose out-branching contains v4v2.
    int vn_s4 = s4.require_vertex(vn);
    if (auto base = find_s4_pair(s4, ui, vn_s4, [&](const Branching& t, const Branching&) {
            return contains_arc(t, s4_v4v2);
        })) {
        std::vector<int> out_ids =
            translate(s4, d, without_arc(base->out_branching.arc_ids, s4_v4v2));
        out_ids.push_back(id_v4a);
        out_ids.push_back(id_av2);
        std::vector<int> in_ids = translate(s4, d, base->in_branching.arc_ids);
        in_ids.push_back(id_vna);
        return checked(d, make_branching(u, Direction::Out, std::move(out_ids)),
                       make_branching(v, Direction::In, std::move(in_ids)), context());
    }
    throw ConstructionGapError("no type 1'/type 2' branch applies: " + context());
}

namespace {

// 180-degree rotation with a<->b: the relabeling under which reversing a
// combination (e) x (f)* yields (f) x (e)*.
std::string phi(const std::string& label) {
    if (label == "v1") return "v4";
    if (label == "v2") return "v3";
    if (label == "v3") return "v2";
    if (label == "v4") return "v1";
    if (label == "a") return "b";
    if (label == "b") return "a";
    throw ArgumentError("unexpected combination label '" + label + "'");
}

struct AbRule {
    bool pair_ab;  // true: handles (a,b); false: handles (b,a)
    std::vector<LabelArc> out_arcs;
    std::vector<LabelArc> in_arcs;
};

// vm/vn placeholders are resolved per combination before use.
std::optional<AbRule> structure_rule(const CombinationInfo& info, bool pair_ab) {
    const std::string vm = "a>" + a_second_out(info.e);
    const std::string vn = a_second_in(info.e);
    const std::string b_out2 = "b>" + b_second_out(info.f);
    auto spec = [](const std::string& s) {
        auto pos = s.find('>');
        return LabelArc{s.substr(0, pos), s.substr(pos + 1)};
    };
    if (pair_ab && info.f == BasicCase::iv) {
        // Structure 1: a v2-out-branching carrying v3v1 (substituted through
        // b), against the clean v2-in-branching closed by v2b.
        return AbRule{true,
                      {spec("a>v2"), spec("v2>v3"), spec("v3>b"), spec("b>v1"), spec("v2>v4")},
                      {spec("v3>v4"), spec("v4>v1"), spec("v1>v2"), spec("v2>b"), spec(vm)}};
    }
    if (pair_ab && info.f == BasicCase::ii) {
        // Structure 2 read as the clean (v2, v4) pair; b hangs off v3 and v4.
        return AbRule{true,
                      {spec("a>v2"), spec("v2>v4"), spec("v4>v1"), spec("v1>v3"), spec("v3>b")},
                      {spec("v1>v2"), spec("v2>v3"), spec("v3>v4"), spec("v4>b"), spec(vm)}};
    }
    if (!pair_ab && info.e == BasicCase::v) {
        // Structure 2 read as the clean (v1, v3) pair; a hangs off v4 and v3.
        return AbRule{false,
                      {spec("b>v1"), spec("v1>v2"), spec("v2>v3"), spec("v3>v4"), spec("v4>a")},
                      {spec("v2>v4"), spec("v4>v1"), spec("v1>v3"), spec("v3>a"), spec(b_out2)}};
    }
    if (!pair_ab && info.f == BasicCase::iii) {
        // Structure 3: the clean (v4, v4) pair entered through bv4.
        return AbRule{false,
                      {spec("b>v4"), spec("v4>v1"), spec("v1>v2"), spec("v2>v3"), spec(vn + ">a")},
                      {spec("v1>v3"), spec("v3>v4"), spec("v2>v4"), spec("v4>a"), spec("b>v1")}};
    }
    if (!pair_ab && info.e == BasicCase::i) {
        // Structure 4: the five-vertex structure drawn inside (i).
        return AbRule{false,
                      {spec("b>v1"), spec("v1>v2"), spec("v2>v3"), spec("v2>a"), spec("a>v4")},
                      {spec("v1>v3"), spec("v2>v4"), spec("v3>v4"), spec("v4>a"), spec(b_out2)}};
    }
    if (pair_ab && info.e == BasicCase::ii &&
        (info.f == BasicCase::i || info.f == BasicCase::iii || info.f == BasicCase::v)) {
        // a's second out-neighbour v1 feeds a clean (v1, v1) pair; b hangs
        // off v3 and v1.
        return AbRule{true,
                      {spec("a>v1"), spec("v1>v2"), spec("v1>v3"), spec("v2>v4"), spec("v3>b")},
                      {spec("v2>v3"), spec("v3>v4"), spec("v4>v1"), spec("v1>b"), spec("a>v2")}};
    }
    if (pair_ab && info.e == BasicCase::iv &&
        (info.f == BasicCase::i || info.f == BasicCase::iii || info.f == BasicCase::v)) {
        // a's second out-neighbour v3 roots the out-branching; the
        // in-branching reaches b through the substituted v4-a-v2 path.
        return AbRule{true,
                      {spec("a>v3"), spec("v3>v4"), spec("v4>v1"), spec("v1>v2"), spec("v1>b")},
                      {spec("v4>a"), spec("a>v2"), spec("v2>v3"), spec("v1>v3"), spec("v3>b")}};
    }
    if (!pair_ab && info.f == BasicCase::v) {
        // bv2 roots the out-branching over the clean (v2, v4) pair.
        return AbRule{false,
                      {spec("b>v2"), spec("v2>v4"), spec("v4>v1"), spec("v1>v3"), spec(vn + ">a")},
                      {spec("v1>v2"), spec("v2>v3"), spec("v3>v4"), spec("v4>a"), spec("b>v1")}};
    }
    return std::nullopt;
}

// The nine displayed combination certificates, keyed (e, f, pair).
std::optional<AbRule> figure_rule(const CombinationInfo& info, bool pair_ab) {
    using C = BasicCase;
    auto is = [&](C e, C f) { return info.e == e && info.f == f; };
    if (!pair_ab) {
        if (is(C::ii, C::ii)) {
            return AbRule{false,
                          {{"b", "v3"}, {"v3", "v4"}, {"v4", "v1"}, {"v4", "a"}, {"a", "v2"}},
                          {{"v3", "b"}, {"b", "v1"}, {"v1", "v2"}, {"v4", "b"}, {"v2", "a"}}};
        }
        if (is(C::iv, C::ii)) {
            return AbRule{false,
                          {{"b", "v1"}, {"a", "v3"}, {"v1", "v2"}, {"v2", "v4"}, {"v2", "a"}},
                          {{"b", "v3"}, {"v3", "v4"}, {"v2", "v3"}, {"v1", "v3"}, {"v4", "a"}}};
        }
        if (is(C::iv, C::iv)) {
            return AbRule{false,
                          {{"b", "v1"}, {"v1", "v2"}, {"v2", "a"}, {"v2", "v4"}, {"a", "v3"}},
                          {{"b", "v3"}, {"v1", "v3"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "a"}}};
        }
        return std::nullopt;
    }
    if (is(C::i, C::i)) {
        return AbRule{true,
                      {{"a", "v2"}, {"v2", "v4"}, {"v2", "v3"}, {"v3", "b"}, {"b", "v1"}},
                      {{"v2", "a"}, {"a", "v4"}, {"v3", "v4"}, {"v4", "v1"}, {"v1", "b"}}};
    }
    if (is(C::i, C::iii)) {
        return AbRule{true,
                      {{"a", "v2"}, {"v2", "v3"}, {"v3", "b"}, {"b", "v1"}, {"b", "v4"}},
                      {{"a", "v4"}, {"v2", "v4"}, {"v4", "v1"}, {"v3", "v4"}, {"v1", "b"}}};
    }
    if (is(C::iii, C::iii)) {
        return AbRule{true,
                      {{"a", "v2"}, {"v2", "v3"}, {"v3", "b"}, {"b", "v1"}, {"b", "v4"}},
                      {{"a", "v4"}, {"v4", "v1"}, {"v2", "v4"}, {"v3", "v4"}, {"v1", "b"}}};
    }
    if (is(C::i, C::v)) {
        return AbRule{true,
                      {{"a", "v4"}, {"v4", "v1"}, {"v1", "v3"}, {"v1", "b"}, {"b", "v2"}},
                      {{"v4", "a"}, {"a", "v2"}, {"v2", "v3"}, {"v3", "b"}, {"v1", "v2"}}};
    }
    if (is(C::iii, C::v)) {
        return AbRule{true,
                      {{"a", "v4"}, {"v4", "v1"}, {"v1", "b"}, {"b", "v2"}, {"v1", "v3"}},
                      {{"v3", "b"}, {"v2", "v3"}, {"v1", "v2"}, {"v4", "a"}, {"a", "v2"}}};
    }
    if (is(C::v, C::v)) {
        return AbRule{true,
                      {{"a", "v4"}, {"v4", "v1"}, {"v1", "b"}, {"b", "v2"}, {"v1", "v3"}},
                      {{"v4", "a"}, {"a", "v2"}, {"v2", "v3"}, {"v3", "b"}, {"v1", "v2"}}};
    }
    return std::nullopt;
}

GoodPair lift_combination_impl(const Digraph& d, int u, int v, bool allow_mirror);

GoodPair lift_via_mirror(const Digraph& d, const CombinationInfo& info, int u, int v,
                         bool allow_mirror) {
    // Reversing all arcs and relabeling turns (e) x (f)* into (f) x (e)* and
    // swaps the roles of the two roots.
    Digraph mirror = catalog::build_combination(info.f, info.e, info.dash_b, info.dash_a);
    int mu = mirror.require_vertex(phi(d.label(v)));
    int mv = mirror.require_vertex(phi(d.label(u)));
    GoodPair p = lift_combination_impl(mirror, mu, mv, allow_mirror);
    auto map_back = [&](const Branching& b, int root, Direction dir) {
        std::vector<int> ids;
        for (int id : b.arc_ids) {
            const Arc& a = mirror.arc(id);
            ids.push_back(require_arc(d, phi(mirror.label(a.head)), phi(mirror.label(a.tail))));
        }
        return make_branching(root, dir, std::move(ids));
    };
    return GoodPair{map_back(p.in_branching, u, Direction::Out),
                    map_back(p.out_branching, v, Direction::In)};
}

GoodPair lift_combination_impl(const Digraph& d, int u, int v, bool allow_mirror) {
    auto info = match_combination(d);
    if (!info) throw ConstructionGapError("digraph is not a combination (e) x (f)*");
    int n = d.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n) throw ArgumentError("root out of range");
    const int a_vertex = d.require_vertex("a");
    const int b_vertex = d.require_vertex("b");

    auto context = [&] {
        return "combination (" + catalog::basic_case_name(info->e) + ") x (" +
               catalog::basic_case_name(info->f) + ")*, roots " + d.display_name(u) + "," +
               d.display_name(v);
    };

    bool u_ab = u == a_vertex || u == b_vertex;
    bool v_ab = v == a_vertex || v == b_vertex;

    if (!(u_ab && v_ab && u != v)) {
        if (u != b_vertex && v != b_vertex) {
            // Contract the v3-b-v1 path: lift in the barred basic case, then
            // re-expand around b.
            Digraph base = catalog::build_basic(info->e, /*barred=*/true, info->dash_a);
            GoodPair p = lift_to_basic_case(base, base.require_vertex(d.label(u)),
                                            base.require_vertex(d.label(v)));
            int v3v1 = *base.find_arc(base.require_vertex("v3"), base.require_vertex("v1"));
            auto to_host = [&](const std::vector<int>& ids) {
                std::vector<int> out;
                for (int id : ids) {
                    const Arc& a = base.arc(id);
                    out.push_back(require_arc(d, base.label(a.tail), base.label(a.head)));
                }
                return out;
            };
            const int id_v3b = require_arc(d, "v3", "b");
            const int id_bv1 = require_arc(d, "b", "v1");
            std::vector<int> out_ids, in_ids;
            if (contains_arc(p.in_branching, v3v1)) {
                in_ids = to_host(without_arc(p.in_branching.arc_ids, v3v1));
                in_ids.push_back(id_v3b);
                in_ids.push_back(id_bv1);
                out_ids = to_host(p.out_branching.arc_ids);
                out_ids.push_back(require_arc(d, b_second_in(info->f), "b"));
            } else if (contains_arc(p.out_branching, v3v1)) {
                out_ids = to_host(without_arc(p.out_branching.arc_ids, v3v1));
                out_ids.push_back(id_v3b);
                out_ids.push_back(id_bv1);
                in_ids = to_host(p.in_branching.arc_ids);
                in_ids.push_back(require_arc(d, "b", b_second_out(info->f)));
            } else {
                in_ids = to_host(p.in_branching.arc_ids);
                in_ids.push_back(id_bv1);
                out_ids = to_host(p.out_branching.arc_ids);
                out_ids.push_back(id_v3b);
            }
            return checked(d, make_branching(u, Direction::Out, std::move(out_ids)),
                           make_branching(v, Direction::In, std::move(in_ids)), context());
        }
        // Roots lie in {v1..v4, b}: contract a on the reversed digraph.
        if (!allow_mirror) throw ConstructionGapError("mirror recursion loop: " + context());
        return checked(d, lift_via_mirror(d, *info, u, v, /*allow_mirror=*/false), context());
    }

    // The (a, b) and (b, a) pairs.
    bool pair_ab = u == a_vertex;
    if (auto rule = structure_rule(*info, pair_ab)) {
        return checked(d, branching_from_specs(d, u, Direction::Out, rule->out_arcs),
                       branching_from_specs(d, v, Direction::In, rule->in_arcs), context());
    }
    if (auto rule = figure_rule(*info, pair_ab)) {
        return checked(d, branching_from_specs(d, u, Direction::Out, rule->out_arcs),
                       branching_from_specs(d, v, Direction::In, rule->in_arcs), context());
    }
    if (!allow_mirror) throw ConstructionGapError("mirror recursion loop: " + context());
    return checked(d, lift_via_mirror(d, *info, u, v, /*allow_mirror=*/false), context());
}

}  // namespace

GoodPair lift_to_combination(const Digraph& d, int u, int v) {
    return lift_combination_impl(d, u, v, /*allow_mirror=*/true);
}

}  // namespace constructions
}  // namespace branchpair
