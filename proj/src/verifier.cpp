#include "branchpair/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "branchpair/constructions.hpp"

namespace branchpair {
namespace verifier {

std::string scope_name(Scope s) {
    switch (s) {
        case Scope::Paper16: return "paper16";
        case Scope::AllCombinations: return "all-combinations";
        case Scope::Full: return "full";
    }
    throw ArgumentError("bad scope");
}

Scope scope_from_name(const std::string& name) {
    if (name == "paper16") return Scope::Paper16;
    if (name == "all-combinations") return Scope::AllCombinations;
    if (name == "full") return Scope::Full;
    throw ArgumentError("unknown scope '" + name + "' (paper16 | all-combinations | full)");
}

std::string arc_string(const Digraph& d, int arc_id) {
    const Arc& a = d.arc(arc_id);
    return d.display_name(a.tail) + ">" + d.display_name(a.head) + "#" + std::to_string(a.id);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string pair_key(const Digraph& d, int u, int v) {
    return d.display_name(u) + "," + d.display_name(v);
}

CertificateText certificate_text(const Digraph& d, const GoodPair& p) {
    CertificateText c;
    for (int id : p.out_branching.arc_ids) c.out_arcs.push_back(arc_string(d, id));
    for (int id : p.in_branching.arc_ids) c.in_arcs.push_back(arc_string(d, id));
    return c;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t cell_seed(std::uint64_t seed, int i, int j) {
    std::uint64_t ij = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
                       static_cast<std::uint32_t>(j);
    return splitmix64(seed ^ splitmix64(ij));
}

// Wilson's loop-erased random walk: uniform spanning tree of the underlying
// undirected multigraph, returned as directed arc ids.
std::vector<int> sample_spanning_arcs(const Digraph& d, std::mt19937_64& rng) {
    int n = d.vertex_count();
    struct Inc {
        int arc;
        int other;
    };
    std::vector<std::vector<Inc>> inc(static_cast<size_t>(n));
    for (const Arc& a : d.arcs()) {
        inc[static_cast<size_t>(a.tail)].push_back({a.id, a.head});
        inc[static_cast<size_t>(a.head)].push_back({a.id, a.tail});
    }
    std::vector<bool> in_tree(static_cast<size_t>(n), false);
    std::vector<int> next_arc(static_cast<size_t>(n), -1);
    std::vector<int> next_vertex(static_cast<size_t>(n), -1);
    in_tree[0] = true;
    std::vector<int> tree;
    for (int i = 1; i < n; ++i) {
        int u = i;
        while (!in_tree[static_cast<size_t>(u)]) {
            const auto& edges = inc[static_cast<size_t>(u)];
            if (edges.empty()) throw ArgumentError("underlying graph is disconnected");
            const Inc& pick = edges[static_cast<size_t>(rng() % edges.size())];
            next_arc[static_cast<size_t>(u)] = pick.arc;
            next_vertex[static_cast<size_t>(u)] = pick.other;
            u = pick.other;
        }
        u = i;
        while (!in_tree[static_cast<size_t>(u)]) {
            in_tree[static_cast<size_t>(u)] = true;
            tree.push_back(next_arc[static_cast<size_t>(u)]);
            u = next_vertex[static_cast<size_t>(u)];
        }
    }
    return tree;
}

int reach_in_mask(const Digraph& d, int start, const std::vector<bool>& allowed, bool forward) {
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

// Greedy out-branching (smallest arc id per attached vertex) within a mask.
std::optional<Branching> extract_out_branching(const Digraph& d, int root,
                                               const std::vector<bool>& allowed) {
    int n = d.vertex_count();
    std::vector<bool> in_tree(static_cast<size_t>(n), false);
    in_tree[static_cast<size_t>(root)] = true;
    Branching b{root, Direction::Out, {}};
    for (int step = 1; step < n; ++step) {
        int best = -1;
        for (const Arc& a : d.arcs()) {
            if (!allowed[static_cast<size_t>(a.id)]) continue;
            if (in_tree[static_cast<size_t>(a.tail)] && !in_tree[static_cast<size_t>(a.head)]) {
                best = a.id;
                break;
            }
        }
        if (best < 0) return std::nullopt;
        in_tree[static_cast<size_t>(d.arc(best).head)] = true;
        b.arc_ids.push_back(best);
    }
    std::sort(b.arc_ids.begin(), b.arc_ids.end());
    return b;
}

void fill_common_fields(VerificationReport& r, const Digraph& d, const std::string& name) {
    r.graph = name;
    r.n = d.vertex_count();
    for (const Arc& a : d.arcs()) r.arcs.push_back(arc_string(d, a.id));
    r.k_arc_strong = arc_strong_connectivity(d).k;
}

}  // namespace

VerificationReport exhaustive_report(const Digraph& d, const std::string& name,
                                     bool with_decomposition) {
    auto start = Clock::now();
    VerificationReport r;
    fill_common_fields(r, d, name);
    GoodPairMatrix m = good_pair_matrix(d);
    r.matrix = m.good;
    r.all_good = m.all_good();
    for (int u = 0; u < d.vertex_count(); ++u) {
        for (int v = 0; v < d.vertex_count(); ++v) {
            const auto& cert = m.certificates[static_cast<size_t>(u)][static_cast<size_t>(v)];
            if (cert) r.certificates[pair_key(d, u, v)] = certificate_text(d, *cert);
        }
    }
    if (with_decomposition) r.decomposition = find_strong_arc_decomposition(d);
    r.runtime_ms = ms_since(start);
    return r;
}

VerificationReport randomized_check(const Digraph& d, int samples, std::uint64_t seed,
                                    const std::string& name) {
    if (samples < 0) throw ArgumentError("samples must be non-negative");
    if (!is_strong(d)) throw ArgumentError("randomized check requires a strong digraph");
    auto start = Clock::now();
    VerificationReport r;
    fill_common_fields(r, d, name);
    r.mode = "randomized";
    r.randomized = RandomizedParams{seed, samples};
    int n = d.vertex_count();
    r.matrix.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i) {      // out-root
        for (int j = 0; j < n; ++j) {  // in-root
            std::mt19937_64 rng(cell_seed(seed, i, j));
            for (int s = 0; s < samples; ++s) {
                std::vector<int> tree = sample_spanning_arcs(d, rng);
                std::vector<bool> tree_mask(static_cast<size_t>(d.arc_count()), false);
                for (int id : tree) tree_mask[static_cast<size_t>(id)] = true;
                // The sampled tree must work as an in-branching at v_j.
                if (reach_in_mask(d, j, tree_mask, false) != n) continue;
                std::vector<bool> residual(static_cast<size_t>(d.arc_count()), true);
                for (int id : tree) residual[static_cast<size_t>(id)] = false;
                if (reach_in_mask(d, i, residual, true) != n) continue;
                r.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
                Branching in_b{j, Direction::In, tree};
                std::sort(in_b.arc_ids.begin(), in_b.arc_ids.end());
                auto out_b = extract_out_branching(d, i, residual);
                if (out_b) {
                    r.certificates[pair_key(d, i, j)] =
                        certificate_text(d, GoodPair{*out_b, in_b});
                }
                break;
            }
        }
    }
    r.all_good = true;
    for (const auto& row : r.matrix) {
        for (bool cell : row) r.all_good = r.all_good && cell;
    }
    r.runtime_ms = ms_since(start);
    return r;
}

namespace {

struct GraphCheck {
    catalog::CatalogKey key;
    std::optional<int> expect_k;
    bool expect_all_good = false;
    bool check_constructive = false;
    bool check_decomposition_none = false;
    // Expected semicomplete-split recognizer outcome, as sorted V1 labels
    // ("" = expect no partition). Unset = recognizer not checked.
    std::optional<std::vector<std::string>> expect_split_v1;
};

std::vector<GraphCheck> checks_for(Scope scope) {
    using catalog::CatalogKey;
    std::vector<GraphCheck> checks;
    auto paper16 = [&] {
        for (int i = 1; i <= 16; ++i) {
            GraphCheck c;
            c.key = CatalogKey::appendix(i);
            c.expect_k = 2;
            c.expect_all_good = true;
            c.check_constructive = true;
            c.check_decomposition_none = true;
            checks.push_back(c);
        }
    };
    auto combinations = [&] {
        for (catalog::BasicCase e : catalog::kBasicCases) {
            for (catalog::BasicCase f : catalog::kBasicCases) {
                for (bool dashed : {false, true}) {
                    GraphCheck c;
                    c.key = CatalogKey::combination(e, f, dashed);
                    c.expect_k = 2;
                    c.expect_all_good = true;
                    c.check_constructive = true;
                    checks.push_back(c);
                }
            }
        }
    };
    switch (scope) {
        case Scope::Paper16:
            paper16();
            break;
        case Scope::AllCombinations:
            combinations();
            break;
        case Scope::Full: {
            paper16();
            combinations();
            GraphCheck s4;
            s4.key = CatalogKey::s4();
            s4.expect_k = 2;
            s4.expect_all_good = true;
            s4.check_constructive = true;
            s4.check_decomposition_none = true;
            checks.push_back(s4);
            for (int i = 1; i <= 6; ++i) {
                GraphCheck c;
                c.key = CatalogKey::multigraph(i);
                c.expect_k = 2;
                c.expect_all_good = true;
                c.check_decomposition_none = true;
                checks.push_back(c);
            }
            GraphCheck d1;
            d1.key = CatalogKey::d1();
            checks.push_back(d1);
            GraphCheck ce1s;
            ce1s.key = CatalogKey::structure_ce1(catalog::CE1Variant::V1Single);
            ce1s.expect_k = 2;
            ce1s.expect_all_good = true;
            ce1s.check_decomposition_none = true;
            ce1s.expect_split_v1 = std::vector<std::string>{"u"};
            checks.push_back(ce1s);
            GraphCheck ce1p;
            ce1p.key = CatalogKey::structure_ce1(catalog::CE1Variant::V1Pair);
            ce1p.expect_k = 2;
            ce1p.expect_all_good = true;
            ce1p.expect_split_v1 = std::vector<std::string>{"u", "v"};
            checks.push_back(ce1p);
            GraphCheck ce2;
            ce2.key = CatalogKey::structure_ce2();
            ce2.expect_split_v1 = std::vector<std::string>{};
            checks.push_back(ce2);
            break;
        }
    }
    return checks;
}

// Constructive certificate for one ordered root pair of a graph the lifting
// machinery covers. The appendix graphs are handled through their catalog
// twins (a1 -> a, a2 -> b).
std::optional<GoodPair> constructive_pair(const catalog::CatalogKey& key, const Digraph& twin,
                                          int u, int v) {
    using catalog::Family;
    switch (key.family) {
        case Family::S4:
            return constructions::s4_good_pair(u, v);
        case Family::Basic:
            return constructions::lift_to_basic_case(twin, u, v);
        case Family::Combination:
            return constructions::lift_to_combination(twin, u, v);
        case Family::AppendixEdgeSet: {
            auto info = catalog::appendix_info(key.index);
            if (info.is_basic) return constructions::lift_to_basic_case(twin, u, v);
            return constructions::lift_to_combination(twin, u, v);
        }
        default:
            return std::nullopt;
    }
}

// The catalog twin a constructive check runs on, plus the label map from the
// verified graph onto the twin.
Digraph constructive_twin(const catalog::CatalogKey& key) {
    using catalog::Family;
    if (key.family == Family::AppendixEdgeSet) {
        auto info = catalog::appendix_info(key.index);
        if (info.is_basic) return catalog::build_basic(info.e, /*barred=*/true);
        return catalog::build_combination(info.e, info.f);
    }
    return catalog::build(key);
}

std::string twin_label(const std::string& label) {
    if (label == "a1") return "a";
    if (label == "a2") return "b";
    return label;
}

}  // namespace

VerificationOutcome verify_catalog(Scope scope) {
    VerificationOutcome outcome;
    for (const GraphCheck& check : checks_for(scope)) {
        const std::string name = check.key.name();
        Digraph d = catalog::build(check.key);
        auto start = Clock::now();
        VerificationReport report;
        fill_common_fields(report, d, name);

        if (check.expect_k && report.k_arc_strong != *check.expect_k) {
            outcome.issues.push_back({name, "connectivity", "",
                                      "expected k=" + std::to_string(*check.expect_k) + ", got " +
                                          std::to_string(report.k_arc_strong)});
        }

        GoodPairMatrix m = good_pair_matrix(d);
        report.matrix = m.good;
        report.all_good = m.all_good();
        int n = d.vertex_count();
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                const auto& cert = m.certificates[static_cast<size_t>(u)][static_cast<size_t>(v)];
                if (!cert) continue;
                report.certificates[pair_key(d, u, v)] = certificate_text(d, *cert);
                if (!validate_good_pair(d, *cert)) {
                    outcome.issues.push_back({name, "certificate", pair_key(d, u, v),
                                              "stored certificate fails validation"});
                }
            }
        }
        if (check.expect_all_good && !report.all_good) {
            for (int u = 0; u < n; ++u) {
                for (int v = 0; v < n; ++v) {
                    if (!m.good[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
                        outcome.issues.push_back({name, "matrix", pair_key(d, u, v),
                                                  "expected a good pair, exhaustive search found none"});
                    }
                }
            }
        }

        if (check.check_constructive) {
            Digraph twin = constructive_twin(check.key);
            for (int u = 0; u < n; ++u) {
                for (int v = 0; v < n; ++v) {
                    int tu = twin.require_vertex(twin_label(d.label(u)));
                    int tv = twin.require_vertex(twin_label(d.label(v)));
                    bool exhaustive = m.good[static_cast<size_t>(u)][static_cast<size_t>(v)];
                    bool constructive = false;
                    std::string error;
                    try {
                        auto pair = constructive_pair(check.key, twin, tu, tv);
                        if (pair) constructive = validate_good_pair(twin, *pair);
                    } catch (const constructions::ConstructionGapError& e) {
                        error = e.what();
                    }
                    if (!error.empty()) {
                        outcome.issues.push_back({name, "constructive", pair_key(d, u, v), error});
                    } else if (constructive != exhaustive) {
                        outcome.issues.push_back(
                            {name, "constructive", pair_key(d, u, v),
                             "constructive/exhaustive existence disagree"});
                    }
                }
            }
        }

        if (check.check_decomposition_none) {
            report.decomposition = find_strong_arc_decomposition(d);
            if (report.decomposition) {
                outcome.issues.push_back({name, "decomposition", "",
                                          "expected no strong arc decomposition, found one"});
            }
        }

        if (check.expect_split_v1) {
            auto split = recognize_semicomplete_split(d);
            std::vector<std::string> got;
            if (split) {
                for (int v : split->v1) got.push_back(d.label(v));
                std::sort(got.begin(), got.end());
            }
            if (split && !validate_split_partition(d, *split)) {
                outcome.issues.push_back({name, "recognizer", "",
                                          "returned split partition fails validation"});
            }
            if (got != *check.expect_split_v1) {
                std::string want;
                for (const auto& l : *check.expect_split_v1) want += l + " ";
                std::string have;
                for (const auto& l : got) have += l + " ";
                outcome.issues.push_back({name, "recognizer", "",
                                          "expected V1 {" + want + "}, got {" + have + "}"});
            }
        }

        report.runtime_ms = ms_since(start);
        outcome.reports.push_back(std::move(report));
    }
    return outcome;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["graph"] = r.graph;
    j["n"] = r.n;
    j["arcs"] = r.arcs;
    j["mode"] = r.mode;
    if (r.randomized) {
        j["seed"] = r.randomized->seed;
        j["samples"] = r.randomized->samples;
    }
    j["k_arc_strong"] = r.k_arc_strong;
    j["matrix"] = r.matrix;
    j["all_good"] = r.all_good;
    if (!r.certificates.empty()) {
        nlohmann::ordered_json certs = nlohmann::ordered_json::object();
        for (const auto& [key, cert] : r.certificates) {
            certs[key] = {{"out", cert.out_arcs}, {"in", cert.in_arcs}};
        }
        j["certificates"] = std::move(certs);
    }
    if (r.decomposition) {
        // Arc ids only; the ids index into `arcs`.
        j["decomposition"] = {{"a1", r.decomposition->a1}, {"a2", r.decomposition->a2}};
    } else {
        j["decomposition"] = nullptr;
    }
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

VerificationReport report_from_json(const nlohmann::ordered_json& j) {
    VerificationReport r;
    r.graph = j.at("graph").get<std::string>();
    r.n = j.at("n").get<int>();
    r.arcs = j.at("arcs").get<std::vector<std::string>>();
    r.mode = j.at("mode").get<std::string>();
    if (j.contains("seed")) {
        r.randomized = RandomizedParams{j.at("seed").get<std::uint64_t>(),
                                        j.at("samples").get<int>()};
    }
    r.k_arc_strong = j.at("k_arc_strong").get<int>();
    r.matrix = j.at("matrix").get<std::vector<std::vector<bool>>>();
    r.all_good = j.at("all_good").get<bool>();
    if (j.contains("certificates")) {
        for (const auto& [key, cert] : j.at("certificates").items()) {
            CertificateText c;
            c.out_arcs = cert.at("out").get<std::vector<std::string>>();
            c.in_arcs = cert.at("in").get<std::vector<std::string>>();
            r.certificates[key] = std::move(c);
        }
    }
    if (!j.at("decomposition").is_null()) {
        ArcDecomposition dec;
        dec.a1 = j.at("decomposition").at("a1").get<std::vector<int>>();
        dec.a2 = j.at("decomposition").at("a2").get<std::vector<int>>();
        r.decomposition = std::move(dec);
    }
    r.runtime_ms = j.at("runtime_ms").get<double>();
    return r;
}

nlohmann::ordered_json to_json(const VerificationOutcome& outcome, Scope scope) {
    nlohmann::ordered_json j;
    j["scope"] = scope_name(scope);
    j["all_passed"] = outcome.passed();
    nlohmann::ordered_json issues = nlohmann::ordered_json::array();
    for (const auto& issue : outcome.issues) {
        issues.push_back({{"graph", issue.graph},
                          {"phase", issue.phase},
                          {"pair", issue.pair},
                          {"message", issue.message}});
    }
    j["issues"] = std::move(issues);
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto& report : outcome.reports) reports.push_back(to_json(report));
    j["reports"] = std::move(reports);
    return j;
}

}  // namespace verifier
}  // namespace branchpair
