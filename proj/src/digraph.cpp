#include "branchpair/digraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace branchpair {

Digraph::Digraph(int n, bool simple) : simple_(simple) {
    if (n < 0) throw ArgumentError("negative vertex count");
    for (int i = 0; i < n; ++i) add_vertex();
}

int Digraph::add_vertex(const std::string& label) {
    if (!label.empty() && vertex_by_label(label)) {
        throw ValidationError("duplicate vertex label '" + label + "'");
    }
    labels_.push_back(label);
    out_.emplace_back();
    in_.emplace_back();
    return n_++;
}

int Digraph::add_arc(int tail, int head) {
    check_vertex(tail);
    check_vertex(head);
    if (tail == head) {
        throw ValidationError("loop arc at vertex " + display_name(tail));
    }
    if (simple_ && has_arc(tail, head)) {
        throw ValidationError("duplicate arc " + display_name(tail) + "->" + display_name(head) +
                              " in simple mode");
    }
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back(Arc{id, tail, head});
    out_[tail].push_back(id);
    in_[head].push_back(id);
    return id;
}

const Arc& Digraph::arc(int id) const {
    if (id < 0 || id >= arc_count()) {
        throw ValidationError("unknown arc id " + std::to_string(id));
    }
    return arcs_[static_cast<size_t>(id)];
}

const std::vector<int>& Digraph::out_arcs(int v) const {
    check_vertex(v);
    return out_[static_cast<size_t>(v)];
}

const std::vector<int>& Digraph::in_arcs(int v) const {
    check_vertex(v);
    return in_[static_cast<size_t>(v)];
}

bool Digraph::has_arc(int tail, int head) const { return find_arc(tail, head).has_value(); }

int Digraph::arc_multiplicity(int tail, int head) const {
    check_vertex(tail);
    check_vertex(head);
    int m = 0;
    for (int id : out_[static_cast<size_t>(tail)]) {
        if (arcs_[static_cast<size_t>(id)].head == head) ++m;
    }
    return m;
}

std::optional<int> Digraph::find_arc(int tail, int head) const {
    check_vertex(tail);
    check_vertex(head);
    std::optional<int> best;
    for (int id : out_[static_cast<size_t>(tail)]) {
        if (arcs_[static_cast<size_t>(id)].head == head && (!best || id < *best)) best = id;
    }
    return best;
}

const std::string& Digraph::label(int v) const {
    check_vertex(v);
    return labels_[static_cast<size_t>(v)];
}

std::string Digraph::display_name(int v) const {
    check_vertex(v);
    const std::string& l = labels_[static_cast<size_t>(v)];
    return l.empty() ? std::to_string(v) : l;
}

std::optional<int> Digraph::vertex_by_label(const std::string& label) const {
    if (label.empty()) return std::nullopt;
    for (int v = 0; v < n_; ++v) {
        if (labels_[static_cast<size_t>(v)] == label) return v;
    }
    return std::nullopt;
}

int Digraph::require_vertex(const std::string& label) const {
    if (auto v = vertex_by_label(label)) return *v;
    throw ArgumentError("no vertex labeled '" + label + "'");
}

Digraph Digraph::reversed() const {
    Digraph r(0, simple_);
    for (int v = 0; v < n_; ++v) r.add_vertex(labels_[static_cast<size_t>(v)]);
    for (const Arc& a : arcs_) {
        int id = r.add_arc(a.head, a.tail);
        (void)id;
    }
    return r;
}

bool Digraph::operator==(const Digraph& other) const {
    return n_ == other.n_ && simple_ == other.simple_ && arcs_ == other.arcs_ &&
           labels_ == other.labels_;
}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw ArgumentError("vertex index " + std::to_string(v) + " out of range");
}

Digraph parse_digraph(const std::string& text) {
    Digraph d(0, true);
    bool multigraph = false;
    bool saw_arc = false;
    std::map<std::string, int> by_label;

    auto intern = [&](const std::string& label) {
        auto it = by_label.find(label);
        if (it != by_label.end()) return it->second;
        int v = d.add_vertex(label);
        by_label.emplace(label, v);
        return v;
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream fields(line);
        std::string tail, head, extra;
        fields >> tail;
        if (tail == "!multigraph") {
            if (fields >> extra) throw ParseError(lineno, "unexpected token after !multigraph");
            if (saw_arc) throw ParseError(lineno, "!multigraph header must precede all arcs");
            if (!multigraph) {
                multigraph = true;
                Digraph md = Digraph::multigraph(0);
                for (int v = 0; v < d.vertex_count(); ++v) md.add_vertex(d.label(v));
                d = std::move(md);
            }
            continue;
        }
        if (!(fields >> head) || (fields >> extra)) {
            throw ParseError(lineno, "expected '<tail> <head>', got '" + line + "'");
        }
        int t = intern(tail);
        int h = intern(head);
        try {
            d.add_arc(t, h);
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(lineno) + ": " + e.what());
        }
        saw_arc = true;
    }
    return d;
}

std::string format_arc_list(const Digraph& d) {
    std::ostringstream out;
    if (!d.simple()) out << "!multigraph\n";
    for (const Arc& a : d.arcs()) {
        out << d.display_name(a.tail) << ' ' << d.display_name(a.head) << '\n';
    }
    return out.str();
}

std::string to_dot(const Digraph& d, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (int v = 0; v < d.vertex_count(); ++v) {
        out << "  \"" << d.display_name(v) << "\";\n";
    }
    for (const Arc& a : d.arcs()) {
        out << "  \"" << d.display_name(a.tail) << "\" -> \"" << d.display_name(a.head) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

bool is_semicomplete(const Digraph& d) {
    for (int u = 0; u < d.vertex_count(); ++u) {
        for (int v = u + 1; v < d.vertex_count(); ++v) {
            if (!d.has_arc(u, v) && !d.has_arc(v, u)) return false;
        }
    }
    return true;
}

namespace {

bool adjacent(const Digraph& d, int u, int v) { return d.has_arc(u, v) || d.has_arc(v, u); }

}  // namespace

bool validate_split_partition(const Digraph& d, const SplitPartition& p) {
    int n = d.vertex_count();
    std::vector<int> side(static_cast<size_t>(n), 0);
    if (p.v1.empty() || p.v2.empty()) return false;
    for (int v : p.v1) {
        if (v < 0 || v >= n || side[static_cast<size_t>(v)] != 0) return false;
        side[static_cast<size_t>(v)] = 1;
    }
    for (int v : p.v2) {
        if (v < 0 || v >= n || side[static_cast<size_t>(v)] != 0) return false;
        side[static_cast<size_t>(v)] = 2;
    }
    if (std::count(side.begin(), side.end(), 0) != 0) return false;
    for (size_t i = 0; i < p.v1.size(); ++i) {
        for (size_t j = i + 1; j < p.v1.size(); ++j) {
            if (adjacent(d, p.v1[i], p.v1[j])) return false;
        }
    }
    for (size_t i = 0; i < p.v2.size(); ++i) {
        for (size_t j = i + 1; j < p.v2.size(); ++j) {
            if (!adjacent(d, p.v2[i], p.v2[j])) return false;
        }
    }
    for (int u : p.v1) {
        for (int v : p.v2) {
            if (!adjacent(d, u, v)) return false;
        }
    }
    return true;
}

namespace {

bool extend_split_candidate(const Digraph& d, std::vector<int>& v1, int next,
                            SplitPartition& result) {
    int n = d.vertex_count();
    if (!v1.empty() && static_cast<int>(v1.size()) < n) {
        SplitPartition p;
        p.v1 = v1;
        for (int v = 0; v < n; ++v) {
            if (std::find(v1.begin(), v1.end(), v) == v1.end()) p.v2.push_back(v);
        }
        if (validate_split_partition(d, p)) {
            result = std::move(p);
            return true;
        }
    }
    for (int v = next; v < n; ++v) {
        v1.push_back(v);
        if (extend_split_candidate(d, v1, v + 1, result)) return true;
        v1.pop_back();
    }
    return false;
}

}  // namespace

std::optional<SplitPartition> recognize_semicomplete_split(const Digraph& d) {
    std::vector<int> v1;
    SplitPartition result;
    if (extend_split_candidate(d, v1, 0, result)) return result;
    return std::nullopt;
}

std::optional<std::vector<int>> are_isomorphic(const Digraph& d1, const Digraph& d2) {
    int n = d1.vertex_count();
    if (n != d2.vertex_count() || d1.arc_count() != d2.arc_count()) return std::nullopt;

    // Degree-sequence pruning: the sorted (out, in) profiles must agree.
    auto profile = [](const Digraph& d) {
        std::vector<std::pair<int, int>> p;
        for (int v = 0; v < d.vertex_count(); ++v) p.emplace_back(d.out_degree(v), d.in_degree(v));
        std::sort(p.begin(), p.end());
        return p;
    };
    if (profile(d1) != profile(d2)) return std::nullopt;

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            ok = d1.out_degree(v) == d2.out_degree(perm[static_cast<size_t>(v)]) &&
                 d1.in_degree(v) == d2.in_degree(perm[static_cast<size_t>(v)]);
        }
        for (int u = 0; u < n && ok; ++u) {
            for (int v = 0; v < n && ok; ++v) {
                if (u == v) continue;
                ok = d1.arc_multiplicity(u, v) ==
                     d2.arc_multiplicity(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
            }
        }
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace branchpair
