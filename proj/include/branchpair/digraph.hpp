#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace branchpair {

/// Malformed input text; carries the 1-based line number.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// A structural rule of the data model was violated (loop arc, duplicate arc
/// in simple mode, branching invariant failure, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller passed an out-of-domain argument (unknown vertex, bad key, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive search would exceed the configured work limit.
/// The limit is never relaxed silently; callers may raise it via the
/// BRANCHPAIR_LIMIT environment variable.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One arc instance. Arcs carry an identity (`id`) so that parallel arcs in
/// multigraph mode are distinguishable; "arc-disjoint" always means disjoint
/// by id, never by (tail, head) value.
struct Arc {
    int id;
    int tail;
    int head;

    bool operator==(const Arc&) const = default;
};

/// Directed multigraph with stable insertion-ordered arcs and optional
/// per-vertex labels. Loops are never allowed; parallel arcs only when
/// constructed in multigraph mode. Instances are immutable once built
/// (all algorithms take const references), so they are safe to share
/// across threads.
class Digraph {
public:
    explicit Digraph(int n = 0, bool simple = true);

    static Digraph multigraph(int n) { return Digraph(n, false); }

    /// Appends a vertex; returns its index. Non-empty labels must be unique.
    int add_vertex(const std::string& label = {});

    /// Appends an arc; returns its id (ids are dense, in insertion order).
    /// Throws ValidationError on a loop, or on a duplicate (tail, head) in
    /// simple mode.
    int add_arc(int tail, int head);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    bool simple() const { return simple_; }

    const Arc& arc(int id) const;
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<int>& out_arcs(int v) const;
    const std::vector<int>& in_arcs(int v) const;
    int out_degree(int v) const { return static_cast<int>(out_arcs(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_arcs(v).size()); }

    bool has_arc(int tail, int head) const;
    int arc_multiplicity(int tail, int head) const;
    /// Smallest arc id with the given endpoints, if any.
    std::optional<int> find_arc(int tail, int head) const;

    /// Label of v; empty string when unlabeled.
    const std::string& label(int v) const;
    /// Label when present, else the decimal index.
    std::string display_name(int v) const;
    std::optional<int> vertex_by_label(const std::string& label) const;
    /// vertex_by_label or ArgumentError.
    int require_vertex(const std::string& label) const;

    /// Same vertices and labels; every arc (t, h) becomes (h, t) keeping its id.
    Digraph reversed() const;

    bool operator==(const Digraph& other) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    bool simple_ = true;
    std::vector<Arc> arcs_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Arc-list format: one "tail head" pair of labels per line; blank lines and
/// '#' comments ignored; an optional "!multigraph" header (before any arc)
/// enables parallel arcs. Vertices are declared implicitly in order of first
/// appearance.
Digraph parse_digraph(const std::string& text);
std::string format_arc_list(const Digraph& d);

/// Standard DOT, one edge statement per arc instance.
std::string to_dot(const Digraph& d, const std::string& name = "D");

/// True iff every unordered vertex pair has at least one arc between them.
bool is_semicomplete(const Digraph& d);

/// Split partition (V1, V2): V1 independent, D[V2] semicomplete. In
/// semicomplete-split mode every V1 vertex is additionally adjacent to every
/// V2 vertex.
struct SplitPartition {
    std::vector<int> v1;
    std::vector<int> v2;

    bool operator==(const SplitPartition&) const = default;
};

/// Checks all four semicomplete-split invariants of `p` against `d`.
bool validate_split_partition(const Digraph& d, const SplitPartition& p);

/// Exhaustive search over nonempty proper V1 candidates, in lexicographic
/// order of the sorted index list; returns the first valid partition.
std::optional<SplitPartition> recognize_semicomplete_split(const Digraph& d);

/// Brute-force isomorphism for small graphs: returns the first
/// multiplicity-preserving vertex bijection in lexicographic permutation
/// order, or nullopt. mapping[v of d1] = vertex of d2.
std::optional<std::vector<int>> are_isomorphic(const Digraph& d1, const Digraph& d2);

}  // namespace branchpair
