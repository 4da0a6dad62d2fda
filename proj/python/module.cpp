#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "branchpair/branchings.hpp"
#include "branchpair/catalog.hpp"
#include "branchpair/connectivity.hpp"
#include "branchpair/constructions.hpp"
#include "branchpair/digraph.hpp"
#include "branchpair/verifier.hpp"

namespace py = pybind11;
using namespace branchpair;

namespace {

catalog::CatalogKey key_by_name(const std::string& name) {
    for (const auto& key : catalog::export_keys()) {
        if (key.name() == name) return key;
    }
    throw ArgumentError("unknown catalog key '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_branchpair, m) {
    m.doc() = "Arc-disjoint out-/in-branchings and strong arc decompositions "
              "in directed multigraphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<constructions::ConstructionGapError>(m, "ConstructionGapError",
                                                                PyExc_RuntimeError);

    py::class_<Arc>(m, "Arc")
        .def_readonly("id", &Arc::id)
        .def_readonly("tail", &Arc::tail)
        .def_readonly("head", &Arc::head)
        .def("__repr__", [](const Arc& a) {
            return "Arc(id=" + std::to_string(a.id) + ", tail=" + std::to_string(a.tail) +
                   ", head=" + std::to_string(a.head) + ")";
        });

    py::class_<Digraph>(m, "Digraph")
        .def(py::init<int, bool>(), py::arg("n") = 0, py::arg("simple") = true)
        .def("add_vertex", &Digraph::add_vertex, py::arg("label") = std::string())
        .def("add_arc", &Digraph::add_arc, py::arg("tail"), py::arg("head"))
        .def_property_readonly("vertex_count", &Digraph::vertex_count)
        .def_property_readonly("arc_count", &Digraph::arc_count)
        .def_property_readonly("simple", &Digraph::simple)
        .def("arcs", &Digraph::arcs)
        .def("label", &Digraph::label)
        .def("display_name", &Digraph::display_name)
        .def("vertex_by_label", &Digraph::vertex_by_label)
        .def("has_arc", &Digraph::has_arc)
        .def("arc_multiplicity", &Digraph::arc_multiplicity)
        .def("reversed", &Digraph::reversed)
        .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
        .def("__repr__", [](const Digraph& d) {
            return "Digraph(n=" + std::to_string(d.vertex_count()) +
                   ", arcs=" + std::to_string(d.arc_count()) + ")";
        });

    m.def("parse_digraph", &parse_digraph, py::arg("text"));
    m.def("format_arc_list", &format_arc_list, py::arg("digraph"));
    m.def("to_dot", py::overload_cast<const Digraph&, const std::string&>(&to_dot),
          py::arg("digraph"), py::arg("name") = "D");
    m.def("is_semicomplete", &is_semicomplete);
    m.def("recognize_semicomplete_split", [](const Digraph& d) -> py::object {
        auto split = recognize_semicomplete_split(d);
        if (!split) return py::none();
        return py::make_tuple(split->v1, split->v2);
    });
    m.def("are_isomorphic", [](const Digraph& a, const Digraph& b) -> py::object {
        auto witness = are_isomorphic(a, b);
        if (!witness) return py::none();
        return py::cast(*witness);
    });

    m.def("is_strong", &is_strong);
    m.def("arc_strong_connectivity", [](const Digraph& d) {
        auto cert = arc_strong_connectivity(d);
        return py::make_tuple(cert.k, cert.witness_cut ? py::cast(*cert.witness_cut)
                                                       : py::object(py::none()));
    });
    m.def("is_k_arc_strong_bruteforce", &is_k_arc_strong_bruteforce, py::arg("digraph"),
          py::arg("k"));

    py::enum_<Direction>(m, "Direction")
        .value("OUT", Direction::Out)
        .value("IN", Direction::In);

    py::class_<Branching>(m, "Branching")
        .def_readonly("root", &Branching::root)
        .def_readonly("direction", &Branching::direction)
        .def_readonly("arc_ids", &Branching::arc_ids);

    py::class_<GoodPair>(m, "GoodPair")
        .def_readonly("out_branching", &GoodPair::out_branching)
        .def_readonly("in_branching", &GoodPair::in_branching);

    py::class_<ArcDecomposition>(m, "ArcDecomposition")
        .def_readonly("a1", &ArcDecomposition::a1)
        .def_readonly("a2", &ArcDecomposition::a2);

    m.def("validate_branching", &validate_branching);
    m.def("validate_good_pair", &validate_good_pair);
    m.def("validate_arc_decomposition", &validate_arc_decomposition);
    m.def("all_out_branchings", &all_out_branchings, py::arg("digraph"), py::arg("root"));
    m.def("all_in_branchings", &all_in_branchings, py::arg("digraph"), py::arg("root"));
    m.def("count_out_branchings", &count_out_branchings, py::arg("digraph"), py::arg("root"));
    m.def("find_good_pair", [](const Digraph& d, int u, int v) -> py::object {
        auto pair = find_good_pair(d, u, v);
        if (!pair) return py::none();
        return py::cast(*pair);
    });
    m.def("good_pair_matrix", [](const Digraph& d) {
        GoodPairMatrix matrix = good_pair_matrix(d);
        return py::make_tuple(matrix.good, matrix.all_good());
    });
    m.def("find_strong_arc_decomposition", [](const Digraph& d) -> py::object {
        auto dec = find_strong_arc_decomposition(d);
        if (!dec) return py::none();
        return py::cast(*dec);
    });

    m.def("catalog_keys", [] {
        std::vector<std::string> names;
        for (const auto& key : catalog::export_keys()) names.push_back(key.name());
        return names;
    });
    m.def("catalog_build", [](const std::string& name) { return catalog::build(key_by_name(name)); },
          py::arg("name"));
    m.def("build_s4", &catalog::build_s4);
    m.def("all_appendix_graphs", &catalog::all_appendix_graphs);

    m.def("s4_good_pair", &constructions::s4_good_pair, py::arg("u"), py::arg("v"));
    m.def("lift_to_basic_case", &constructions::lift_to_basic_case, py::arg("digraph"),
          py::arg("u"), py::arg("v"));
    m.def("lift_to_combination", &constructions::lift_to_combination, py::arg("digraph"),
          py::arg("u"), py::arg("v"));

    m.def("verify_catalog", [](const std::string& scope) {
        verifier::Scope s = verifier::scope_from_name(scope);
        auto outcome = verifier::verify_catalog(s);
        return py::make_tuple(outcome.passed(), verifier::to_json(outcome, s).dump());
    }, py::arg("scope") = "full");
    m.def("randomized_check", [](const Digraph& d, int samples, std::uint64_t seed) {
        auto report = verifier::randomized_check(d, samples, seed);
        return verifier::to_json(report).dump();
    }, py::arg("digraph"), py::arg("samples") = 2000, py::arg("seed") = 124);
    m.def("exhaustive_report", [](const Digraph& d, bool with_decomposition) {
        return verifier::to_json(verifier::exhaustive_report(d, "user", with_decomposition)).dump();
    }, py::arg("digraph"), py::arg("with_decomposition") = false);
}
