#include "listpart/cardinality.hpp"
#include "listpart/counter.hpp"
#include "listpart/io.hpp"
#include "listpart/oracle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace listpart;

namespace {

py::object big_int(const Count& c) {
    return py::module_::import("builtins").attr("int")(c.get_str());
}

py::list certificate_list(const PartSet& parts, const DerectCertificate& cert) {
    py::list out;
    for (const auto& s : cert.sequence) {
        py::list names;
        for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i))
            names.append(parts.name(static_cast<int>(i)));
        out.append(names);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_listpart, m) {
    m.doc() = "exact counting of list M-partitions of graphs";

    py::register_exception<input_error>(m, "InputError");
    py::register_exception<budget_exceeded>(m, "BudgetExceeded");
    static py::exception<refused_hard> refused(m, "RefusedHard");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const refused_hard& e) {
            refused(e.what());
        }
    });

    m.def(
        "classify",
        [](const std::string& matrix, const std::string& family) {
            PartitionMatrix m2 = parse_matrix(matrix);
            ListFamily fam = family.empty()
                                 ? ListFamily(m2.parts(), {m2.parts().full_subset()})
                                 : parse_family(family, m2.parts());
            Classification cls = classify(m2, fam);
            py::dict out;
            out["verdict"] = cls.verdict == Classification::Verdict::Tractable ? "TRACTABLE"
                             : cls.verdict == Classification::Verdict::Hard    ? "HARD"
                                                                               : "INCONCLUSIVE";
            out["certificate"] =
                cls.certificate ? py::object(certificate_list(m2.parts(), *cls.certificate))
                                : py::object(py::none());
            return out;
        },
        py::arg("matrix"), py::arg("family") = "",
        "Decide the counting dichotomy for a matrix and (maximal-member) list family.");

    m.def(
        "count",
        [](const std::string& matrix, const std::string& graph, const std::string& lists,
           bool unsafe) {
            PartitionMatrix m2 = parse_matrix(matrix);
            Graph g = parse_graph(graph);
            ListFunction lf = lists.empty() ? ListFunction(g.n, m2.parts().full_subset())
                                            : parse_lists(lists, m2.parts(), g.n);
            ListFamily fam(m2.parts(), {m2.parts().full_subset()});
            CountOptions opts;
            if (unsafe) opts.gate = CountOptions::Gate::skip_unsafe;
            return big_int(count_list_partitions(g, lf, fam, m2, opts));
        },
        py::arg("matrix"), py::arg("graph"), py::arg("lists") = "", py::arg("unsafe") = false,
        "Count the list M-partitions of a graph; raises RefusedHard for "
        "#P-complete matrices unless unsafe=True.");

    m.def(
        "count_with_cardinality",
        [](const std::string& matrix, const std::string& graph, const std::string& cardinality) {
            PartitionMatrix m2 = parse_matrix(matrix);
            Graph g = parse_graph(graph);
            CardinalityConstraint c{parse_cardinality(cardinality, m2.parts())};
            return big_int(count_with_cardinality(g, m2, c));
        },
        py::arg("matrix"), py::arg("graph"), py::arg("cardinality"),
        "Count M-partitions meeting per-part minimum cardinalities.");

    m.def(
        "count_homogeneous_pairs",
        [](const std::string& graph) {
            return big_int(count_homogeneous_pairs(parse_graph(graph)));
        },
        py::arg("graph"));

    m.def(
        "brute_count",
        [](const std::string& matrix, const std::string& graph, const std::string& lists) {
            PartitionMatrix m2 = parse_matrix(matrix);
            Graph g = parse_graph(graph);
            ListFunction lf = lists.empty() ? ListFunction(g.n, m2.parts().full_subset())
                                            : parse_lists(lists, m2.parts(), g.n);
            return big_int(brute_count(g, lf, m2));
        },
        py::arg("matrix"), py::arg("graph"), py::arg("lists") = "",
        "Brute-force reference count.");

    m.def(
        "reduce_independent_set",
        [](const std::string& graph, int k) {
            GadgetOutput out = reduce_independent_set(parse_graph(graph), k);
            return py::make_tuple(serialize_matrix(out.matrix), serialize_family(out.family));
        },
        py::arg("graph"), py::arg("k"),
        "Matrix and family text of the independent-set hardness gadget.");
}
