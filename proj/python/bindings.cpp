#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "classgraph/constructions.hpp"
#include "classgraph/errors.hpp"
#include "classgraph/fp.hpp"
#include "classgraph/graphs.hpp"
#include "classgraph/group_io.hpp"
#include "classgraph/harness.hpp"
#include "classgraph/structure.hpp"

namespace py = pybind11;
using namespace cg;

namespace {

/// nlohmann::json -> native python objects, via the json module.
py::object to_py(const nlohmann::json& j) {
    py::module json = py::module::import("json");
    return json.attr("loads")(j.dump());
}

py::list checks_to_py(const std::vector<Check>& checks) {
    py::list out;
    for (const Check& c : checks) {
        py::dict d;
        d["name"] = c.name;
        d["pass"] = c.pass;
        d["witness"] = c.witness;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(classgraph, m) {
    m.doc() = "Conjugacy-class graphs of normal subgroups";

    py::register_exception<CapExceeded>(m, "CapExceeded");
    py::register_exception<InputError>(m, "InputError");

    py::class_<FiniteGroup>(m, "FiniteGroup")
        .def_property_readonly("order", &FiniteGroup::order)
        .def_property_readonly("identity", &FiniteGroup::identity)
        .def_property_readonly("label", &FiniteGroup::label)
        .def("mul", &FiniteGroup::mul)
        .def("inv", &FiniteGroup::inv)
        .def("conj", &FiniteGroup::conj)
        .def("element_order", &FiniteGroup::element_order)
        .def("element_name", &FiniteGroup::element_name)
        .def("is_abelian", &FiniteGroup::is_abelian)
        .def("generators", &FiniteGroup::generators)
        .def("to_json", [](const FiniteGroup& g) { return to_py(group_to_json(g)); })
        .def("__len__", &FiniteGroup::order)
        .def("__repr__", [](const FiniteGroup& g) {
            return "<FiniteGroup " + g.label() + " order " + std::to_string(g.order()) + ">";
        });

    py::class_<Subgroup>(m, "Subgroup")
        .def(py::init<const FiniteGroup&, std::vector<int>>())
        .def_property_readonly("order", &Subgroup::order)
        .def_property_readonly("elements", &Subgroup::elements)
        .def("contains", &Subgroup::contains)
        .def("is_normal", &Subgroup::is_normal)
        .def("is_abelian", &Subgroup::is_abelian)
        .def("__len__", &Subgroup::order)
        .def("__repr__", [](const Subgroup& s) {
            return "<Subgroup of " + s.parent().label() + " order " + std::to_string(s.order()) + ">";
        });

    // Constructions
    m.def("cyclic", &cyclic);
    m.def("elementary_abelian", &elementary_abelian);
    m.def("dihedral", &dihedral);
    m.def("symmetric", &symmetric);
    m.def("alternating", &alternating);
    m.def("extraspecial_p3", &extraspecial_p3);
    m.def("frobenius_21", [] { return frobenius_21().group; });
    m.def("semilinear_affine", [](long p, int n) {
        SemilinearAffine sa = semilinear_affine(p, n);
        return py::make_tuple(sa.group, sa.additive, sa.multiplicative);
    });
    m.def("holomorph_elementary_abelian", [](long p, int s) {
        HolomorphPair h = holomorph_elementary_abelian(p, s);
        return py::make_tuple(h.group, h.n);
    });
    m.def("direct_product",
          [](const FiniteGroup& a, const FiniteGroup& b) { return direct_product(a, b).group; });

    // fp groups
    m.def("realize_presentation", &realize_presentation, py::arg("text"), py::arg("label") = "fp",
          py::arg("max_cosets") = kDefaultMaxCosets);

    // Group analysis
    m.def("conjugacy_classes", [](const FiniteGroup& g) {
        py::list out;
        for (const GClass& c : conjugacy_classes(g)) out.append(c.elements);
        return out;
    });
    m.def("center", [](const FiniteGroup& g) { return center(g); });
    m.def("centralizer", [](const FiniteGroup& g, int x) { return centralizer(g, x); });
    m.def("normal_subgroups", &normal_subgroups);

    // Graphs and verification
    m.def("class_graph", [](const FiniteGroup& g, const Subgroup& n) {
        return to_py(graph_json(build_class_graph(g, n), g));
    });
    m.def("prime_graph", [](const FiniteGroup& g, const Subgroup& n) {
        return to_py(graph_json(build_prime_graph(g, n)));
    });
    m.def("verify_pair", [](const FiniteGroup& g, const Subgroup& n) {
        CorpusPair pair{g.label() + "/N" + std::to_string(n.order()), g, n};
        return to_py(pair_report_json(verify_pair(pair)));
    });
    m.def(
        "run_corpus",
        [](const py::object& spec_json, int jobs) {
            CorpusSpec spec;
            if (!spec_json.is_none()) {
                py::module json = py::module::import("json");
                std::string dumped = py::cast<std::string>(json.attr("dumps")(spec_json));
                spec = corpus_spec_from_json(nlohmann::json::parse(dumped));
            }
            return to_py(run_corpus(spec, jobs).report);
        },
        py::arg("spec") = py::none(), py::arg("jobs") = 1);
    m.def("run_golden_examples", [] { return checks_to_py(run_golden_examples()); });

    m.def("load_group", &load_group);
    m.def("save_group", &save_group);
}
