#include "apn/analysis.hpp"
#include "apn/families.hpp"
#include "apn/field.hpp"
#include "apn/poly.hpp"
#include "apn/table3.hpp"
#include "apn/vbf.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace apn;

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "APN family construction and invariant analysis";

    py::class_<Field>(mod, "Field")
        .def(py::init<unsigned, std::uint32_t>(), py::arg("m"), py::arg("reduction"))
        .def_static("with_default_poly", &Field::with_default_poly)
        .def_static("quadratic_extension", &Field::quadratic_extension)
        .def_property_readonly("m", &Field::degree)
        .def_property_readonly("order", &Field::order)
        .def("mul", &Field::mul)
        .def("inv", &Field::inv)
        .def("pow", &Field::pow)
        .def("pow_q", &Field::pow_q)
        .def("trace", &Field::trace)
        .def("is_cube", &Field::is_cube)
        .def("generator", &Field::generator);

    py::class_<TruthTable>(mod, "TruthTable")
        .def_property_readonly("n", [](const TruthTable& t) { return t.n; })
        .def_property_readonly("values", [](const TruthTable& t) { return t.values; });

    py::class_<InvariantProfile>(mod, "InvariantProfile")
        .def_property_readonly("delta", [](const InvariantProfile& p) { return p.delta; })
        .def_property_readonly("nf", [](const InvariantProfile& p) { return p.nf; })
        .def_property_readonly("gold_like",
                               [](const InvariantProfile& p) {
                                   return p.spectrum == SpectrumClass::gold_like;
                               })
        .def_property_readonly("three_to_one",
                               [](const InvariantProfile& p) { return p.three_to_one; })
        .def_property_readonly("nb_size", [](const InvariantProfile& p) { return p.nb_size; })
        .def("__repr__", [](const InvariantProfile& p) { return profile_to_json(p); });

    mod.def("find_good_alphas",
            [](unsigned m, unsigned k) {
                return poly::find_good_alphas(Field::with_default_poly(m), k);
            },
            py::arg("m"), py::arg("k") = 1);
    mod.def("f1",
            [](unsigned m, unsigned k, Elt alpha) {
                return evaluate(families::f1(Field::with_default_poly(m), k, alpha));
            },
            py::arg("m"), py::arg("k"), py::arg("alpha"));
    mod.def("f2",
            [](unsigned m, Elt alpha) {
                return evaluate(families::f2(Field::with_default_poly(m), alpha));
            },
            py::arg("m"), py::arg("alpha"));
    mod.def("gold", [](unsigned n, unsigned i) {
        Field fn = Field::with_default_poly(n);
        return univariate_evaluate(fn, families::gold_terms(fn, i));
    });
    mod.def("known_family", [](int id) {
        auto inst = families::known_family(id);
        return py::make_tuple(inst.table, inst.params.dump());
    });
    mod.def("is_apn", &is_apn);
    mod.def("differential_uniformity",
            [](const TruthTable& tt, unsigned threads) {
                return differential_uniformity(tt, threads).delta;
            },
            py::arg("tt"), py::arg("threads") = 1);
    mod.def("invariant_profile", &invariant_profile, py::arg("tt"), py::arg("max_dim") = 4,
            py::arg("extend_past") = true, py::arg("threads") = 1);
}
