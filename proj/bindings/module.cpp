#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thueforms/errors.hpp"
#include "thueforms/json_io.hpp"
#include "thueforms/verify.hpp"

namespace py = pybind11;
using namespace thue;

namespace {

// arbitrary-precision values cross the boundary as decimal strings -> python int
py::int_ to_py_int(const Int& v) { return py::int_(py::str(to_string(v))); }

py::list coeff_list(const BinaryForm& f) {
    py::list out;
    for (const auto& c : f.coeffs) out.append(to_py_int(c));
    return out;
}

py::object py_json(const json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

TwistedFamily family_from_descriptor(const std::string& text) {
    return parse_descriptor(text).build();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic for twisted families of binary forms";

    py::register_exception<UsageError>(m, "UsageError");
    py::register_exception<DegenerateDegree>(m, "DegenerateDegreeError");
    py::register_exception<PrecisionExhausted>(m, "PrecisionExhaustedError");

    py::class_<BinaryForm>(m, "BinaryForm")
        .def_readonly("degree", &BinaryForm::degree)
        .def_property_readonly("coeffs", &coeff_list)
        .def("evaluate",
             [](const BinaryForm& f, const std::string& x, const std::string& y) {
                 return to_py_int(f.evaluate(int_from_string(x), int_from_string(y)));
             })
        .def("evaluate",
             [](const BinaryForm& f, long long x, long long y) {
                 return to_py_int(f.evaluate(Int(x), Int(y)));
             })
        .def("__repr__", [](const BinaryForm& f) { return "BinaryForm" + f.str(); });

    py::class_<TwistedFamily>(m, "TwistedFamily")
        .def_property_readonly("degree", &TwistedFamily::degree)
        .def_property_readonly("delta", &TwistedFamily::delta)
        .def_property_readonly("nu", &TwistedFamily::nu)
        .def("form_at", [](const TwistedFamily& fam, long a) { return form_at(fam, a); })
        .def("coefficient_U",
             [](const TwistedFamily& fam, int h, long a) {
                 return to_py_int(coefficient_U(fam, h, a));
             })
        .def("admissible_range", [](const TwistedFamily& fam, long lo, long hi) {
            auto rep = admissible_range(fam, lo, hi);
            return py::make_tuple(rep.admissible, rep.excluded);
        });

    m.def("family", &family_from_descriptor, py::arg("descriptor"),
          "build a family from a descriptor like 'shanks:n=1' or 'bh:D=1,n=2,c=1'");

    m.def(
        "search",
        [](const std::string& descriptor, long a_min, long a_max, long long bound,
           const std::string& m, const std::string& engine, long precision) {
            TwistedFamily fam = family_from_descriptor(descriptor);
            SearchBox box{a_min, a_max, bound, int_from_string(m)};
            SearchResult res = engine == "oracle" ? brute_force_search(fam, box)
                                                  : pruned_search(fam, box, precision);
            if (engine == "both") {
                SearchResult oracle = brute_force_search(fam, box);
                if (!(oracle.solutions == res.solutions))
                    throw std::runtime_error("engine mismatch between oracle and pruned search");
            }
            py::list out;
            for (const auto& s : res.solutions)
                out.append(py::make_tuple(s.a, s.x, s.y, to_py_int(s.value)));
            return out;
        },
        py::arg("descriptor"), py::arg("a_min"), py::arg("a_max"), py::arg("bound"),
        py::arg("m") = "1", py::arg("engine") = "pruned", py::arg("precision") = 128);

    m.def(
        "verify",
        [](const std::string& descriptor, const std::string& suite, long a_min, long a_max,
           long precision) {
            SuiteReport rep = run_suite(parse_descriptor(descriptor), suite, a_min, a_max,
                                        precision);
            return py_json(rep.to_json());
        },
        py::arg("descriptor"), py::arg("suite"), py::arg("a_min") = -4, py::arg("a_max") = 4,
        py::arg("precision") = 128);

    m.def(
        "lemma_fuzz",
        [](int t, long trials, std::uint64_t seed) {
            return py_json(lemma_report_json(lemma_fuzz(t, trials, seed)));
        },
        py::arg("t"), py::arg("trials"), py::arg("seed"));

    m.def(
        "siegel_profile",
        [](const std::string& descriptor, long a, long long x, long long y, const std::string& nu,
           long precision) {
            TwistedFamily fam = family_from_descriptor(descriptor);
            EmbeddingProfile prof = classify(fam, a, x, y, rat_from_string(nu), precision);
            return py_json(profile_to_json(prof));
        },
        py::arg("descriptor"), py::arg("a"), py::arg("x"), py::arg("y"), py::arg("nu") = "1/2",
        py::arg("precision") = 128);

    m.def(
        "siegel_residual",
        [](const std::string& descriptor, long a, long long x, long long y, int i1, int i2, int i3,
           long precision) {
            TwistedFamily fam = family_from_descriptor(descriptor);
            EmbeddingProfile prof = classify(fam, a, x, y, Rat(1, 2), precision);
            SiegelResidual res = siegel_identity_check(prof, i1, i2, i3);
            return py::make_tuple(res.contains_zero, res.width);
        },
        py::arg("descriptor"), py::arg("a"), py::arg("x"), py::arg("y"), py::arg("i1"),
        py::arg("i2"), py::arg("i3"), py::arg("precision") = 128);
}
