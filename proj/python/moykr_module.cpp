#include "moykr/adm.hpp"
#include "moykr/closure.hpp"
#include "moykr/homfly.hpp"
#include "moykr/kr.hpp"
#include "moykr/moy_eval.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace moykr;

namespace {

// {exponent tuple: "p/q" or integer} keeps coefficients exact on the Python side.
py::dict terms_dict(const LaurentPoly& p)
{
    py::dict d;
    for (const auto& [e, c] : p.terms()) {
        py::tuple key(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) key[i] = e[i];
        if (denominator(c) == 1) d[key] = py::int_(py::str(numerator(c).str()));
        else d[key] = py::module_::import("fractions").attr("Fraction")(to_string(c));
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_moykr, m)
{
    m.doc() = "Exact MOY/HOMFLY-PT/KR invariants of 2-strand braid closures";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<StuckError>(m, "StuckError", PyExc_RuntimeError);

    m.def("jones", [](int k, int n) { return jones_torus2(k, n).to_string(); }, py::arg("k"), py::arg("n") = 2);
    m.def("jones_braid", [](const std::string& braid, int n) { return jones(parse_braid(braid), n).to_string(); },
          py::arg("braid"), py::arg("n") = 2);
    m.def("jones_terms", [](int k, int n) { return terms_dict(jones_torus2(k, n)); }, py::arg("k"), py::arg("n") = 2);
    m.def("evaluate_closure", [](const std::string& braid, int n) {
        return evaluate(close(parse_braid(braid)), n).to_string();
    }, py::arg("braid"), py::arg("n") = 2);

    m.def("homfly", [](int k, int n) { return homfly_torus2(k, n).to_string(); }, py::arg("k"), py::arg("n") = 2);
    m.def("homfly_specializes", [](int k, int n) { return specializes_to(homfly_torus2(k, n), n, jones_torus2(k, n)); },
          py::arg("k"), py::arg("n") = 2);

    m.def("kr_complex", [](int k, int n) { return torus2_complex(k, n).render(); }, py::arg("k"), py::arg("n") = 2);
    m.def("kr_homology", [](int k, int n) {
        Bigraded h = homology(close_complex(torus2_complex(k, n), n));
        std::map<std::pair<int, int>, int> out(h.begin(), h.end());
        return out;
    }, py::arg("k"), py::arg("n") = 2);
    m.def("kr_poincare", [](int k, int n) { return kr_poincare_engine(k, n).to_string(); }, py::arg("k"),
          py::arg("n") = 2);
    m.def("kr_poincare_terms", [](int k, int n) { return terms_dict(kr_poincare_engine(k, n)); }, py::arg("k"),
          py::arg("n") = 2);
    m.def("kr_poincare_closed_form", [](int k, int n) { return kr_poincare_torus2(k, n).to_string(); }, py::arg("k"),
          py::arg("n") = 2);

    m.def("adm_prediction", [](int k, int n) { return adm_to_q(adm_torus2_representative(k, n), n).to_string(); },
          py::arg("k"), py::arg("n") = 2);
}
