#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "motivic/equivalence.hpp"
#include "motivic/json_io.hpp"
#include "motivic/normalize.hpp"
#include "motivic/oracle.hpp"
#include "motivic/parser.hpp"
#include "motivic/variety.hpp"

namespace py = pybind11;
using namespace motivic;

namespace {

// Opaque expression handle; keeps the shared immutable tree alive.
struct PyExpr {
    ExprPtr e;
};

}  // namespace

PYBIND11_MODULE(_motivic, m) {
    m.doc() = "symbolic classes of varieties in Z[L][atoms] with a point-counting oracle";

    py::class_<PyExpr>(m, "Expr")
        .def("__str__", [](const PyExpr& x) { return to_dsl(x.e); })
        .def("__repr__", [](const PyExpr& x) { return "Expr(" + to_dsl(x.e) + ")"; })
        .def(
            "__eq__",
            [](const PyExpr& a, const PyExpr& b) { return structurally_equal(a.e, b.e); },
            py::is_operator());

    py::class_<MotivicClass>(m, "MotivicClass")
        .def("__str__", &MotivicClass::to_string)
        .def("__repr__", [](const MotivicClass& c) { return "MotivicClass(" + c.to_string() + ")"; })
        .def(
            "__eq__", [](const MotivicClass& a, const MotivicClass& b) { return a == b; },
            py::is_operator())
        .def("is_zero", &MotivicClass::is_zero)
        .def("is_atom_free", &MotivicClass::is_atom_free)
        .def("mod_l", &MotivicClass::mod_l)
        .def("div_l", &MotivicClass::div_l)
        .def(
            "eval",
            [](const MotivicClass& c, std::int64_t q) {
                const auto p = c.as_lpoly();
                if (!p) throw std::invalid_argument("class has atoms; cannot evaluate at L = q");
                return p->eval(q);
            },
            py::arg("q"))
        .def("to_json", [](const MotivicClass& c) { return class_to_json(c).dump(); });

    m.def(
        "parse", [](const std::string& text) { return PyExpr{parse_expression(text)}; },
        py::arg("text"), "parse a variety expression, e.g. 'blowup(P(3); 8*pt, codim=3)'");
    m.def(
        "to_dsl", [](const PyExpr& x) { return to_dsl(x.e); }, py::arg("expr"));
    m.def(
        "blowup_p3_points",
        [](std::int64_t count) { return PyExpr{blowup_p3_points({count, std::nullopt})}; },
        py::arg("count"), "blow-up of P^3 at `count` distinct rational points");
    m.def(
        "normalize", [](const PyExpr& x) { return normalize_or_throw(x.e); }, py::arg("expr"),
        "rewrite an expression to its canonical class");

    m.def(
        "l_equivalent",
        [](const MotivicClass& a, const MotivicClass& b) {
            const EquivalenceReport r = l_equivalent(a, b);
            return py::make_tuple(r.verdict, r.difference);
        },
        py::arg("a"), py::arg("b"), "returns (verdict, sign-normalized difference)");
    m.def("stable_birational_class", &stable_birational_class, py::arg("a"));
    m.def("rationality_witness", &rationality_witness, py::arg("a"), py::arg("d"));
    m.def("birational_difference", &birational_difference, py::arg("a"), py::arg("b"));

    m.def(
        "count",
        [](const PyExpr& x, std::int64_t p, std::int64_t budget) {
            return count_expression(x.e, PrimeField(p), CountOptions{budget}).count;
        },
        py::arg("expr"), py::arg("p"), py::arg("budget") = kDefaultBudget,
        "brute-force number of F_p-points of a countable expression");
}
