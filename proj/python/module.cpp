#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pbern/cli.hpp"
#include "pbern/combinatorics.hpp"
#include "pbern/pbernoulli.hpp"
#include "pbern/series.hpp"

namespace py = pybind11;

// BigInt <-> int and Rational <-> fractions.Fraction, both through the decimal
// string forms so no precision is lost.
namespace pybind11::detail {

template <>
struct type_caster<pbern::BigInt> {
    PYBIND11_TYPE_CASTER(pbern::BigInt, const_name("int"));

    bool load(handle src, bool)
    {
        if (!PyLong_Check(src.ptr())) {
            return false;
        }
        value = pbern::BigInt(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const pbern::BigInt& v, return_value_policy, handle)
    {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

template <>
struct type_caster<pbern::Rational> {
    PYBIND11_TYPE_CASTER(pbern::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool)
    {
        const auto fraction = py::module_::import("fractions").attr("Fraction");
        if (!PyLong_Check(src.ptr()) && !py::isinstance(src, fraction)) {
            return false;
        }
        value = pbern::Rational::parse(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const pbern::Rational& v, return_value_policy, handle)
    {
        const auto fraction = py::module_::import("fractions").attr("Fraction");
        py::object num = py::reinterpret_steal<py::object>(PyLong_FromString(v.numerator().get_str().c_str(), nullptr, 10));
        py::object den = py::reinterpret_steal<py::object>(PyLong_FromString(v.denominator().get_str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

}  // namespace pybind11::detail

namespace {

py::object mismatch_tuple(const pbern::VerifyReport& r)
{
    if (!r.first_mismatch) {
        return py::none();
    }
    const auto& m = *r.first_mismatch;
    return py::make_tuple(m.n, m.p, m.left, m.right);
}

py::tuple run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = pbern::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact p-Bernoulli numbers: recurrence, closed-form generating function, verification.";

    py::register_exception<pbern::TruncationError>(m, "TruncationError", PyExc_IndexError);
    py::register_exception<pbern::SeriesDivisionByZero>(m, "SeriesDivisionByZero", PyExc_ZeroDivisionError);
    py::register_exception<pbern::PoleCancellationError>(m, "PoleCancellationError", PyExc_ArithmeticError);

    m.def("harmonic", &pbern::harmonic, py::arg("n"));
    m.def("binomial", &pbern::binomial, py::arg("n"), py::arg("k"));
    m.def("factorial", &pbern::factorial, py::arg("n"));

    py::class_<pbern::Series>(m, "Series")
        .def_static("zero", &pbern::Series::zero, py::arg("order"))
        .def_static("constant", &pbern::Series::constant, py::arg("c"), py::arg("order"))
        .def_static("monomial", &pbern::Series::monomial, py::arg("c"), py::arg("exponent"), py::arg("order"))
        .def_static("from_coefficients", &pbern::Series::from_coefficients, py::arg("valuation"), py::arg("coeffs"))
        .def_property_readonly("valuation", &pbern::Series::valuation)
        .def_property_readonly("order", &pbern::Series::order)
        .def_property_readonly("coefficients", &pbern::Series::coefficients)
        .def("coefficient", &pbern::Series::coefficient, py::arg("m"))
        .def("egf_coefficient", &pbern::Series::egf_coefficient, py::arg("n"))
        .def("shifted", &pbern::Series::shifted, py::arg("k"))
        .def("derivative", [](const pbern::Series& a) { return pbern::derivative(a); })
        .def("invert", [](const pbern::Series& a) { return pbern::invert(a); })
        .def("__add__", [](const pbern::Series& a, const pbern::Series& b) { return pbern::add(a, b); })
        .def("__sub__", [](const pbern::Series& a, const pbern::Series& b) { return pbern::sub(a, b); })
        .def("__mul__", [](const pbern::Series& a, const pbern::Series& b) { return pbern::mul(a, b); })
        .def("__mul__", [](const pbern::Series& a, const pbern::Rational& c) { return a.scaled(c); })
        .def("__rmul__", [](const pbern::Series& a, const pbern::Rational& c) { return a.scaled(c); })
        .def("__neg__", [](const pbern::Series& a) { return pbern::negate(a); })
        .def("__pow__", [](const pbern::Series& a, std::int64_t k) { return pbern::pow(a, k); })
        .def("__eq__", [](const pbern::Series& a, const pbern::Series& b) { return a == b; })
        .def("__str__", &pbern::Series::to_string)
        .def("__repr__", [](const pbern::Series& a) { return "<Series " + a.to_string() + ">"; });

    m.def("exp_linear", &pbern::exp_linear, py::arg("c"), py::arg("order"));
    m.def("expm1", &pbern::expm1, py::arg("order"));

    py::class_<pbern::PBernTable>(m, "PBernTable")
        .def_readonly("max_n", &pbern::PBernTable::max_n)
        .def_readonly("max_p", &pbern::PBernTable::max_p)
        .def_property_readonly("route", [](const pbern::PBernTable& t) { return std::string(pbern::to_string(t.route)); })
        .def_readonly("values", &pbern::PBernTable::values)
        .def("at", [](const pbern::PBernTable& t, std::int64_t n, std::int64_t p) { return t.at(n, p); })
        .def("set", [](pbern::PBernTable& t, std::int64_t n, std::int64_t p, const pbern::Rational& v) { t.at(n, p) = v; });

    py::class_<pbern::VerifyReport>(m, "VerifyReport")
        .def_property_readonly("kind", [](const pbern::VerifyReport& r) { return std::string(pbern::to_string(r.kind)); })
        .def_readonly("max_n", &pbern::VerifyReport::max_n)
        .def_readonly("max_p", &pbern::VerifyReport::max_p)
        .def_property_readonly("passed", &pbern::VerifyReport::passed)
        .def_property_readonly("first_mismatch", &mismatch_tuple);

    m.def("classical_bernoulli", &pbern::classical_bernoulli, py::arg("N"));
    m.def("recurrence_table", &pbern::recurrence_table, py::arg("N"), py::arg("P"));
    m.def("closed_form_table", &pbern::closed_form_table, py::arg("N"), py::arg("P"));
    m.def("closed_form_laurent", &pbern::closed_form_laurent, py::arg("p"), py::arg("N"));
    m.def("closed_form_egf", &pbern::closed_form_egf, py::arg("p"), py::arg("N"));
    m.def("verify_theorem", py::overload_cast<std::int64_t, std::int64_t>(&pbern::verify_theorem), py::arg("N"),
          py::arg("P"));
    m.def("verify_theorem", py::overload_cast<const pbern::PBernTable&>(&pbern::verify_theorem), py::arg("table"));
    m.def("verify_ode", &pbern::verify_ode, py::arg("p"), py::arg("N"));
    m.def("verify_pole_cancellation", &pbern::verify_pole_cancellation, py::arg("p"));
    m.def("verify_base_case", &pbern::verify_base_case, py::arg("N"));
    m.def("check_recurrence", &pbern::check_recurrence, py::arg("table"));

    m.def("run_cli", &run_cli, py::arg("args"),
          "Run one pbern command line; returns (exit_code, stdout, stderr).");
}
