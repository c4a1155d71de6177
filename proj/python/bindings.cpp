#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "motivic/axioms.hpp"
#include "motivic/error.hpp"
#include "motivic/expression.hpp"
#include "motivic/hilbert.hpp"
#include "motivic/json_io.hpp"
#include "motivic/oracles.hpp"
#include "motivic/power_structure.hpp"

namespace py = pybind11;
using namespace motivic;

namespace {

py::int_ to_python(const Integer& value) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

py::list to_python(const std::vector<Integer>& values) {
    py::list out;
    for (const auto& v : values) {
        out.append(to_python(v));
    }
    return out;
}

Integer from_python(const py::int_& value) {
    return Integer(py::str(value).cast<std::string>());
}

std::vector<Polynomial> padded(std::vector<Polynomial> values, const Ring& ring, int order) {
    if (static_cast<int>(values.size()) > order) {
        throw Error("more exponents than the truncation order");
    }
    values.resize(static_cast<std::size_t>(order), Polynomial(ring));
    return values;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Power structures over polynomial rings and Hilbert schemes of points";

    auto base_error = py::register_exception<Error>(m, "MotivicError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ExpressionError", base_error.ptr());

    py::class_<Ring>(m, "Ring")
        .def(py::init<>())
        .def(py::init<std::vector<std::string>, bool>(), py::arg("variables"), py::arg("laurent") = false)
        .def_property_readonly("variables", &Ring::variables)
        .def_property_readonly("laurent", &Ring::laurent)
        .def("__eq__", [](const Ring& a, const Ring& b) { return a == b; })
        .def("__str__", &Ring::to_string)
        .def("__repr__", [](const Ring& r) { return "<Ring " + r.to_string() + ">"; });

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init<Ring>(), py::arg("ring"))
        .def(py::init([](const Ring& ring, const py::int_& c) { return Polynomial(ring, from_python(c)); }),
             py::arg("ring"), py::arg("constant"))
        .def_static("parse", &parse_polynomial, py::arg("source"), py::arg("ring"))
        .def_static("from_json", [](const std::string& s) { return polynomial_from_json(nlohmann::json::parse(s)); })
        .def_property_readonly("ring", &Polynomial::ring)
        .def("terms", [](const Polynomial& p) {
            py::list out;
            for (const auto& [e, c] : p.terms()) {
                out.append(py::make_tuple(py::tuple(py::cast(std::vector<int>(e.begin(), e.end()))), to_python(c)));
            }
            return out;
        })
        .def("eval_at_ones", [](const Polynomial& p) { return to_python(p.eval_at_ones()); })
        .def("is_effective", &Polynomial::is_effective)
        .def("to_json", [](const Polynomial& p) { return to_json(p).dump(); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &Polynomial::to_string)
        .def("__repr__", [](const Polynomial& p) { return "<Polynomial " + p.to_string() + ">"; });

    py::class_<Series>(m, "Series")
        .def(py::init<Ring, std::vector<Polynomial>>(), py::arg("ring"), py::arg("coefficients"))
        .def_static("parse", &parse_series, py::arg("source"), py::arg("ring"), py::arg("order"),
                    py::arg("variable") = "t")
        .def_static("one", &Series::one, py::arg("ring"), py::arg("order"))
        .def_static("from_json", [](const std::string& s) { return series_from_json(nlohmann::json::parse(s)); })
        .def_property_readonly("ring", &Series::ring)
        .def_property_readonly("order", &Series::order)
        .def_property_readonly("coefficients", &Series::coefficients)
        .def("__getitem__", [](const Series& s, int k) {
            if (k < 0 || k > s.order()) {
                throw py::index_error("coefficient index out of range");
            }
            return s[k];
        })
        .def("__len__", [](const Series& s) { return s.order() + 1; })
        .def("is_effective", &Series::is_effective)
        .def("to_json", [](const Series& s) { return to_json(s).dump(); })
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &Series::to_string)
        .def("__repr__", [](const Series& s) { return "<Series " + s.to_string() + ">"; });

    m.def("inverse", &inverse, py::arg("series"));
    m.def("truncate", [](const Series& s, int order) { return truncate(s, order); }, py::arg("series"), py::arg("order"));
    m.def("base_series", &base_series, py::arg("a"), py::arg("order"));
    m.def("factor", [](const Series& a) { return factor(a).exponents(); }, py::arg("series"),
          "Exponents b_1..b_N with A = prod (1 - t^i)^-b_i.");
    m.def("assemble", [](const Ring& ring, std::vector<Polynomial> exponents, std::optional<int> order) {
              const int n = order.value_or(static_cast<int>(exponents.size()));
              return assemble(EulerProduct(ring, padded(std::move(exponents), ring, n)));
          },
          py::arg("ring"), py::arg("exponents"), py::arg("order") = py::none());
    m.def("pow", [](const Series& a, const Polynomial& e) { return motivic::pow(a, e); }, py::arg("series"),
          py::arg("exponent"));
    m.def("exp_map", [](const Ring& ring, std::vector<Polynomial> terms, std::optional<int> order) {
              const int n = order.value_or(static_cast<int>(terms.size()));
              return exp_map(ring, padded(std::move(terms), ring, n));
          },
          py::arg("ring"), py::arg("terms"), py::arg("order") = py::none());
    m.def("log_map", [](const Series& a) { return log_map(a); }, py::arg("series"));
    m.def("transport_check",
          [](const Series& a, const Polynomial& e, const std::string& kind, std::optional<Ring> target,
             std::vector<Polynomial> images) {
              if (kind == "identity") {
                  return transport_check(Substitution::identity(a.ring()), a, e);
              }
              if (kind == "ones") {
                  return transport_check(Substitution::evaluate_at_ones(a.ring()), a, e);
              }
              if (kind == "monomial" && target) {
                  return transport_check(Substitution::monomial(a.ring(), *target, std::move(images)), a, e);
              }
              throw Error("substitution kind must be identity, ones, or monomial with a target ring");
          },
          py::arg("series"), py::arg("exponent"), py::arg("kind") = "ones", py::arg("target") = py::none(),
          py::arg("images") = std::vector<Polynomial>{});

    m.def("motivic_ring", &motivic_ring);
    m.def("kapranov_zeta", &kapranov_zeta, py::arg("x"), py::arg("order"));
    m.def("local_series", [](int d, int order) { return local_series(d, order).series; }, py::arg("dimension"),
          py::arg("order"));
    m.def("global_series",
          [](const Polynomial& x, int d, int order) { return global_series({x, d}, local_series(d, order), order); },
          py::arg("x"), py::arg("dimension"), py::arg("order"));
    m.def("euler_specialization", &euler_specialization, py::arg("series"));
    m.def("hodge_deligne_series",
          [](const Polynomial& e_x, int d, int order) { return hodge_deligne_series(e_x, d, order); },
          py::arg("e_x"), py::arg("dimension"), py::arg("order"));
    m.def("affine_consistency_check", [](int d, int order) {
              const auto report = affine_consistency_check(d, order);
              return py::make_tuple(report.ok, report.report);
          },
          py::arg("dimension"), py::arg("order"));

    m.def("partitions", &oracles::partitions_enumerate, py::arg("n"));
    m.def("finite_power_enumerate",
          [](std::vector<unsigned> sizes, unsigned points, int order) {
              return to_python(oracles::finite_power_enumerate({std::move(sizes), points}, order));
          },
          py::arg("sizes"), py::arg("m"), py::arg("order"));
    m.def("coefficient_formula_count",
          [](std::vector<unsigned> sizes, unsigned points, int order) {
              return to_python(oracles::coefficient_formula_count({std::move(sizes), points}, order));
          },
          py::arg("sizes"), py::arg("m"), py::arg("order"));

    m.def("run_axiom_suite",
          [](std::uint64_t seed, int samples, int order) {
              AxiomSuiteConfig config;
              config.seed = seed;
              config.samples = samples;
              config.order = order;
              py::list out;
              for (const auto& o : run_axiom_suite(config)) {
                  out.append(py::dict(py::arg("name") = o.name, py::arg("checked") = o.checked,
                                      py::arg("failed") = o.failed,
                                      py::arg("counterexample") = o.first_counterexample));
              }
              return out;
          },
          py::arg("seed") = 1, py::arg("samples") = 20, py::arg("order") = 6);
}
