#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swforge/alexander.hpp"
#include "swforge/cli.hpp"
#include "swforge/geography.hpp"
#include "swforge/laurent_io.hpp"
#include "swforge/sw_calculus.hpp"

namespace py = pybind11;
using namespace swforge;

namespace {

LaurentPoly poly_arg(const py::object& x) {
  if (py::isinstance<LaurentPoly>(x)) return x.cast<LaurentPoly>();
  if (py::isinstance<py::int_>(x)) return LaurentPoly::constant(Integer(py::str(x).cast<std::string>()));
  return poly_from_string(x.cast<std::string>());
}

// JSON travels as text; the python side decodes it with the json module.
std::string dump(const nlohmann::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_swforge, m) {
  // translators run newest first, so the derived ParseError goes last
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", domain.ptr());

  py::class_<LaurentPoly>(m, "Poly")
      .def(py::init([](const std::string& text) { return poly_from_string(text); }), py::arg("text"))
      .def_property_readonly("vars", [](const LaurentPoly& p) { return p.vars().names(); })
      .def("is_zero", &LaurentPoly::is_zero)
      .def("evaluate",
           [](const LaurentPoly& p, const std::map<std::string, std::string>& at) {
             std::map<std::string, Rational> point;
             for (const auto& [k, v] : at) point[k] = Rational(v);
             return evaluate(p, point).str();
           },
           py::arg("at"), "Exact value at a point; values and result are rational strings like '3/2'.")
      .def("bar", [](const LaurentPoly& p) { return bar(p); })
      .def("to_json", [](const LaurentPoly& p) { return dump(to_json(p)); })
      .def_static("from_json", [](const std::string& s) { return poly_from_json(nlohmann::json::parse(s)); })
      .def("__add__", [](const LaurentPoly& a, const py::object& b) { return a + poly_arg(b); })
      .def("__sub__", [](const LaurentPoly& a, const py::object& b) { return a - poly_arg(b); })
      .def("__mul__", [](const LaurentPoly& a, const py::object& b) { return a * poly_arg(b); })
      .def("__pow__", [](const LaurentPoly& a, unsigned k) { return pow(a, k); })
      .def("__neg__", [](const LaurentPoly& a) { return -a; })
      .def("__eq__", [](const LaurentPoly& a, const py::object& b) { return (a - poly_arg(b)).is_zero(); })
      .def("__str__", [](const LaurentPoly& p) { return to_string(p); })
      .def("__repr__", [](const LaurentPoly& p) { return "Poly('" + to_string(p) + "')"; });

  m.def("alexander", [](const std::string& presentation) { return alexander(parse_presentation(presentation)); });
  m.def("alexander_routes",
        [](const std::string& presentation) { return alexander_routes(parse_presentation(presentation)); });
  m.def("is_monic", [](const py::object& d) { return is_monic(poly_arg(d)); });

  m.def("sw_en", [](std::int64_t n) { return sw_en(n).poly(); });
  m.def(
      "knot_surgery",
      [](std::int64_t n, const py::object& delta, const std::string& var) {
        const auto x = knot_surgery(sw_en(n), poly_arg(delta), var);
        return py::make_tuple(x.poly(), check_symmetry(x), basic_classes(x).count_mod_negation);
      },
      py::arg("n"), py::arg("delta"), py::arg("var") = "tT",
      "Knot surgery on E(n); returns (sw, symmetric, basic class orbits).");
  m.def("z_k_analysis", [](const py::object& d, std::int64_t g) { return dump(to_json(z_k_analysis(poly_arg(d), g))); });
  m.def("cover_sw", [](const py::object& d, std::int64_t alpha) { return cover_sw(poly_arg(d), alpha); });
  m.def("pair_product_sw", [](const py::object& d) { return pair_product_sw(poly_arg(d)); });

  m.def("fiber_sum_geography", [](std::int64_t g, std::int64_t r1, std::int64_t r2) {
    const auto cn = fiber_sum_geography(g, r1, r2);
    auto j = to_json(cn);
    j["noether"] = to_json(noether_check(cn));
    return dump(j);
  });
  m.def("r_value", &r_value);
  m.def("lens_equiv",
        [](std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2, bool oriented) {
          return lens_equiv(LensSpace(p1, q1), LensSpace(p2, q2), oriented);
        },
        py::arg("p1"), py::arg("q1"), py::arg("p2"), py::arg("q2"), py::arg("oriented") = false);
  m.def("chain_boundary", [](const std::vector<std::int64_t>& framings) {
    const auto l = chain_boundary(PlumbingChain(framings));
    return py::make_tuple(l.p(), l.q());
  });
  m.def("blowdown_chain", [](std::int64_t n) { return blowdown_chain(n).framings(); });

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
