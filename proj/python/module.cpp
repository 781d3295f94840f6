#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "abtor/chain_complex.hpp"
#include "abtor/cli.hpp"
#include "abtor/io.hpp"
#include "abtor/lens.hpp"
#include "abtor/mapping_torus.hpp"
#include "abtor/norms.hpp"
#include "abtor/presentation.hpp"

namespace py = pybind11;
using namespace abtor;

namespace {

std::vector<std::string> split_names(const std::string& gens) {
  std::istringstream is(gens);
  std::vector<std::string> names;
  for (std::string s; is >> s;) names.push_back(s);
  return names;
}

std::vector<std::string> names_for(std::size_t vars) {
  return vars == 0 ? std::vector<std::string>{} : laurent_names(vars);
}

Presentation read_presentation(const std::string& text) {
  std::istringstream is(text);
  return parse_presentation(is);
}

SurfaceAutomorphism read_automorphism(const std::string& text) {
  std::istringstream is(text);
  return parse_automorphism(is);
}

std::string fox(const std::string& element, const std::string& gens, const std::vector<std::string>& wrt) {
  auto names = split_names(gens);
  std::vector<std::size_t> idx;
  for (const auto& w : wrt) {
    auto it = std::find(names.begin(), names.end(), w);
    if (it == names.end()) fail(Errc::Parse, "unknown generator '" + w + "'");
    idx.push_back(static_cast<std::size_t>(it - names.begin()));
  }
  return higher_fox_derivative(parse_group_ring(element, names), idx).str(names);
}

py::dict alexander(const std::string& text, std::size_t ideal) {
  auto p = read_presentation(text);
  auto a = alexander_matrix(p);
  auto ab = abelianize(p);
  py::dict out;
  out["polynomial"] = order_delta(a, ideal).str(names_for(a.vars));
  out["variables"] = names_for(a.vars);
  out["betti"] = ab.betti;
  std::vector<std::string> torsion;
  for (const auto& t : ab.torsion) torsion.push_back(to_string(t));
  out["torsion"] = torsion;
  return out;
}

template <class Field>
py::dict torsion_of(const ChainComplexText& text, const Field& field,
                    const std::function<typename Field::value_type(const std::string&)>& entry,
                    const std::function<std::string(const typename Field::value_type&)>& render) {
  auto c = build_complex<Field>(text, field, entry);
  auto h = build_homology<Field>(text, entry);
  py::dict out;
  out["field"] = text.field.str();
  if (h) {
    out["torsion"] = render(torsion_with_homology(c, *h));
    out["sign_exponent"] = homology_sign_exponent(c);
  } else {
    out["torsion"] = render(torsion_acyclic(c));
  }
  return out;
}

py::dict chain_torsion(const std::string& body, const std::string& field) {
  std::istringstream is(body);
  auto text = parse_chain_complex_text(is);
  if (!field.empty()) text.field = parse_field_spec(field);
  switch (text.field.kind) {
    case FieldKind::Rational:
      return torsion_of<RationalField>(text, RationalField{}, parse_rational_expr,
                                       [](const Rational& x) { return x.str(); });
    case FieldKind::RationalFunction:
      return torsion_of<RationalFunctionField>(text, RationalFunctionField{}, parse_rational_function,
                                               [](const RationalFunction& x) { return x.str(); });
    case FieldKind::Cyclotomic: {
      CyclotomicField k(text.field.conductor);
      return torsion_of<CyclotomicField>(
          text, k, [&](const std::string& s) { return parse_cyclotomic(s, k); },
          [](const CyclotomicElem& x) { return x.str("z"); });
    }
  }
  fail(Errc::Unsupported, "unknown field");
}

std::vector<std::string> rationals(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_abtor, m) {
  m.doc() = "Fox calculus, Alexander polynomials and Reidemeister torsion in exact arithmetic.";

  // The type lives as long as the interpreter; `code` carries the Errc name.
  static py::handle error = py::exception<Error>(m, "AbtorError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      auto type = py::reinterpret_borrow<py::object>(error);
      py::object inst = type(std::string(errc_name(e.code())) + ": " + e.what());
      inst.attr("code") = std::string(errc_name(e.code()));
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  m.def("fox_derivative", &fox, py::arg("element"), py::arg("gens"), py::arg("wrt"),
        "Iterated Fox derivative of a group ring element, derivatives applied left to right.");
  m.def("alexander", &alexander, py::arg("presentation"), py::arg("ideal") = 1,
        "Order of the k-th elementary ideal of a presentation given in the .pres text format.");
  m.def("chain_torsion", &chain_torsion, py::arg("complex"), py::arg("field") = "",
        "Torsion of a chain complex given in the .cplx text format.");

  m.def("lens_torsion", [](int p, int q, int j) { return lens_torsion(LensSpace(p, q), j).canonical.str("z"); },
        py::arg("p"), py::arg("q"), py::arg("j"));
  m.def("maximal_torsion", [](int p, int q) { return rationals(maximal_torsion(LensSpace(p, q)).canonical.coeffs()); },
        py::arg("p"), py::arg("q"), "Coefficients of T^0..T^{p-1}.");
  m.def("lens_homeomorphic",
        [](int p, int q, int p2, int q2) { return homeomorphic(LensSpace(p, q), LensSpace(p2, q2)); });
  m.def("lens_homotopy_equivalent",
        [](int p, int q, int p2, int q2) { return homotopy_equivalent(LensSpace(p, q), LensSpace(p2, q2)); });
  m.def("linking_self", [](int p, int q) {
    auto [a, b] = linking_self(LensSpace(p, q));
    return py::make_tuple(a.str(), b.str());
  });
  m.def("verify_turaev_linking", [](int p, int q) { return verify_turaev_linking(LensSpace(p, q)); });
  m.def("franz_zero_check", &franz_zero_check, py::arg("p"), py::arg("bound") = 2);

  m.def("mapping_torus_torsion", [](const std::string& text) {
    auto f = mapping_torus_torsion(read_automorphism(text));
    return f.str(laurent_names(f.var_count(), true));
  });
  m.def("fiber_norm", [](const std::string& text) { return fiber_norm(read_automorphism(text)); });

  m.def("alexander_norm", [](const std::string& poly, const std::vector<long>& dir) {
    return alexander_norm(parse_laurent(poly, dir.size()), dir);
  });
  m.def("span", [](const std::string& poly, std::size_t variable) { return span(parse_laurent(poly), variable); });

  m.def("run_cli", &run_cli, py::arg("args"), py::arg("stdin") = "",
        "Runs one command-line invocation; returns (exit_code, stdout, stderr).");
}
