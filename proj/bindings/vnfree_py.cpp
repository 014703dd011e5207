#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vnfree/closed_forms.hpp"
#include "vnfree/expr.hpp"
#include "vnfree/fdim.hpp"
#include "vnfree/verify.hpp"

namespace py = pybind11;
using namespace vnfree;

namespace {

py::object to_py_number(const ExtParam& p) {
  if (p.is_infinite()) return py::module_::import("math").attr("inf");
  return py::module_::import("fractions").attr("Fraction")(p.finite().str());
}

Rational rational_from(const py::object& obj) {
  return Rational::from_string(py::cast<std::string>(py::str(obj)));
}

py::object value_to_py(const Value& v) {
  if (v.is_algebra()) return py::cast(v.algebra());
  if (v.is_number()) return to_py_number(v.number());
  return py::bool_(v.boolean());
}

Algebra algebra_from_text(const std::string& text, bool strict) {
  const EvalResult r = evaluate(*parse(text), EvalOptions{strict, nullptr});
  if (!r.value.is_algebra())
    throw TypeMismatchError("expression does not evaluate to an algebra");
  return r.value.algebra();
}

}  // namespace

PYBIND11_MODULE(_vnfree, m) {
  m.doc() = "Exact free products of tracial von Neumann algebras";

  const auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<TypeMismatchError>(m, "TypeMismatchError", base);
  py::register_exception<HypothesisViolation>(m, "HypothesisViolation", base);
  py::register_exception<ExtrapolationRejected>(m, "ExtrapolationRejected", base);

  py::class_<Algebra>(m, "Algebra")
      .def(py::init(
               [](const std::string& text) { return algebra_from_text(text, false); }),
           py::arg("expr"),
           "Build an algebra from a DSL expression such as '1/2:C + 1/2:C'")
      .def("fdim", [](const Algebra& a) { return to_py_number(fdim(a)); })
      .def("lumpiness",
           [](const Algebra& a) { return to_py_number(ExtParam(lumpiness(a))); })
      .def("dim", [](const Algebra& a) { return to_py_number(dim(a)); })
      .def("summands",
           [](const Algebra& a) {
             py::list out;
             for (const auto& [w, s] : a.summands()) {
               py::dict d;
               d["weight"] = w.str();
               switch (s.kind()) {
                 case Summand::Kind::Matrix:
                   d["kind"] = "matrix"; d["n"] = s.size(); break;
                 case Summand::Kind::FreeGroup:
                   d["kind"] = "fgf"; d["param"] = s.param().str(); break;
                 case Summand::Kind::DiffuseAbelianMatrix:
                   d["kind"] = "diffuse_abelian_matrix"; d["n"] = s.size(); break;
                 case Summand::Kind::Hyperfinite:
                   d["kind"] = "hyperfinite_II1"; break;
                 case Summand::Kind::AbelianTensorHyperfinite:
                   d["kind"] = "abelian_tensor_R"; break;
                 case Summand::Kind::DiffuseUnspecified:
                   d["kind"] = "diffuse_unspecified"; break;
               }
               out.append(std::move(d));
             }
             return out;
           })
      .def("__eq__",
           [](const Algebra& a, const Algebra& b) { return iso_eq(a, b); })
      .def("__repr__",
           [](const Algebra& a) { return "Algebra('" + render_text(a) + "')"; })
      .def("__str__", [](const Algebra& a) { return render_text(a); });

  py::class_<FreeProductResult>(m, "FreeProductResult")
      .def_property_readonly(
          "algebra", [](const FreeProductResult& r) { return r.algebra; })
      .def_property_readonly("factor_param",
                             [](const FreeProductResult& r) -> py::object {
                               if (!r.factor_param) return py::none();
                               return to_py_number(*r.factor_param);
                             })
      .def_property_readonly("justification",
                             [](const FreeProductResult& r) {
                               return std::string(rule_label(r.justification.rule));
                             })
      .def_property_readonly("trace",
                             [](const FreeProductResult& r) {
                               py::list out;
                               for (const auto& j : r.trace)
                                 out.append(std::string(rule_label(j.rule)));
                               return out;
                             })
      .def_property_readonly("atoms",
                             [](const FreeProductResult& r) {
                               py::list out;
                               for (const auto& atom : r.atoms) {
                                 py::dict d;
                                 d["weight"] = atom.weight.str();
                                 d["source"] = py::make_tuple(
                                     atom.source.left_index,
                                     atom.source.right_index, atom.source.size);
                                 out.append(std::move(d));
                               }
                               return out;
                             })
      .def("__repr__", [](const FreeProductResult& r) {
        return "FreeProductResult('" + render_text(r.algebra) + "', " +
               std::string(rule_label(r.justification.rule)) + ")";
      });

  m.def(
      "evaluate",
      [](const std::string& text, bool strict) {
        return value_to_py(
            evaluate(*parse(text), EvalOptions{strict, nullptr}).value);
      },
      py::arg("expr"), py::arg("strict") = false,
      "Evaluate a DSL expression to an Algebra, a number, or a bool");

  m.def(
      "eval_json",
      [](const std::string& text, bool strict) {
        return render_json(evaluate(*parse(text), EvalOptions{strict, nullptr}));
      },
      py::arg("expr"), py::arg("strict") = false);

  m.def(
      "free_product",
      [](const Algebra& a, const Algebra& b, bool strict) {
        return free_product(a, b, strict);
      },
      py::arg("a"), py::arg("b"), py::arg("strict") = false);

  m.def("fdim",
        [](const Algebra& a) { return to_py_number(fdim(a)); });

  m.def(
      "compress",
      [](const Algebra& a, const py::object& gamma) {
        if (a.summands().size() != 1)
          throw TypeMismatchError("compress expects a single free group factor");
        const Summand& s = a.summands()[0].summand;
        ExtParam param{Rational(1)};
        if (s.is_free_group())
          param = s.param();
        else if (!(s.kind() == Summand::Kind::DiffuseAbelianMatrix && s.size() == 1))
          throw TypeMismatchError("compress expects a free group factor or LZ");
        const ExtParam t = closed_forms::fgf_compress(param, rational_from(gamma));
        return Algebra::make({{Rational(1), Summand::free_group(t)}});
      },
      py::arg("algebra"), py::arg("gamma"));

  m.def(
      "group_algebra",
      [](const std::string& name) { return group_algebra(builtin_group(name)); },
      py::arg("name"));

  m.def(
      "verify",
      [](std::uint64_t seed, int cases, bool strict) {
        VerifyConfig cfg;
        cfg.seed = seed;
        cfg.cases = cases;
        cfg.strict = strict;
        const VerifyReport report = run_verify(cfg);
        py::dict out;
        out["all_passed"] = report.all_passed();
        out["report"] = report.format();
        py::list suites;
        for (const auto& s : report.suites) {
          py::dict d;
          d["name"] = s.name;
          d["passed"] = s.passed;
          d["failed"] = s.failed;
          d["regenerated"] = s.regenerated;
          d["discarded"] = s.discarded;
          suites.append(std::move(d));
        }
        out["suites"] = std::move(suites);
        return out;
      },
      py::arg("seed") = 0, py::arg("cases") = 1000, py::arg("strict") = false);
}
