#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "slopeforge/cli.hpp"
#include "slopeforge/constructions.hpp"
#include "slopeforge/error.hpp"
#include "slopeforge/ledger.hpp"
#include "slopeforge/meyer.hpp"
#include "slopeforge/surface.hpp"
#include "slopeforge/symplectic.hpp"
#include "slopeforge/twist_word.hpp"

namespace py = pybind11;
using namespace slopeforge;

namespace {

py::object to_py(const Integer& x) { return py::int_(py::str(x.get_str())); }

py::object to_py(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_py(q.get_num()), to_py(q.get_den()));
}

// Accepts int, str, or fractions.Fraction.
Rational to_rational(const py::object& obj) { return cli::parse_rational(py::str(obj).cast<std::string>()); }

Integer to_integer(const py::object& obj) { return Integer(py::str(obj).cast<std::string>()); }

py::list class_list(const HomologyVector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

RelatorKind relator_kind(const std::string& name) {
  for (RelatorKind k : {RelatorKind::chain_odd, RelatorKind::chain_even, RelatorKind::hyperelliptic,
                        RelatorKind::matsumoto, RelatorKind::star})
    if (to_string(k) == name) return k;
  throw RangeError("unknown relator kind '" + name + "'");
}

py::dict record_dict(const ConstructionRecord& rec) {
  py::dict d;
  d["label"] = rec.label;
  d["genus"] = rec.genus;
  d["h"] = rec.h ? py::object(py::int_(*rec.h)) : py::object(py::none());
  d["stage"] = rec.stage;
  d["word"] = rec.word ? py::cast(*rec.word) : py::object(py::none());
  d["ledger"] = rec.ledger;
  d["provenance"] = rec.provenance;
  return d;
}

}  // namespace

PYBIND11_MODULE(_slopeforge, m) {
  m.doc() = "Lefschetz fibration factorizations, signatures and slopes";

  auto& base = py::register_exception<Error>(m, "SlopeforgeError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<GenusMismatch>(m, "GenusMismatch", base.ptr());
  py::register_exception<RangeError>(m, "RangeError", base.ptr());
  py::register_exception<NotTrivialError>(m, "NotTrivialError", base.ptr());
  py::register_exception<SubstitutionMismatch>(m, "SubstitutionMismatch", base.ptr());
  py::register_exception<DivisibilityError>(m, "DivisibilityError", base.ptr());
  py::register_exception<SearchExhausted>(m, "SearchExhausted", base.ptr());

  py::class_<Curve>(m, "Curve")
      .def_readonly("name", &Curve::name)
      .def_readonly("genus", &Curve::genus)
      .def_readonly("separating", &Curve::separating)
      .def_property_readonly("hclass", [](const Curve& c) { return class_list(c.hclass); })
      .def("__repr__", [](const Curve& c) {
        return "Curve(" + c.name + ", g=" + std::to_string(c.genus) + ", [" + format_vector(c.hclass) + "])";
      });

  m.def("standard_chain_classes", &standard_chain_classes, py::arg("genus"));
  m.def("intersection_number", [](const Curve& u, const Curve& v) { return to_py(intersection_number(u, v)); });

  py::class_<CurveCatalog>(m, "CurveCatalog")
      .def_static("builtin", py::overload_cast<int, int>(&CurveCatalog::builtin), py::arg("min_genus"),
                  py::arg("max_genus"))
      .def_static("parse", &CurveCatalog::parse, py::arg("text"))
      .def_static("load", [](const std::string& path) { return CurveCatalog::load(path); })
      .def("curve", &CurveCatalog::at, py::arg("genus"), py::arg("name"))
      .def("curves", &CurveCatalog::curves, py::arg("genus"))
      .def("genera", &CurveCatalog::genera)
      .def("families", [](const CurveCatalog& c) {
        std::vector<std::string> out;
        for (const auto& k : c.families()) out.push_back(k.label());
        return out;
      })
      .def("add", [](CurveCatalog& c, const std::string& name, const py::list& cls) {
        HomologyVector v;
        for (const auto& x : cls) v.push_back(to_integer(py::reinterpret_borrow<py::object>(x)));
        c.add(Curve::from_class(name, std::move(v)));
      })
      .def("serialize", &CurveCatalog::serialize)
      .def("validate", [](const CurveCatalog& c) {
        const CatalogReport r = validate_catalog(c);
        return py::make_tuple(r.passed(), r.to_string());
      });

  py::class_<TwistWord>(m, "TwistWord")
      .def_property_readonly("genus", &TwistWord::genus)
      .def("__len__", &TwistWord::size)
      .def("positive_count", &TwistWord::positive_count)
      .def("negative_count", &TwistWord::negative_count)
      .def("curve_names",
           [](const TwistWord& w) {
             std::vector<std::string> out;
             for (const auto& l : w.letters()) out.push_back(l.curve.name);
             return out;
           })
      .def("curves",
           [](const TwistWord& w) {
             std::vector<Curve> out;
             for (const auto& l : w.letters()) out.push_back(l.curve);
             return out;
           })
      .def("inverse", &TwistWord::inverse)
      .def("power", &TwistWord::power)
      .def("__mul__", [](const TwistWord& x, const TwistWord& y) { return x * y; })
      .def("__str__", &serialize_word);

  m.def("parse_word", &parse_word, py::arg("text"), py::arg("catalog"), py::arg("genus"));
  m.def("parse_word_file", &parse_word_file, py::arg("text"), py::arg("catalog"), py::arg("genus"));
  m.def("serialize_word", &serialize_word);
  m.def("write_word_file", &write_word_file, py::arg("word"), py::arg("catalog"));
  m.def("hurwitz_move", &hurwitz_move, py::arg("word"), py::arg("index"));
  m.def("hurwitz_move_inverse", &hurwitz_move_inverse, py::arg("word"), py::arg("index"));
  m.def("global_conjugate", &global_conjugate, py::arg("word"), py::arg("phi"));
  m.def("fiber_sum", &fiber_sum, py::arg("w1"), py::arg("w2"), py::arg("phi"));
  m.def(
      "build_relator",
      [](const std::string& kind, int genus, const CurveCatalog& catalog, int h) {
        const Relator r = build_relator(relator_kind(kind), genus, catalog, h);
        return py::make_tuple(r.left_side(), r.right_side());
      },
      py::arg("kind"), py::arg("genus"), py::arg("catalog"), py::arg("h") = 0,
      "Left and right sides of a catalog relator.");
  m.def(
      "substitute",
      [](const TwistWord& word, std::size_t at, const TwistWord& left, const TwistWord& right) {
        return substitute(word, at, Relator::from_sides(left, right, RelatorKind::custom));
      },
      py::arg("word"), py::arg("at"), py::arg("left"), py::arg("right"));

  m.def("evaluate", [](const TwistWord& w) {
    const SymplecticMatrix mat = evaluate(w);
    py::list rows;
    for (int r = 0; r < mat.dimension(); ++r) {
      py::list row;
      for (int c = 0; c < mat.dimension(); ++c) row.append(to_py(mat(r, c)));
      rows.append(row);
    }
    return rows;
  });
  m.def("is_homologically_trivial", &is_homologically_trivial);

  m.def(
      "signature",
      [](const TwistWord& w, bool achiral) {
        const SignatureReport r = achiral ? signature_of_achiral_word(w) : signature_of_word(w);
        py::dict d;
        d["length"] = r.length;
        d["cocycle_sum"] = r.cocycle_sum;
        d["separating_correction"] = r.separating_correction;
        d["sigma"] = r.sigma;
        d["euler"] = r.euler;
        return d;
      },
      py::arg("word"), py::arg("achiral") = false);
  m.def(
      "relator_signature_delta",
      [](const std::string& kind, int genus, const CurveCatalog& catalog, int h) {
        const RelatorDelta d = relator_signature_delta(build_relator(relator_kind(kind), genus, catalog, h));
        return py::make_tuple(d.d_euler, d.d_sigma);
      },
      py::arg("kind"), py::arg("genus"), py::arg("catalog"), py::arg("h") = 0);

  py::class_<FibrationInvariants>(m, "FibrationInvariants")
      .def_static(
          "from_euler_sigma",
          [](int g, const py::object& e, const py::object& s) {
            return FibrationInvariants::from_euler_sigma(g, to_integer(e), to_integer(s));
          },
          py::arg("genus"), py::arg("euler"), py::arg("sigma"))
      .def_static(
          "from_ksq_chi",
          [](int g, const py::object& k, const py::object& c) {
            return FibrationInvariants::from_ksq_chi(g, to_integer(k), to_integer(c));
          },
          py::arg("genus"), py::arg("ksq"), py::arg("chi_f"))
      .def_readonly("genus", &FibrationInvariants::genus)
      .def_property_readonly("letters",
                             [](const FibrationInvariants& x) {
                               return x.letters ? to_py(*x.letters) : py::object(py::none());
                             })
      .def_property_readonly("euler", [](const FibrationInvariants& x) { return to_py(x.euler); })
      .def_property_readonly("sigma", [](const FibrationInvariants& x) { return to_py(x.sigma); })
      .def_property_readonly("c1sq", [](const FibrationInvariants& x) { return to_py(x.c1sq()); })
      .def_property_readonly("chi_h", [](const FibrationInvariants& x) { return to_py(x.chi_h()); })
      .def_property_readonly("ksq", [](const FibrationInvariants& x) { return to_py(x.ksq()); })
      .def_property_readonly("chi_f", [](const FibrationInvariants& x) { return to_py(x.chi_f()); })
      .def_property_readonly("slope", [](const FibrationInvariants& x) { return to_py(x.slope()); })
      .def("__eq__", [](const FibrationInvariants& x, const FibrationInvariants& y) { return x == y; })
      .def("__repr__", [](const FibrationInvariants& x) {
        return "FibrationInvariants(g=" + std::to_string(x.genus) + ", e=" + x.euler.get_str() +
               ", sigma=" + x.sigma.get_str() + ")";
      });

  m.def("c_g", &c_g);
  m.def("matsumoto_invariants", &matsumoto_invariants);
  m.def("hyperelliptic_invariants", &hyperelliptic_invariants);
  m.def("ledger_fiber_sum", &ledger_fiber_sum);
  m.def("ledger_fiber_power",
        [](const FibrationInvariants& x, const py::object& n) { return ledger_fiber_power(x, to_integer(n)); });
  m.def("apply_star_substitution", &apply_star_substitution);
  m.def("theorem_stage", &theorem_stage);
  m.def("theorem_slope", [](int g, int h) { return to_py(theorem_slope(g, h)); });
  m.def("corollary_iterate", &corollary_iterate);
  m.def("slope_limit", [](int g, int h) { return to_py(slope_limit(g, h)); });
  m.def("h_max_real", &h_max_real);
  m.def("h_max", &h_max);
  m.def("low_slope_bound", [](int g, int n) { return to_py(low_slope_bound(g, n)); });
  m.def(
      "to_decimal", [](const py::object& q, int digits) { return to_decimal(to_rational(q), digits); },
      py::arg("q"), py::arg("significant_digits") = 12);

  m.def("high_slope_word_length", [](int g, int h, int stage) { return to_py(high_slope_word_length(g, h, stage)); });
  m.def(
      "build_high_slope_word",
      [](int g, int h) { return record_dict(build_high_slope_word(CurveCatalog::builtin(g), g, h)); },
      py::arg("genus"), py::arg("h"));
  m.def(
      "high_slope_sequence",
      [](int g, int h, int stages, std::size_t budget) {
        py::list out;
        for (const auto& r : high_slope_sequence(CurveCatalog::builtin(g), g, h, stages, budget))
          out.append(record_dict(r));
        return out;
      },
      py::arg("genus"), py::arg("h"), py::arg("m"), py::arg("budget") = kDefaultWordBudget);
  m.def(
      "build_counterexample", [](int g) { return record_dict(build_counterexample(CurveCatalog::builtin(g), g)); },
      py::arg("genus"));
  m.def(
      "approximate_slope",
      [](const py::object& r, const py::object& eps, const FibrationInvariants& low,
         const FibrationInvariants& high, const py::object& max_copies) {
        const Approximation a = approximate_slope(to_rational(r), to_rational(eps), low, high, to_integer(max_copies));
        return py::make_tuple(to_py(a.k), to_py(a.l), to_py(a.lambda));
      },
      py::arg("r"), py::arg("eps"), py::arg("low"), py::arg("high"), py::arg("max_copies") = 100000);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
