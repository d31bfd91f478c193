#include <algorithm>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ribbonkit/acceptance.hpp"
#include "ribbonkit/analysis.hpp"
#include "ribbonkit/corpus.hpp"
#include "ribbonkit/duality.hpp"
#include "ribbonkit/error.hpp"
#include "ribbonkit/exact_la.hpp"
#include "ribbonkit/formats.hpp"
#include "ribbonkit/interlace.hpp"
#include "ribbonkit/pseudo.hpp"
#include "ribbonkit/set_system.hpp"

namespace py = pybind11;
using namespace ribbonkit;

namespace {

using Labels = std::vector<std::string>;

py::int_ to_py(const mpz_class& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_py(const mpq_class& v) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(v.get_num()), to_py(v.get_den()));
}

mpz_class to_mpz(const py::handle& v) { return mpz_class(py::str(v).cast<std::string>()); }

mpq_class to_mpq(const py::handle& v) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  const py::object f = fraction(v);
  mpq_class out(to_mpz(f.attr("numerator")), to_mpz(f.attr("denominator")));
  out.canonicalize();
  return out;
}

py::list to_py(const std::vector<mpz_class>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

IntPolynomial to_poly(const py::sequence& coefficients) {
  std::vector<mpz_class> c;
  for (auto v : coefficients) c.push_back(to_mpz(v));
  return IntPolynomial(std::move(c));
}

py::list label_lists(const std::vector<EdgeSet>& sets, const ChordDiagram& d) {
  py::list out;
  for (EdgeSet s : sets) out.append(d.names(s));
  return out;
}

py::tuple cert_tuple(Certificate c) { return py::make_tuple(c.cut_a, c.cut_b); }
Certificate to_cert(const std::pair<int, int>& c) { return Certificate{c.first, c.second}; }

py::list rows_of(const IntMatrix& m) {
  py::list rows;
  for (int i = 0; i < m.size(); ++i) {
    py::list row;
    for (int j = 0; j < m.size(); ++j) row.append(m(i, j));
    rows.append(row);
  }
  return rows;
}

py::dict detection_dict(const ChordDiagram& d, const DetectionReport& r) {
  py::dict out;
  out["detects"] = r.detects;
  out["identity_plus_det"] = to_py(r.identity_plus_det);
  out["quasi_tree_count"] = r.quasi_tree_count;
  out["witness"] = r.witness ? py::cast(d.names(*r.witness)) : py::none();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations on ribbon graphs, bouquets and Delta-matroids";

  static py::exception<Error> error(m, "RibbonkitError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // args are (kind name, message)
      py::object instance = py::handle(error.ptr())(std::string(e.name()), std::string(e.what()));
      PyErr_SetObject(error.ptr(), instance.ptr());
    }
  });

  py::class_<ChordDiagram>(m, "ChordDiagram")
      .def(py::init([](const Labels& word, const Labels& twisted) { return ChordDiagram::from_tokens(word, twisted); }),
           py::arg("word"), py::arg("twisted") = Labels{})
      .def_property_readonly("labels", &ChordDiagram::labels)
      .def_property_readonly("word",
                             [](const ChordDiagram& d) {
                               Labels out;
                               for (int e : d.word()) out.push_back(d.label(e));
                               return out;
                             })
      .def_property_readonly("twisted", [](const ChordDiagram& d) { return d.names(d.twisted()); })
      .def_property_readonly("edge_count", &ChordDiagram::edge_count)
      .def("interlaced", [](const ChordDiagram& d, const std::string& e, const std::string& f) { return interlace(d, e, f); })
      .def("is_orientable", [](const ChordDiagram& d) { return is_orientable(d); })
      .def("quasi_trees", [](const ChordDiagram& d) { return label_lists(quasi_trees(d), d); })
      .def("is_quasi_tree", [](const ChordDiagram& d, const Labels& x) { return is_quasi_tree(d, d.subset(x)); })
      .def("boundary_count", [](const ChordDiagram& d, const Labels& x) { return boundary_components(d, d.subset(x)).component_count; })
      .def("petrial", [](const ChordDiagram& d, const Labels& x) { return petrial(d, d.subset(x)); })
      .def("canonical", [](const ChordDiagram& d, bool labeled) { return canonicalize(d, labeled); },
           py::arg("labeled") = true)
      .def("partial_dual", [](const ChordDiagram& d, const Labels& x) { return partial_dual(d, d.subset(x)); })
      .def("to_bqt", [](const ChordDiagram& d, const std::string& name) { return to_bqt(anchored(d), name); },
           py::arg("name") = "")
      .def(py::self == py::self)
      .def("__repr__", [](const ChordDiagram& d) {
        std::string word;
        for (int e : d.word()) word += (word.empty() ? "" : " ") + d.label(e);
        return "ChordDiagram('" + word + "')";
      });

  py::class_<IntMatrix>(m, "IntMatrix")
      .def(py::init([](const Labels& index, const std::vector<std::vector<std::int64_t>>& rows) {
             IntMatrix out(index);
             if (rows.size() != index.size()) throw Error(ErrorKind::kIndexMismatch, "row count differs from the index");
             for (std::size_t i = 0; i < rows.size(); ++i) {
               if (rows[i].size() != index.size()) throw Error(ErrorKind::kIndexMismatch, "row length differs from the index");
               for (std::size_t j = 0; j < rows.size(); ++j) out(i, j) = rows[i][j];
             }
             return out;
           }),
           py::arg("index"), py::arg("rows"))
      .def_property_readonly("index", &IntMatrix::index)
      .def("rows", &rows_of)
      .def("det", [](const IntMatrix& a, std::optional<Labels> rows) {
        return to_py(rows ? det(a, a.subset(*rows)) : det(a));
      }, py::arg("rows") = py::none())
      .def("is_pu", [](const IntMatrix& a) { return is_pu(a); })
      .def("is_skew_symmetric", [](const IntMatrix& a) { return is_skew_symmetric(a); })
      .def("identity_plus", [](const IntMatrix& a) { return identity_plus(a); })
      .def("smith_diagonal", [](const IntMatrix& a) { return to_py(smith_normal_form(a).diagonal); })
      .def("to_text", [](const IntMatrix& a) { return serialize_matrix(a); })
      .def(py::self == py::self);

  py::class_<SetSystem>(m, "SetSystem")
      .def(py::init([](const Labels& ground, const std::vector<Labels>& sets) {
             std::vector<EdgeSet> feasible;
             for (const auto& s : sets) {
               EdgeSet b;
               for (const auto& label : s) {
                 const auto it = std::find(ground.begin(), ground.end(), label);
                 if (it == ground.end()) throw Error(ErrorKind::kUnknownElement, label + " is not in the ground set");
                 b = b.with(static_cast<int>(it - ground.begin()));
               }
               feasible.push_back(b);
             }
             return SetSystem(ground, feasible);
           }),
           py::arg("ground"), py::arg("feasible"))
      .def_property_readonly("ground", &SetSystem::ground)
      .def_property_readonly("feasible",
                             [](const SetSystem& s) {
                               std::vector<Labels> out;
                               for (EdgeSet b : s.feasible()) out.push_back(s.names(b));
                               return out;
                             })
      .def("is_delta_matroid", [](const SetSystem& s) { return is_delta_matroid(s); })
      .def("is_strong", [](const SetSystem& s) { return is_strong(s); })
      .def("is_even", [](const SetSystem& s) { return is_even(s); })
      .def("lift", [](const SetSystem& s, const std::string& hat) { return lift(s, hat).inner; }, py::arg("hat") = "hat")
      .def("same_as", [](const SetSystem& a, const SetSystem& b) { return same_system(a, b); })
      .def("to_text", [](const SetSystem& s) { return serialize_dsys(s); });

  m.def("parse_dsys", &parse_dsys, py::arg("text"));
  m.def("delta_matroid", [](const ChordDiagram& d) { return delta_matroid(anchored(d)); });

  m.def("parse_bqt", [](const std::string& text) {
    const BouquetDocument doc = parse_bqt(text);
    py::dict out;
    out["name"] = doc.name;
    out["diagram"] = doc.graph.base;
    out["anchor"] = doc.graph.base.names(doc.graph.anchor);
    py::dict certs;
    for (const auto& c : doc.certificates) certs[py::str(c.name)] = cert_tuple(c.cut);
    out["certificates"] = certs;
    return out;
  }, py::arg("text"));
  m.def("fixture", [](const std::string& name) { return fixture_info(name).source; }, py::arg("name"),
        "Source text of a shipped fixture.");
  m.def("fixture_names", [] {
    Labels out;
    for (const auto& f : fixture_catalog()) out.push_back(f.name);
    return out;
  });
  m.def("make_cn", &make_cn, py::arg("n"));
  m.def("random_bouquet", &random_bouquet, py::arg("seed"), py::arg("n"), py::arg("twist_density") = 0.5);
  m.def("random_pseudo", &random_pseudo, py::arg("seed"), py::arg("n"));

  m.def("find_certificate", [](const ChordDiagram& d) -> py::object {
    if (auto c = find_certificate(d)) return cert_tuple(*c);
    return py::none();
  });
  m.def("all_certificates", [](const ChordDiagram& d) {
    py::list out;
    for (Certificate c : all_certificates(d)) out.append(cert_tuple(c));
    return out;
  });
  m.def("is_valid_certificate", [](const ChordDiagram& d, std::pair<int, int> c) { return is_valid_certificate(d, to_cert(c)); });
  m.def("adjust", [](const ChordDiagram& d, std::pair<int, int> c, const std::string& hat) { return adjust(d, to_cert(c), hat); },
        py::arg("diagram"), py::arg("certificate"), py::arg("hat") = "hat");

  m.def("m2", [](const ChordDiagram& d) {
    const GF2Matrix g = m2(d);
    IntMatrix out(g.index());
    for (int i = 0; i < g.size(); ++i) {
      for (int j = 0; j < g.size(); ++j) out(i, j) = g.get(i, j) ? 1 : 0;
    }
    return out;
  });
  m.def("mpm", [](const ChordDiagram& d) { return mpm(d); });
  m.def("adjusted_matrix", [](const ChordDiagram& d, std::pair<int, int> c) { return adjusted_matrix(d, to_cert(c)); });
  m.def("verify_detection", [](const ChordDiagram& d, const IntMatrix& a) { return detection_dict(d, verify_detection(d, a)); });

  m.def("qt_poly", [](const ChordDiagram& d) { return to_py(qt_poly(anchored(d)).coefficients()); });
  m.def("qt_poly_eval", [](const ChordDiagram& d, const py::dict& point) {
    std::map<std::string, mpq_class> values;
    for (auto [k, v] : point) values[py::str(k)] = to_mpq(v);
    return to_py(qt_poly_eval(anchored(d), values));
  });
  m.def("rhp_root_count", [](const py::sequence& c) { return rhp_root_count(to_poly(c)); });
  m.def("is_hurwitz_stable", [](const py::sequence& c) { return is_hurwitz_stable(to_poly(c)); });
  m.def("q_sequence", [](const ChordDiagram& d, const Labels& anchor) {
    return to_py(q_sequence(anchored(d), d.subset(anchor)).values);
  }, py::arg("diagram"), py::arg("anchor") = Labels{});
  m.def("is_log_concave", [](const py::sequence& values, bool ultra) {
    CountSequence s;
    for (auto v : values) s.values.push_back(to_mpz(v));
    return check_log_concavity(s, ultra ? ConcavityMode::kULC : ConcavityMode::kLC).passes();
  }, py::arg("values"), py::arg("ultra") = true);

  m.def("run_acceptance", [](const std::string& filter) {
    py::list out;
    for (const auto& r : run_acceptance(filter)) {
      py::dict row;
      row["id"] = r.id;
      row["key"] = r.key;
      row["title"] = r.title;
      row["passed"] = r.passed;
      row["detail"] = r.detail;
      out.append(row);
    }
    return out;
  }, py::arg("filter") = "");
}
