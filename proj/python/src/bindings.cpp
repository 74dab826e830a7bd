// Python bindings. Rationals cross the boundary as fractions.Fraction;
// infinite invariant values become math.inf.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <sstream>

#include "fractiso/error.hpp"
#include "fractiso/invariants.hpp"
#include "fractiso/io.hpp"
#include "fractiso/iso.hpp"
#include "fractiso/lp.hpp"
#include "fractiso/partition.hpp"
#include "fractiso/suite.hpp"

namespace py = pybind11;
using namespace fractiso;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(r));
}

Rational from_python(const py::handle& x) {
  try {
    return parse_rational(py::str(x).cast<std::string>());
  } catch (const std::invalid_argument&) {
    throw InputError("expected an int or Fraction, got " + py::repr(x).cast<std::string>());
  }
}

std::vector<Rational> rationals(const py::sequence& xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(from_python(x));
  return out;
}

py::list matrix_rows(const RationalMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(to_fraction(m(r, c)));
    rows.append(row);
  }
  return rows;
}

RationalMatrix matrix_from_rows(const py::sequence& rows) {
  const std::size_t n = rows.size();
  RationalMatrix m;
  for (std::size_t r = 0; r < n; ++r) {
    auto row = rows[r].cast<py::sequence>();
    if (r == 0) m = RationalMatrix(n, row.size());
    if (row.size() != m.cols()) throw InputError("ragged matrix");
    for (std::size_t c = 0; c < row.size(); ++c) m(r, c) = from_python(row[c]);
  }
  return m;
}

py::object invariant_value(const InvariantValue& v) {
  if (v.is_finite()) return to_fraction(v.value());
  return py::float_(std::numeric_limits<double>::infinity());
}

Relation relation_from(const std::string& s) {
  if (s == "<=") return Relation::LessEqual;
  if (s == "==" || s == "=") return Relation::Equal;
  if (s == ">=") return Relation::GreaterEqual;
  throw InputError("relation must be '<=', '==' or '>=', got '" + s + "'");
}

// (status, value, solution); value and solution are None unless optimal.
py::tuple solve_lp(const py::sequence& objective, const std::vector<std::tuple<py::sequence, std::string, py::object>>& rows,
                   bool maximize) {
  LPProblem p;
  p.sense = maximize ? Sense::Maximize : Sense::Minimize;
  p.objective = rationals(objective);
  for (const auto& [coeffs, rel, rhs] : rows) p.constraints.push_back({rationals(coeffs), relation_from(rel), from_python(rhs)});
  auto outcome = solve(p);
  if (auto* opt = std::get_if<Optimal>(&outcome)) {
    py::list x;
    for (const auto& v : opt->solution) x.append(to_fraction(v));
    return py::make_tuple("optimal", to_fraction(opt->value), x);
  }
  return py::make_tuple(is_infeasible(outcome) ? "infeasible" : "unbounded", py::none(), py::none());
}

}  // namespace

PYBIND11_MODULE(_fractiso, m) {
  m.doc() = "Fractional isomorphism of graphs and hypergraphs, exact rational arithmetic";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init([](std::size_t n, std::vector<Edge> edges) { return Hypergraph::make(n, std::move(edges)); }), py::arg("n"),
           py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("num_vertices", &Hypergraph::num_vertices)
      .def_property_readonly("num_edges", &Hypergraph::num_edges)
      .def_property_readonly("edges", &Hypergraph::edges)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__repr__",
           [](const Hypergraph& h) {
             std::ostringstream os;
             os << "Hypergraph(n=" << h.num_vertices() << ", m=" << h.num_edges() << ")";
             return os.str();
           })
      .def("to_hg", &to_hg_string);

  m.def("from_hg", [](const std::string& text) {
    std::istringstream in(text);
    return read_hg(in);
  });
  m.def("read_hg_file", &read_hg_file);
  m.def("write_hg_file", &write_hg_file);

  m.def("cycle", &cycle);
  m.def("complete", &complete);
  m.def("path", &path);
  m.def("star", &star);
  m.def("gem", &gem);
  m.def("disjoint_union", &disjoint_union);
  m.def("fixture", &k_uniform_r_regular_fixture, "\"H4u\" or \"G4u\"");
  m.def("random_regular", [](std::size_t n, std::size_t r, std::uint64_t seed) { return random_regular(n, r, seed); },
        py::arg("n"), py::arg("r"), py::arg("seed") = 0);
  m.def("random_graph", &random_graph, py::arg("n"), py::arg("num"), py::arg("den"), py::arg("seed") = 0);
  m.def("from_family_spec", &from_family_spec);
  m.def("k4_gem_pair", &k4_gem_pair);

  m.def("is_graph", &is_graph);
  m.def("degree_sequence", &degree_sequence);
  m.def("hyperedge_sizes", &hyperedge_sizes);
  m.def("exposed_vertices", &exposed_vertices);
  m.def("dual", &dual);
  m.def("two_section", &two_section);
  m.def("bipartite_representation", &bipartite_representation);
  m.def("independent_set_hypergraph", &independent_set_hypergraph, py::arg("g"), py::arg("limit") = kDefaultExponentialLimit);
  m.def("clique_hypergraph", &clique_hypergraph, py::arg("g"), py::arg("limit") = kDefaultExponentialLimit);

  py::class_<PartitionParameters>(m, "PartitionParameters")
      .def_readonly("v", &PartitionParameters::v)
      .def_readonly("a", &PartitionParameters::a)
      .def_readonly("D", &PartitionParameters::D)
      .def_readonly("U", &PartitionParameters::U)
      .def("__eq__", [](const PartitionParameters& a, const PartitionParameters& b) { return a == b; });
  py::class_<EquitablePartition>(m, "EquitablePartition")
      .def_readonly("vertex_classes", &EquitablePartition::vertex_classes)
      .def_readonly("edge_classes", &EquitablePartition::edge_classes);
  py::class_<CommonPartition>(m, "CommonPartition")
      .def_readonly("parameters", &CommonPartition::parameters)
      .def_readonly("for_g", &CommonPartition::for_g)
      .def_readonly("for_h", &CommonPartition::for_h);

  m.def("coarsest_partition", &coarsest_partition);
  m.def("parameters", &parameters);
  m.def("common_partition", &common_partition);
  m.def("same_ultimate_degrees", &same_ultimate_degrees);

  py::class_<IsoWitness>(m, "IsoWitness")
      .def(py::init([](const py::sequence& s1, const py::sequence& s2) {
        return IsoWitness{matrix_from_rows(s1), matrix_from_rows(s2)};
      }))
      .def_property_readonly("S1", [](const IsoWitness& w) { return matrix_rows(w.S1); })
      .def_property_readonly("S2", [](const IsoWitness& w) { return matrix_rows(w.S2); });

  py::class_<IsoVerdict>(m, "IsoVerdict")
      .def_readonly("result", &IsoVerdict::result)
      .def_property_readonly("method", [](const IsoVerdict& v) { return to_string(v.method); })
      .def_readonly("reason", &IsoVerdict::reason)
      .def_readonly("witness", &IsoVerdict::witness)
      .def_property_readonly("adjacency_witness",
                             [](const IsoVerdict& v) -> py::object {
                               if (!v.adjacency_witness) return py::none();
                               return matrix_rows(*v.adjacency_witness);
                             })
      .def("__bool__", [](const IsoVerdict& v) { return v.result; });

  auto options = [](std::size_t limit, bool fast_reject) { return LpOptions{.limit = limit, .fast_reject = fast_reject}; };
  m.def("iso_by_partition", &iso_by_partition);
  m.def(
      "iso_by_lp", [=](const Hypergraph& g, const Hypergraph& h, std::size_t limit, bool fast_reject) {
        return iso_by_lp(g, h, options(limit, fast_reject));
      },
      py::arg("g"), py::arg("h"), py::arg("limit") = kDefaultLpLimit, py::arg("fast_reject") = true);
  m.def(
      "iso_by_both", [=](const Hypergraph& g, const Hypergraph& h, std::size_t limit) {
        return iso_by_both(g, h, options(limit, true));
      },
      py::arg("g"), py::arg("h"), py::arg("limit") = kDefaultLpLimit);
  m.def(
      "graph_iso_by_adjacency_lp", [=](const Hypergraph& g, const Hypergraph& h, std::size_t limit, bool fast_reject) {
        return graph_iso_by_adjacency_lp(g, h, options(limit, fast_reject));
      },
      py::arg("g"), py::arg("h"), py::arg("limit") = kDefaultLpLimit, py::arg("fast_reject") = true);
  m.def("verify_witness", &verify_witness);
  m.def("identity_witness", &identity_witness);
  m.def("reverse_witness", &reverse_witness);
  m.def("compose_witnesses", &compose_witnesses);

  m.def("k_f", [](const Hypergraph& h) { return invariant_value(k_f(h)); });
  m.def("p_f", [](const Hypergraph& h) { return invariant_value(p_f(h)); });
  m.def("mu_f", [](const Hypergraph& h) { return invariant_value(mu_f(h)); });
  m.def("tau_f", [](const Hypergraph& h) { return invariant_value(tau_f(h)); });
  m.def("alpha_f", [](const Hypergraph& g) { return invariant_value(alpha_f(g)); });
  m.def("gamma_f", [](const Hypergraph& g) { return invariant_value(gamma_f(g)); });
  m.def("total_gamma_f", [](const Hypergraph& g) { return invariant_value(total_gamma_f(g)); });
  m.def("invariant", [](const Hypergraph& h, const std::string& name, std::size_t limit) {
        return invariant_value(compute_invariant(h, name, limit).value);
      },
        py::arg("h"), py::arg("name"), py::arg("limit") = kDefaultExponentialLimit);
  m.def(
      "invariant_report",
      [](const Hypergraph& h, std::size_t limit) {
        py::dict out;
        for (const auto& e : invariant_report(h, limit).entries) out[py::str(e.name)] = invariant_value(e.value);
        return out;
      },
      py::arg("h"), py::arg("limit") = kDefaultExponentialLimit);

  m.def("solve_lp", &solve_lp, py::arg("objective"), py::arg("constraints"), py::arg("maximize") = false,
        "constraints: (coeffs, '<='|'=='|'>=', rhs) triples over nonnegative variables");

  m.def("reference_suite", [] {
    py::list rows;
    for (const auto& r : reference_suite()) rows.append(py::make_tuple(r.id, r.pass, r.expected, r.computed));
    return rows;
  });
}
