#include "fractiso/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "fractiso/error.hpp"
#include "fractiso/iso.hpp"
#include "fractiso/partition.hpp"

namespace fractiso {

const Rational& InvariantValue::value() const {
  if (!value_) throw std::logic_error("InvariantValue::value() called on infinity");
  return *value_;
}

std::string InvariantValue::str() const { return value_ ? to_string(*value_) : "infinity"; }

bool InvariantValue::operator==(const InvariantValue& other) const {
  if (is_finite() != other.is_finite()) return false;
  return !is_finite() || *value_ == *other.value_;
}

LPProblem covering_program(const Hypergraph& h) {
  LPProblem p;
  p.sense = Sense::Minimize;
  p.objective.assign(h.num_edges(), Rational(1));
  std::vector<Constraint> rows(h.num_vertices(), Constraint{std::vector<Rational>(h.num_edges()), Relation::GreaterEqual, 1});
  for (std::size_t j = 0; j < h.num_edges(); ++j)
    for (auto v : h.edge(j)) rows[v].coeffs[j] = 1;
  p.constraints = std::move(rows);
  return p;
}

LPProblem packing_program(const Hypergraph& h) {
  LPProblem p;
  p.sense = Sense::Maximize;
  p.objective.assign(h.num_vertices(), Rational(1));
  for (const auto& e : h.edges()) {
    Constraint c{std::vector<Rational>(h.num_vertices()), Relation::LessEqual, 1};
    for (auto v : e) c.coeffs[v] = 1;
    p.constraints.push_back(std::move(c));
  }
  return p;
}

namespace {

std::optional<InvariantValue> exposed_shortcut(const Hypergraph& h, const char* what) {
  auto exposed = exposed_vertices(h);
  if (exposed.empty()) return std::nullopt;
  return InvariantValue::infinite(std::string(what) + ": vertex " + std::to_string(exposed.front()) + " is exposed");
}

InvariantValue optimum_of(const LPProblem& p) {
  auto outcome = solve(p);
  auto* opt = std::get_if<Optimal>(&outcome);
  // Without exposed vertices both programs are feasible and bounded.
  if (!opt) throw std::logic_error("unexpected LP outcome: " + describe(outcome));
  return InvariantValue::finite(opt->value);
}

void require_graph(const Hypergraph& g, const char* what) {
  if (!is_graph(g)) throw InputError(std::string(what) + " requires a graph");
}

}  // namespace

InvariantValue k_f(const Hypergraph& h) {
  if (h.num_vertices() == 0) return InvariantValue::finite(0);
  if (auto inf = exposed_shortcut(h, "covering infeasible")) return *inf;
  return optimum_of(covering_program(h));
}

InvariantValue p_f(const Hypergraph& h) {
  if (h.num_vertices() == 0) return InvariantValue::finite(0);
  if (auto inf = exposed_shortcut(h, "packing unbounded")) return *inf;
  return optimum_of(packing_program(h));
}

InvariantValue mu_f(const Hypergraph& h) {
  if (h.num_edges() == 0) throw InputError("mu_f requires at least one hyperedge");
  return p_f(dual(h));
}

InvariantValue tau_f(const Hypergraph& h) {
  if (h.num_edges() == 0) throw InputError("tau_f requires at least one hyperedge");
  return k_f(dual(h));
}

InvariantValue alpha_f(const Hypergraph& g) {
  require_graph(g, "alpha_f");
  return p_f(g);
}

InvariantValue chi_f(const Hypergraph& g, std::size_t limit) { return k_f(independent_set_hypergraph(g, limit)); }
InvariantValue omega_f(const Hypergraph& g, std::size_t limit) { return p_f(independent_set_hypergraph(g, limit)); }
InvariantValue alpha_c_f(const Hypergraph& g, std::size_t limit) { return p_f(clique_hypergraph(g, limit)); }
InvariantValue theta_f(const Hypergraph& g, std::size_t limit) { return k_f(clique_hypergraph(g, limit)); }

InvariantValue gamma_f(const Hypergraph& g) {
  require_graph(g, "gamma_f");
  return k_f(closed_neighborhood_hypergraph(g));
}

InvariantValue total_gamma_f(const Hypergraph& g) {
  require_graph(g, "total gamma_f");
  return k_f(open_neighborhood_hypergraph(g));
}

bool is_fractional_matching(const Hypergraph& g, const EdgeWeights& w) {
  if (!is_graph(g) || w.size() != g.num_edges()) return false;
  std::vector<Rational> load(g.num_vertices());
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (sgn(w[j]) < 0) return false;
    for (auto v : g.edge(j)) load[v] += w[j];
  }
  return std::all_of(load.begin(), load.end(), [](const Rational& x) { return x <= 1; });
}

std::optional<EdgeWeights> sufficient_pfm_construction(const Hypergraph& g) {
  require_graph(g, "perfect fractional matching");
  auto p = coarsest_partition(g);
  std::vector<std::size_t> internal(g.num_vertices(), 0);
  for (const auto& e : g.edges()) {
    if (p.vertex_class_of[e[0]] == p.vertex_class_of[e[1]]) {
      ++internal[e[0]];
      ++internal[e[1]];
    }
  }
  std::vector<std::size_t> r(p.vertex_classes.size(), 0);
  for (std::size_t i = 0; i < p.vertex_classes.size(); ++i) {
    r[i] = internal[p.vertex_classes[i].front()];
    for (auto v : p.vertex_classes[i])
      if (internal[v] != r[i]) return std::nullopt;
    if (r[i] == 0) return std::nullopt;
  }
  EdgeWeights w(g.num_edges());
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    const auto& e = g.edge(j);
    const auto ci = p.vertex_class_of[e[0]];
    if (ci == p.vertex_class_of[e[1]]) w[j] = Rational(1, r[ci]);
  }
  Rational total = 0;
  for (const auto& x : w) total += x;
  if (!is_fractional_matching(g, w) || total * 2 != g.num_vertices())
    throw std::logic_error("equitable construction is not a perfect fractional matching");
  return w;
}

PerfectMatchingResult perfect_fractional_matching(const Hypergraph& g) {
  require_graph(g, "perfect fractional matching");
  PerfectMatchingResult out;
  if (g.num_edges() == 0) {
    out.perfect = g.num_vertices() == 0;
    return out;
  }
  auto mu = mu_f(g);
  out.perfect = mu.is_finite() && mu.value() * 2 == g.num_vertices();
  out.construction = sufficient_pfm_construction(g);
  return out;
}

const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names = {"kf",     "pf",      "muf",    "tauf",   "alphaf",     "gammaf",
                                                 "totalgammaf", "chif", "omegaf", "alphacf", "thetaf"};
  return names;
}

bool is_graph_only(const std::string& name) {
  return name != "kf" && name != "pf" && name != "muf" && name != "tauf";
}

InvariantEntry compute_invariant(const Hypergraph& h, const std::string& name, std::size_t limit) {
  if (name == "kf") return {name, k_f(h), "covering LP on H"};
  if (name == "pf") return {name, p_f(h), "packing LP on H"};
  if (name == "muf") return {name, mu_f(h), "packing LP on the dual of H"};
  if (name == "tauf") return {name, tau_f(h), "covering LP on the dual of H"};
  if (name == "alphaf") return {name, alpha_f(h), "packing LP on G as a 2-uniform hypergraph"};
  if (name == "gammaf") return {name, gamma_f(h), "covering LP on the closed-neighbourhood hypergraph"};
  if (name == "totalgammaf" || name == "Gammaf")
    return {"totalgammaf", total_gamma_f(h), "covering LP on the open-neighbourhood hypergraph"};
  if (name == "chif") return {name, chi_f(h, limit), "covering LP on the maximal independent sets"};
  if (name == "omegaf") return {name, omega_f(h, limit), "packing LP on the maximal independent sets"};
  if (name == "alphacf") return {name, alpha_c_f(h, limit), "packing LP on the maximal cliques"};
  if (name == "thetaf") return {name, theta_f(h, limit), "covering LP on the maximal cliques"};
  throw InputError("unknown parameter: " + name);
}

const InvariantEntry* InvariantReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

namespace {

bool exponential(const std::string& name) {
  return name == "chif" || name == "omegaf" || name == "alphacf" || name == "thetaf";
}

}  // namespace

InvariantReport invariant_report(const Hypergraph& h, std::size_t limit) {
  InvariantReport report;
  const bool graph = is_graph(h);
  for (const auto& name : invariant_names()) {
    if (is_graph_only(name) && !graph) continue;
    if ((name == "muf" || name == "tauf") && h.num_edges() == 0) continue;
    if (exponential(name) && h.num_vertices() > limit) continue;
    report.entries.push_back(compute_invariant(h, name, limit));
  }
  return report;
}

bool InvarianceReport::holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const InvarianceRow& r) { return !r.asserted || r.equal; });
}

InvarianceReport invariance_suite(const Hypergraph& g, const Hypergraph& h, std::size_t limit) {
  if (!iso_by_partition(g, h).result) throw InputError("invariance suite requires fractionally isomorphic inputs");
  auto left = invariant_report(g, limit);
  auto right = invariant_report(h, limit);
  InvarianceReport out;
  for (const auto& l : left.entries) {
    const auto* r = right.find(l.name);
    if (!r) continue;
    InvarianceRow row{l.name, l.value, r->value, !exponential(l.name), l.value == r->value};
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace fractiso
