#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fractiso/hypergraph.hpp"
#include "fractiso/lp.hpp"
#include "fractiso/rational.hpp"

namespace fractiso {

/// A fractional parameter: an exact rational or infinity (exposed vertex).
class InvariantValue {
 public:
  static InvariantValue finite(Rational value) { return InvariantValue(std::move(value)); }
  static InvariantValue infinite(std::string reason) {
    InvariantValue v;
    v.reason_ = std::move(reason);
    return v;
  }

  bool is_finite() const { return value_.has_value(); }
  /// Throws std::logic_error when infinite.
  const Rational& value() const;
  /// Why the value is infinite; empty for finite values.
  const std::string& reason() const { return reason_; }

  /// "p/q", "p" or "infinity".
  std::string str() const;

  /// Infinite values compare equal to each other regardless of reason.
  bool operator==(const InvariantValue& other) const;

 private:
  InvariantValue() = default;
  explicit InvariantValue(Rational v) : value_(std::move(v)) {}

  std::optional<Rational> value_;
  std::string reason_;
};

/// Covering LP: min 1^t x s.t. M x >= 1.
LPProblem covering_program(const Hypergraph& h);
/// Packing LP: max 1^t y s.t. M^t y <= 1.
LPProblem packing_program(const Hypergraph& h);

InvariantValue k_f(const Hypergraph& h);
InvariantValue p_f(const Hypergraph& h);
/// p_f of the dual; requires at least one hyperedge.
InvariantValue mu_f(const Hypergraph& h);
/// k_f of the dual; requires at least one hyperedge.
InvariantValue tau_f(const Hypergraph& h);

InvariantValue alpha_f(const Hypergraph& g);
InvariantValue chi_f(const Hypergraph& g, std::size_t limit = kDefaultExponentialLimit);
InvariantValue omega_f(const Hypergraph& g, std::size_t limit = kDefaultExponentialLimit);
InvariantValue alpha_c_f(const Hypergraph& g, std::size_t limit = kDefaultExponentialLimit);
InvariantValue theta_f(const Hypergraph& g, std::size_t limit = kDefaultExponentialLimit);
InvariantValue gamma_f(const Hypergraph& g);
InvariantValue total_gamma_f(const Hypergraph& g);

/// Edge weights, one per edge of the graph in edge order.
using EdgeWeights = std::vector<Rational>;

struct PerfectMatchingResult {
  bool perfect = false;
  /// Present when the equitable-partition sufficient condition applies.
  std::optional<EdgeWeights> construction;
};

/// mu_f(g) == n/2, decided exactly.
PerfectMatchingResult perfect_fractional_matching(const Hypergraph& g);

/// 1/r_i on every edge inside class V_i, 0 on edges between classes, when
/// every class of the coarsest equitable partition induces an r_i-regular
/// subgraph with r_i > 0.
std::optional<EdgeWeights> sufficient_pfm_construction(const Hypergraph& g);

/// Fractional matching check: weights >= 0, every vertex carries <= 1.
bool is_fractional_matching(const Hypergraph& g, const EdgeWeights& w);

struct InvariantEntry {
  std::string name;
  InvariantValue value;
  std::string provenance;
};

/// Names accepted by compute_invariant, in report order.
const std::vector<std::string>& invariant_names();
bool is_graph_only(const std::string& name);
/// Throws InputError on an unknown name.
InvariantEntry compute_invariant(const Hypergraph& h, const std::string& name, std::size_t limit = kDefaultExponentialLimit);

struct InvariantReport {
  std::vector<InvariantEntry> entries;
  const InvariantEntry* find(const std::string& name) const;
};

/// Every applicable parameter (graph-only ones skipped for non-graphs,
/// dual-based ones skipped without hyperedges, exponential ones skipped above the limit).
InvariantReport invariant_report(const Hypergraph& h, std::size_t limit = kDefaultExponentialLimit);

struct InvarianceRow {
  std::string name;
  InvariantValue left;
  InvariantValue right;
  /// Invariant parameters are asserted equal; the others are only reported.
  bool asserted = false;
  bool equal = false;
};

struct InvarianceReport {
  std::vector<InvarianceRow> rows;
  /// Every asserted row is equal.
  bool holds() const;
};

/// Compares parameters of a fractionally isomorphic pair. Throws
/// InputError when the pair is not fractionally isomorphic.
InvarianceReport invariance_suite(const Hypergraph& g, const Hypergraph& h, std::size_t limit = kDefaultExponentialLimit);

}  // namespace fractiso
