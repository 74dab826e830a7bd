#include "fractiso/iso.hpp"

#include <stdexcept>

#include "fractiso/error.hpp"
#include "fractiso/lp.hpp"

namespace fractiso {

std::string to_string(Method m) {
  switch (m) {
    case Method::Partition: return "partition";
    case Method::Lp: return "lp";
    case Method::Both: return "both";
    case Method::AdjacencyLp: return "adjacency-lp";
  }
  return "?";
}

std::optional<std::string> fast_reject_reason(const Hypergraph& g, const Hypergraph& h) {
  if (g.num_vertices() != h.num_vertices()) return "vertex counts differ";
  if (g.num_edges() != h.num_edges()) return "hyperedge counts differ";
  if (degree_sequence(g) != degree_sequence(h)) return "degree sequences differ";
  if (hyperedge_sizes(g) != hyperedge_sizes(h)) return "hyperedge-size multisets differ";
  return std::nullopt;
}

IsoVerdict iso_by_partition(const Hypergraph& g, const Hypergraph& h) {
  IsoVerdict out;
  out.method = Method::Partition;
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) {
    out.reason = "dimensions differ";
    return out;
  }
  auto shared = common_partition(g, h);
  if (!shared) {
    out.reason = "no common equitable partition";
    return out;
  }
  out.result = true;
  out.witness = witness_from_partition(g, h, *shared);
  out.shared = std::move(shared);
  return out;
}

namespace {

void check_lp_size(const Hypergraph& g, const Hypergraph& h, const LpOptions& options) {
  auto biggest = std::max({g.num_vertices(), h.num_vertices(), g.num_edges(), h.num_edges()});
  if (biggest > options.limit)
    throw GuardError("LP isomorphism test limited to " + std::to_string(options.limit) +
                     " vertices/hyperedges (got " + std::to_string(biggest) + "); use the partition method or raise --limit");
}

// Adds "sum of the block rows/columns equals 1" for an order x order block
// starting at variable `offset`.
void add_doubly_stochastic(std::vector<Constraint>& rows, std::size_t num_vars, std::size_t offset, std::size_t order) {
  for (std::size_t r = 0; r < order; ++r) {
    Constraint row{std::vector<Rational>(num_vars), Relation::Equal, 1};
    Constraint col{std::vector<Rational>(num_vars), Relation::Equal, 1};
    for (std::size_t c = 0; c < order; ++c) {
      row.coeffs[offset + r * order + c] = 1;
      col.coeffs[offset + c * order + r] = 1;
    }
    rows.push_back(std::move(row));
    rows.push_back(std::move(col));
  }
}

}  // namespace

IsoVerdict iso_by_lp(const Hypergraph& g, const Hypergraph& h, const LpOptions& options) {
  IsoVerdict out;
  out.method = Method::Lp;
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) {
    out.reason = "dimensions differ";
    return out;
  }
  if (options.fast_reject) {
    if (auto why = fast_reject_reason(g, h)) {
      out.reason = *why;
      return out;
    }
  }
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (m == 0) {
    out.result = true;
    out.reason = "same number of vertices and no hyperedges";
    out.witness = IsoWitness{RationalMatrix::identity(n), RationalMatrix(0, 0)};
    return out;
  }
  check_lp_size(g, h, options);

  const std::size_t s2 = n * n;
  const std::size_t num_vars = n * n + m * m;
  auto var_s1 = [&](std::size_t hv, std::size_t gv) { return hv * n + gv; };
  auto var_s2 = [&](std::size_t ge, std::size_t he) { return s2 + ge * m + he; };

  std::vector<std::vector<std::size_t>> incident_h(n), incident_g(n);
  for (std::size_t j = 0; j < m; ++j) {
    for (auto v : g.edge(j)) incident_g[v].push_back(j);
    for (auto v : h.edge(j)) incident_h[v].push_back(j);
  }

  std::vector<Constraint> rows;
  // S1 M_G = M_H S2^t, entry (hv, ge).
  for (std::size_t hv = 0; hv < n; ++hv) {
    for (std::size_t ge = 0; ge < m; ++ge) {
      Constraint c{std::vector<Rational>(num_vars), Relation::Equal, 0};
      for (auto gv : g.edge(ge)) c.coeffs[var_s1(hv, gv)] += 1;
      for (auto he : incident_h[hv]) c.coeffs[var_s2(ge, he)] -= 1;
      rows.push_back(std::move(c));
    }
  }
  // M_G S2 = S1^t M_H, entry (gv, he).
  for (std::size_t gv = 0; gv < n; ++gv) {
    for (std::size_t he = 0; he < m; ++he) {
      Constraint c{std::vector<Rational>(num_vars), Relation::Equal, 0};
      for (auto ge : incident_g[gv]) c.coeffs[var_s2(ge, he)] += 1;
      for (auto hv : h.edge(he)) c.coeffs[var_s1(hv, gv)] -= 1;
      rows.push_back(std::move(c));
    }
  }
  add_doubly_stochastic(rows, num_vars, 0, n);
  add_doubly_stochastic(rows, num_vars, s2, m);

  auto x = feasible(num_vars, rows);
  if (!x) {
    out.reason = "incidence system infeasible";
    return out;
  }
  IsoWitness w{RationalMatrix(n, n), RationalMatrix(m, m)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) w.S1(a, b) = (*x)[var_s1(a, b)];
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) w.S2(a, b) = (*x)[var_s2(a, b)];
  if (!verify_witness(g, h, w)) throw std::logic_error("LP returned a witness that does not verify");
  out.result = true;
  out.witness = std::move(w);
  return out;
}

IsoVerdict graph_iso_by_adjacency_lp(const Hypergraph& g, const Hypergraph& h, const LpOptions& options) {
  if (!is_graph(g) || !is_graph(h)) throw InputError("adjacency LP requires two graphs");
  IsoVerdict out;
  out.method = Method::AdjacencyLp;
  const std::size_t n = g.num_vertices();
  if (n != h.num_vertices()) {
    out.reason = "vertex counts differ";
    return out;
  }
  if (options.fast_reject) {
    if (auto why = fast_reject_reason(g, h)) {
      out.reason = *why;
      return out;
    }
  }
  if (n == 0) {
    out.result = true;
    out.adjacency_witness = RationalMatrix(0, 0);
    return out;
  }
  if (n > options.limit)
    throw GuardError("adjacency LP limited to " + std::to_string(options.limit) + " vertices (got " + std::to_string(n) + ")");

  auto adj_g = neighbours(g);
  auto adj_h = neighbours(h);
  const std::size_t num_vars = n * n;
  auto var = [&](std::size_t gv, std::size_t hv) { return gv * n + hv; };
  std::vector<Constraint> rows;
  // (A_G S)(gv, hv) - (S A_H)(gv, hv) = 0.
  for (std::size_t gv = 0; gv < n; ++gv) {
    for (std::size_t hv = 0; hv < n; ++hv) {
      Constraint c{std::vector<Rational>(num_vars), Relation::Equal, 0};
      for (auto w : adj_g[gv]) c.coeffs[var(w, hv)] += 1;
      for (auto w : adj_h[hv]) c.coeffs[var(gv, w)] -= 1;
      rows.push_back(std::move(c));
    }
  }
  add_doubly_stochastic(rows, num_vars, 0, n);

  auto x = feasible(num_vars, rows);
  if (!x) {
    out.reason = "adjacency system infeasible";
    return out;
  }
  RationalMatrix s(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s(a, b) = (*x)[var(a, b)];
  if (!verify_adjacency_witness(g, h, s)) throw std::logic_error("adjacency LP returned a witness that does not verify");
  out.result = true;
  out.adjacency_witness = std::move(s);
  return out;
}

IsoVerdict iso_by_both(const Hypergraph& g, const Hypergraph& h, const LpOptions& options) {
  auto by_partition = iso_by_partition(g, h);
  auto by_lp = iso_by_lp(g, h, options);
  if (by_partition.result != by_lp.result)
    throw std::logic_error("partition and LP deciders disagree (partition: " + std::string(by_partition.result ? "true" : "false") +
                           ", lp: " + (by_lp.result ? "true" : "false") + ")");
  IsoVerdict out = std::move(by_partition);
  out.method = Method::Both;
  if (!out.result && out.reason.empty()) out.reason = by_lp.reason;
  return out;
}

IsoWitness witness_from_partition(const Hypergraph& g, const Hypergraph& h, const CommonPartition& shared) {
  const auto& pg = shared.for_g;
  const auto& ph = shared.for_h;
  const auto& params = shared.parameters;
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges())
    throw InputError("witness_from_partition: dimensions differ");
  if (parameters(pg, g) != params || parameters(ph, h) != params)
    throw InputError("witness_from_partition: shared parameters do not fit both hypergraphs");

  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  IsoWitness w{RationalMatrix(n, n), RationalMatrix(m, m)};
  for (std::size_t i = 0; i < params.v.size(); ++i) {
    const Rational entry(1, params.v[i]);
    for (auto hv : ph.vertex_classes[i])
      for (auto gv : pg.vertex_classes[i]) w.S1(hv, gv) = entry;
  }
  for (std::size_t j = 0; j < params.a.size(); ++j) {
    const Rational entry(1, params.a[j]);
    for (auto ge : pg.edge_classes[j])
      for (auto he : ph.edge_classes[j]) w.S2(ge, he) = entry;
  }
  return w;
}

bool verify_witness(const Hypergraph& g, const Hypergraph& h, const IsoWitness& w) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (h.num_vertices() != n || h.num_edges() != m) throw InputError("verify_witness: hypergraph dimensions differ");
  if (w.S1.rows() != n || w.S1.cols() != n || w.S2.rows() != m || w.S2.cols() != m)
    throw InputError("verify_witness: witness dimensions do not match the hypergraphs");
  if (!w.S1.is_doubly_stochastic() || !w.S2.is_doubly_stochastic()) return false;
  if (m == 0) return true;
  const auto mg = incidence_matrix(g);
  const auto mh = incidence_matrix(h);
  return w.S1 * mg == mh * w.S2.transpose() && mg * w.S2 == w.S1.transpose() * mh;
}

bool verify_adjacency_witness(const Hypergraph& g, const Hypergraph& h, const RationalMatrix& s) {
  const std::size_t n = g.num_vertices();
  if (h.num_vertices() != n || s.rows() != n || s.cols() != n)
    throw InputError("verify_adjacency_witness: dimension mismatch");
  if (!s.is_doubly_stochastic()) return false;
  return adjacency_matrix(g) * s == s * adjacency_matrix(h);
}

IsoWitness identity_witness(const Hypergraph& g) {
  return {RationalMatrix::identity(g.num_vertices()), RationalMatrix::identity(g.num_edges())};
}

IsoWitness reverse_witness(const IsoWitness& w) { return {w.S1.transpose(), w.S2.transpose()}; }

IsoWitness compose_witnesses(const Hypergraph& g, const Hypergraph& h, const Hypergraph& k, const IsoWitness& w_gh,
                             const IsoWitness& w_hk) {
  if (!verify_witness(g, h, w_gh)) throw InputError("compose_witnesses: first witness does not verify");
  if (!verify_witness(h, k, w_hk)) throw InputError("compose_witnesses: second witness does not verify");
  return {w_hk.S1 * w_gh.S1, w_gh.S2 * w_hk.S2};
}

RationalMatrix bipartite_witness(const IsoWitness& w) {
  const std::size_t n = w.S1.rows();
  const std::size_t m = w.S2.rows();
  RationalMatrix s(n + m, n + m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s(a, b) = w.S1(b, a);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) s(n + a, n + b) = w.S2(a, b);
  return s;
}

namespace {

// Partition decider, cross-checked by the LP whenever the instance fits.
bool decide(const Hypergraph& g, const Hypergraph& h, const LpOptions& options) {
  auto by_partition = iso_by_partition(g, h);
  const auto biggest = std::max({g.num_vertices(), h.num_vertices(), g.num_edges(), h.num_edges()});
  if (biggest <= options.limit) {
    auto by_lp = iso_by_lp(g, h, options);
    if (by_lp.result != by_partition.result) throw std::logic_error("partition and LP deciders disagree");
  }
  return by_partition.result;
}

}  // namespace

DerivedChecks derived_iso_checks(const Hypergraph& g, const Hypergraph& h, const LpOptions& options) {
  DerivedChecks out;
  out.base_iso = decide(g, h, options);
  if (g.num_edges() > 0 && h.num_edges() > 0) out.duals_iso = decide(dual(g), dual(h), options);
  out.bipartite_iso = decide(bipartite_representation(g), bipartite_representation(h), options);
  out.g_is_graph = is_graph(g);
  out.h_is_graph = is_graph(h);
  out.graphness_transfers = !out.base_iso || out.g_is_graph == out.h_is_graph;
  return out;
}

}  // namespace fractiso
