#include "fractiso/partition.hpp"

#include <algorithm>
#include <map>

#include "fractiso/error.hpp"

namespace fractiso {

namespace {

using Signature = std::vector<std::size_t>;

// Replaces each signature by its rank among the distinct signatures. Ranks
// depend only on signature values, never on element positions, so colours
// are comparable across the two halves of a disjoint union.
std::vector<std::size_t> intern(const std::vector<Signature>& sigs, std::size_t& num_classes) {
  std::vector<const Signature*> distinct;
  distinct.reserve(sigs.size());
  for (const auto& s : sigs) distinct.push_back(&s);
  std::sort(distinct.begin(), distinct.end(), [](const Signature* a, const Signature* b) { return *a < *b; });
  distinct.erase(std::unique(distinct.begin(), distinct.end(), [](const Signature* a, const Signature* b) { return *a == *b; }),
                 distinct.end());
  num_classes = distinct.size();
  std::vector<std::size_t> out(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), &sigs[i],
                               [](const Signature* a, const Signature* b) { return *a < *b; });
    out[i] = static_cast<std::size_t>(it - distinct.begin());
  }
  return out;
}

struct Colouring {
  std::vector<std::size_t> vertex;
  std::vector<std::size_t> edge;
  std::size_t vertex_classes = 0;
  std::size_t edge_classes = 0;
};

Colouring uniform(const Hypergraph& h) {
  Colouring c;
  c.vertex.assign(h.num_vertices(), 0);
  c.edge.assign(h.num_edges(), 0);
  c.vertex_classes = h.num_vertices() > 0 ? 1 : 0;
  c.edge_classes = h.num_edges() > 0 ? 1 : 0;
  return c;
}

// Colours must be 0..classes-1. Since every signature starts with the old
// colour, an already stable colouring comes back unchanged.
Colouring refine(const Hypergraph& h, Colouring c) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t j = 0; j < m; ++j)
    for (auto v : h.edge(j)) incident[v].push_back(j);

  std::vector<Signature> vsig(n), esig(m);
  for (;;) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = vsig[v];
      s.clear();
      for (auto j : incident[v]) s.push_back(c.edge[j]);
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), c.vertex[v]);
    }
    for (std::size_t j = 0; j < m; ++j) {
      auto& s = esig[j];
      s.clear();
      for (auto v : h.edge(j)) s.push_back(c.vertex[v]);
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), c.edge[j]);
    }
    std::size_t nv = 0, ne = 0;
    auto vertex = intern(vsig, nv);
    auto edge = intern(esig, ne);
    const bool stable = nv == c.vertex_classes && ne == c.edge_classes;
    c.vertex = std::move(vertex);
    c.edge = std::move(edge);
    c.vertex_classes = nv;
    c.edge_classes = ne;
    if (stable) return c;
  }
}

std::vector<std::vector<std::size_t>> classes_from(const std::vector<std::size_t>& colour, std::size_t count) {
  std::vector<std::vector<std::size_t>> classes(count);
  for (std::size_t i = 0; i < colour.size(); ++i) classes[colour[i]].push_back(i);
  return classes;
}

EquitablePartition from_colouring(const std::vector<std::size_t>& vcol, std::size_t nv, const std::vector<std::size_t>& ecol,
                                  std::size_t ne) {
  EquitablePartition p;
  p.vertex_classes = classes_from(vcol, nv);
  p.edge_classes = classes_from(ecol, ne);
  p.vertex_class_of = vcol;
  p.edge_class_of = ecol;
  return p;
}

}  // namespace

EquitablePartition coarsest_partition(const Hypergraph& h) {
  auto c = refine(h, uniform(h));
  return from_colouring(c.vertex, c.vertex_classes, c.edge, c.edge_classes);
}

EquitablePartition refine_partition(const Hypergraph& h, const EquitablePartition& start) {
  if (start.vertex_class_of.size() != h.num_vertices() || start.edge_class_of.size() != h.num_edges())
    throw InputError("partition does not cover the hypergraph");
  Colouring c;
  c.vertex = start.vertex_class_of;
  c.edge = start.edge_class_of;
  c.vertex_classes = start.vertex_classes.size();
  c.edge_classes = start.edge_classes.size();
  for (auto x : c.vertex)
    if (x >= c.vertex_classes) throw InputError("vertex class index out of range");
  for (auto x : c.edge)
    if (x >= c.edge_classes) throw InputError("edge class index out of range");
  c = refine(h, std::move(c));
  return from_colouring(c.vertex, c.vertex_classes, c.edge, c.edge_classes);
}

PartitionParameters parameters(const EquitablePartition& p, const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  const std::size_t s = p.vertex_classes.size();
  const std::size_t r = p.edge_classes.size();
  if (p.vertex_class_of.size() != n || p.edge_class_of.size() != m)
    throw InputError("partition does not cover the hypergraph");
  for (auto c : p.vertex_class_of)
    if (c >= s) throw InputError("partition: vertex class index out of range");
  for (auto c : p.edge_class_of)
    if (c >= r) throw InputError("partition: edge class index out of range");

  PartitionParameters out;
  out.v.assign(s, 0);
  out.a.assign(r, 0);
  for (auto c : p.vertex_class_of) ++out.v[c];
  for (auto c : p.edge_class_of) ++out.a[c];
  for (std::size_t i = 0; i < s; ++i)
    if (out.v[i] != p.vertex_classes[i].size() || out.v[i] == 0) throw InputError("partition: inconsistent vertex classes");
  for (std::size_t j = 0; j < r; ++j)
    if (out.a[j] != p.edge_classes[j].size() || out.a[j] == 0) throw InputError("partition: inconsistent edge classes");

  // Per-vertex counts of incident edges by edge class, per-edge counts of
  // members by vertex class.
  std::vector<std::vector<std::size_t>> per_vertex(n, std::vector<std::size_t>(r, 0));
  std::vector<std::vector<std::size_t>> per_edge(m, std::vector<std::size_t>(s, 0));
  for (std::size_t j = 0; j < m; ++j) {
    for (auto v : h.edge(j)) {
      ++per_vertex[v][p.edge_class_of[j]];
      ++per_edge[j][p.vertex_class_of[v]];
    }
  }
  out.D.assign(s, std::vector<std::size_t>(r, 0));
  out.U.assign(s, std::vector<std::size_t>(r, 0));
  for (std::size_t i = 0; i < s; ++i) {
    const auto first = p.vertex_classes[i].front();
    for (std::size_t j = 0; j < r; ++j) out.D[i][j] = per_vertex[first][j];
    for (auto v : p.vertex_classes[i])
      if (per_vertex[v] != per_vertex[first]) throw InputError("partition is not equitable: D counts disagree in vertex class " + std::to_string(i));
  }
  for (std::size_t j = 0; j < r; ++j) {
    const auto first = p.edge_classes[j].front();
    for (std::size_t i = 0; i < s; ++i) out.U[i][j] = per_edge[first][i];
    for (auto e : p.edge_classes[j])
      if (per_edge[e] != per_edge[first]) throw InputError("partition is not equitable: U counts disagree in edge class " + std::to_string(j));
  }
  return out;
}

bool is_equitable(const EquitablePartition& p, const Hypergraph& h) {
  try {
    parameters(p, h);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

std::optional<CommonPartition> common_partition(const Hypergraph& g, const Hypergraph& h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return std::nullopt;
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  const auto both = disjoint_union(g, h);
  auto c = refine(both, uniform(both));

  std::vector<long> balance_v(c.vertex_classes, 0), balance_e(c.edge_classes, 0);
  for (std::size_t v = 0; v < 2 * n; ++v) balance_v[c.vertex[v]] += v < n ? 1 : -1;
  for (std::size_t e = 0; e < 2 * m; ++e) balance_e[c.edge[e]] += e < m ? 1 : -1;
  if (std::any_of(balance_v.begin(), balance_v.end(), [](long b) { return b != 0; })) return std::nullopt;
  if (std::any_of(balance_e.begin(), balance_e.end(), [](long b) { return b != 0; })) return std::nullopt;

  auto side = [&](std::size_t vertex_offset, std::size_t edge_offset) {
    std::vector<std::size_t> vcol(c.vertex.begin() + static_cast<std::ptrdiff_t>(vertex_offset),
                                  c.vertex.begin() + static_cast<std::ptrdiff_t>(vertex_offset + n));
    std::vector<std::size_t> ecol(c.edge.begin() + static_cast<std::ptrdiff_t>(edge_offset),
                                  c.edge.begin() + static_cast<std::ptrdiff_t>(edge_offset + m));
    return from_colouring(vcol, c.vertex_classes, ecol, c.edge_classes);
  };

  CommonPartition out;
  out.for_g = side(0, 0);
  out.for_h = side(n, m);
  out.parameters = parameters(out.for_g, g);
  return out;
}

std::vector<std::vector<std::size_t>> IteratedDegrees::stable_classes() const {
  const auto& last = final_signatures();
  std::size_t count = 0;
  for (auto s : last) count = std::max(count, s + 1);
  return classes_from(last, count);
}

namespace {

IteratedDegrees run_colour_refinement(const Hypergraph& g, std::optional<std::size_t> rounds) {
  auto adj = neighbours(g);
  const std::size_t n = g.num_vertices();
  IteratedDegrees out;
  out.signatures.emplace_back(n, 0);
  std::size_t classes = n > 0 ? 1 : 0;
  std::vector<Signature> sigs(n);
  for (std::size_t k = 1; !rounds || k <= *rounds; ++k) {
    const auto& prev = out.signatures.back();
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sigs[v];
      s.clear();
      for (auto w : adj[v]) s.push_back(prev[w]);
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), prev[v]);
    }
    std::size_t next_classes = 0;
    out.signatures.push_back(intern(sigs, next_classes));
    if (next_classes == classes && out.stable_round == 0) {
      out.stable_round = k;
      if (!rounds) break;
    }
    classes = next_classes;
  }
  return out;
}

}  // namespace

IteratedDegrees iterated_degree_sequence(const Hypergraph& g, std::optional<std::size_t> rounds) {
  if (!is_graph(g)) throw InputError("iterated degree sequence requires a graph");
  return run_colour_refinement(g, rounds);
}

bool same_ultimate_degrees(const Hypergraph& g, const Hypergraph& h) {
  if (!is_graph(g) || !is_graph(h)) throw InputError("iterated degree sequence requires graphs");
  if (g.num_vertices() != h.num_vertices()) return false;
  const std::size_t n = g.num_vertices();
  auto joint = run_colour_refinement(disjoint_union(g, h), std::nullopt);
  const auto& last = joint.final_signatures();
  std::vector<std::size_t> left(last.begin(), last.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<std::size_t> right(last.begin() + static_cast<std::ptrdiff_t>(n), last.end());
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  return left == right;
}

}  // namespace fractiso
