#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fractiso/matrix.hpp"

namespace fractiso {

using Edge = std::vector<std::size_t>;

/// Vertex count plus an ordered multiset of hyperedges. Each hyperedge is a
/// strictly increasing list of vertex indices in [0, n). Empty hyperedges and
/// repeated hyperedges are allowed. Graphs are the 2-uniform case.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Sorts each edge and collapses repeated vertices inside it.
  /// Throws InputError when an index is >= n.
  static Hypergraph make(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t j) const { return edges_[j]; }

  bool operator==(const Hypergraph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Sorted multiset of vertex degrees or hyperedge sizes.
using DegreeProfile = std::vector<std::size_t>;

/// n x m {0,1} matrix. Throws InputError when H has no hyperedges.
RationalMatrix incidence_matrix(const Hypergraph& h);

/// Adjacency matrix of a graph; multi-edges count with multiplicity.
RationalMatrix adjacency_matrix(const Hypergraph& g);

bool is_graph(const Hypergraph& h);

/// Per-vertex degree, in vertex order (unsorted).
std::vector<std::size_t> vertex_degrees(const Hypergraph& h);
DegreeProfile degree_sequence(const Hypergraph& h);
DegreeProfile hyperedge_sizes(const Hypergraph& h);

/// Vertices lying in no hyperedge.
std::vector<std::size_t> exposed_vertices(const Hypergraph& h);

/// incidence_matrix(dual(h)) == transpose(incidence_matrix(h)).
Hypergraph dual(const Hypergraph& h);
Hypergraph two_section(const Hypergraph& h);
/// Vertices 0..n-1 are the original vertices, n..n+m-1 the hyperedges.
Hypergraph bipartite_representation(const Hypergraph& h);

/// Vertex lists of the neighbours of each vertex of a graph (with multiplicity).
std::vector<std::vector<std::size_t>> neighbours(const Hypergraph& g);

Hypergraph open_neighborhood_hypergraph(const Hypergraph& g);
Hypergraph closed_neighborhood_hypergraph(const Hypergraph& g);

inline constexpr std::size_t kDefaultExponentialLimit = 20;

/// Hyperedges are the maximal independent sets of g. Throws GuardError when
/// the vertex count exceeds `limit`.
Hypergraph independent_set_hypergraph(const Hypergraph& g, std::size_t limit = kDefaultExponentialLimit);
/// Hyperedges are the maximal cliques of g.
Hypergraph clique_hypergraph(const Hypergraph& g, std::size_t limit = kDefaultExponentialLimit);

/// Applies a vertex relabelling: vertex v becomes perm[v].
Hypergraph relabel(const Hypergraph& h, const std::vector<std::size_t>& perm);
/// Reorders the hyperedge list: new edge j is old edge order[j].
Hypergraph reorder_edges(const Hypergraph& h, const std::vector<std::size_t>& order);
/// Same vertex count and same multiset of hyperedges.
bool same_edge_multiset(const Hypergraph& a, const Hypergraph& b);

// Generators.
Hypergraph cycle(std::size_t n);
Hypergraph complete(std::size_t n);
Hypergraph path(std::size_t n);
Hypergraph star(std::size_t leaves);
/// P4 plus a universal vertex (vertex 4).
Hypergraph gem();
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);
/// "H4u" and "G4u": the two 4-uniform 2-regular hypergraphs on 8 vertices
/// whose 2-sections differ.
Hypergraph k_uniform_r_regular_fixture(const std::string& name);

inline constexpr std::size_t kDefaultRegularRetries = 1000;

/// Simple r-regular graph from the pairing model with rejection of loops and
/// multi-edges. Deterministic for a given seed on every platform.
Hypergraph random_regular(std::size_t n, std::size_t r, std::uint64_t seed,
                          std::size_t max_retries = kDefaultRegularRetries);

/// Erdos-Renyi G(n, p) with p = num/den, deterministic per seed.
Hypergraph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

}  // namespace fractiso
