#pragma once

// Shared fixtures and random corpora for the test binaries.

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fractiso/hypergraph.hpp"
#include "fractiso/random.hpp"
#include "fractiso/suite.hpp"
#include "oracles/integer_parameters.hpp"

namespace testing_support {

using namespace fractiso;

struct Named {
  std::string name;
  Hypergraph h;
};

inline std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

// Relabels vertices and shuffles the hyperedge list.
inline Hypergraph scramble(const Hypergraph& h, Rng& rng) {
  return reorder_edges(relabel(h, random_permutation(h.num_vertices(), rng)), random_permutation(h.num_edges(), rng));
}

inline Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t max_size, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t size = 1 + rng.below(std::min(max_size, n));
    Edge e;
    for (std::size_t k = 0; k < size; ++k) e.push_back(rng.below(n));
    edges.push_back(e);
  }
  return Hypergraph::make(n, edges);
}

// Degree-preserving double edge swaps on a simple graph.
inline Hypergraph edge_swaps(const Hypergraph& g, std::size_t swaps, Rng& rng) {
  auto edges = g.edges();
  if (edges.size() < 2) return g;
  for (std::size_t tries = 0; swaps > 0 && tries < 200 * swaps; ++tries) {
    auto i = rng.below(edges.size()), j = rng.below(edges.size());
    if (i == j) continue;
    std::size_t a = edges[i][0], b = edges[i][1], c = edges[j][0], d = edges[j][1];
    if (rng.below(2)) std::swap(c, d);
    if (a == d || c == b) continue;
    Edge x{std::min(a, d), std::max(a, d)}, y{std::min(c, b), std::max(c, b)};
    if (std::find(edges.begin(), edges.end(), x) != edges.end() || std::find(edges.begin(), edges.end(), y) != edges.end())
      continue;
    edges[i] = x;
    edges[j] = y;
    --swaps;
  }
  return Hypergraph::make(g.num_vertices(), edges);
}

// mpq_class(p, q) does not reduce; comparisons need canonical values.
inline Rational fraction(std::size_t p, std::size_t q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline oracle::SmallGraph small(const Hypergraph& g) { return oracle::SmallGraph(g.num_vertices(), g.edges()); }

inline std::vector<int> adjacency_ints(const Hypergraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> a(n * n, 0);
  for (const auto& e : g.edges()) {
    a[e[0] * n + e[1]] += 1;
    a[e[1] * n + e[0]] += 1;
  }
  return a;
}

inline Hypergraph two_c3() { return disjoint_union(cycle(3), cycle(3)); }
inline Hypergraph c5_c7() { return disjoint_union(cycle(5), cycle(7)); }

// Fixture hypergraphs and graphs used across suites.
inline std::vector<Named> fixtures() {
  auto [k4_gemd, k4d_gem] = k4_gem_pair();
  return {
      {"C3", cycle(3)},
      {"C4", cycle(4)},
      {"C5", cycle(5)},
      {"C6", cycle(6)},
      {"2C3", two_c3()},
      {"C5+C7", c5_c7()},
      {"C12", cycle(12)},
      {"K4", complete(4)},
      {"P4", path(4)},
      {"K1,3", star(3)},
      {"gem", gem()},
      {"H4u", k_uniform_r_regular_fixture("H4u")},
      {"G4u", k_uniform_r_regular_fixture("G4u")},
      {"K4+gem*", k4_gemd},
      {"K4*+gem", k4d_gem},
      {"dual(K4)", dual(complete(4))},
      {"edge+isolated", Hypergraph::make(3, {{0, 1}})},
      {"empty-edge", Hypergraph::make(3, {{0, 1, 2}, {}})},
      {"repeated-edge", Hypergraph::make(3, {{0, 1}, {0, 1}, {1, 2}})},
      {"no-edges", Hypergraph::make(3, {})},
  };
}

// Fixed pseudo-random graphs, n <= max_n.
inline std::vector<Named> random_graphs(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Named> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t n = min_n + rng.below(max_n - min_n + 1);
    std::uint64_t num = 2 + rng.below(5);
    out.push_back({"G(" + std::to_string(n) + "," + std::to_string(num) + "/10)#" + std::to_string(i),
                   random_graph(n, num, 10, seed * 1000 + i)});
  }
  return out;
}

}  // namespace testing_support
