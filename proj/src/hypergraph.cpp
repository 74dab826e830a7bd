#include "fractiso/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "fractiso/error.hpp"
#include "fractiso/random.hpp"

namespace fractiso {

Hypergraph Hypergraph::make(std::size_t n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (!e.empty() && e.back() >= n)
      throw InputError("vertex index " + std::to_string(e.back()) + " out of range for n = " + std::to_string(n));
  }
  Hypergraph h;
  h.n_ = n;
  h.edges_ = std::move(edges);
  return h;
}

RationalMatrix incidence_matrix(const Hypergraph& h) {
  if (h.num_edges() == 0) throw InputError("no incidence matrix: hypergraph has no hyperedges");
  RationalMatrix m(h.num_vertices(), h.num_edges());
  for (std::size_t j = 0; j < h.num_edges(); ++j)
    for (auto v : h.edge(j)) m(v, j) = 1;
  return m;
}

RationalMatrix adjacency_matrix(const Hypergraph& g) {
  if (!is_graph(g)) throw InputError("adjacency matrix requires a graph");
  RationalMatrix a(g.num_vertices(), g.num_vertices());
  for (const auto& e : g.edges()) {
    a(e[0], e[1]) += 1;
    a(e[1], e[0]) += 1;
  }
  return a;
}

bool is_graph(const Hypergraph& h) {
  return std::all_of(h.edges().begin(), h.edges().end(), [](const Edge& e) { return e.size() == 2; });
}

std::vector<std::size_t> vertex_degrees(const Hypergraph& h) {
  std::vector<std::size_t> deg(h.num_vertices(), 0);
  for (const auto& e : h.edges())
    for (auto v : e) ++deg[v];
  return deg;
}

DegreeProfile degree_sequence(const Hypergraph& h) {
  auto deg = vertex_degrees(h);
  std::sort(deg.begin(), deg.end());
  return deg;
}

DegreeProfile hyperedge_sizes(const Hypergraph& h) {
  DegreeProfile sizes;
  sizes.reserve(h.num_edges());
  for (const auto& e : h.edges()) sizes.push_back(e.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::size_t> exposed_vertices(const Hypergraph& h) {
  std::vector<std::size_t> out;
  auto deg = vertex_degrees(h);
  for (std::size_t v = 0; v < deg.size(); ++v)
    if (deg[v] == 0) out.push_back(v);
  return out;
}

Hypergraph dual(const Hypergraph& h) {
  if (h.num_edges() == 0) throw InputError("dual requires at least one hyperedge");
  std::vector<Edge> edges(h.num_vertices());
  for (std::size_t j = 0; j < h.num_edges(); ++j)
    for (auto v : h.edge(j)) edges[v].push_back(j);
  return Hypergraph::make(h.num_edges(), std::move(edges));
}

Hypergraph two_section(const Hypergraph& h) {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& e : h.edges())
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) pairs.emplace(e[a], e[b]);
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Hypergraph::make(h.num_vertices(), std::move(edges));
}

Hypergraph bipartite_representation(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t j = 0; j < h.num_edges(); ++j)
      if (std::binary_search(h.edge(j).begin(), h.edge(j).end(), v)) edges.push_back({v, n + j});
  return Hypergraph::make(n + h.num_edges(), std::move(edges));
}

std::vector<std::vector<std::size_t>> neighbours(const Hypergraph& g) {
  if (!is_graph(g)) throw InputError("neighbourhoods require a graph");
  std::vector<std::vector<std::size_t>> adj(g.num_vertices());
  for (const auto& e : g.edges()) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

Hypergraph open_neighborhood_hypergraph(const Hypergraph& g) {
  auto adj = neighbours(g);
  return Hypergraph::make(g.num_vertices(), std::move(adj));
}

Hypergraph closed_neighborhood_hypergraph(const Hypergraph& g) {
  auto adj = neighbours(g);
  for (std::size_t v = 0; v < adj.size(); ++v) adj[v].push_back(v);
  return Hypergraph::make(g.num_vertices(), std::move(adj));
}

namespace {

using Mask = std::uint64_t;

// Bron-Kerbosch with Tomita pivoting over bitmask adjacency.
void bron_kerbosch(const std::vector<Mask>& adj, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  Mask px = p | x;
  int pivot = std::countr_zero(px);
  std::size_t best = 0;
  for (Mask s = px; s; s &= s - 1) {
    int u = std::countr_zero(s);
    auto c = static_cast<std::size_t>(std::popcount(p & adj[u]));
    if (c >= best) {
      best = c;
      pivot = u;
    }
  }
  for (Mask s = p & ~adj[pivot]; s; s &= s - 1) {
    int v = std::countr_zero(s);
    Mask bit = Mask{1} << v;
    bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

Hypergraph maximal_cliques_of(std::size_t n, std::vector<Mask> adj) {
  std::vector<Mask> cliques;
  const Mask all = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
  if (n > 0) bron_kerbosch(adj, 0, all, 0, cliques);
  std::vector<Edge> edges;
  edges.reserve(cliques.size());
  for (Mask c : cliques) {
    Edge e;
    for (Mask s = c; s; s &= s - 1) e.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    edges.push_back(std::move(e));
  }
  std::sort(edges.begin(), edges.end());
  return Hypergraph::make(n, std::move(edges));
}

std::vector<Mask> adjacency_masks(const Hypergraph& g, std::size_t limit, const char* what) {
  if (!is_graph(g)) throw InputError(std::string(what) + " requires a graph");
  const std::size_t n = g.num_vertices();
  if (n > limit)
    throw GuardError(std::string(what) + ": " + std::to_string(n) + " vertices exceeds the exponential-construction limit " +
                     std::to_string(limit) + " (raise --limit)");
  if (n > 64) throw GuardError(std::string(what) + ": at most 64 vertices are supported");
  std::vector<Mask> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e[0]] |= Mask{1} << e[1];
    adj[e[1]] |= Mask{1} << e[0];
  }
  return adj;
}

}  // namespace

Hypergraph independent_set_hypergraph(const Hypergraph& g, std::size_t limit) {
  auto adj = adjacency_masks(g, limit, "independent-set hypergraph");
  const std::size_t n = g.num_vertices();
  const Mask all = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
  for (std::size_t v = 0; v < n; ++v) adj[v] = ~adj[v] & all & ~(Mask{1} << v);
  return maximal_cliques_of(n, std::move(adj));
}

Hypergraph clique_hypergraph(const Hypergraph& g, std::size_t limit) {
  return maximal_cliques_of(g.num_vertices(), adjacency_masks(g, limit, "clique hypergraph"));
}

Hypergraph relabel(const Hypergraph& h, const std::vector<std::size_t>& perm) {
  if (perm.size() != h.num_vertices()) throw InputError("relabel: permutation length mismatch");
  std::vector<Edge> edges;
  edges.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    Edge mapped;
    for (auto v : e) mapped.push_back(perm[v]);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph::make(h.num_vertices(), std::move(edges));
}

Hypergraph reorder_edges(const Hypergraph& h, const std::vector<std::size_t>& order) {
  if (order.size() != h.num_edges()) throw InputError("reorder_edges: order length mismatch");
  std::vector<Edge> edges;
  edges.reserve(order.size());
  for (auto j : order) edges.push_back(h.edge(j));
  return Hypergraph::make(h.num_vertices(), std::move(edges));
}

bool same_edge_multiset(const Hypergraph& a, const Hypergraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  auto ea = a.edges();
  auto eb = b.edges();
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

Hypergraph cycle(std::size_t n) {
  if (n < 3) throw InputError("cycle requires n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Hypergraph::make(n, std::move(edges));
}

Hypergraph complete(std::size_t n) {
  if (n < 1) throw InputError("complete requires n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Hypergraph::make(n, std::move(edges));
}

Hypergraph path(std::size_t n) {
  if (n < 1) throw InputError("path requires n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Hypergraph::make(n, std::move(edges));
}

Hypergraph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Hypergraph::make(leaves + 1, std::move(edges));
}

Hypergraph gem() {
  return Hypergraph::make(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  std::vector<Edge> edges = a.edges();
  const std::size_t shift = a.num_vertices();
  for (const auto& e : b.edges()) {
    Edge moved;
    for (auto v : e) moved.push_back(v + shift);
    edges.push_back(std::move(moved));
  }
  return Hypergraph::make(a.num_vertices() + b.num_vertices(), std::move(edges));
}

Hypergraph k_uniform_r_regular_fixture(const std::string& name) {
  if (name == "H4u") return Hypergraph::make(8, {{0, 1, 2, 3}, {2, 3, 4, 5}, {4, 5, 6, 7}, {0, 1, 6, 7}});
  if (name == "G4u") return Hypergraph::make(8, {{0, 1, 2, 3}, {0, 1, 2, 7}, {3, 4, 5, 6}, {4, 5, 6, 7}});
  throw InputError("unknown fixture: " + name + " (expected H4u or G4u)");
}

Hypergraph random_regular(std::size_t n, std::size_t r, std::uint64_t seed, std::size_t max_retries) {
  if ((n * r) % 2 != 0) throw InputError("random_regular: n*r must be even");
  if (r >= n && !(r == 0 && n == 0)) throw InputError("random_regular: requires r < n");
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<std::size_t> points;
    points.reserve(n * r);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t k = 0; k < r; ++k) points.push_back(v);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<Edge> edges;
    bool ok = true;
    while (!points.empty() && ok) {
      // Draw a random pair of remaining points; a few local redraws before
      // the whole pairing is rejected.
      bool placed = false;
      for (int tries = 0; tries < 50 && !placed; ++tries) {
        auto i = rng.below(points.size());
        auto j = rng.below(points.size());
        if (i == j) continue;
        auto u = points[i], v = points[j];
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (seen.count({key.first, key.second})) continue;
        seen.emplace(key.first, key.second);
        edges.push_back({key.first, key.second});
        if (i < j) std::swap(i, j);
        points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
        points.erase(points.begin() + static_cast<std::ptrdiff_t>(j));
        placed = true;
      }
      ok = placed;
    }
    if (ok) return Hypergraph::make(n, std::move(edges));
  }
  throw InputError("random_regular: generation failed after " + std::to_string(max_retries) + " retries");
}

Hypergraph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(num, den)) edges.push_back({i, j});
  return Hypergraph::make(n, std::move(edges));
}

}  // namespace fractiso
