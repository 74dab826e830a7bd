#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fractiso/hypergraph.hpp"

namespace fractiso {

/// Joint partition of vertices and hyperedges. Classes are listed in
/// canonical order; each class lists its members in increasing order.
struct EquitablePartition {
  std::vector<std::vector<std::size_t>> vertex_classes;
  std::vector<std::vector<std::size_t>> edge_classes;
  /// vertex_class_of[v] / edge_class_of[e]: index into the lists above.
  std::vector<std::size_t> vertex_class_of;
  std::vector<std::size_t> edge_class_of;
};

/// (v, D, U) plus the edge-class sizes a.
struct PartitionParameters {
  std::vector<std::size_t> v;
  std::vector<std::size_t> a;
  /// s x r, row-major by vertex class.
  std::vector<std::vector<std::size_t>> D;
  std::vector<std::vector<std::size_t>> U;

  bool operator==(const PartitionParameters&) const = default;
};

/// Coarsest equitable partition, reached as the fixed point of simultaneous
/// vertex/hyperedge signature refinement.
EquitablePartition coarsest_partition(const Hypergraph& h);

/// Refines `start` to the coarsest equitable partition below it. An
/// equitable `start` with classes numbered 0..k-1 is returned unchanged.
EquitablePartition refine_partition(const Hypergraph& h, const EquitablePartition& start);

/// Counts D and U; throws InputError if P is not an equitable partition of h
/// (or does not cover it).
PartitionParameters parameters(const EquitablePartition& p, const Hypergraph& h);

/// True iff every D/U count is constant on the classes of p.
bool is_equitable(const EquitablePartition& p, const Hypergraph& h);

/// Shared equitable partition of two hypergraphs, read off the refinement of
/// their disjoint union. Class i on the G side corresponds to class i on the
/// H side.
struct CommonPartition {
  PartitionParameters parameters;
  EquitablePartition for_g;
  EquitablePartition for_h;
};

std::optional<CommonPartition> common_partition(const Hypergraph& g, const Hypergraph& h);

/// Colour refinement of a graph, one interned colour per vertex per round.
/// Round 0 is the uniform colouring; a colour in round k+1 encodes the
/// colour in round k together with the multiset of neighbour colours in
/// round k, so it determines d_1(v), ..., d_{k+1}(v).
struct IteratedDegrees {
  /// signatures[k][v] for k = 0..rounds.
  std::vector<std::vector<std::size_t>> signatures;
  /// First round whose partition equals the previous round's.
  std::size_t stable_round = 0;

  const std::vector<std::size_t>& final_signatures() const { return signatures.back(); }
  /// Vertex classes of the stable colouring, ordered by colour.
  std::vector<std::vector<std::size_t>> stable_classes() const;
};

/// Runs `rounds` rounds, or until stable when rounds is nullopt.
IteratedDegrees iterated_degree_sequence(const Hypergraph& g, std::optional<std::size_t> rounds = std::nullopt);

/// True iff the ultimate degree sequences of two graphs agree: their joint
/// refinement (shared interning) assigns each colour equally often to both.
bool same_ultimate_degrees(const Hypergraph& g, const Hypergraph& h);

}  // namespace fractiso
