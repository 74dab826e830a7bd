#pragma once

#include <optional>
#include <string>

#include "fractiso/hypergraph.hpp"
#include "fractiso/matrix.hpp"
#include "fractiso/partition.hpp"

namespace fractiso {

/// Doubly stochastic pair with S1 * M_G = M_H * S2^t and M_G * S2 = S1^t * M_H.
/// S1 rows index vertices of H and columns vertices of G; S2 rows index
/// hyperedges of G and columns hyperedges of H.
struct IsoWitness {
  RationalMatrix S1;
  RationalMatrix S2;
};

enum class Method { Partition, Lp, Both, AdjacencyLp };

std::string to_string(Method m);

struct IsoVerdict {
  bool result = false;
  Method method = Method::Partition;
  std::optional<IsoWitness> witness;
  /// Single-matrix witness A_G S = S A_H, from the adjacency LP.
  std::optional<RationalMatrix> adjacency_witness;
  std::optional<CommonPartition> shared;
  /// Why the verdict is negative (or which shortcut decided it).
  std::string reason;
};

inline constexpr std::size_t kDefaultLpLimit = 30;

struct LpOptions {
  /// Refuse LPs whose vertex or hyperedge count exceeds this.
  std::size_t limit = kDefaultLpLimit;
  /// Compare n, m, degree and hyperedge-size multisets before building the LP.
  bool fast_reject = true;
};

/// Reason the pair cannot be fractionally isomorphic, from necessary
/// conditions alone; nullopt when all of them pass.
std::optional<std::string> fast_reject_reason(const Hypergraph& g, const Hypergraph& h);

/// Decides by common equitable partition; includes the block witness.
IsoVerdict iso_by_partition(const Hypergraph& g, const Hypergraph& h);

/// Decides by exact feasibility of the incidence-matrix system in the
/// n^2 + m^2 entries of S1 and S2. Throws GuardError above the limit.
IsoVerdict iso_by_lp(const Hypergraph& g, const Hypergraph& h, const LpOptions& options = {});

/// Decides graphs by feasibility of A_G S = S A_H with S doubly stochastic.
IsoVerdict graph_iso_by_adjacency_lp(const Hypergraph& g, const Hypergraph& h, const LpOptions& options = {});

/// Runs both deciders; throws std::logic_error if they disagree.
IsoVerdict iso_by_both(const Hypergraph& g, const Hypergraph& h, const LpOptions& options = {});

/// S1 = (+)_i (1/v_i) J_{v_i}, S2 = (+)_j (1/a_j) J_{a_j}, indexed by the
/// original labels. Throws InputError when `shared` does not fit g and h.
IsoWitness witness_from_partition(const Hypergraph& g, const Hypergraph& h, const CommonPartition& shared);

/// Exact check of double stochasticity and both matrix equations. Throws
/// InputError on dimension mismatch.
bool verify_witness(const Hypergraph& g, const Hypergraph& h, const IsoWitness& w);

/// Exact check of A_G S = S A_H with S doubly stochastic.
bool verify_adjacency_witness(const Hypergraph& g, const Hypergraph& h, const RationalMatrix& s);

/// (I_n, I_m), a witness for (g, g).
IsoWitness identity_witness(const Hypergraph& g);

/// Witness for (h, g) from a witness for (g, h): (S1^t, S2^t).
IsoWitness reverse_witness(const IsoWitness& w);

/// Witness for (g, k) from witnesses for (g, h) and (h, k):
/// (T1 * S1, S2 * T2). Throws InputError when either input does not verify.
IsoWitness compose_witnesses(const Hypergraph& g, const Hypergraph& h, const Hypergraph& k, const IsoWitness& w_gh,
                             const IsoWitness& w_hk);

/// The witness for (B_G, B_H) as graphs, S = S1^t (+) S2, oriented like
/// the adjacency LP: A_{B_G} S = S A_{B_H}.
RationalMatrix bipartite_witness(const IsoWitness& w);

struct DerivedChecks {
  bool base_iso = false;
  /// nullopt when there are no hyperedges (no dual).
  std::optional<bool> duals_iso;
  bool bipartite_iso = false;
  bool g_is_graph = false;
  bool h_is_graph = false;
  /// If the base pair is iso and G is a graph then H is a graph.
  bool graphness_transfers = true;
};

/// Runs the deciders on the base pair, the duals and the bipartite
/// representations. LP cross-checks run wherever the LP limit allows.
DerivedChecks derived_iso_checks(const Hypergraph& g, const Hypergraph& h, const LpOptions& options = {});

}  // namespace fractiso
