#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fractiso/hypergraph.hpp"

namespace fractiso {

/// Builds a hypergraph from a family spec: "cycle:N", "complete:N",
/// "path:N", "star:N", "gem", "fixture-H4u", "fixture-G4u",
/// "random-regular:N:R[:SEED]". Throws InputError on anything else.
Hypergraph from_family_spec(const std::string& spec);

/// (K4 + dual(gem), dual(K4) + gem): same vertex and hyperedge counts,
/// identical bipartite representations, different degree sequences.
std::pair<Hypergraph, Hypergraph> k4_gem_pair();

struct SuiteRow {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Recomputes every reference example (fixture isomorphisms, counterexamples,
/// invariant values) and compares with the expected values.
std::vector<SuiteRow> reference_suite();

}  // namespace fractiso
