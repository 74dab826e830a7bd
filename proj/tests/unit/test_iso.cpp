#include <gtest/gtest.h>

#include "fractiso/error.hpp"
#include "fractiso/iso.hpp"
#include "oracles/min_norm_point.hpp"
#include "support.hpp"

using namespace fractiso;
using testing_support::Named;

namespace {

// Permutation matrices for h = reorder_edges(relabel(g, perm), order):
// vertex v of g is vertex perm[v] of h, edge order[j] of g is edge j of h.
IsoWitness permutation_witness(const Hypergraph& g, const std::vector<std::size_t>& perm,
                               const std::vector<std::size_t>& order) {
  IsoWitness w{RationalMatrix(g.num_vertices(), g.num_vertices()), RationalMatrix(g.num_edges(), g.num_edges())};
  for (std::size_t v = 0; v < perm.size(); ++v) w.S1(perm[v], v) = 1;
  for (std::size_t j = 0; j < order.size(); ++j) w.S2(order[j], j) = 1;
  return w;
}

struct Pair {
  std::string name;
  Hypergraph g;
  Hypergraph h;
};

std::vector<Pair> iso_pairs() {
  return {{"2C3/C6", testing_support::two_c3(), cycle(6)},
          {"C5+C7/C12", testing_support::c5_c7(), cycle(12)},
          {"G4u/H4u", k_uniform_r_regular_fixture("G4u"), k_uniform_r_regular_fixture("H4u")},
          {"3reg10", random_regular(10, 3, 1), random_regular(10, 3, 2)},
          {"C4/C4", cycle(4), cycle(4)}};
}

}  // namespace

TEST(Iso, FixturePairsByEveryMethod) {
  for (const auto& [name, g, h] : iso_pairs()) {
    auto p = iso_by_partition(g, h);
    ASSERT_TRUE(p.result) << name;
    ASSERT_TRUE(p.witness) << name;
    EXPECT_TRUE(verify_witness(g, h, *p.witness)) << name;
    auto l = iso_by_lp(g, h);
    ASSERT_TRUE(l.result) << name;
    EXPECT_TRUE(verify_witness(g, h, *l.witness)) << name;
    EXPECT_TRUE(iso_by_both(g, h).result) << name;
    if (is_graph(g)) {
      auto a = graph_iso_by_adjacency_lp(g, h);
      ASSERT_TRUE(a.result) << name;
      EXPECT_TRUE(verify_adjacency_witness(g, h, *a.adjacency_witness)) << name;
    }
  }
}

TEST(Iso, BlockWitnessEntries) {
  auto v = iso_by_partition(testing_support::two_c3(), cycle(6));
  EXPECT_EQ(v.witness->S1, RationalMatrix::filled(6, 6, Rational(1, 6)));
  EXPECT_EQ(v.witness->S2, RationalMatrix::filled(6, 6, Rational(1, 6)));
  auto w = iso_by_partition(k_uniform_r_regular_fixture("G4u"), k_uniform_r_regular_fixture("H4u"));
  EXPECT_EQ(w.witness->S1, RationalMatrix::filled(8, 8, Rational(1, 8)));
  EXPECT_EQ(w.witness->S2, RationalMatrix::filled(4, 4, Rational(1, 4)));
}

TEST(Iso, NonIsoFixtures) {
  const auto g4u = k_uniform_r_regular_fixture("G4u"), h4u = k_uniform_r_regular_fixture("H4u");
  const auto a = two_section(g4u), b = two_section(h4u);
  EXPECT_FALSE(iso_by_partition(a, b).result);
  EXPECT_FALSE(iso_by_lp(a, b).result);
  EXPECT_FALSE(graph_iso_by_adjacency_lp(a, b).result);
  EXPECT_FALSE(iso_by_lp(a, b, {.fast_reject = false}).result);
  EXPECT_FALSE(graph_iso_by_adjacency_lp(a, b, {.fast_reject = false}).result);

  auto [x, y] = k4_gem_pair();
  EXPECT_FALSE(iso_by_partition(x, y).result);
  EXPECT_FALSE(iso_by_lp(x, y, {.fast_reject = false}).result);
  EXPECT_EQ(iso_by_lp(x, y).reason, "degree sequences differ");
  EXPECT_TRUE(iso_by_partition(bipartite_representation(x), bipartite_representation(y)).result);

  EXPECT_FALSE(iso_by_partition(cycle(4), path(4)).result);
  EXPECT_FALSE(iso_by_partition(cycle(4), cycle(5)).result);
  EXPECT_EQ(iso_by_lp(cycle(4), cycle(5)).reason, "dimensions differ");
}

TEST(Iso, FastRejectReasons) {
  EXPECT_EQ(fast_reject_reason(cycle(4), cycle(5)), "vertex counts differ");
  EXPECT_EQ(fast_reject_reason(cycle(4), path(4)), "hyperedge counts differ");
  EXPECT_EQ(fast_reject_reason(star(3), path(4)), "degree sequences differ");
  EXPECT_EQ(fast_reject_reason(Hypergraph::make(4, {{0, 1, 2}, {3}}), Hypergraph::make(4, {{0, 1}, {2, 3}})),
            "hyperedge-size multisets differ");
  EXPECT_EQ(fast_reject_reason(Hypergraph::make(4, {{0, 1, 2, 3}, {}}), Hypergraph::make(4, {{0, 1}, {2, 3}})),
            "hyperedge-size multisets differ");
  EXPECT_EQ(fast_reject_reason(cycle(6), testing_support::two_c3()), std::nullopt);
}

TEST(Iso, EdgeCases) {
  auto e3 = Hypergraph::make(3, {});
  EXPECT_TRUE(iso_by_lp(e3, e3).result);
  EXPECT_TRUE(iso_by_partition(e3, e3).result);
  EXPECT_TRUE(verify_witness(e3, e3, *iso_by_partition(e3, e3).witness));
  EXPECT_FALSE(iso_by_lp(e3, Hypergraph::make(3, {{0}})).result);
  EXPECT_FALSE(iso_by_partition(e3, Hypergraph::make(3, {{0}})).result);

  auto empties = Hypergraph::make(2, {{}, {0, 1}});
  auto reordered = Hypergraph::make(2, {{0, 1}, {}});
  EXPECT_TRUE(iso_by_both(empties, reordered).result);
  EXPECT_TRUE(iso_by_lp(Hypergraph(), Hypergraph()).result);

  EXPECT_THROW(graph_iso_by_adjacency_lp(k_uniform_r_regular_fixture("H4u"), k_uniform_r_regular_fixture("G4u")),
               InputError);
}

TEST(Iso, Guards) {
  EXPECT_THROW(iso_by_lp(cycle(31), cycle(31)), GuardError);
  EXPECT_THROW(iso_by_lp(cycle(8), cycle(8), {.limit = 7}), GuardError);
  EXPECT_TRUE(iso_by_lp(cycle(8), cycle(8), {.limit = 8}).result);
  EXPECT_THROW(graph_iso_by_adjacency_lp(cycle(31), cycle(31)), GuardError);
  // Fast rejection happens before the guard.
  EXPECT_FALSE(iso_by_lp(cycle(31), path(31)).result);
  EXPECT_TRUE(iso_by_partition(cycle(40), cycle(40)).result);
}

TEST(Witness, VerifyRejectsTampering) {
  const auto g = testing_support::two_c3(), h = cycle(6);
  auto w = *iso_by_partition(g, h).witness;
  EXPECT_TRUE(verify_witness(g, h, w));
  auto bad = w;
  bad.S1(0, 0) += Rational(1, 6);
  bad.S1(0, 1) -= Rational(1, 6);
  EXPECT_FALSE(verify_witness(g, h, bad));
  auto neg = w;
  neg.S2(0, 0) = Rational(-1, 6);
  neg.S2(0, 1) = Rational(1, 2);
  EXPECT_FALSE(verify_witness(g, h, neg));
  // A doubly stochastic pair that breaks the equations: identity on 2C3 vs C6.
  EXPECT_FALSE(verify_witness(g, h, identity_witness(g)));
  EXPECT_THROW(verify_witness(g, h, IsoWitness{RationalMatrix::identity(5), RationalMatrix::identity(6)}), InputError);
  EXPECT_THROW(verify_witness(g, cycle(5), w), InputError);
}

TEST(Witness, PermutationWitnessesVerify) {
  Rng rng(3);
  for (const auto& [name, h] : testing_support::fixtures()) {
    auto perm = testing_support::random_permutation(h.num_vertices(), rng);
    auto order = testing_support::random_permutation(h.num_edges(), rng);
    auto moved = reorder_edges(relabel(h, perm), order);
    EXPECT_TRUE(verify_witness(h, moved, permutation_witness(h, perm, order))) << name;
    EXPECT_TRUE(iso_by_partition(h, moved).result) << name;
  }
}

TEST(Witness, ReflexiveSymmetricTransitive) {
  Rng rng(17);
  auto corpus = testing_support::fixtures();
  auto more = testing_support::random_graphs(20, 2, 9, 61);
  corpus.insert(corpus.end(), more.begin(), more.end());
  for (const auto& [name, g] : corpus) {
    EXPECT_TRUE(verify_witness(g, g, identity_witness(g))) << name;
    auto h = testing_support::scramble(g, rng);
    auto k = testing_support::scramble(g, rng);
    auto gh = iso_by_partition(g, h);
    auto hk = iso_by_partition(h, k);
    ASSERT_TRUE(gh.result && hk.result) << name;
    EXPECT_TRUE(verify_witness(h, g, reverse_witness(*gh.witness))) << name;
    auto gk = compose_witnesses(g, h, k, *gh.witness, *hk.witness);
    EXPECT_TRUE(verify_witness(g, k, gk)) << name;
  }
  for (const auto& [name, g, h] : iso_pairs()) {
    auto w = *iso_by_lp(g, h).witness;
    EXPECT_TRUE(verify_witness(h, g, reverse_witness(w))) << name;
    auto back = compose_witnesses(g, h, g, w, reverse_witness(w));
    EXPECT_TRUE(verify_witness(g, g, back)) << name;
  }
  const auto g = testing_support::two_c3(), h = cycle(6);
  EXPECT_THROW(compose_witnesses(g, h, h, identity_witness(g), identity_witness(h)), InputError);
}

TEST(Witness, BipartiteWitnessVerifiesAsAdjacency) {
  for (const auto& [name, g, h] : iso_pairs()) {
    for (const auto& w : {*iso_by_partition(g, h).witness, *iso_by_lp(g, h).witness}) {
      auto s = bipartite_witness(w);
      EXPECT_TRUE(verify_adjacency_witness(bipartite_representation(g), bipartite_representation(h), s)) << name;
    }
  }
}

TEST(Witness, FromPartitionRejectsForeignParameters) {
  auto shared = *common_partition(testing_support::two_c3(), cycle(6));
  EXPECT_THROW(witness_from_partition(cycle(4), cycle(4), shared), InputError);
  EXPECT_THROW(witness_from_partition(testing_support::two_c3(), cycle(5), shared), InputError);
}

// Method agreement on pairs that are close: same degree sequence by
// construction, so the fast rejection never settles them.
TEST(Iso, MethodsAgreeOnRandomPairs) {
  Rng rng(71);
  std::size_t positive = 0, negative = 0;
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto name = "pair#" + std::to_string(i);
    const auto g = random_graph(3 + rng.below(6), 3, 10, 810 + i);
    auto h = testing_support::scramble(testing_support::edge_swaps(g, 1 + rng.below(2), rng), rng);
    auto p = iso_by_partition(g, h).result;
    auto l = iso_by_lp(g, h, {.fast_reject = false}).result;
    auto a = graph_iso_by_adjacency_lp(g, h, {.fast_reject = false}).result;
    EXPECT_EQ(p, l) << name;
    EXPECT_EQ(p, a) << name;
    (p ? positive : negative)++;
  }
  EXPECT_GT(positive, 5u);
  EXPECT_GT(negative, 5u);
}

TEST(Iso, AdjacencyLpMatchesBirkhoffOracle) {
  Rng rng(91);
  std::vector<std::pair<Hypergraph, Hypergraph>> pairs{{cycle(4), cycle(4)}, {cycle(5), cycle(5)}, {cycle(4), path(4)}};
  for (const auto& [name, g] : testing_support::random_graphs(25, 2, 5, 101))
    pairs.emplace_back(g, testing_support::scramble(testing_support::edge_swaps(g, 1, rng), rng));
  for (const auto& [g, h] : pairs) {
    const auto n = g.num_vertices();
    bool expected = oracle::adjacency_system_feasible(n, testing_support::adjacency_ints(g), testing_support::adjacency_ints(h));
    EXPECT_EQ(graph_iso_by_adjacency_lp(g, h, {.fast_reject = false}).result, expected);
    EXPECT_EQ(iso_by_partition(g, h).result, expected);
  }
}

TEST(Iso, HypergraphMethodsAgree) {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = testing_support::random_hypergraph(3 + seed % 5, 2 + seed % 5, 3, 900 + seed);
    auto h = seed % 2 ? testing_support::scramble(g, rng) : testing_support::random_hypergraph(3 + seed % 5, 2 + seed % 5, 3, 950 + seed);
    EXPECT_EQ(iso_by_partition(g, h).result, iso_by_lp(g, h, {.fast_reject = false}).result) << seed;
  }
}

TEST(Derived, Fixtures) {
  auto d = derived_iso_checks(k_uniform_r_regular_fixture("G4u"), k_uniform_r_regular_fixture("H4u"));
  EXPECT_TRUE(d.base_iso);
  EXPECT_EQ(d.duals_iso, true);
  EXPECT_TRUE(d.bipartite_iso);
  EXPECT_FALSE(d.g_is_graph);
  EXPECT_TRUE(d.graphness_transfers);

  auto [x, y] = k4_gem_pair();
  auto e = derived_iso_checks(x, y, {.limit = 12});
  EXPECT_FALSE(e.base_iso);
  EXPECT_TRUE(e.bipartite_iso);

  auto none = derived_iso_checks(Hypergraph::make(3, {}), Hypergraph::make(3, {}));
  EXPECT_FALSE(none.duals_iso.has_value());
}

TEST(Derived, IsoImpliesDualAndBipartiteIso) {
  Rng rng(23);
  for (const auto& [name, g] : testing_support::random_graphs(15, 3, 6, 111)) {
    if (g.num_edges() == 0) continue;
    auto h = testing_support::scramble(testing_support::edge_swaps(g, 1, rng), rng);
    auto d = derived_iso_checks(g, h);
    if (d.base_iso) {
      EXPECT_EQ(d.duals_iso, true) << name;
      EXPECT_TRUE(d.bipartite_iso) << name;
      EXPECT_TRUE(d.h_is_graph) << name;
    }
  }
}

TEST(Method, Names) {
  EXPECT_EQ(to_string(Method::Partition), "partition");
  EXPECT_EQ(to_string(Method::Lp), "lp");
  EXPECT_EQ(to_string(Method::Both), "both");
  EXPECT_EQ(to_string(Method::AdjacencyLp), "adjacency-lp");
}
