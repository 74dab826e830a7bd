#include "fractiso/suite.hpp"

#include <sstream>

#include "fractiso/error.hpp"
#include "fractiso/invariants.hpp"
#include "fractiso/iso.hpp"
#include "fractiso/lp.hpp"
#include "fractiso/partition.hpp"

namespace fractiso {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t to_count(const std::string& s, const std::string& spec) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("bad number '" + s + "' in family spec '" + spec + "'");
  return std::stoull(s);
}

std::string profile(const DegreeProfile& p) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << '}';
  return os.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

bool all_entries(const RationalMatrix& m, const Rational& value) {
  for (const auto& x : m.data())
    if (x != value) return false;
  return true;
}

}  // namespace

Hypergraph from_family_spec(const std::string& spec) {
  auto parts = split(spec, ':');
  const auto& name = parts[0];
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() - 1 < lo || parts.size() - 1 > hi) throw InputError("wrong number of parameters in '" + spec + "'");
  };
  if (name == "cycle") {
    arity(1, 1);
    return cycle(to_count(parts[1], spec));
  }
  if (name == "complete") {
    arity(1, 1);
    return complete(to_count(parts[1], spec));
  }
  if (name == "path") {
    arity(1, 1);
    return path(to_count(parts[1], spec));
  }
  if (name == "star") {
    arity(1, 1);
    return star(to_count(parts[1], spec));
  }
  if (name == "gem") {
    arity(0, 0);
    return gem();
  }
  if (name == "fixture-H4u" || name == "fixture-G4u") {
    arity(0, 0);
    return k_uniform_r_regular_fixture(name.substr(8));
  }
  if (name == "random-regular") {
    arity(2, 3);
    std::uint64_t seed = parts.size() > 3 ? to_count(parts[3], spec) : 0;
    return random_regular(to_count(parts[1], spec), to_count(parts[2], spec), seed);
  }
  throw InputError("unknown family '" + name + "'");
}

std::pair<Hypergraph, Hypergraph> k4_gem_pair() {
  const auto k4 = complete(4);
  const auto g = gem();
  return {disjoint_union(k4, dual(g)), disjoint_union(dual(k4), g)};
}

std::vector<SuiteRow> reference_suite() {
  std::vector<SuiteRow> rows;
  auto add = [&](std::string id, std::string description, std::string expected, std::string computed) {
    bool pass = expected == computed;
    rows.push_back({std::move(id), std::move(description), std::move(expected), std::move(computed), pass});
  };

  const auto c3 = cycle(3), c6 = cycle(6), c12 = cycle(12);
  const auto two_c3 = disjoint_union(c3, c3);
  const auto c5_c7 = disjoint_union(cycle(5), cycle(7));
  const auto h4u = k_uniform_r_regular_fixture("H4u");
  const auto g4u = k_uniform_r_regular_fixture("G4u");
  const auto [k4_gemd, k4d_gem] = k4_gem_pair();

  add("H.uniform", "H4u is 4-uniform and 2-regular", "{4,4,4,4} {2,2,2,2,2,2,2,2}",
      profile(hyperedge_sizes(h4u)) + " " + profile(degree_sequence(h4u)));
  add("H.graph", "H4u is not a graph", "false", yes_no(is_graph(h4u)));
  add("H.2sec", "2-section of H4u is 5-regular", "{5,5,5,5,5,5,5,5}", profile(degree_sequence(two_section(h4u))));
  add("G.2sec", "2-section of G4u: six vertices of degree 4, two of degree 6", "{4,4,4,4,4,4,6,6}",
      profile(degree_sequence(two_section(g4u))));
  add("K4gem.deg1", "degree multiset of K4 + gem*", "{2,2,2,2,2,2,2,3,3,3,3}", profile(degree_sequence(k4_gemd)));
  add("K4gem.deg2", "degree multiset of K4* + gem", "{2,2,2,2,2,2,2,2,3,3,4}", profile(degree_sequence(k4d_gem)));
  add("K4gem.dims", "both unions have 11 vertices and 11 hyperedges", "11 11 11 11",
      std::to_string(k4_gemd.num_vertices()) + " " + std::to_string(k4_gemd.num_edges()) + " " +
          std::to_string(k4d_gem.num_vertices()) + " " + std::to_string(k4d_gem.num_edges()));

  add("iso.2C3-C6.partition", "2C3 and C6 share an equitable partition", "true", yes_no(iso_by_partition(two_c3, c6).result));
  add("iso.2C3-C6.lp", "incidence LP for 2C3 vs C6 is feasible", "true", yes_no(iso_by_lp(two_c3, c6).result));
  add("iso.2C3-C6.adjacency", "adjacency LP for 2C3 vs C6 is feasible", "true",
      yes_no(graph_iso_by_adjacency_lp(two_c3, c6).result));
  add("iso.C5C7-C12.partition", "C5 + C7 vs C12 by partition", "true", yes_no(iso_by_partition(c5_c7, c12).result));
  add("iso.C5C7-C12.lp", "C5 + C7 vs C12 by incidence LP", "true", yes_no(iso_by_lp(c5_c7, c12).result));
  add("iso.regular", "random 3-regular graphs on 10 vertices are fractionally isomorphic", "true",
      yes_no(graph_iso_by_adjacency_lp(random_regular(10, 3, 1), random_regular(10, 3, 2)).result));
  add("iso.4u.partition", "H4u vs G4u by partition", "true", yes_no(iso_by_partition(g4u, h4u).result));
  add("iso.4u.lp", "H4u vs G4u by incidence LP", "true", yes_no(iso_by_lp(g4u, h4u).result));
  add("iso.4u.2sec", "2-sections of H4u and G4u", "false",
      yes_no(iso_by_partition(two_section(g4u), two_section(h4u)).result));
  add("iso.K4gem", "K4 + gem* vs K4* + gem", "false", yes_no(iso_by_lp(k4_gemd, k4d_gem).result));
  {
    auto d = derived_iso_checks(k4_gemd, k4d_gem, LpOptions{.limit = 12});
    add("iso.K4gem.bipartite", "their bipartite representations are fractionally isomorphic", "true",
        yes_no(d.bipartite_iso));
  }

  {
    auto common = common_partition(two_c3, c6);
    std::string got = common ? "v=" + std::to_string(common->parameters.v[0]) + " D=" + std::to_string(common->parameters.D[0][0]) +
                                   " U=" + std::to_string(common->parameters.U[0][0])
                             : "absent";
    add("partition.2C3-C6", "common partition of 2C3 and C6", "v=6 D=2 U=2", got);
    auto p = parameters(coarsest_partition(h4u), h4u);
    add("partition.H4u", "parameters of H4u", "v=8 a=4 D=2 U=4",
        "v=" + std::to_string(p.v[0]) + " a=" + std::to_string(p.a[0]) + " D=" + std::to_string(p.D[0][0]) +
            " U=" + std::to_string(p.U[0][0]));
    add("partition.C6", "C6 has a single vertex class", "1", std::to_string(coarsest_partition(c6).vertex_classes.size()));
    add("degrees.2C3-C6", "ultimate degree sequences of 2C3 and C6 agree", "true", yes_no(same_ultimate_degrees(two_c3, c6)));
  }

  {
    auto v = iso_by_partition(two_c3, c6);
    bool block = v.witness && all_entries(v.witness->S1, Rational(1, 6)) && all_entries(v.witness->S2, Rational(1, 6));
    add("witness.2C3-C6", "block witness is (1/6)J6, (1/6)J6 and verifies", "true",
        yes_no(block && verify_witness(two_c3, c6, *v.witness)));
    auto w = iso_by_partition(g4u, h4u);
    bool block4 = w.witness && all_entries(w.witness->S1, Rational(1, 8)) && all_entries(w.witness->S2, Rational(1, 4));
    add("witness.4u", "block witness is (1/8)J8, (1/4)J4 and verifies", "true",
        yes_no(block4 && verify_witness(g4u, h4u, *w.witness)));
  }

  {
    auto d = derived_iso_checks(two_c3, c6);
    add("derived.2C3-C6", "duals and bipartite representations of 2C3, C6", "true true",
        yes_no(d.duals_iso.value_or(false)) + " " + yes_no(d.bipartite_iso));
    auto e = derived_iso_checks(g4u, h4u);
    add("derived.4u", "duals iso, bipartite iso, neither is a graph", "true true false false",
        yes_no(e.duals_iso.value_or(false)) + " " + yes_no(e.bipartite_iso) + " " + yes_no(e.g_is_graph) + " " +
            yes_no(e.h_is_graph));
  }

  {
    auto exposed = Hypergraph::make(3, {{0, 1}});
    add("inv.exposed", "k_f and p_f with an exposed vertex", "infinity infinity", k_f(exposed).str() + " " + p_f(exposed).str());
    add("inv.chi", "chi_f(2C3), chi_f(C6)", "3 2", chi_f(two_c3).str() + " " + chi_f(c6).str());
    add("inv.omega", "omega_f(2C3), omega_f(C6)", "3 2", omega_f(two_c3).str() + " " + omega_f(c6).str());
    add("inv.clique", "alpha^c_f, theta_f of 2C3 and C6", "2 2 3 3",
        alpha_c_f(two_c3).str() + " " + theta_f(two_c3).str() + " " + alpha_c_f(c6).str() + " " + theta_f(c6).str());
    add("inv.domination.C12", "gamma_f(C12), Gamma_f(C12)", "4 6", gamma_f(c12).str() + " " + total_gamma_f(c12).str());
    add("inv.domination.C5C7", "gamma_f, Gamma_f of C5 + C7", "4 6", gamma_f(c5_c7).str() + " " + total_gamma_f(c5_c7).str());
    auto pfm = sufficient_pfm_construction(two_c3);
    bool halves = pfm.has_value();
    if (pfm)
      for (const auto& w : *pfm) halves = halves && w == Rational(1, 2);
    add("inv.pfm.2C3", "equitable construction puts 1/2 on every edge of 2C3", "true", yes_no(halves));
    auto suite = invariance_suite(two_c3, c6);
    std::string chi;
    for (const auto& r : suite.rows)
      if (r.name == "chif") chi = r.left.str() + " vs " + r.right.str();
    add("inv.suite.2C3-C6", "invariant parameters agree; chi_f differs", "true 3 vs 2", yes_no(suite.holds()) + " " + chi);
  }
  return rows;
}

}  // namespace fractiso
