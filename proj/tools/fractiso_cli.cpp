// fractiso: command-line front end.
//
// Exit codes: 0 success / isomorphic / valid, 1 not isomorphic / invalid
// witness / failed suite row, 2 usage, input or guard errors.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fractiso/error.hpp"
#include "fractiso/invariants.hpp"
#include "fractiso/io.hpp"
#include "fractiso/iso.hpp"
#include "fractiso/partition.hpp"
#include "fractiso/suite.hpp"

namespace {

using namespace fractiso;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct Limits {
  std::size_t lp = kDefaultLpLimit;
  std::size_t exponential = kDefaultExponentialLimit;
};

Limits resolve_limits(std::optional<std::size_t> flag) {
  Limits l;
  if (const char* env = std::getenv("FRACTISO_LIMIT")) {
    try {
      l.lp = l.exponential = std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("FRACTISO_LIMIT is not a number: ") + env);
    }
  }
  if (flag) l.lp = l.exponential = *flag;
  return l;
}

void emit(const Hypergraph& h, const std::string& out_path) {
  if (out_path.empty())
    write_hg(std::cout, h);
  else
    write_hg_file(out_path, h);
}

Hypergraph generate(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw InputError("'" + family + "' takes " + std::to_string(k) + " parameter(s), got " + std::to_string(params.size()));
  };
  if (family == "union") {
    if (params.size() < 2) throw InputError("'union' needs at least two family specs, e.g. cycle:3 cycle:3");
    Hypergraph acc = from_family_spec(params[0]);
    for (std::size_t i = 1; i < params.size(); ++i) acc = disjoint_union(acc, from_family_spec(params[i]));
    return acc;
  }
  if (family == "random-regular") {
    need(2);
    return from_family_spec(family + ":" + params[0] + ":" + params[1] + ":" + std::to_string(seed));
  }
  if (family == "gem" || family == "fixture-H4u" || family == "fixture-G4u") {
    need(0);
    return from_family_spec(family);
  }
  if (family == "cycle" || family == "complete" || family == "path" || family == "star") {
    need(1);
    return from_family_spec(family + ":" + params[0]);
  }
  throw InputError("unknown family '" + family + "'");
}

std::string profile(const DegreeProfile& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
  return s;
}

int run_iso(const std::string& a, const std::string& b, const std::string& method, const std::string& witness_out,
            const Limits& limits) {
  const auto g = read_hg_file(a);
  const auto h = read_hg_file(b);
  LpOptions options{.limit = limits.lp};
  std::string chosen = method;
  if (chosen.empty()) {
    const auto biggest = std::max({g.num_vertices(), h.num_vertices(), g.num_edges(), h.num_edges()});
    chosen = biggest <= limits.lp ? "both" : "partition";
  }
  IsoVerdict verdict;
  if (chosen == "partition") {
    verdict = iso_by_partition(g, h);
  } else if (chosen == "lp") {
    verdict = iso_by_lp(g, h, options);
  } else {
    auto by_partition = iso_by_partition(g, h);
    auto by_lp = iso_by_lp(g, h, options);
    if (by_partition.result != by_lp.result) {
      std::cerr << "error: methods disagree (partition: " << by_partition.result << ", lp: " << by_lp.result << ")\n";
      return kExitError;
    }
    verdict = std::move(by_partition);
    verdict.method = Method::Both;
    if (!verdict.result) verdict.reason += "; lp: " + by_lp.reason;
  }

  std::cout << "iso: " << (verdict.result ? "true" : "false") << '\n';
  std::cout << "method: " << to_string(verdict.method) << '\n';
  if (!verdict.result && !verdict.reason.empty()) std::cout << "reason: " << verdict.reason << '\n';
  if (verdict.result && verdict.witness && !witness_out.empty()) {
    write_witness_file(witness_out, *verdict.witness);
    std::cout << "witness_file: " << witness_out << '\n';
  }
  if (verdict.shared) {
    std::cout << "shared_parameters: " << parameters_to_json(verdict.shared->parameters).dump() << '\n';
  }
  return verdict.result ? kExitOk : kExitNegative;
}

int run_paper_suite() {
  auto rows = reference_suite();
  std::size_t failed = 0;
  std::cout << std::left << std::setw(24) << "id" << std::setw(8) << "result" << std::setw(30) << "expected"
            << "computed\n";
  for (const auto& r : rows) {
    if (!r.pass) ++failed;
    std::cout << std::setw(24) << r.id << std::setw(8) << (r.pass ? "PASS" : "FAIL") << std::setw(30) << r.expected
              << r.computed << "   # " << r.description << '\n';
  }
  std::cout << rows.size() - failed << "/" << rows.size() << " rows pass\n";
  return failed == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional isomorphism of graphs and hypergraphs, with exact fractional invariants"};
  app.require_subcommand(1);

  std::optional<std::size_t> limit_flag;
  std::string out_path;

  auto* gen = app.add_subcommand("gen", "Generate a graph or hypergraph in .hg format");
  std::string family;
  std::vector<std::string> gen_params;
  std::uint64_t seed = 0;
  gen->add_option("family", family,
                  "cycle N | complete N | path N | star N | gem | union SPEC... | fixture-H4u | fixture-G4u | random-regular N R")
      ->required();
  gen->add_option("params", gen_params, "Family parameters (union takes specs like cycle:3)");
  gen->add_option("--seed", seed, "Seed for random-regular");
  gen->add_option("-o", out_path, "Output path (stdout when omitted)");

  std::string file_a, file_b, witness_path;

  auto* info = app.add_subcommand("info", "Print sizes, degree and hyperedge-size multisets");
  info->add_option("file", file_a)->required()->check(CLI::ExistingFile);

  auto* partition = app.add_subcommand("partition", "Print the coarsest equitable partition and its parameters");
  std::string format = "text";
  partition->add_option("file", file_a)->required()->check(CLI::ExistingFile);
  partition->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* iso = app.add_subcommand("iso", "Decide fractional isomorphism");
  std::string method;
  iso->add_option("file_a", file_a)->required()->check(CLI::ExistingFile);
  iso->add_option("file_b", file_b)->required()->check(CLI::ExistingFile);
  iso->add_option("--method", method, "partition, lp or both")->check(CLI::IsMember({"partition", "lp", "both"}));
  iso->add_option("--witness", witness_path, "Write the witness (S1, S2) as JSON");
  iso->add_option("--limit", limit_flag, "Size guard for the LP method");

  auto* verify = app.add_subcommand("verify-witness", "Check a witness file exactly");
  verify->add_option("file_a", file_a)->required()->check(CLI::ExistingFile);
  verify->add_option("file_b", file_b)->required()->check(CLI::ExistingFile);
  verify->add_option("--witness", witness_path)->required()->check(CLI::ExistingFile);

  auto* invariant = app.add_subcommand("invariant", "Compute a fractional parameter exactly");
  std::string param = "all";
  invariant->add_option("file", file_a)->required()->check(CLI::ExistingFile);
  invariant->add_option("--param", param, "kf pf muf tauf alphaf gammaf totalgammaf chif omegaf alphacf thetaf, or all");
  invariant->add_option("--limit", limit_flag, "Vertex guard for independent-set and clique hypergraphs");

  auto* dual_cmd = app.add_subcommand("dual", "Write the dual hypergraph");
  auto* two_sec_cmd = app.add_subcommand("two-section", "Write the 2-section graph");
  auto* bip_cmd = app.add_subcommand("bipartite", "Write the bipartite representation");
  for (auto* sub : {dual_cmd, two_sec_cmd, bip_cmd}) {
    sub->add_option("file", file_a)->required()->check(CLI::ExistingFile);
    sub->add_option("-o", out_path, "Output path (stdout when omitted)");
  }

  auto* suite = app.add_subcommand("paper-suite", "Recompute every reference example and print a pass/fail table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    const Limits limits = resolve_limits(limit_flag);
    if (gen->parsed()) {
      emit(generate(family, gen_params, seed), out_path);
      return kExitOk;
    }
    if (info->parsed()) {
      auto h = read_hg_file(file_a);
      std::cout << "n: " << h.num_vertices() << "\nm: " << h.num_edges() << "\ngraph: " << (is_graph(h) ? "true" : "false")
                << "\ndegrees: " << profile(degree_sequence(h)) << "\nsizes: " << profile(hyperedge_sizes(h)) << '\n';
      return kExitOk;
    }
    if (partition->parsed()) {
      auto h = read_hg_file(file_a);
      auto p = coarsest_partition(h);
      auto params = parameters(p, h);
      if (format == "json")
        std::cout << partition_to_json(p, params).dump(2) << '\n';
      else
        std::cout << partition_to_text(p, params);
      return kExitOk;
    }
    if (iso->parsed()) return run_iso(file_a, file_b, method, witness_path, limits);
    if (verify->parsed()) {
      auto g = read_hg_file(file_a);
      auto h = read_hg_file(file_b);
      auto w = read_witness_file(witness_path);
      bool ok = verify_witness(g, h, w);
      std::cout << "witness: " << (ok ? "valid" : "invalid") << '\n';
      return ok ? kExitOk : kExitNegative;
    }
    if (invariant->parsed()) {
      auto h = read_hg_file(file_a);
      if (param == "all") {
        auto report = invariant_report(h, limits.exponential);
        for (const auto& e : report.entries) std::cout << e.name << " = " << e.value.str() << '\n';
        std::cout << report_to_json(report).dump() << '\n';
      } else {
        std::cout << compute_invariant(h, param, limits.exponential).value.str() << '\n';
      }
      return kExitOk;
    }
    if (dual_cmd->parsed()) {
      emit(dual(read_hg_file(file_a)), out_path);
      return kExitOk;
    }
    if (two_sec_cmd->parsed()) {
      emit(two_section(read_hg_file(file_a)), out_path);
      return kExitOk;
    }
    if (bip_cmd->parsed()) {
      emit(bipartite_representation(read_hg_file(file_a)), out_path);
      return kExitOk;
    }
    if (suite->parsed()) return run_paper_suite();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
