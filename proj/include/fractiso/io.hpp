#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fractiso/hypergraph.hpp"
#include "fractiso/invariants.hpp"
#include "fractiso/iso.hpp"
#include "fractiso/partition.hpp"

namespace fractiso {

// ".hg" text format: first non-comment line "n m", then m lines with the
// sorted vertex indices of one hyperedge ("-" for an empty hyperedge).
// Lines starting with '#' are ignored.

Hypergraph read_hg(std::istream& in);
Hypergraph read_hg_file(const std::string& path);
void write_hg(std::ostream& out, const Hypergraph& h);
void write_hg_file(const std::string& path, const Hypergraph& h);
std::string to_hg_string(const Hypergraph& h);

/// Row-major array of "p/q" strings.
nlohmann::json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols);

/// {"n", "m", "S1", "S2"} with S1/S2 row-major arrays of "p/q" strings.
nlohmann::json witness_to_json(const IsoWitness& w);
IsoWitness witness_from_json(const nlohmann::json& j);
void write_witness_file(const std::string& path, const IsoWitness& w);
IsoWitness read_witness_file(const std::string& path);

nlohmann::json parameters_to_json(const PartitionParameters& p);
nlohmann::json partition_to_json(const EquitablePartition& p, const PartitionParameters& params);
/// "V<i>: ..." / "X<j>: ..." lines followed by v=, a=, D=, U= rows.
std::string partition_to_text(const EquitablePartition& p, const PartitionParameters& params);

nlohmann::json report_to_json(const InvariantReport& r);

}  // namespace fractiso
