#include "fractiso/io.hpp"

#include <fstream>
#include <sstream>

#include "fractiso/error.hpp"

namespace fractiso {

namespace {

bool skip_line(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::size_t parse_index(const std::string& token, std::size_t line_no) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" + token + "'");
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw InputError("line " + std::to_string(line_no) + ": integer out of range");
  }
}

template <typename T>
std::string join(const std::vector<T>& xs, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string rows_text(const std::vector<std::vector<std::size_t>>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? ",[" : "[") + join(m[i], ",") + "]";
  return out + "]";
}

}  // namespace

Hypergraph read_hg(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(t);
    if (!have_header) {
      if (parts.size() != 2) throw InputError("line " + std::to_string(line_no) + ": header must be 'n m'");
      n = parse_index(parts[0], line_no);
      m = parse_index(parts[1], line_no);
      have_header = true;
      continue;
    }
    if (edges.size() == m) throw InputError("line " + std::to_string(line_no) + ": more hyperedges than declared");
    Edge e;
    if (!(parts.size() == 1 && parts[0] == "-")) {
      for (const auto& p : parts) e.push_back(parse_index(p, line_no));
      for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i] <= e[i - 1])
          throw InputError("line " + std::to_string(line_no) + ": hyperedge indices must be strictly increasing");
    }
    edges.push_back(std::move(e));
  }
  if (!have_header) throw InputError("missing 'n m' header");
  if (edges.size() != m)
    throw InputError("declared " + std::to_string(m) + " hyperedges, found " + std::to_string(edges.size()));
  return Hypergraph::make(n, std::move(edges));
}

Hypergraph read_hg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return read_hg(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_hg(std::ostream& out, const Hypergraph& h) {
  out << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const auto& e : h.edges()) out << (e.empty() ? std::string("-") : join(e, " ")) << '\n';
}

void write_hg_file(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_hg(out, h);
}

std::string to_hg_string(const Hypergraph& h) {
  std::ostringstream os;
  write_hg(os, h);
  return os.str();
}

nlohmann::json matrix_to_json(const RationalMatrix& m) {
  auto arr = nlohmann::json::array();
  for (const auto& x : m.data()) arr.push_back(to_string(x));
  return arr;
}

RationalMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows * cols)
    throw InputError("matrix must be a row-major array of " + std::to_string(rows * cols) + " entries");
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = j[r * cols + c];
      if (!e.is_string()) throw InputError("matrix entries must be 'p/q' strings");
      try {
        m(r, c) = parse_rational(e.get<std::string>());
      } catch (const std::invalid_argument& err) {
        throw InputError(err.what());
      }
    }
  }
  return m;
}

nlohmann::json witness_to_json(const IsoWitness& w) {
  return {{"n", w.S1.rows()}, {"m", w.S2.rows()}, {"S1", matrix_to_json(w.S1)}, {"S2", matrix_to_json(w.S2)}};
}

IsoWitness witness_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto m = j.at("m").get<std::size_t>();
    return {matrix_from_json(j.at("S1"), n, n), matrix_from_json(j.at("S2"), m, m)};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed witness: ") + e.what());
  }
}

void write_witness_file(const std::string& path, const IsoWitness& w) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << witness_to_json(w).dump(2) << '\n';
}

IsoWitness read_witness_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return witness_from_json(j);
}

nlohmann::json parameters_to_json(const PartitionParameters& p) {
  return {{"v", p.v}, {"a", p.a}, {"D", p.D}, {"U", p.U}};
}

nlohmann::json partition_to_json(const EquitablePartition& p, const PartitionParameters& params) {
  return {{"vertex_classes", p.vertex_classes}, {"edge_classes", p.edge_classes}, {"parameters", parameters_to_json(params)}};
}

std::string partition_to_text(const EquitablePartition& p, const PartitionParameters& params) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.vertex_classes.size(); ++i) os << 'V' << i << ": " << join(p.vertex_classes[i], " ") << '\n';
  for (std::size_t j = 0; j < p.edge_classes.size(); ++j) os << 'X' << j << ": " << join(p.edge_classes[j], " ") << '\n';
  os << "v=[" << join(params.v, ",") << "]\n";
  os << "a=[" << join(params.a, ",") << "]\n";
  os << "D=" << rows_text(params.D) << '\n';
  os << "U=" << rows_text(params.U) << '\n';
  return os.str();
}

nlohmann::json report_to_json(const InvariantReport& r) {
  auto arr = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json row{{"name", e.name}, {"value", e.value.str()}, {"provenance", e.provenance}};
    if (!e.value.is_finite()) row["reason"] = e.value.reason();
    arr.push_back(std::move(row));
  }
  return {{"invariants", arr}};
}

}  // namespace fractiso
