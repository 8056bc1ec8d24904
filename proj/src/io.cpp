#include "gpc/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include "gpc/error.hpp"

namespace gpc::io {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> tokens;
  for (std::string tok; ss >> tok;) tokens.push_back(tok);
  return tokens;
}

double parse_number(const std::string& tok, std::size_t line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": '" + tok + "' is not a number");
  }
  return value;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

std::vector<Edge> parse_edges(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                             ": expected 'label label weight'");
    }
    edges.push_back({tokens[0], tokens[1], parse_number(tokens[2], line_no)});
  }
  return edges;
}

WeightedGraph read_graph(std::istream& in) {
  auto edges = parse_edges(in);
  return build_graph(edges);
}

WeightedGraph read_graph_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  auto old = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& e : g.labeled_edges()) out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
  out.precision(old);
}

std::map<std::string, double> read_mass_table(std::istream& in) {
  std::map<std::string, double> table;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'label mass'");
    }
    if (!table.emplace(tokens[0], parse_number(tokens[1], line_no)).second) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": vertex '" + tokens[0] + "' listed twice");
    }
  }
  return table;
}

std::map<std::string, double> read_mass_table_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_mass_table(in);
}

Measure read_measure(std::istream& in, const WeightedGraph& g, bool probability, bool normalize) {
  auto table = read_mass_table(in);
  std::vector<double> masses(g.order(), 0.0);
  for (const auto& [label, mass] : table) {
    auto idx = g.find(label);
    if (!idx) throw Error(ErrorCode::ParseError, "measure names unknown vertex '" + label + "'");
    masses[*idx] = mass;
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!table.contains(g.label(x))) {
      throw Error(ErrorCode::ParseError, "no mass given for vertex '" + g.label(x) + "'");
    }
  }
  return probability ? Measure::probability(std::move(masses), normalize)
                     : Measure::finite(std::move(masses));
}

Measure read_measure_file(const std::filesystem::path& path, const WeightedGraph& g,
                          bool probability, bool normalize) {
  auto in = open(path);
  return read_measure(in, g, probability, normalize);
}

nlohmann::json graph_to_json(const WeightedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.labeled_edges()) edges.push_back({e.u, e.v, e.weight});
  return {{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

WeightedGraph graph_from_json(const nlohmann::json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      edges.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>(), e.at(2).get<double>()});
    }
    return build_graph(edges);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("graph JSON: ") + ex.what());
  }
}

}  // namespace gpc::io
