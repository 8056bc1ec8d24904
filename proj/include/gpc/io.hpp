#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "gpc/graph.hpp"
#include "json.hpp"

namespace gpc::io {

/// Reads `label label weight` lines; `#` starts a comment, blank lines are
/// skipped. Throws Error(ParseError) with the line number on malformed input,
/// and the build_graph errors for invalid graphs.
std::vector<Edge> parse_edges(std::istream& in);
WeightedGraph read_graph(std::istream& in);
WeightedGraph read_graph_file(const std::filesystem::path& path);

void write_graph(std::ostream& out, const WeightedGraph& g);

/// Reads `label mass` lines into a table; duplicate labels are a ParseError.
std::map<std::string, double> read_mass_table(std::istream& in);
std::map<std::string, double> read_mass_table_file(const std::filesystem::path& path);

/// Reads `label mass` lines. Every vertex of `g` must be listed exactly once.
/// With `probability` set the masses must sum to one (or are normalized when
/// `normalize` is also set).
Measure read_measure(std::istream& in, const WeightedGraph& g, bool probability = true,
                     bool normalize = false);
Measure read_measure_file(const std::filesystem::path& path, const WeightedGraph& g,
                          bool probability = true, bool normalize = false);

/// {"vertices": [...], "edges": [[u, v, w], ...]} in internal (sorted) order.
nlohmann::json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const nlohmann::json& j);

}  // namespace gpc::io
