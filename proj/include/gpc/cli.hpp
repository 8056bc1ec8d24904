#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gpc/poincare.hpp"
#include "json.hpp"

namespace gpc::cli {

enum class OutputFormat { table, json };

struct RunConfig {
  std::string command;
  std::optional<std::string> graph_path;
  std::optional<std::string> family;
  /// Path to a `label mass` file, or "uniform".
  std::string measure = "uniform";
  std::vector<std::string> omega;
  std::vector<std::string> f_set;
  std::vector<double> floors = kDefaultFloors;
  std::optional<std::string> exhaust_family;
  std::size_t n_max = 10;
  std::vector<std::string> theorems;
  bool all_theorems = false;
  bool with_r_prime = false;
  std::size_t samples = 1000;
  OutputFormat format = OutputFormat::table;
  std::optional<std::string> out_path;
  std::uint64_t seed = 1;
};

/// Splits a comma-separated label list, keeping commas inside parentheses
/// (comb labels look like "(0,1)").
std::vector<std::string> split_labels(const std::string& text);

nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const PseudometricMatrix& pm);

/// Loads the graph named by the config. Throws Error(ParseError) unless
/// exactly one of --graph and --family is present.
WeightedGraph load_graph(const RunConfig& config);

/// Each command writes its report to `out` and returns the exit status:
/// 0 on success, 1 when a verification fails.
int cmd_metrics(const RunConfig& config, std::ostream& out);
int cmd_constants(const RunConfig& config, std::ostream& out);
int cmd_spectrum(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_generate(const RunConfig& config, std::ostream& out);

/// Full command line entry point. Exit status: 0 success, 1 failed
/// verification, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gpc::cli
