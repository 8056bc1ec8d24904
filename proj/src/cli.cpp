#include "gpc/cli.hpp"

#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "gpc/error.hpp"
#include "gpc/io.hpp"
#include "gpc/metrics.hpp"
#include "gpc/spectral.hpp"

namespace gpc::cli {

using nlohmann::json;

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += ch;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

json to_json(const VerificationReport& r) {
  json q = json::object();
  for (const auto& [name, value] : r.quantities) q[name] = value;
  return {{"theorem", r.theorem},   {"relation", r.relation}, {"lhs", r.lhs},
          {"rhs", r.rhs},           {"residual", r.residual}, {"tolerance", r.tolerance},
          {"slack", r.slack},       {"pass", r.pass},         {"quantities", std::move(q)},
          {"notes", r.notes}};
}

json to_json(const PseudometricMatrix& pm) { return pm.to_rows(); }

WeightedGraph load_graph(const RunConfig& config) {
  if (config.graph_path.has_value() == config.family.has_value()) {
    throw Error(ErrorCode::ParseError, "give exactly one of --graph and --family");
  }
  if (config.graph_path) return io::read_graph_file(*config.graph_path);
  return generate_family(FamilySpec::parse(*config.family));
}

namespace {

std::vector<std::string> labels_of(const WeightedGraph& g, const VertexSubset& s) {
  std::vector<std::string> out;
  for (std::size_t x : s.indices()) out.push_back(g.label(x));
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out;
}

// Masses per vertex. With `omega`, only Omega's vertices need an entry and
// the others are filled with 1 (ignored by the Omega operator).
std::vector<double> load_masses(const RunConfig& config, const WeightedGraph& g, const VertexSubset* omega) {
  const std::size_t n = g.order();
  if (config.measure == "uniform") return std::vector<double>(n, 1.0 / static_cast<double>(n));
  auto table = io::read_mass_table_file(config.measure);
  std::vector<double> masses(n, 1.0);
  std::vector<bool> seen(n, false);
  for (const auto& [label, mass] : table) {
    auto idx = g.find(label);
    if (!idx) throw Error(ErrorCode::ParseError, "measure names unknown vertex '" + label + "'");
    masses[*idx] = mass;
    seen[*idx] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    const bool needed = omega == nullptr || omega->contains(x);
    if (needed && !seen[x]) throw Error(ErrorCode::ParseError, "no mass given for vertex '" + g.label(x) + "'");
  }
  return masses;
}

void print_matrix(std::ostream& out, const WeightedGraph& g, const PseudometricMatrix& pm) {
  out << to_string(pm.kind()) << ":\n";
  std::size_t width = 10;
  for (const auto& l : g.labels()) width = std::max(width, l.size() + 2);
  out << std::setw(static_cast<int>(width)) << "";
  for (const auto& l : g.labels()) out << std::setw(static_cast<int>(width)) << l;
  out << '\n';
  for (std::size_t x = 0; x < g.order(); ++x) {
    out << std::setw(static_cast<int>(width)) << g.label(x);
    for (std::size_t y = 0; y < g.order(); ++y) out << std::setw(static_cast<int>(width)) << pm(x, y);
    out << '\n';
  }
}

void print_report(std::ostream& out, const VerificationReport& r) {
  out << (r.pass ? "PASS " : "FAIL ") << r.theorem << ": lhs " << r.lhs << ' ' << r.relation << " rhs " << r.rhs
      << "  (residual " << r.residual << ", tol " << r.tolerance << ")\n";
  for (const auto& [name, value] : r.quantities) out << "    " << name << " = " << value << '\n';
  for (const auto& note : r.notes) out << "    " << note << '\n';
}

bool needs_omega(const std::string& id) {
  return id == "spectral-theory-omega" || id == "char-c-null" || id == "char-inradius" || id == "finite-measure";
}

}  // namespace

int cmd_metrics(const RunConfig& config, std::ostream& out) {
  auto g = load_graph(config);
  auto d = path_metric(g);
  auto r = resistance_metric(g);
  json j{{"graph", io::graph_to_json(g)}};
  j["metrics"] = {{"d", to_json(d)}, {"r", to_json(r)}};
  j["diam"] = {{"d", diameter(d)}, {"r", diameter(r)}};
  j["inradius"] = json::object();

  std::optional<PseudometricMatrix> r_omega;
  std::optional<VertexSubset> omega;
  if (!config.omega.empty()) {
    omega = VertexSubset::from_labels(g, config.omega);
    r_omega = restricted_metric(g, *omega);
    j["omega"] = labels_of(g, *omega);
    j["metrics"]["r_omega"] = to_json(*r_omega);
    j["diam"]["r_omega"] = diameter(*r_omega);
    j["inradius"] = {{"d", inradius(d, *omega)}, {"r", inradius(r, *omega)}, {"r_omega", inradius(*r_omega, *omega)}};
  }
  std::optional<PseudometricMatrix> r_prime;
  if (config.with_r_prime) {
    r_prime = sup_restricted_metric(g);
    j["metrics"]["r_prime"] = to_json(*r_prime);
    j["diam"]["r_prime"] = diameter(*r_prime);
  }

  if (config.format == OutputFormat::json) {
    out << j.dump(2) << '\n';
    return 0;
  }
  out << std::setprecision(10);
  out << "vertices: " << g.order() << ", edges: " << g.edge_count() << '\n';
  print_matrix(out, g, d);
  print_matrix(out, g, r);
  if (r_omega) print_matrix(out, g, *r_omega);
  if (r_prime) print_matrix(out, g, *r_prime);
  out << "diam_d = " << diameter(d) << "\ndiam_r = " << diameter(r) << '\n';
  if (r_omega) {
    out << "omega = {" << join(config.omega) << "}\n";
    out << "diam_r_omega = " << diameter(*r_omega) << '\n';
    out << "inr_d(omega) = " << inradius(d, *omega) << "\ninr_r(omega) = " << inradius(r, *omega)
        << "\ninr_r_omega(omega) = " << inradius(*r_omega, *omega) << '\n';
  }
  if (r_prime) out << "diam_r_prime = " << diameter(*r_prime) << '\n';
  return 0;
}

int cmd_constants(const RunConfig& config, std::ostream& out) {
  json j = json::object();
  std::ostringstream table;
  table << std::setprecision(10);

  if (config.graph_path || config.family) {
    auto g = load_graph(config);
    std::vector<VertexSubset> omegas;
    if (!config.omega.empty()) omegas.push_back(VertexSubset::from_labels(g, config.omega));
    auto pc = compute_constants(g, omegas);
    j["graph"] = io::graph_to_json(g);
    j["c_P"] = pc.c_p;
    j["c_P_omega"] = json::array();
    table << "c_P = " << pc.c_p << '\n';
    for (const auto& [omega, value] : pc.c_p_omega) {
      j["c_P_omega"].push_back({{"omega", labels_of(g, omega)}, {"value", value}});
      table << "c_P^omega {" << join(labels_of(g, omega)) << "} = " << value << '\n';
    }
  } else if (!config.exhaust_family) {
    throw Error(ErrorCode::ParseError, "give --graph, --family or --exhaust");
  }

  if (config.exhaust_family) {
    auto ex = best_constant_zero_exhaustion(FamilySpec::parse(*config.exhaust_family), config.n_max);
    json steps = json::array();
    table << "exhaustion " << ex.family << ":\n";
    for (const auto& s : ex.steps) {
      steps.push_back({{"n", s.n}, {"c_P_omega", s.constant}, {"host_order", s.host_order}, {"omega_size", s.omega_size}});
      table << "  n = " << s.n << "  c_P^Omega_n = " << s.constant << "  (|Omega_n| = " << s.omega_size
            << ", host " << s.host_order << ")\n";
    }
    table << "  verdict: " << to_string(ex.verdict) << '\n';
    j["exhaustion"] = {{"family", ex.family}, {"steps", steps}, {"verdict", to_string(ex.verdict)}};
  }

  if (config.format == OutputFormat::json) out << j.dump(2) << '\n';
  else out << table.str();
  return 0;
}

int cmd_spectrum(const RunConfig& config, std::ostream& out) {
  auto g = load_graph(config);
  std::optional<VertexSubset> omega;
  if (!config.omega.empty()) omega = VertexSubset::from_labels(g, config.omega);
  auto masses = load_masses(config, g, omega ? &*omega : nullptr);
  auto op = omega ? omega_operator(g, *omega, masses) : neumann_operator(g, masses);
  auto spectrum = op.spectrum(false);

  json measure = json::object();
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!omega || omega->contains(x)) measure[g.label(x)] = masses[x];
  json j{{"graph", io::graph_to_json(g)},
         {"operator", omega ? "omega" : "neumann"},
         {"measure", measure},
         {"eigenvalues", spectrum.eigenvalues}};
  if (omega) j["omega"] = labels_of(g, *omega);

  if (config.format == OutputFormat::json) {
    out << j.dump(2) << '\n';
    return 0;
  }
  out << std::setprecision(12) << (omega ? "omega operator" : "neumann operator") << " eigenvalues:\n";
  for (std::size_t k = 0; k < spectrum.dim(); ++k) out << "  lambda_" << k << " = " << spectrum.eigenvalues[k] << '\n';
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  auto g = load_graph(config);
  const std::size_t n = g.order();

  VerifyOptions base;
  base.floors = config.floors;
  base.seed = config.seed;
  base.samples = config.samples;
  if (config.measure != "uniform") base.measure = Measure::probability(load_masses(config, g, nullptr));

  std::vector<VertexSubset> omegas;
  if (!config.omega.empty()) omegas.push_back(VertexSubset::from_labels(g, config.omega));
  else
    for (std::size_t p = 0; p < n; ++p) omegas.push_back(VertexSubset::all_but(n, p));

  std::vector<VertexSubset> f_sets;
  if (!config.f_set.empty()) f_sets.push_back(VertexSubset::from_labels(g, config.f_set));
  else if (n >= 3)
    for (std::size_t x = 0; x < n; ++x) f_sets.push_back(VertexSubset::from_indices(n, std::vector<std::size_t>{x}));

  std::vector<std::string> ids = config.all_theorems ? theorem_ids() : config.theorems;
  if (ids.empty()) throw Error(ErrorCode::UnknownTheoremId, "name a theorem or pass --all");

  std::vector<VerificationReport> reports;
  for (const auto& id : ids) {
    if (needs_omega(id)) {
      for (const auto& omega : omegas) {
        auto opts = base;
        opts.omega = omega;
        auto r = verify_theorem(g, id, opts);
        r.notes.push_back("omega={" + join(labels_of(g, omega)) + "}");
        reports.push_back(std::move(r));
      }
    } else if (id == "higher-eigenvalues") {
      for (const auto& f : f_sets) {
        auto opts = base;
        opts.f_set = f;
        auto r = verify_theorem(g, id, opts);
        r.notes.push_back("F={" + join(labels_of(g, f)) + "}");
        reports.push_back(std::move(r));
      }
    } else {
      reports.push_back(verify_theorem(g, id, base));
    }
  }

  bool all_pass = true;
  json j = json::array();
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    j.push_back(to_json(r));
  }
  if (config.format == OutputFormat::json) {
    out << j.dump(2) << '\n';
  } else {
    out << std::setprecision(12);
    for (const auto& r : reports) print_report(out, r);
    out << (all_pass ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all_pass ? 0 : 1;
}

int cmd_generate(const RunConfig& config, std::ostream& out) {
  if (!config.family) throw Error(ErrorCode::ParseError, "generate needs --family");
  auto g = generate_family(FamilySpec::parse(*config.family));
  out << "# " << *config.family << ": " << g.order() << " vertices, " << g.edge_count() << " edges\n";
  io::write_graph(out, g);
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric and spectral invariants of weighted graphs"};
  app.require_subcommand(1);
  RunConfig config;
  std::string omega_text, f_text, floors_text;
  bool json_output = false;

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--graph", config.graph_path, "edge list file: label label weight");
    sub->add_option("--family", config.family, "generated family, e.g. path:3, comb:2,3");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json_output, "emit JSON");
    sub->add_option("--out", config.out_path, "write output to this file");
  };

  auto* metrics = app.add_subcommand("metrics", "path, resistance and restricted metrics");
  add_source(metrics);
  add_common(metrics);
  metrics->add_option("--omega", omega_text, "comma-separated labels of Omega");
  metrics->add_flag("--rprime", config.with_r_prime, "also compute r' (sup of r_Omega)");

  auto* constants = app.add_subcommand("constants", "Poincare constants");
  add_source(constants);
  add_common(constants);
  constants->add_option("--omega", omega_text, "comma-separated labels of Omega");
  constants->add_option("--exhaust", config.exhaust_family, "family for the exhaustion sequence");
  constants->add_option("--nmax", config.n_max, "number of truncations");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the Neumann or Omega operator");
  add_source(spectrum);
  add_common(spectrum);
  spectrum->add_option("--omega", omega_text, "comma-separated labels of Omega");
  spectrum->add_option("--measure", config.measure, "measure file or 'uniform'");

  auto* verify = app.add_subcommand("verify", "check theorems numerically");
  add_source(verify);
  add_common(verify);
  verify->add_option("theorems", config.theorems, "theorem ids");
  verify->add_flag("--all", config.all_theorems, "run every theorem");
  verify->add_option("--omega", omega_text, "comma-separated labels of Omega");
  verify->add_option("--f", f_text, "comma-separated labels of F");
  verify->add_option("--measure", config.measure, "measure file or 'uniform'");
  verify->add_option("--floors", floors_text, "comma-separated mass floors");
  verify->add_option("--seed", config.seed, "optimizer seed");
  verify->add_option("--samples", config.samples, "random samples for sampled checks");

  auto* generate = app.add_subcommand("generate", "write a generated family as an edge list");
  add_common(generate);
  generate->add_option("--family", config.family, "family spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    config.omega = split_labels(omega_text);
    config.f_set = split_labels(f_text);
    if (!floors_text.empty()) {
      config.floors.clear();
      for (const auto& tok : split_labels(floors_text)) config.floors.push_back(std::stod(tok));
    }
    config.format = json_output ? OutputFormat::json : OutputFormat::table;
    config.command = app.get_subcommands().front()->get_name();

    std::ofstream file;
    std::ostream* target = &out;
    if (config.out_path) {
      file.open(*config.out_path);
      if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + *config.out_path + "'");
      target = &file;
    }

    if (config.command == "metrics") return cmd_metrics(config, *target);
    if (config.command == "constants") return cmd_constants(config, *target);
    if (config.command == "spectrum") return cmd_spectrum(config, *target);
    if (config.command == "verify") return cmd_verify(config, *target);
    return cmd_generate(config, *target);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace gpc::cli
