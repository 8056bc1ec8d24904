// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gpc/metrics.hpp"
#include "gpc/numerics.hpp"
#include "gpc/poincare.hpp"
#include "gpc/spectral.hpp"
#include "test_support.hpp"

using namespace gpc;
using gpc::testing::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> body;
};

WeightedGraph family(const char* spec) { return generate_family(FamilySpec::parse(spec)); }

std::string fmt(const char* format, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

std::string fmt(const char* format, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

// Random (graph, proper Omega) instances shared by criteria 2 and 4.
struct OmegaInstance {
  WeightedGraph graph;
  VertexSubset omega;
};

std::vector<OmegaInstance> omega_instances() {
  Rng rng(2024);
  std::vector<OmegaInstance> out;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = gpc::testing::uniform_index(rng, 2, 10);
    auto g = gpc::testing::random_graph(rng, n);
    auto omega = gpc::testing::random_proper_subset(rng, n, 8);
    out.push_back({std::move(g), std::move(omega)});
  }
  return out;
}

Outcome metric_identities() {
  std::vector<WeightedGraph> graphs{family("path:2"), family("path:3"), family("complete:3"), family("star:4"),
                                    family("comb:2,3")};
  Rng rng(101);
  for (int i = 0; i < 100; ++i)
    graphs.push_back(gpc::testing::random_graph(rng, gpc::testing::uniform_index(rng, 2, 10)));

  double worst_chain = 0.0, worst_triangle = 0.0, worst_rprime = 0.0;
  for (const auto& g : graphs) {
    const std::size_t n = g.order();
    auto d = path_metric(g);
    auto r = resistance_metric(g);
    auto omega = gpc::testing::random_proper_subset(rng, n, n - 1);
    auto ro = restricted_metric(g, omega);
    auto rp = sup_restricted_metric(g);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        worst_chain = std::max({worst_chain, r(x, y) - d(x, y), ro(x, y) - r(x, y)});
        worst_rprime = std::max(worst_rprime, std::abs(rp(x, y) - r(x, y)));
      }
    worst_triangle = std::max({worst_triangle, d.max_triangle_violation(), r.max_triangle_violation(),
                               ro.max_triangle_violation()});
  }
  Outcome o;
  o.pass = worst_chain <= 1e-9 && worst_triangle <= 1e-9 && worst_rprime <= 1e-6;
  o.detail = std::to_string(graphs.size()) + " graphs; " +
             fmt("max domination excess %.2e, max triangle violation %.2e", worst_chain, worst_triangle) +
             fmt(", max |r'-r| %.2e", worst_rprime);
  return o;
}

Outcome char_inradius() {
  auto instances = omega_instances();
  double worst = 0.0, worst_oracle = 0.0;
  for (const auto& inst : instances) {
    auto ro = restricted_metric(inst.graph, inst.omega);
    worst = std::max(worst, std::abs(diameter(ro) - inradius(ro, inst.omega)));

    // Every QP entry against the support-enumeration oracle.
    auto q = laplacian_matrix(inst.graph).principal(inst.omega.indices());
    const auto& members = inst.omega.indices();
    const std::size_t n = inst.graph.order();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        if (!inst.omega.contains(x) && !inst.omega.contains(y)) continue;
        std::vector<double> c(members.size(), 0.0);
        for (std::size_t i = 0; i < members.size(); ++i) {
          if (members[i] == x) c[i] = 1.0;
          if (members[i] == y) c[i] = -1.0;
        }
        double v = active_set_oracle(q, c);
        for (auto& ci : c) ci = -ci;
        v = std::max(v, active_set_oracle(q, c));
        const double expected = v * v;
        worst_oracle = std::max(worst_oracle, std::abs(ro(x, y) - expected) / std::max(1.0, expected));
      }
  }
  Outcome o;
  o.pass = worst <= 1e-8 && worst_oracle <= 1e-6;
  o.detail = "50 instances; " + fmt("max |diam - inradius| %.2e, max QP/oracle rel. gap %.2e", worst, worst_oracle);
  return o;
}

Outcome lambda1_formula() {
  std::vector<std::pair<std::string, WeightedGraph>> graphs{{"P2", family("path:2")},
                                                            {"P3", family("path:3")},
                                                            {"K3", family("complete:3")},
                                                            {"star(4)", family("star:4")}};
  Rng rng(303);
  for (int i = 0; i < 10; ++i)
    graphs.emplace_back("tree" + std::to_string(i),
                        gpc::testing::random_tree(rng, gpc::testing::uniform_index(rng, 2, 8)));
  double worst = 0.0;
  std::string worst_name;
  for (const auto& [name, g] : graphs) {
    auto results = infimize_lambda1(g, kDefaultFloors);
    const double product = extrapolate_to_zero_floor(results) * best_constant_global(g);
    const double rel = std::abs(product - 4.0) / 4.0;
    if (rel >= worst) {
      worst = rel;
      worst_name = name;
    }
  }
  Outcome o;
  o.pass = worst <= 0.02;
  o.detail = std::to_string(graphs.size()) + " graphs; " + fmt("max |inf lambda1 * c_P - 4|/4 = %.2e", worst) +
             " (" + worst_name + ")";
  return o;
}

Outcome lambda0_formula() {
  auto instances = omega_instances();
  double worst = 0.0, worst_single = 0.0;
  int used = 0, singles = 0;
  for (const auto& inst : instances) {
    if (inst.omega.size() > 5) continue;
    ++used;
    auto results = infimize_lambda0_omega(inst.graph, inst.omega, kDefaultFloors);
    const double c = best_constant_omega(inst.graph, inst.omega);
    if (inst.omega.size() == 1) {
      ++singles;
      worst_single = std::max(worst_single, std::abs(results.front().value * c - 1.0));
    } else {
      worst = std::max(worst, std::abs(extrapolate_to_zero_floor(results) * c - 1.0));
    }
  }
  Outcome o;
  o.pass = worst <= 0.02 && worst_single <= 1e-10;
  o.detail = std::to_string(used) + " instances (" + std::to_string(singles) + " with |Omega|=1); " +
             fmt("max rel. error %.2e, singleton max error %.2e", worst, worst_single);
  return o;
}

Outcome eigenvalue_lower_bounds() {
  Rng rng(505);
  int violations = 0;
  double min_slack_a = INFINITY, min_slack_b = INFINITY;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = gpc::testing::uniform_index(rng, 2, 10);
    auto g = gpc::testing::random_graph(rng, n);
    const double lambda1 = eigenvalue_k(neumann_operator(g, uniform_measure(g)), 1);
    const double slack = lambda1 - 4.0 / diameter(path_metric(g));
    min_slack_a = std::min(min_slack_a, slack);
    if (slack < -1e-9) ++violations;
  }
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = gpc::testing::uniform_index(rng, 2, 10);
    auto g = gpc::testing::random_graph(rng, n);
    auto omega = gpc::testing::random_proper_subset(rng, n, n - 1);
    auto m = Measure::probability(gpc::testing::random_probability(rng, n), true);
    const double lambda = omega_operator(g, omega, m).spectrum().eigenvalues[0];
    const double bound = 1.0 / (inradius(path_metric(g), omega) * measure_of(m, omega));
    const double slack = lambda - bound;
    min_slack_b = std::min(min_slack_b, slack);
    if (slack < -1e-9) ++violations;
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = "400 instances; " + std::to_string(violations) + " violations; " +
             fmt("min slack %.3e (textbook), %.3e (finite measure)", min_slack_a, min_slack_b);
  return o;
}

void subsets_up_to(std::size_t n, std::size_t max_size, const std::function<void(const VertexSubset&)>& fn) {
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) idx.push_back(i);
    if (idx.size() <= max_size) fn(VertexSubset::from_indices(n, idx));
  }
}

double quantity(const VerificationReport& r, const std::string& name) {
  for (const auto& [k, v] : r.quantities)
    if (k == name) return v;
  return NAN;
}

Outcome higher_eigenvalues(std::string& info) {
  Rng rng(606);
  int checked = 0, failures = 0, literal_violations = 0;
  double min_slack = INFINITY;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = gpc::testing::uniform_index(rng, 3, 8);
    auto g = gpc::testing::random_graph(rng, n);
    auto m = Measure::probability(gpc::testing::random_probability(rng, n), true);
    subsets_up_to(n, std::min<std::size_t>(3, n - 2), [&](const VertexSubset& f) {
      auto r = higher_eigenvalue_bounds(g, m, f);
      ++checked;
      if (!r.pass) ++failures;
      min_slack = std::min(min_slack, r.slack);
      if (quantity(r, "lambda_X_minus_F") < quantity(r, "bound_a") - 1e-9) ++literal_violations;
    });
  }

  auto k3 = family("complete:3");
  auto r = higher_eigenvalue_bounds(k3, Measure::uniform(3), VertexSubset::from_indices(3, std::vector<std::size_t>{0}));
  const double lambda2 = quantity(r, "lambda_n_plus_1");
  const double bound_a = quantity(r, "bound_a");
  const bool equality = r.pass && std::abs(lambda2 - 9.0) <= 1e-8 && std::abs(bound_a - 9.0) <= 1e-8;

  info = "lambda_{X\\F} >= bound (a) fails on " + std::to_string(literal_violations) + " of " +
         std::to_string(checked) + " (graph, F) pairs; K3/uniform/F={v}: lambda_{X\\F} = " +
         fmt("%.6g", quantity(r, "lambda_X_minus_F")) + " < bound (a) = " + fmt("%.6g", bound_a) +
         ". Checked chain: lambda_{n+1} >= lambda_{X\\F} >= bound (b), lambda_{n+1} >= bound (a).";

  Outcome o;
  o.pass = failures == 0 && equality;
  o.detail = std::to_string(checked) + " (graph, F) pairs, " + std::to_string(failures) + " failures, " +
             fmt("min slack %.3e; K3 lambda2 = %.12g", min_slack, lambda2) + fmt(", bound (a) = %.12g", bound_a);
  return o;
}

Outcome quarter_inequality() {
  Rng rng(707);
  int violations = 0;
  double max_ratio = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = gpc::testing::uniform_index(rng, 2, 12);
    auto m = gpc::testing::random_probability(rng, n);
    auto f = gpc::testing::random_vector(rng, n, -10.0, 10.0);
    const double mean = weighted_mean(f, m);
    for (auto& x : f) x -= mean;
    const double v = variational_seminorm(f);
    const double lhs = weighted_square_norm(f, m);
    if (lhs > 0.25 * v * v + 1e-12 * std::max(1.0, v * v)) ++violations;
    if (v > 0) max_ratio = std::max(max_ratio, lhs / (v * v));
  }
  double worst_sharp = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = gpc::testing::uniform_index(rng, 2, 12);
    const double a = gpc::testing::uniform(rng, 0.1, 10.0);
    auto f = gpc::testing::random_vector(rng, n, -a, a);
    const std::size_t hi = gpc::testing::uniform_index(rng, 0, n - 1);
    std::size_t lo = gpc::testing::uniform_index(rng, 0, n - 2);
    if (lo >= hi) ++lo;
    f[hi] = a;
    f[lo] = -a;
    std::vector<double> m(n, 0.0);
    m[hi] = m[lo] = 0.5;
    const double v = variational_seminorm(f);
    worst_sharp = std::max(worst_sharp, std::abs(weighted_square_norm(f, m) - 0.25 * v * v) / std::max(1.0, v * v));
  }
  Outcome o;
  o.pass = violations == 0 && worst_sharp <= 1e-12;
  o.detail = "10000 samples, " + std::to_string(violations) + " violations, " +
             fmt("max ratio %.6f; 1000 sharpness cases, max gap %.2e", max_ratio, worst_sharp);
  return o;
}

Outcome comb_example() {
  double worst_inradius = 0.0, worst_rd = 0.0;
  bool diam_ok = true;
  for (int width = 3; width <= 8; ++width) {
    auto comb = generate_family("comb", std::vector<int>{width, 10});
    auto d = path_metric(comb);
    auto r = resistance_metric(comb);
    if (diameter(d) < width) diam_ok = false;
    for (int i = -width; i <= width; ++i) {
      std::vector<std::string> column;
      for (int k = 0; k <= 10; ++k) column.push_back(comb_label(i, k));
      auto omega = VertexSubset::from_labels(comb, column);
      worst_inradius = std::max(worst_inradius, inradius(d, omega));
    }
    for (std::size_t x = 0; x < comb.order(); ++x)
      for (std::size_t y = 0; y < comb.order(); ++y) worst_rd = std::max(worst_rd, std::abs(r(x, y) - d(x, y)));
  }
  Outcome o;
  o.pass = worst_inradius <= 2.0 && diam_ok && worst_rd <= 1e-9;
  o.detail = fmt("max column inradius %.6f, max |r-d| %.2e", worst_inradius, worst_rd) +
             (diam_ok ? ", diam_d >= N for N=3..8" : ", diam_d < N somewhere");
  return o;
}

Outcome numeric_kernels() {
  Rng rng(909);
  double worst_qp = 0.0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = gpc::testing::uniform_index(rng, 1, 8);
    auto q = gpc::testing::random_spd(rng, n, gpc::testing::uniform(rng, 0.01, 1.0));
    auto c = gpc::testing::random_vector(rng, n);
    const double v = max_linear_over_nonneg_ellipsoid(q, c).value;
    const double oracle = active_set_oracle(q, c);
    worst_qp = std::max(worst_qp, std::abs(v - oracle) / std::max(oracle, 1e-300));
    if (oracle == 0.0) worst_qp = std::max(worst_qp, std::abs(v));
  }
  double worst_eig = 0.0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = gpc::testing::uniform_index(rng, 1, 4);
    auto a = gpc::testing::random_symmetric(rng, n, 2.0);
    auto s = symmetric_eigen(a, false);
    auto roots = gpc::testing::charpoly_eigenvalues(a);
    if (roots.size() != n) {
      worst_eig = INFINITY;
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) worst_eig = std::max(worst_eig, std::abs(roots[k] - s.eigenvalues[k]));
  }
  Outcome o;
  o.pass = worst_qp <= 1e-6 && worst_eig <= 1e-10;
  o.detail = fmt("QP vs oracle max rel. gap %.2e over 500; Jacobi vs charpoly max gap %.2e over 500", worst_qp,
                 worst_eig);
  return o;
}

}  // namespace

int main() {
  std::string info6;
  const std::vector<Criterion> criteria{
      {1, "metric identities (r <= d, r_Omega <= r, triangle, r' = r)", 60.0, metric_identities},
      {2, "diam of r_Omega equals its inradius of Omega", 120.0, char_inradius},
      {3, "inf lambda1 * c_P = 4", 300.0, lambda1_formula},
      {4, "inf lambda0(Omega) * c_P^Omega = 1", 0.0, lambda0_formula},
      {5, "eigenvalue lower bounds via d", 0.0, eigenvalue_lower_bounds},
      {6, "higher eigenvalue bounds", 0.0, [&] { return higher_eigenvalues(info6); }},
      {7, "zero-mean quarter inequality", 0.0, quarter_inequality},
      {8, "comb: bounded tooth inradius, growing diameter", 0.0, comb_example},
      {9, "numeric kernels", 0.0, numeric_kernels},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0 && secs > c.budget_seconds) {
      o.pass = false;
      o.detail += fmt("; over the %.0f s budget", c.budget_seconds);
    }
    all = all && o.pass;
    std::printf("%s criterion %d: %s | %s | %.2f s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), secs);
    if (c.id == 6 && !info6.empty()) std::printf("INFO criterion 6: %s\n", info6.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
