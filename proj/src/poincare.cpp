#include "gpc/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "gpc/error.hpp"
#include "gpc/numerics.hpp"
#include "gpc/spectral.hpp"

namespace gpc {

double best_constant_global(const WeightedGraph& g) { return diameter(resistance_metric(g)); }

double best_constant_omega(const WeightedGraph& g, const VertexSubset& omega) {
  auto rm = restricted_metric(g, omega);
  const double diam = diameter(rm);
  const double inr = inradius(rm, omega);
  if (std::abs(diam - inr) > 1e-8) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "r_omega diameter " << diam << " differs from inradius " << inr;
    throw Error(ErrorCode::InternalIdentityViolation, msg.str());
  }
  return diam;
}

std::string_view to_string(ExhaustionVerdict verdict) {
  switch (verdict) {
    case ExhaustionVerdict::converging: return "converging";
    case ExhaustionVerdict::growing: return "growing";
    case ExhaustionVerdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

constexpr int kPad = 2;

struct Truncation {
  WeightedGraph host;
  std::vector<std::string> omega_labels;
};

Truncation truncate(const FamilySpec& family, int n) {
  std::vector<std::string> labels;
  auto num = [](int i) { return std::to_string(i); };
  if (family.name == "path") {
    for (int i = 0; i <= n; ++i) labels.push_back(num(i));
    return {generate_family("path", std::vector<int>{n + 1 + kPad}), labels};
  }
  if (family.name == "geometric_halfline") {
    for (int i = 0; i <= n; ++i) labels.push_back(num(i));
    return {generate_family("geometric_halfline", std::vector<int>{n + kPad}), labels};
  }
  if (family.name == "star") {
    labels.push_back("center");
    for (int i = 1; i <= n; ++i) labels.push_back("leaf" + num(i));
    return {generate_family("star", std::vector<int>{n + 1 + kPad}), labels};
  }
  if (family.name == "comb") {
    if (family.params.size() > 1) throw Error(ErrorCode::BadFamily, "comb exhaustion takes at most a depth");
    const int depth = family.params.empty() ? n : family.params[0];
    if (depth < 0) throw Error(ErrorCode::BadFamily, "negative comb depth");
    for (int i = -n; i <= n; ++i)
      for (int k = 0; k <= depth; ++k) labels.push_back(comb_label(i, k));
    return {generate_family("comb", std::vector<int>{n + kPad, depth + kPad}), labels};
  }
  throw Error(ErrorCode::BadFamily, "family '" + family.name + "' has no nested exhaustion");
}

}  // namespace

ExhaustionResult best_constant_zero_exhaustion(const FamilySpec& family, std::size_t n_max) {
  if (n_max == 0) throw Error(ErrorCode::BadParams, "n_max must be at least 1");
  ExhaustionResult out;
  out.family = family.to_string();
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto t = truncate(family, static_cast<int>(n));
    auto omega = VertexSubset::from_labels(t.host, t.omega_labels);
    out.steps.push_back({n, best_constant_omega(t.host, omega), t.host.order(), omega.size()});
  }
  if (out.steps.size() >= 2) {
    const double last = out.steps.back().constant;
    const double prev = out.steps[out.steps.size() - 2].constant;
    out.verdict = (last - prev < 1e-4) ? ExhaustionVerdict::converging : ExhaustionVerdict::growing;
  }
  return out;
}

PoincareConstants compute_constants(const WeightedGraph& g, std::span<const VertexSubset> omegas) {
  PoincareConstants pc;
  pc.c_p = best_constant_global(g);
  for (const auto& omega : omegas) pc.c_p_omega.emplace_back(omega, best_constant_omega(g, omega));
  return pc;
}

// ---------------------------------------------------------------------------

namespace {

template <class Objective>
std::vector<FloorResult> infimize(Objective objective, std::size_t dim, std::span<const double> floors,
                                  std::uint64_t seed) {
  std::vector<double> order(floors.begin(), floors.end());
  std::sort(order.begin(), order.end(), std::greater<>());
  std::vector<FloorResult> out;
  for (double floor : order) {
    SimplexOptions opts;
    opts.floor = floor;
    opts.seed = seed;
    if (!out.empty()) opts.extra_starts.push_back(out.back().measure);
    auto res = minimize_over_simplex(objective, dim, opts);
    out.push_back({floor, std::move(res.measure), res.value});
  }
  return out;
}

}  // namespace

std::vector<FloorResult> infimize_lambda1(const WeightedGraph& g, std::span<const double> floors,
                                          std::uint64_t seed) {
  auto objective = [&g](std::span<const double> m) { return eigenvalue_k(neumann_operator(g, m), 1); };
  return infimize(objective, g.order(), floors, seed);
}

std::vector<FloorResult> infimize_lambda0_omega(const WeightedGraph& g, const VertexSubset& omega,
                                                std::span<const double> floors, std::uint64_t seed) {
  omega.require_proper(g.order());
  const auto& members = omega.indices();
  auto objective = [&](std::span<const double> m_omega) {
    std::vector<double> masses(g.order(), 1.0);
    for (std::size_t a = 0; a < members.size(); ++a) masses[members[a]] = m_omega[a];
    return eigenvalue_k(omega_operator(g, omega, masses), 0);
  };
  return infimize(objective, members.size(), floors, seed);
}

double extrapolate_to_zero_floor(std::span<const FloorResult> results) {
  if (results.empty()) throw Error(ErrorCode::BadParams, "no floor results to extrapolate");
  if (results.size() == 1) return results.front().value;
  const double k = static_cast<double>(results.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : results) {
    sx += r.floor;
    sy += r.value;
    sxx += r.floor * r.floor;
    sxy += r.floor * r.value;
  }
  const double denom = k * sxx - sx * sx;
  if (denom <= 0.0) return sy / k;
  const double slope = (k * sxy - sx * sy) / denom;
  return (sy - slope * sx) / k;
}

std::vector<double> extremal_function(const WeightedGraph& g) {
  auto r = resistance_metric(g);
  std::size_t bx = 0, by = 1;
  double best = -1.0;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < x; ++y)
      if (r(x, y) > best) {
        best = r(x, y);
        bx = x;
        by = y;
      }
  auto f = harmonic_potential(g, bx, by);
  auto [lo, hi] = std::minmax_element(f.begin(), f.end());
  const double shift = 0.5 * (*lo + *hi);
  for (double& v : f) v -= shift;
  return f;
}

double quarter_ratio(std::span<const double> f, std::span<const double> masses) {
  const double v = variational_seminorm(f);
  if (v == 0.0) return 0.0;
  return weighted_square_norm(f, masses) / (v * v);
}

// ---------------------------------------------------------------------------

namespace {

void finish(VerificationReport& r) { r.pass = r.residual <= r.tolerance; }

// lhs >= rhs with absolute slack tolerance.
VerificationReport inequality(std::string theorem, double lhs, double rhs, double tol = 1e-9) {
  VerificationReport r;
  r.theorem = std::move(theorem);
  r.relation = ">=";
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = lhs - rhs;
  r.residual = std::max(0.0, rhs - lhs);
  r.tolerance = tol;
  finish(r);
  return r;
}

const VertexSubset& require_omega(const WeightedGraph& g, const VerifyOptions& o) {
  if (!o.omega) throw Error(ErrorCode::OmegaNotProper, "theorem needs a subset Omega");
  o.omega->require_proper(g.order());
  return *o.omega;
}

Measure measure_or_uniform(const WeightedGraph& g, const VerifyOptions& o) {
  if (!o.measure) return uniform_measure(g);
  if (o.measure->size() != g.order()) throw Error(ErrorCode::LengthMismatch, "measure size");
  return *o.measure;
}

std::string floors_note(std::span<const FloorResult> results) {
  std::ostringstream s;
  s.precision(12);
  s << "floors:";
  for (const auto& r : results) s << ' ' << r.floor << "->" << r.value;
  return s.str();
}

VerificationReport verify_thm_computing(const WeightedGraph& g, const VerifyOptions& o) {
  const double c_p = best_constant_global(g);
  auto results = infimize_lambda1(g, o.floors, o.seed);
  VerificationReport r;
  r.theorem = "thm-computing";
  r.relation = "==";
  r.lhs = 4.0 / c_p;
  r.rhs = extrapolate_to_zero_floor(results);
  r.residual = std::abs(r.lhs - r.rhs) / r.lhs;
  r.slack = r.rhs - r.lhs;
  r.tolerance = 0.02;
  r.quantities = {{"c_P", c_p}, {"lambda1_at_smallest_floor", results.back().value}};
  r.notes.push_back(floors_note(results));
  finish(r);
  return r;
}

VerificationReport verify_spectral_omega(const WeightedGraph& g, const VerifyOptions& o) {
  const auto& omega = require_omega(g, o);
  const double c_omega = best_constant_omega(g, omega);
  auto results = infimize_lambda0_omega(g, omega, o.floors, o.seed);
  VerificationReport r;
  r.theorem = "spectral-theory-omega";
  r.relation = "==";
  r.lhs = 1.0 / c_omega;
  r.rhs = omega.size() == 1 ? results.front().value : extrapolate_to_zero_floor(results);
  r.residual = std::abs(r.lhs - r.rhs) / r.lhs;
  r.slack = r.rhs - r.lhs;
  // A single-point Omega has a zero-dimensional simplex: the identity is exact.
  r.tolerance = omega.size() == 1 ? 1e-10 : 0.02;
  r.quantities = {{"c_P_omega", c_omega}, {"omega_size", static_cast<double>(omega.size())}};
  r.notes.push_back(floors_note(results));
  finish(r);
  return r;
}

VerificationReport verify_char_inradius(const WeightedGraph& g, const VerifyOptions& o) {
  const auto& omega = require_omega(g, o);
  auto rm = restricted_metric(g, omega);
  VerificationReport r;
  r.theorem = "char-inradius";
  r.relation = "==";
  r.lhs = diameter(rm);
  r.rhs = inradius(rm, omega);
  r.residual = std::abs(r.lhs - r.rhs);
  r.slack = r.rhs - r.lhs;
  r.tolerance = 1e-8;
  finish(r);
  return r;
}

VerificationReport verify_cor_textbook(const WeightedGraph& g, const VerifyOptions& o) {
  auto m = measure_or_uniform(g, o);
  const double lambda1 = eigenvalue_k(neumann_operator(g, m), 1);
  const double diam_d = diameter(path_metric(g));
  auto r = inequality("cor-textbook", lambda1, 4.0 / diam_d);
  r.quantities = {{"diam_d", diam_d}};
  return r;
}

VerificationReport verify_finite_measure(const WeightedGraph& g, const VerifyOptions& o) {
  const auto& omega = require_omega(g, o);
  auto m = measure_or_uniform(g, o);
  const double lambda_omega = eigenvalue_k(omega_operator(g, omega, m), 0);
  const double inr_d = inradius(path_metric(g), omega);
  const double mass = measure_of(m, omega);
  auto r = inequality("finite-measure", lambda_omega, 1.0 / (inr_d * mass));
  r.quantities = {{"inr_d", inr_d}, {"m_omega", mass}};
  return r;
}

VerificationReport verify_r_prime(const WeightedGraph& g) {
  auto rp = sup_restricted_metric(g);
  auto r = resistance_metric(g);
  double worst = 0.0;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < x; ++y) worst = std::max(worst, std::abs(rp(x, y) - r(x, y)));
  VerificationReport rep;
  rep.theorem = "r-prime-equals-r";
  rep.relation = "==";
  rep.lhs = diameter(rp);
  rep.rhs = diameter(r);
  rep.residual = worst;
  rep.slack = rep.lhs - rep.rhs;
  rep.tolerance = 1e-6;
  rep.notes.push_back("residual is the largest entrywise |r' - r|");
  finish(rep);
  return rep;
}

VerificationReport verify_quarter(const WeightedGraph& g, const VerifyOptions& o) {
  const std::size_t n = g.order();
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::exponential_distribution<double> expo(1.0);

  double worst = 0.0;
  std::vector<double> f(n), m(n);
  for (std::size_t s = 0; s < o.samples; ++s) {
    for (auto& v : m) v = expo(rng);
    const double total = std::accumulate(m.begin(), m.end(), 0.0);
    for (auto& v : m) v /= total;
    for (auto& v : f) v = value(rng);
    const double mean = weighted_mean(f, m);
    for (auto& v : f) v -= mean;
    worst = std::max(worst, quarter_ratio(f, m));
  }

  // Sharpness: f symmetric about zero, half the mass at each extremizer.
  double sharp = 0.0;
  for (std::size_t s = 0; s < std::min<std::size_t>(o.samples, 100); ++s) {
    for (auto& v : f) v = value(rng);
    auto [lo, hi] = std::minmax_element(f.begin(), f.end());
    const double shift = 0.5 * (*lo + *hi);
    std::fill(m.begin(), m.end(), 0.0);
    m[static_cast<std::size_t>(lo - f.begin())] = 0.5;
    m[static_cast<std::size_t>(hi - f.begin())] = 0.5;
    for (auto& v : f) v -= shift;
    sharp = std::max(sharp, std::abs(quarter_ratio(f, m) - 0.25));
  }

  auto r = inequality("quarter-inequality", 0.25, worst, 1e-12);
  r.relation = "<=";
  r.lhs = worst;
  r.rhs = 0.25;
  r.quantities = {{"sharpness_residual", sharp}, {"samples", static_cast<double>(o.samples)}};
  if (sharp > 1e-12) {
    r.residual = std::max(r.residual, sharp);
    r.notes.push_back("two-point measure failed to attain the bound");
  }
  finish(r);
  return r;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"thm-computing",    "spectral-theory-omega", "char-inradius",
                                            "cor-textbook",     "finite-measure",        "r-prime-equals-r",
                                            "quarter-inequality", "higher-eigenvalues"};
  return ids;
}

VerificationReport verify_theorem(const WeightedGraph& g, std::string_view which, const VerifyOptions& o) {
  if (which == "thm-computing") return verify_thm_computing(g, o);
  if (which == "spectral-theory-omega" || which == "char-c-null") {
    auto r = verify_spectral_omega(g, o);
    r.theorem = std::string(which);
    return r;
  }
  if (which == "char-inradius") return verify_char_inradius(g, o);
  if (which == "cor-textbook") return verify_cor_textbook(g, o);
  if (which == "finite-measure") return verify_finite_measure(g, o);
  if (which == "r-prime-equals-r") return verify_r_prime(g);
  if (which == "quarter-inequality") return verify_quarter(g, o);
  if (which == "higher-eigenvalues") {
    if (!o.f_set) throw Error(ErrorCode::BadF, "higher-eigenvalues needs a set F");
    return higher_eigenvalue_bounds(g, measure_or_uniform(g, o), *o.f_set);
  }
  throw Error(ErrorCode::UnknownTheoremId, "unknown theorem id '" + std::string(which) + "'");
}

VerificationReport higher_eigenvalue_bounds(const WeightedGraph& g, const Measure& m, const VertexSubset& f_set) {
  const std::size_t n = g.order();
  if (f_set.order() != n || m.size() != n) throw Error(ErrorCode::LengthMismatch, "higher_eigenvalue_bounds");
  const std::size_t k = f_set.size();
  if (k == 0 || k + 2 > n) {
    throw Error(ErrorCode::BadF, "need 1 <= |F| <= n - 2, got |F| = " + std::to_string(k));
  }
  const VertexSubset rest = f_set.complement();

  const double lambda_next = eigenvalue_k(neumann_operator(g, m), k + 1);
  const double lambda_rest = eigenvalue_k(omega_operator(g, rest, m), 0);
  const double c_p = best_constant_global(g);
  const double c_rest = best_constant_omega(g, rest);
  const double mass = measure_of(m, rest);
  const double bound_a = 4.0 / (c_p * mass);
  const double bound_b = 1.0 / (c_rest * mass);

  const double slacks[] = {
      lambda_next - lambda_rest,  // min-max lemma
      lambda_next - bound_a,      // (a)
      lambda_next - bound_b,      // (b)
      lambda_rest - bound_b,      // (b) through the Omega operator
      c_p - c_rest,
  };

  VerificationReport r;
  r.theorem = "higher-eigenvalues";
  r.relation = ">=";
  r.lhs = lambda_next;
  r.rhs = std::max(bound_a, bound_b);
  r.slack = *std::min_element(std::begin(slacks), std::end(slacks));
  r.residual = std::max(0.0, -r.slack);
  r.tolerance = 1e-9;
  r.quantities = {{"n", static_cast<double>(k)},
                  {"lambda_n_plus_1", lambda_next},
                  {"lambda_X_minus_F", lambda_rest},
                  {"bound_a", bound_a},
                  {"bound_b", bound_b},
                  {"c_P", c_p},
                  {"c_P_X_minus_F", c_rest},
                  {"m_X_minus_F", mass}};
  finish(r);
  return r;
}

}  // namespace gpc
