#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpc/graph.hpp"
#include "gpc/metrics.hpp"

namespace gpc {

/// Best constant c_P in ||f||_V^2 <= c energy(f): the resistance diameter.
double best_constant_global(const WeightedGraph& g);

/// Best constant in ||f||_inf^2 <= c energy(f) for f supported in Omega.
/// Evaluates both the r_Omega diameter and the r_Omega inradius of Omega and
/// throws InternalIdentityViolation when they differ by more than 1e-8.
double best_constant_omega(const WeightedGraph& g, const VertexSubset& omega);

struct ExhaustionStep {
  std::size_t n;
  double constant;
  std::size_t host_order;
  std::size_t omega_size;
};

enum class ExhaustionVerdict { converging, growing, inconclusive };
std::string_view to_string(ExhaustionVerdict verdict);

struct ExhaustionResult {
  std::string family;
  std::vector<ExhaustionStep> steps;
  ExhaustionVerdict verdict = ExhaustionVerdict::inconclusive;
};

/// c_P^Omega for the nested truncations Omega_1, ..., Omega_{n_max} of an
/// infinite family, each embedded in a host two layers larger so that every
/// edge leaving Omega_n is present:
///   path                  Omega_n = {0..n} (unit weights)
///   geometric_halfline    Omega_n = {0..n}
///   star                  Omega_n = center and leaves 1..n
///   comb[:K]              Omega_n = comb(n, K), or comb(n, n) without K
/// Verdict: converging when the last two values differ by less than 1e-4,
/// growing otherwise, inconclusive for a single step. Throws BadFamily.
ExhaustionResult best_constant_zero_exhaustion(const FamilySpec& family, std::size_t n_max);

struct PoincareConstants {
  double c_p = 0.0;
  std::vector<std::pair<VertexSubset, double>> c_p_omega;
  std::optional<ExhaustionResult> c_p_zero_sequence;
};

PoincareConstants compute_constants(const WeightedGraph& g, std::span<const VertexSubset> omegas);

// ---------------------------------------------------------------------------
// Variational infima over measures.

struct FloorResult {
  double floor;
  std::vector<double> measure;
  double value;
};

inline const std::vector<double> kDefaultFloors{1e-2, 1e-3, 1e-4, 1e-5};

/// inf over probability measures with masses >= floor of the second lowest
/// Neumann eigenvalue, one entry per floor (processed from the largest floor
/// down, each search warm-started from the previous optimum).
std::vector<FloorResult> infimize_lambda1(const WeightedGraph& g, std::span<const double> floors,
                                          std::uint64_t seed = 1);

/// Same for the lowest eigenvalue of the Omega operator over probability
/// measures on Omega. `measure` in the results has one entry per Omega member.
std::vector<FloorResult> infimize_lambda0_omega(const WeightedGraph& g, const VertexSubset& omega,
                                                std::span<const double> floors, std::uint64_t seed = 1);

/// Least-squares fit value = limit + slope * floor; returns the limit.
double extrapolate_to_zero_floor(std::span<const FloorResult> results);

/// Harmonic potential for a pair realizing the resistance diameter, shifted
/// so that sup f = -inf f. Saturates the global Poincare inequality.
std::vector<double> extremal_function(const WeightedGraph& g);

/// ||f||_2^2 / ||f||_V^2 under `masses`; 0 for constant f.
double quarter_ratio(std::span<const double> f, std::span<const double> masses);

// ---------------------------------------------------------------------------
// Verification.

struct VerificationReport {
  std::string theorem;
  /// "==" for identities (residual = |lhs - rhs|, possibly relative) and
  /// ">=" / "<=" for inequalities (residual = violation, slack = signed margin).
  std::string relation;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  double slack = 0.0;
  bool pass = false;
  std::vector<std::pair<std::string, double>> quantities;
  std::vector<std::string> notes;
};

struct VerifyOptions {
  std::optional<VertexSubset> omega;
  std::optional<VertexSubset> f_set;
  std::optional<Measure> measure;
  std::vector<double> floors = kDefaultFloors;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
};

/// Theorem ids: thm-computing, spectral-theory-omega (alias char-c-null),
/// char-inradius, cor-textbook, finite-measure, r-prime-equals-r,
/// quarter-inequality, higher-eigenvalues. Throws UnknownTheoremId, and
/// OmegaNotProper / BadF when a required subset is missing or invalid.
VerificationReport verify_theorem(const WeightedGraph& g, std::string_view which,
                                  const VerifyOptions& options);

const std::vector<std::string>& theorem_ids();

/// Eigenvalue bounds for lambda_{|F|+1} of the Neumann operator:
///   lambda_{|F|+1} >= lambda_{X\F}                    (min-max)
///   lambda_{|F|+1} >= 4 / (c_P m(X\F))                 (a)
///   lambda_{|F|+1} >= lambda_{X\F} >= 1 / (c_P^{X\F} m(X\F))   (b)
///   c_P^{X\F} <= c_P
/// Requires 1 <= |F| <= n - 2. Throws BadF.
VerificationReport higher_eigenvalue_bounds(const WeightedGraph& g, const Measure& m, const VertexSubset& f_set);

}  // namespace gpc
