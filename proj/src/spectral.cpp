#include "gpc/spectral.hpp"

#include <cmath>
#include <string>

#include "gpc/error.hpp"

namespace gpc {

RealizedOperator::RealizedOperator(OperatorKind kind, SymmetricMatrix matrix, std::vector<double> masses,
                                   std::optional<VertexSubset> omega)
    : kind_(kind), matrix_(std::move(matrix)), masses_(std::move(masses)), omega_(std::move(omega)) {}

Spectrum RealizedOperator::spectrum(bool with_vectors) const {
  Spectrum s = symmetric_eigen(matrix_, with_vectors);
  const double tol = 1e-9 * std::max(1.0, matrix_.max_abs());
  for (double& v : s.eigenvalues) {
    if (v < 0.0) {
      if (v < -tol) {
        throw Error(ErrorCode::InternalIdentityViolation,
                    "energy operator has eigenvalue " + std::to_string(v));
      }
      v = 0.0;
    }
  }
  return s;
}

double RealizedOperator::rayleigh_quotient(std::span<const double> f) const {
  if (f.size() != dimension()) throw Error(ErrorCode::LengthMismatch, "rayleigh_quotient");
  std::vector<double> u(f.size());
  double norm = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    u[i] = std::sqrt(masses_[i]) * f[i];
    norm += u[i] * u[i];
  }
  return matrix_.quadratic_form(u) / norm;
}

namespace {

SymmetricMatrix symmetrize(const SymmetricMatrix& l, std::span<const double> masses) {
  const std::size_t n = l.dim();
  std::vector<double> inv_sqrt(n);
  for (std::size_t i = 0; i < n; ++i) inv_sqrt[i] = 1.0 / std::sqrt(masses[i]);
  SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a.set(i, j, l(i, j) * inv_sqrt[i] * inv_sqrt[j]);
  return a;
}

void require_positive(double m, std::size_t x) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw Error(ErrorCode::NonpositiveMass, "mass " + std::to_string(m) + " at vertex " + std::to_string(x));
  }
}

}  // namespace

RealizedOperator neumann_operator(const WeightedGraph& g, std::span<const double> masses) {
  if (masses.size() != g.order()) throw Error(ErrorCode::LengthMismatch, "neumann_operator masses");
  for (std::size_t x = 0; x < masses.size(); ++x) require_positive(masses[x], x);
  return RealizedOperator(OperatorKind::neumann, symmetrize(laplacian_matrix(g), masses),
                          std::vector<double>(masses.begin(), masses.end()), std::nullopt);
}

RealizedOperator neumann_operator(const WeightedGraph& g, const Measure& m) {
  return neumann_operator(g, m.masses());
}

RealizedOperator omega_operator(const WeightedGraph& g, const VertexSubset& omega,
                                std::span<const double> masses) {
  omega.require_proper(g.order());
  if (masses.size() != g.order()) throw Error(ErrorCode::LengthMismatch, "omega_operator masses");
  std::vector<double> sub;
  for (std::size_t x : omega.indices()) {
    require_positive(masses[x], x);
    sub.push_back(masses[x]);
  }
  auto a = symmetrize(laplacian_matrix(g).principal(omega.indices()), sub);
  return RealizedOperator(OperatorKind::omega_restricted, std::move(a), std::move(sub), omega);
}

RealizedOperator omega_operator(const WeightedGraph& g, const VertexSubset& omega, const Measure& m) {
  return omega_operator(g, omega, m.masses());
}

double eigenvalue_k(const RealizedOperator& op, std::size_t k) {
  if (k >= op.dimension()) {
    throw Error(ErrorCode::IndexOutOfRange, "eigenvalue index " + std::to_string(k) + " for dimension " +
                                                std::to_string(op.dimension()));
  }
  return op.spectrum(false).eigenvalues[k];
}

}  // namespace gpc
