#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gpc/graph.hpp"
#include "gpc/numerics.hpp"

namespace gpc {

enum class OperatorKind { neumann, omega_restricted };

/// Finite realization of the energy form on l^2(X, m), or on functions
/// vanishing outside Omega. The stored matrix is the symmetrized pencil
/// D^(-1/2) L D^(-1/2) (restricted to Omega in the second case), whose
/// eigenvalues are those of the operator.
///
/// On a finite graph every function is finitely supported, so the Dirichlet
/// and Neumann realizations coincide and only the Neumann one is built.
class RealizedOperator {
 public:
  RealizedOperator(OperatorKind kind, SymmetricMatrix matrix, std::vector<double> masses,
                   std::optional<VertexSubset> omega);

  OperatorKind kind() const noexcept { return kind_; }
  const SymmetricMatrix& matrix() const noexcept { return matrix_; }
  /// Masses of the realized coordinates (all vertices, or Omega in index order).
  std::span<const double> masses() const noexcept { return masses_; }
  const std::optional<VertexSubset>& omega() const noexcept { return omega_; }
  std::size_t dimension() const noexcept { return matrix_.dim(); }

  /// Eigenvalues ascending; values in [-1e-9 scale, 0) are clamped to zero.
  /// Eigenvectors, when requested, are in the symmetrized coordinates.
  Spectrum spectrum(bool with_vectors = false) const;

  /// Rayleigh quotient energy(f)/||f||^2 for f given on the realized coordinates.
  double rayleigh_quotient(std::span<const double> f) const;

 private:
  OperatorKind kind_;
  SymmetricMatrix matrix_;
  std::vector<double> masses_;
  std::optional<VertexSubset> omega_;
};

/// Throws NonpositiveMass, LengthMismatch.
RealizedOperator neumann_operator(const WeightedGraph& g, std::span<const double> masses);
RealizedOperator neumann_operator(const WeightedGraph& g, const Measure& m);

/// `masses` has one entry per vertex of g; entries outside Omega are ignored
/// and entries inside must be positive. Throws OmegaNotProper, NonpositiveMass.
RealizedOperator omega_operator(const WeightedGraph& g, const VertexSubset& omega,
                                std::span<const double> masses);
RealizedOperator omega_operator(const WeightedGraph& g, const VertexSubset& omega, const Measure& m);

/// k-th smallest eigenvalue counted with multiplicity. Throws IndexOutOfRange.
double eigenvalue_k(const RealizedOperator& op, std::size_t k);

}  // namespace gpc
