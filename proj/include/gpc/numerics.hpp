#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace gpc {

/// Dense symmetric matrix, row-major. Symmetry is enforced at every write.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  static SymmetricMatrix identity(std::size_t n);
  static SymmetricMatrix diagonal(std::span<const double> diag);
  /// Throws LengthMismatch for ragged input and BadParams when
  /// max |A - A^T| exceeds 1e-12.
  static SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t dim() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }
  void add(std::size_t i, std::size_t j, double v);

  std::vector<double> multiply(std::span<const double> x) const;
  double quadratic_form(std::span<const double> x) const;
  SymmetricMatrix principal(std::span<const std::size_t> indices) const;

  double trace() const;
  double max_abs() const;
  double frobenius() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Lower-triangular Cholesky factor of an SPD matrix.
class Cholesky {
 public:
  /// Throws NotPositiveDefinite when a pivot drops to 1e-13 (scaled by the
  /// largest diagonal entry when that exceeds one).
  explicit Cholesky(const SymmetricMatrix& a);

  std::size_t dim() const noexcept { return n_; }
  std::vector<double> solve(std::span<const double> rhs) const;

 private:
  std::size_t n_;
  std::vector<double> l_;
};

std::vector<double> solve_spd(const SymmetricMatrix& a, std::span<const double> rhs);

/// Eigenvalues in ascending order. When present, eigenvectors are stored
/// column-wise: column k (entries k*dim .. k*dim+dim-1) belongs to eigenvalues[k].
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<double> eigenvectors;

  std::size_t dim() const noexcept { return eigenvalues.size(); }
  bool has_vectors() const noexcept { return !eigenvectors.empty(); }
  std::span<const double> eigenvector(std::size_t k) const {
    return std::span<const double>(eigenvectors).subspan(k * dim(), dim());
  }
};

/// Cyclic Jacobi rotations. Stops once the off-diagonal Frobenius norm is at
/// most 1e-14 ||A||_F; throws NoConvergence after 100 sweeps.
Spectrum symmetric_eigen(const SymmetricMatrix& a, bool with_vectors = true);

struct QpSolution {
  double value = 0.0;
  std::vector<double> argmax;
};

/// sup { c.f : f^T Q f <= 1, f >= 0 } for SPD Q.
///
/// Solved through the equivalent nonnegative quadratic program
/// min 1/2 g^T Q g - c.g over g >= 0: projected gradient descent with
/// backtracking gives a warm start, and an active-set phase then solves the
/// equality-constrained subproblem on the support exactly and repairs the
/// support until the KKT conditions hold. The minimizer g satisfies
/// c.g = g^T Q g, so the value is sqrt(c.g) and the argmax is g rescaled to
/// the ellipsoid boundary.
///
/// Throws NotPositiveDefinite, LengthMismatch.
QpSolution max_linear_over_nonneg_ellipsoid(const SymmetricMatrix& q, std::span<const double> c);

/// Brute-force value of the same problem: enumerates every support set.
/// Throws DimensionTooLarge above 12 coordinates.
double active_set_oracle(const SymmetricMatrix& q, std::span<const double> c);

// ---------------------------------------------------------------------------

struct SimplexOptions {
  /// Lower bound on every mass; must lie in [1e-8, 1e-2] with dim * floor < 1.
  double floor = 1e-3;
  std::size_t random_starts = 4;
  /// Cap on the number of vertex-pair starts; all pairs are used below it.
  std::size_t max_pair_starts = 28;
  std::uint64_t seed = 1;
  /// Additional starting measures (length dim, positive), e.g. a previous optimum.
  std::vector<std::vector<double>> extra_starts;
  std::size_t max_evaluations_per_start = 4000;
};

struct SimplexResult {
  std::vector<double> measure;
  double value = 0.0;
  std::size_t starts = 0;
  std::size_t evaluations = 0;
  /// Index of the start that produced the reported optimum.
  std::size_t best_start = 0;
};

using SimplexObjective = std::function<double(std::span<const double>)>;

/// Multistart Nelder-Mead over { m : sum m = 1, m_i >= floor }.
///
/// The floored simplex is parametrized by n-1 angles through squared
/// hyperspherical coordinates, which cover the whole simplex including its
/// faces. Starts: uniform, mass concentrated on vertex pairs, random
/// Dirichlet(1) draws and any caller-supplied points. The smallest value
/// wins; ties go to the earliest start.
///
/// Throws ObjectiveNaN, BadParams.
SimplexResult minimize_over_simplex(const SimplexObjective& objective, std::size_t dim,
                                    const SimplexOptions& options);

}  // namespace gpc
