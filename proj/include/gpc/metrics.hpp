#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "gpc/graph.hpp"

namespace gpc {

enum class MetricKind { path_d, resistance_r, restricted_r_omega, sup_restricted_r_prime };

std::string_view to_string(MetricKind kind);

/// All-pairs table of a pseudometric on the vertex set. Each unordered pair is
/// stored once, so the table is exactly symmetric with a zero diagonal.
class PseudometricMatrix {
 public:
  PseudometricMatrix(MetricKind kind, std::size_t n, std::optional<VertexSubset> omega = std::nullopt);

  MetricKind kind() const noexcept { return kind_; }
  std::size_t order() const noexcept { return n_; }
  /// The subset for restricted_r_omega tables.
  const std::optional<VertexSubset>& omega() const noexcept { return omega_; }

  double operator()(std::size_t x, std::size_t y) const;
  void set(std::size_t x, std::size_t y, double value);

  std::vector<std::vector<double>> to_rows() const;
  /// max over triples of delta(x,z) - delta(x,y) - delta(y,z); <= 0 for a pseudometric.
  double max_triangle_violation() const;

 private:
  std::size_t slot(std::size_t x, std::size_t y) const;

  MetricKind kind_;
  std::size_t n_;
  std::optional<VertexSubset> omega_;
  std::vector<double> packed_;
};

/// d(x,y): infimum over paths of the sum of 1/b along the path (Dijkstra).
PseudometricMatrix path_metric(const WeightedGraph& g);
/// Vertex sequence of a shortest path from x to y under edge length 1/b.
std::vector<std::size_t> shortest_path(const WeightedGraph& g, std::size_t x, std::size_t y);

/// Effective resistance, from one Cholesky factorization of the Laplacian
/// grounded at the last vertex and n-1 solves.
PseudometricMatrix resistance_metric(const WeightedGraph& g);
/// Potential of a unit current from x to y, grounded at y: f(y) = 0 and
/// f(x) = r(x,y) = energy(f).
std::vector<double> harmonic_potential(const WeightedGraph& g, std::size_t x, std::size_t y);

/// r_Omega(x,y) = sup{|f(x)-f(y)|^2 : f >= 0, supp f in Omega, energy(f) <= 1},
/// one nonnegative QP on L[Omega,Omega] per pair and sign. Throws OmegaNotProper.
PseudometricMatrix restricted_metric(const WeightedGraph& g, const VertexSubset& omega);

/// Entrywise maximum of r_Omega over the maximal proper subsets X \ {p}.
PseudometricMatrix sup_restricted_metric(const WeightedGraph& g);

double diameter(const PseudometricMatrix& pm);
/// max over x in Omega of the distance from x to the complement.
double inradius(const PseudometricMatrix& pm, const VertexSubset& omega);
/// d-inradius of a finite truncation Omega inside a larger host graph.
double dirichlet_inradius_d(const WeightedGraph& host, const VertexSubset& omega);

}  // namespace gpc
