#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpc/numerics.hpp"

namespace gpc {

/// Edge as supplied by a caller or a graph file: two vertex labels and a weight.
struct Edge {
  std::string u;
  std::string v;
  double weight = 1.0;
};

struct Neighbor {
  std::size_t vertex;
  double weight;
};

/// Edge in internal indexing with `u < v`.
struct IndexedEdge {
  std::size_t u;
  std::size_t v;
  double weight;
};

/// Finite, connected, undirected graph with symmetric positive edge weights b(x,y).
///
/// Vertices are addressed externally by string labels and internally by dense
/// indices 0..n-1. The internal order is the lexicographic order of the labels,
/// so any permutation of the same edge list produces the same graph.
/// Immutable after construction.
class WeightedGraph {
 public:
  /// Throws Error with DisconnectedGraph, SelfLoop, NonpositiveWeight,
  /// DuplicateEdgeConflict or EmptyGraph.
  static WeightedGraph from_edges(std::span<const Edge> edges);

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t x) const { return labels_.at(x); }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws UnknownVertex.
  std::size_t index_of(std::string_view label) const;

  std::span<const Neighbor> neighbors(std::size_t x) const { return adjacency_.at(x); }
  const std::vector<IndexedEdge>& edges() const noexcept { return edges_; }

  /// b(x,y); zero when x and y are not adjacent.
  double weight(std::size_t x, std::size_t y) const;
  /// Weighted degree: sum over y of b(x,y).
  double degree(std::size_t x) const;

  /// Edge list with labels, in internal order.
  std::vector<Edge> labeled_edges() const;

 private:
  WeightedGraph() = default;

  std::vector<std::string> labels_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::map<std::pair<std::size_t, std::size_t>, double> weights_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<IndexedEdge> edges_;
};

WeightedGraph build_graph(std::span<const Edge> edges);

/// Weighted Laplacian: L[x,x] = deg(x), L[x,y] = -b(x,y).
SymmetricMatrix laplacian_matrix(const WeightedGraph& g);

// ---------------------------------------------------------------------------
// Functions on vertices. A function is a span of values aligned with the
// graph's internal vertex order.

/// Energy form: half the sum over ordered pairs of b(x,y)(f(x)-f(y))^2.
double energy(const WeightedGraph& g, std::span<const double> f);
/// Polarized energy form.
double energy_bilinear(const WeightedGraph& g, std::span<const double> f,
                       std::span<const double> h);

/// sup f - inf f.
double variational_seminorm(std::span<const double> f);
double sup_norm(std::span<const double> f);
std::vector<double> positive_part(std::span<const double> f);
/// f_- = max(-f, 0), so that f = f_+ - f_-.
std::vector<double> negative_part(std::span<const double> f);

/// Weighted square norm sum f(x)^2 m(x); masses may contain zeros.
double weighted_square_norm(std::span<const double> f, std::span<const double> masses);
double weighted_mean(std::span<const double> f, std::span<const double> masses);

// ---------------------------------------------------------------------------

/// Measure with full support. Probability measures additionally sum to one
/// within 1e-12; finite measures carry no sum constraint.
class Measure {
 public:
  enum class Kind { probability, finite };

  /// Throws NonpositiveMass, or MeasureNotNormalized unless `normalize` is set.
  static Measure probability(std::vector<double> masses, bool normalize = false);
  static Measure finite(std::vector<double> masses);
  static Measure uniform(std::size_t n);

  Kind kind() const noexcept { return kind_; }
  bool is_probability() const noexcept { return kind_ == Kind::probability; }
  std::size_t size() const noexcept { return masses_.size(); }
  std::span<const double> masses() const noexcept { return masses_; }
  double operator[](std::size_t x) const { return masses_.at(x); }
  double total() const;

 private:
  Measure(Kind kind, std::vector<double> masses) : kind_(kind), masses_(std::move(masses)) {}

  Kind kind_;
  std::vector<double> masses_;
};

Measure uniform_measure(const WeightedGraph& g);

/// Subset of the vertex set given as a membership mask.
class VertexSubset {
 public:
  explicit VertexSubset(std::vector<bool> membership);

  static VertexSubset from_indices(std::size_t n, std::span<const std::size_t> indices);
  /// Throws UnknownVertex.
  static VertexSubset from_labels(const WeightedGraph& g, std::span<const std::string> labels);
  static VertexSubset all_but(std::size_t n, std::size_t excluded);

  std::size_t order() const noexcept { return membership_.size(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(std::size_t x) const { return membership_.at(x); }
  const std::vector<std::size_t>& indices() const noexcept { return members_; }
  VertexSubset complement() const;

  bool is_proper() const noexcept { return !members_.empty() && members_.size() < membership_.size(); }
  /// Throws OmegaNotProper when empty or the whole vertex set, LengthMismatch
  /// when built for a different vertex count.
  void require_proper(std::size_t n) const;

  bool operator==(const VertexSubset& other) const = default;

 private:
  std::vector<bool> membership_;
  std::vector<std::size_t> members_;
};

double measure_of(const Measure& m, const VertexSubset& subset);

// ---------------------------------------------------------------------------
// Graph families.

struct FamilySpec {
  std::string name;
  std::vector<int> params;

  /// Parses `name:p1,p2,...`; throws BadParams on malformed input.
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

/// Generates one of: path(n), cycle(n), complete(n), star(n),
/// comb(N,K), geometric_halfline(n).
///
/// The comb has vertex set {-N..N} x {0..K} labelled "(i,k)". Spine edges
/// ((i,0),(i+1,0)) have weight 1; tooth edges ((i,k),(i,k+1)) have weight
/// 2^(k+1), i.e. length 1/2^(k+1) in the path metric, so every tooth has
/// length below 1. geometric_halfline(n) has vertices 0..n and edge (k,k+1)
/// of weight 2^(k+1).
///
/// Throws UnknownFamily, BadParams.
WeightedGraph generate_family(std::string_view name, std::span<const int> params);
WeightedGraph generate_family(const FamilySpec& spec);

std::string comb_label(int i, int k);

}  // namespace gpc
