#include "gpc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>

#include "gpc/error.hpp"

namespace gpc {

namespace {

void require_length(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw Error(ErrorCode::LengthMismatch, std::string(what) + ": expected length " +
                                               std::to_string(expected) + ", got " +
                                               std::to_string(actual));
  }
}

}  // namespace

WeightedGraph WeightedGraph::from_edges(std::span<const Edge> edges) {
  if (edges.empty()) throw Error(ErrorCode::EmptyGraph, "at least one edge is required");

  std::set<std::string, std::less<>> names;
  for (const auto& e : edges) {
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self-loop at '" + e.u + "'");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error(ErrorCode::NonpositiveWeight,
                  "edge '" + e.u + "'-'" + e.v + "' has weight " + std::to_string(e.weight));
    }
    names.insert(e.u);
    names.insert(e.v);
  }

  WeightedGraph g;
  g.labels_.assign(names.begin(), names.end());
  for (std::size_t i = 0; i < g.labels_.size(); ++i) g.index_.emplace(g.labels_[i], i);

  for (const auto& e : edges) {
    std::size_t x = g.index_.find(e.u)->second;
    std::size_t y = g.index_.find(e.v)->second;
    auto key = std::minmax(x, y);
    auto [it, inserted] = g.weights_.emplace(std::pair{key.first, key.second}, e.weight);
    if (!inserted && it->second != e.weight) {
      throw Error(ErrorCode::DuplicateEdgeConflict,
                  "edge '" + e.u + "'-'" + e.v + "' listed with weights " +
                      std::to_string(it->second) + " and " + std::to_string(e.weight));
    }
  }

  const std::size_t n = g.labels_.size();
  g.adjacency_.resize(n);
  for (const auto& [key, w] : g.weights_) {
    g.adjacency_[key.first].push_back({key.second, w});
    g.adjacency_[key.second].push_back({key.first, w});
    g.edges_.push_back({key.first, key.second, w});
  }

  std::vector<bool> seen(n, false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    std::size_t x = frontier.front();
    frontier.pop();
    for (const auto& nb : g.adjacency_[x]) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = true;
        ++reached;
        frontier.push(nb.vertex);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::DisconnectedGraph, "only " + std::to_string(reached) + " of " +
                                                  std::to_string(n) +
                                                  " vertices reachable from '" + g.labels_[0] + "'");
  }
  return g;
}

std::optional<std::size_t> WeightedGraph::find(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeightedGraph::index_of(std::string_view label) const {
  auto idx = find(label);
  if (!idx) throw Error(ErrorCode::UnknownVertex, "no vertex labelled '" + std::string(label) + "'");
  return *idx;
}

double WeightedGraph::weight(std::size_t x, std::size_t y) const {
  auto key = std::minmax(x, y);
  auto it = weights_.find({key.first, key.second});
  return it == weights_.end() ? 0.0 : it->second;
}

double WeightedGraph::degree(std::size_t x) const {
  double sum = 0.0;
  for (const auto& nb : adjacency_.at(x)) sum += nb.weight;
  return sum;
}

std::vector<Edge> WeightedGraph::labeled_edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({labels_[e.u], labels_[e.v], e.weight});
  return out;
}

WeightedGraph build_graph(std::span<const Edge> edges) { return WeightedGraph::from_edges(edges); }

SymmetricMatrix laplacian_matrix(const WeightedGraph& g) {
  SymmetricMatrix l(g.order());
  for (const auto& e : g.edges()) {
    l.add(e.u, e.u, e.weight);
    l.add(e.v, e.v, e.weight);
    l.set(e.u, e.v, -e.weight);
  }
  return l;
}

double energy(const WeightedGraph& g, std::span<const double> f) {
  return energy_bilinear(g, f, f);
}

double energy_bilinear(const WeightedGraph& g, std::span<const double> f,
                       std::span<const double> h) {
  require_length(g.order(), f.size(), "energy");
  require_length(g.order(), h.size(), "energy");
  // Each unordered edge appears twice in the symmetric sum, cancelling the 1/2.
  double sum = 0.0;
  for (const auto& e : g.edges()) sum += e.weight * (f[e.u] - f[e.v]) * (h[e.u] - h[e.v]);
  return sum;
}

double variational_seminorm(std::span<const double> f) {
  if (f.empty()) return 0.0;
  auto [lo, hi] = std::minmax_element(f.begin(), f.end());
  return *hi - *lo;
}

double sup_norm(std::span<const double> f) {
  double s = 0.0;
  for (double v : f) s = std::max(s, std::abs(v));
  return s;
}

std::vector<double> positive_part(std::span<const double> f) {
  std::vector<double> out(f.size());
  std::transform(f.begin(), f.end(), out.begin(), [](double v) { return std::max(v, 0.0); });
  return out;
}

std::vector<double> negative_part(std::span<const double> f) {
  std::vector<double> out(f.size());
  std::transform(f.begin(), f.end(), out.begin(), [](double v) { return std::max(-v, 0.0); });
  return out;
}

double weighted_square_norm(std::span<const double> f, std::span<const double> masses) {
  require_length(f.size(), masses.size(), "weighted_square_norm");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * f[i] * masses[i];
  return s;
}

double weighted_mean(std::span<const double> f, std::span<const double> masses) {
  require_length(f.size(), masses.size(), "weighted_mean");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * masses[i];
  return s;
}

// ---------------------------------------------------------------------------

namespace {

void require_positive_masses(std::span<const double> masses) {
  if (masses.empty()) throw Error(ErrorCode::NonpositiveMass, "measure has no atoms");
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (!(masses[i] > 0.0) || !std::isfinite(masses[i])) {
      throw Error(ErrorCode::NonpositiveMass,
                  "mass " + std::to_string(masses[i]) + " at index " + std::to_string(i));
    }
  }
}

}  // namespace

Measure Measure::probability(std::vector<double> masses, bool normalize) {
  require_positive_masses(masses);
  double total = std::accumulate(masses.begin(), masses.end(), 0.0);
  if (normalize) {
    for (double& m : masses) m /= total;
    total = std::accumulate(masses.begin(), masses.end(), 0.0);
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorCode::MeasureNotNormalized, "masses sum to " + std::to_string(total));
  }
  return Measure(Kind::probability, std::move(masses));
}

Measure Measure::finite(std::vector<double> masses) {
  require_positive_masses(masses);
  return Measure(Kind::finite, std::move(masses));
}

Measure Measure::uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::NonpositiveMass, "uniform measure on empty set");
  return Measure(Kind::probability, std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double Measure::total() const { return std::accumulate(masses_.begin(), masses_.end(), 0.0); }

Measure uniform_measure(const WeightedGraph& g) { return Measure::uniform(g.order()); }

VertexSubset::VertexSubset(std::vector<bool> membership) : membership_(std::move(membership)) {
  for (std::size_t i = 0; i < membership_.size(); ++i) {
    if (membership_[i]) members_.push_back(i);
  }
}

VertexSubset VertexSubset::from_indices(std::size_t n, std::span<const std::size_t> indices) {
  std::vector<bool> mask(n, false);
  for (std::size_t i : indices) {
    if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "vertex index " + std::to_string(i));
    mask[i] = true;
  }
  return VertexSubset(std::move(mask));
}

VertexSubset VertexSubset::from_labels(const WeightedGraph& g, std::span<const std::string> labels) {
  std::vector<bool> mask(g.order(), false);
  for (const auto& l : labels) mask[g.index_of(l)] = true;
  return VertexSubset(std::move(mask));
}

VertexSubset VertexSubset::all_but(std::size_t n, std::size_t excluded) {
  std::vector<bool> mask(n, true);
  mask.at(excluded) = false;
  return VertexSubset(std::move(mask));
}

VertexSubset VertexSubset::complement() const {
  std::vector<bool> mask(membership_.size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = !membership_[i];
  return VertexSubset(std::move(mask));
}

void VertexSubset::require_proper(std::size_t n) const {
  require_length(n, membership_.size(), "vertex subset");
  if (!is_proper()) {
    throw Error(ErrorCode::OmegaNotProper,
                "subset has " + std::to_string(size()) + " of " + std::to_string(n) + " vertices");
  }
}

double measure_of(const Measure& m, const VertexSubset& subset) {
  require_length(m.size(), subset.order(), "measure_of");
  double s = 0.0;
  for (std::size_t x : subset.indices()) s += m[x];
  return s;
}

// ---------------------------------------------------------------------------

FamilySpec FamilySpec::parse(std::string_view text) {
  FamilySpec spec;
  auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (spec.name.empty()) throw Error(ErrorCode::BadParams, "empty family name");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::BadParams, "bad family parameter '" + std::string(tok) + "'");
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out = name;
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += (i == 0 ? ':' : ',');
    out += std::to_string(params[i]);
  }
  return out;
}

std::string comb_label(int i, int k) {
  return "(" + std::to_string(i) + "," + std::to_string(k) + ")";
}

namespace {

int param(std::string_view family, std::span<const int> params, std::size_t count, std::size_t i,
          int minimum) {
  if (params.size() != count) {
    throw Error(ErrorCode::BadParams, std::string(family) + " expects " + std::to_string(count) +
                                          " parameter(s), got " + std::to_string(params.size()));
  }
  if (params[i] < minimum) {
    throw Error(ErrorCode::BadParams, std::string(family) + " parameter " + std::to_string(i) +
                                          " must be >= " + std::to_string(minimum));
  }
  return params[i];
}

}  // namespace

WeightedGraph generate_family(std::string_view name, std::span<const int> params) {
  std::vector<Edge> edges;
  auto num = [](int i) { return std::to_string(i); };

  if (name == "path") {
    int n = param(name, params, 1, 0, 2);
    for (int i = 0; i + 1 < n; ++i) edges.push_back({num(i), num(i + 1), 1.0});
  } else if (name == "cycle") {
    int n = param(name, params, 1, 0, 3);
    for (int i = 0; i < n; ++i) edges.push_back({num(i), num((i + 1) % n), 1.0});
  } else if (name == "complete") {
    int n = param(name, params, 1, 0, 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.push_back({num(i), num(j), 1.0});
  } else if (name == "star") {
    int n = param(name, params, 1, 0, 2);
    for (int i = 1; i < n; ++i) edges.push_back({"center", "leaf" + num(i), 1.0});
  } else if (name == "comb") {
    int width = param(name, params, 2, 0, 0);
    int depth = param(name, params, 2, 1, 0);
    if (width == 0 && depth == 0) throw Error(ErrorCode::BadParams, "comb(0,0) has one vertex");
    for (int i = -width; i <= width; ++i) {
      if (i < width) edges.push_back({comb_label(i, 0), comb_label(i + 1, 0), 1.0});
      for (int k = 0; k < depth; ++k) {
        edges.push_back({comb_label(i, k), comb_label(i, k + 1), std::ldexp(1.0, k + 1)});
      }
    }
  } else if (name == "geometric_halfline") {
    int n = param(name, params, 1, 0, 1);
    for (int k = 0; k < n; ++k) edges.push_back({num(k), num(k + 1), std::ldexp(1.0, k + 1)});
  } else {
    throw Error(ErrorCode::UnknownFamily, "unknown graph family '" + std::string(name) + "'");
  }
  return build_graph(edges);
}

WeightedGraph generate_family(const FamilySpec& spec) {
  return generate_family(spec.name, spec.params);
}

}  // namespace gpc
