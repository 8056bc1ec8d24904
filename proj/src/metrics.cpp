#include "gpc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include "gpc/error.hpp"
#include "gpc/numerics.hpp"

namespace gpc {

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::path_d: return "d";
    case MetricKind::resistance_r: return "r";
    case MetricKind::restricted_r_omega: return "r_omega";
    case MetricKind::sup_restricted_r_prime: return "r_prime";
  }
  return "unknown";
}

PseudometricMatrix::PseudometricMatrix(MetricKind kind, std::size_t n, std::optional<VertexSubset> omega)
    : kind_(kind), n_(n), omega_(std::move(omega)), packed_(n * (n - (n > 0 ? 1 : 0)) / 2, 0.0) {}

std::size_t PseudometricMatrix::slot(std::size_t x, std::size_t y) const {
  if (x < y) std::swap(x, y);
  return x * (x - 1) / 2 + y;
}

double PseudometricMatrix::operator()(std::size_t x, std::size_t y) const {
  if (x == y) return 0.0;
  return packed_[slot(x, y)];
}

void PseudometricMatrix::set(std::size_t x, std::size_t y, double value) {
  if (x == y) return;
  packed_[slot(x, y)] = value;
}

std::vector<std::vector<double>> PseudometricMatrix::to_rows() const {
  std::vector<std::vector<double>> rows(n_, std::vector<double>(n_, 0.0));
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) rows[x][y] = (*this)(x, y);
  return rows;
}

double PseudometricMatrix::max_triangle_violation() const {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      for (std::size_t z = 0; z < n_; ++z)
        worst = std::max(worst, (*this)(x, z) - (*this)(x, y) - (*this)(y, z));
  return worst;
}

// ---------------------------------------------------------------------------

namespace {

struct DijkstraResult {
  std::vector<double> dist;
  std::vector<std::size_t> pred;
};

DijkstraResult dijkstra(const WeightedGraph& g, std::size_t source) {
  const std::size_t n = g.order();
  DijkstraResult r{std::vector<double>(n, std::numeric_limits<double>::infinity()),
                   std::vector<std::size_t>(n, n)};
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  r.dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > r.dist[x]) continue;
    for (const auto& nb : g.neighbors(x)) {
      double cand = d + 1.0 / nb.weight;
      if (cand < r.dist[nb.vertex]) {
        r.dist[nb.vertex] = cand;
        r.pred[nb.vertex] = x;
        heap.push({cand, nb.vertex});
      }
    }
  }
  return r;
}

}  // namespace

PseudometricMatrix path_metric(const WeightedGraph& g) {
  const std::size_t n = g.order();
  PseudometricMatrix pm(MetricKind::path_d, n);
  for (std::size_t s = 0; s < n; ++s) {
    auto r = dijkstra(g, s);
    for (std::size_t t = 0; t < s; ++t) pm.set(s, t, r.dist[t]);
  }
  return pm;
}

std::vector<std::size_t> shortest_path(const WeightedGraph& g, std::size_t x, std::size_t y) {
  auto r = dijkstra(g, x);
  std::vector<std::size_t> path{y};
  while (path.back() != x) path.push_back(r.pred[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> all_but_index(std::size_t n, std::size_t excluded) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (i != excluded) idx.push_back(i);
  return idx;
}

}  // namespace

PseudometricMatrix resistance_metric(const WeightedGraph& g) {
  const std::size_t n = g.order();
  const std::size_t ground = n - 1;
  auto keep = all_but_index(n, ground);
  Cholesky chol(laplacian_matrix(g).principal(keep));

  // Columns of the inverse grounded Laplacian.
  std::vector<std::vector<double>> inv(n - 1);
  std::vector<double> e(n - 1, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    e[i] = 1.0;
    inv[i] = chol.solve(e);
    e[i] = 0.0;
  }

  PseudometricMatrix pm(MetricKind::resistance_r, n);
  for (std::size_t x = 0; x + 1 < n; ++x) {
    pm.set(x, ground, inv[x][x]);
    for (std::size_t y = 0; y < x; ++y) pm.set(x, y, inv[x][x] + inv[y][y] - 2.0 * inv[x][y]);
  }
  return pm;
}

std::vector<double> harmonic_potential(const WeightedGraph& g, std::size_t x, std::size_t y) {
  const std::size_t n = g.order();
  if (x >= n || y >= n) throw Error(ErrorCode::IndexOutOfRange, "harmonic_potential vertex");
  std::vector<double> f(n, 0.0);
  if (x == y) return f;
  auto keep = all_but_index(n, y);
  std::vector<double> rhs(n - 1, 0.0);
  rhs[x < y ? x : x - 1] = 1.0;
  auto sol = solve_spd(laplacian_matrix(g).principal(keep), rhs);
  for (std::size_t a = 0; a < keep.size(); ++a) f[keep[a]] = sol[a];
  return f;
}

PseudometricMatrix restricted_metric(const WeightedGraph& g, const VertexSubset& omega) {
  const std::size_t n = g.order();
  omega.require_proper(n);
  const auto& members = omega.indices();
  const SymmetricMatrix q = laplacian_matrix(g).principal(members);

  // Position of each vertex inside Omega, or npos.
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(n, npos);
  for (std::size_t a = 0; a < members.size(); ++a) pos[members[a]] = a;

  PseudometricMatrix pm(MetricKind::restricted_r_omega, n, omega);
  std::vector<double> c(members.size(), 0.0);

  // For x in Omega and y outside, the objective is f(x) whatever y is.
  std::vector<double> to_complement(members.size());
  for (std::size_t a = 0; a < members.size(); ++a) {
    std::fill(c.begin(), c.end(), 0.0);
    c[a] = 1.0;
    to_complement[a] = max_linear_over_nonneg_ellipsoid(q, c).value;
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < x; ++y) {
      const bool x_in = pos[x] != npos;
      const bool y_in = pos[y] != npos;
      if (!x_in && !y_in) continue;
      if (x_in != y_in) {
        const double v = to_complement[x_in ? pos[x] : pos[y]];
        pm.set(x, y, v * v);
        continue;
      }
      std::fill(c.begin(), c.end(), 0.0);
      c[pos[x]] = 1.0;
      c[pos[y]] = -1.0;
      double best = max_linear_over_nonneg_ellipsoid(q, c).value;
      for (double& v : c) v = -v;
      best = std::max(best, max_linear_over_nonneg_ellipsoid(q, c).value);
      pm.set(x, y, best * best);
    }
  }
  return pm;
}

PseudometricMatrix sup_restricted_metric(const WeightedGraph& g) {
  const std::size_t n = g.order();
  PseudometricMatrix out(MetricKind::sup_restricted_r_prime, n);
  for (std::size_t p = 0; p < n; ++p) {
    auto rm = restricted_metric(g, VertexSubset::all_but(n, p));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < x; ++y) out.set(x, y, std::max(out(x, y), rm(x, y)));
  }
  return out;
}

double diameter(const PseudometricMatrix& pm) {
  double d = 0.0;
  for (std::size_t x = 0; x < pm.order(); ++x)
    for (std::size_t y = 0; y < x; ++y) d = std::max(d, pm(x, y));
  return d;
}

double inradius(const PseudometricMatrix& pm, const VertexSubset& omega) {
  omega.require_proper(pm.order());
  const auto outside = omega.complement().indices();
  double best = 0.0;
  for (std::size_t x : omega.indices()) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t y : outside) nearest = std::min(nearest, pm(x, y));
    best = std::max(best, nearest);
  }
  return best;
}

double dirichlet_inradius_d(const WeightedGraph& host, const VertexSubset& omega) {
  omega.require_proper(host.order());
  return inradius(path_metric(host), omega);
}

}  // namespace gpc
