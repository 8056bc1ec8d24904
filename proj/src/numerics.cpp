#include "gpc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

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

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double sup_of(std::span<const double> v) {
  double s = 0.0;
  for (double e : v) s = std::max(s, std::abs(e));
  return s;
}

}  // namespace

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
  return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> diag) {
  SymmetricMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.data_[i * diag.size() + i] = diag[i];
  return m;
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    require_length(n, rows[i].size(), "matrix row");
    for (std::size_t j = 0; j < n; ++j) m.data_[i * n + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > 1e-12) {
        throw Error(ErrorCode::BadParams, "matrix is not symmetric at (" + std::to_string(i) + "," +
                                              std::to_string(j) + ")");
      }
      double avg = 0.5 * (rows[i][j] + rows[j][i]);
      m.set(i, j, avg);
    }
  }
  return m;
}

void SymmetricMatrix::add(std::size_t i, std::size_t j, double v) {
  data_[i * n_ + j] += v;
  if (i != j) data_[j * n_ + i] += v;
}

std::vector<double> SymmetricMatrix::multiply(std::span<const double> x) const {
  require_length(n_, x.size(), "matrix-vector product");
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    const double* row = &data_[i * n_];
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += row[j] * x[j];
    y[i] = s;
  }
  return y;
}

double SymmetricMatrix::quadratic_form(std::span<const double> x) const {
  auto y = multiply(x);
  return dot(x, y);
}

SymmetricMatrix SymmetricMatrix::principal(std::span<const std::size_t> indices) const {
  SymmetricMatrix m(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b)
      m.data_[a * indices.size() + b] = (*this)(indices[a], indices[b]);
  return m;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += data_[i * n_ + i];
  return t;
}

double SymmetricMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double SymmetricMatrix::frobenius() const {
  return std::sqrt(std::inner_product(data_.begin(), data_.end(), data_.begin(), 0.0));
}

// ---------------------------------------------------------------------------

Cholesky::Cholesky(const SymmetricMatrix& a) : n_(a.dim()), l_(a.dim() * a.dim(), 0.0) {
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n_; ++i) max_diag = std::max(max_diag, std::abs(a(i, i)));
  const double min_pivot = 1e-13 * std::max(1.0, max_diag);

  for (std::size_t j = 0; j < n_; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l_[j * n_ + k] * l_[j * n_ + k];
    if (!(d > min_pivot)) {
      throw Error(ErrorCode::NotPositiveDefinite,
                  "pivot " + std::to_string(d) + " at column " + std::to_string(j));
    }
    const double ljj = std::sqrt(d);
    l_[j * n_ + j] = ljj;
    for (std::size_t i = j + 1; i < n_; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l_[i * n_ + k] * l_[j * n_ + k];
      l_[i * n_ + j] = s / ljj;
    }
  }
}

std::vector<double> Cholesky::solve(std::span<const double> rhs) const {
  require_length(n_, rhs.size(), "Cholesky solve");
  std::vector<double> x(rhs.begin(), rhs.end());
  for (std::size_t i = 0; i < n_; ++i) {
    double s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= l_[i * n_ + k] * x[k];
    x[i] = s / l_[i * n_ + i];
  }
  for (std::size_t i = n_; i-- > 0;) {
    double s = x[i];
    for (std::size_t k = i + 1; k < n_; ++k) s -= l_[k * n_ + i] * x[k];
    x[i] = s / l_[i * n_ + i];
  }
  return x;
}

std::vector<double> solve_spd(const SymmetricMatrix& a, std::span<const double> rhs) {
  return Cholesky(a).solve(rhs);
}

// ---------------------------------------------------------------------------

Spectrum symmetric_eigen(const SymmetricMatrix& input, bool with_vectors) {
  const std::size_t n = input.dim();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = input(i, j);

  // v is stored row-major; column k is the k-th eigenvector.
  std::vector<double> v;
  if (with_vectors) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
  };
  const double threshold = 1e-14 * input.frobenius();

  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (off_norm() <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;

        if (with_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence, "Jacobi iteration did not converge in 100 sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i * n + i] < a[j * n + j]; });

  Spectrum out;
  out.eigenvalues.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.eigenvalues[k] = a[order[k] * n + order[k]];
  if (with_vectors) {
    out.eigenvectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) out.eigenvectors[k * n + i] = v[i * n + order[k]];
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Nonnegative QP: min 1/2 x^T Q x - c.x subject to x >= 0.
std::vector<double> projected_gradient(const SymmetricMatrix& q, std::span<const double> c) {
  const std::size_t n = q.dim();
  std::vector<double> x(n, 0.0);
  auto objective = [&](std::span<const double> y) {
    return 0.5 * q.quadratic_form(y) - dot(c, y);
  };

  // Gershgorin bound on the largest eigenvalue.
  double lipschitz = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(q(i, j));
    lipschitz = std::max(lipschitz, row);
  }
  double step = 1.0 / lipschitz;

  double fx = objective(x);
  std::vector<double> trial(n);
  // Warm start only; the active-set phase below finishes the job.
  const std::size_t max_iters = std::min<std::size_t>(50 + 20 * n, 200);
  for (std::size_t it = 0; it < max_iters; ++it) {
    auto grad = q.multiply(x);
    for (std::size_t i = 0; i < n; ++i) grad[i] -= c[i];

    double pg_norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double g = (x[i] > 0.0) ? grad[i] : std::min(grad[i], 0.0);
      pg_norm = std::max(pg_norm, std::abs(g));
    }
    if (pg_norm <= 1e-12 * (1.0 + sup_of(c))) break;

    double t = 2.0 * step;
    double ft = 0.0;
    for (int bt = 0; bt < 40; ++bt) {
      double decrease = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        trial[i] = std::max(0.0, x[i] - t * grad[i]);
        decrease += grad[i] * (trial[i] - x[i]);
        decrease += (trial[i] - x[i]) * (trial[i] - x[i]) / (2.0 * t);
      }
      ft = objective(trial);
      if (ft <= fx + decrease + 1e-15 * std::abs(fx)) break;
      t *= 0.5;
    }
    step = t;
    x.swap(trial);
    fx = ft;
  }
  return x;
}

}  // namespace

QpSolution max_linear_over_nonneg_ellipsoid(const SymmetricMatrix& q, std::span<const double> c) {
  const std::size_t n = q.dim();
  require_length(n, c.size(), "max_linear_over_nonneg_ellipsoid");
  Cholesky full(q);  // validates positive definiteness
  (void)full;

  QpSolution out;
  out.argmax.assign(n, 0.0);
  if (std::all_of(c.begin(), c.end(), [](double v) { return v <= 0.0; })) return out;

  std::vector<double> x = projected_gradient(q, c);
  const double x_scale = *std::max_element(x.begin(), x.end());
  std::vector<bool> in_set(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] > 1e-12 * x_scale) {
      in_set[i] = true;
    } else {
      x[i] = 0.0;
    }
  }

  const double dual_tol = 1e-13 * (1.0 + sup_of(c));
  std::size_t last_added = n;
  for (std::size_t outer = 0; outer < 10 * n + 10; ++outer) {
    // Inner loop: move to the unconstrained optimum on the current support,
    // dropping coordinates that would turn negative.
    for (std::size_t inner = 0; inner <= n; ++inner) {
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < n; ++i)
        if (in_set[i]) support.push_back(i);
      if (support.empty()) {
        std::fill(x.begin(), x.end(), 0.0);
        break;
      }
      std::vector<double> c_sub(support.size());
      for (std::size_t a = 0; a < support.size(); ++a) c_sub[a] = c[support[a]];
      auto z_sub = solve_spd(q.principal(support), c_sub);

      bool all_positive = std::all_of(z_sub.begin(), z_sub.end(), [](double v) { return v > 0.0; });
      if (all_positive) {
        std::fill(x.begin(), x.end(), 0.0);
        for (std::size_t a = 0; a < support.size(); ++a) x[support[a]] = z_sub[a];
        break;
      }
      double alpha = 1.0;
      std::size_t blocking = n;
      for (std::size_t a = 0; a < support.size(); ++a) {
        const std::size_t i = support[a];
        if (z_sub[a] <= 0.0) {
          double ratio = x[i] / (x[i] - z_sub[a]);
          if (ratio < alpha) {
            alpha = ratio;
            blocking = i;
          }
        }
      }
      for (std::size_t a = 0; a < support.size(); ++a) {
        const std::size_t i = support[a];
        x[i] += alpha * (z_sub[a] - x[i]);
        if (i == blocking || x[i] <= 0.0) {
          x[i] = 0.0;
          in_set[i] = false;
        }
      }
    }

    auto w = q.multiply(x);
    for (std::size_t i = 0; i < n; ++i) w[i] = c[i] - w[i];
    std::size_t best = n;
    double best_w = dual_tol;
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_set[i] && w[i] > best_w) {
        best_w = w[i];
        best = i;
      }
    }
    // A coordinate re-entering right after being added means the remaining
    // violation is at rounding level.
    if (best == n || best == last_added) break;
    in_set[best] = true;
    last_added = best;
  }

  const double quad = q.quadratic_form(x);
  if (!(quad > 0.0)) return out;
  const double scale = 1.0 / std::sqrt(quad);
  for (std::size_t i = 0; i < n; ++i) out.argmax[i] = std::max(0.0, x[i]) * scale;
  out.value = std::max(0.0, dot(c, out.argmax));
  return out;
}

double active_set_oracle(const SymmetricMatrix& q, std::span<const double> c) {
  const std::size_t n = q.dim();
  require_length(n, c.size(), "active_set_oracle");
  if (n > 12) {
    throw Error(ErrorCode::DimensionTooLarge, "oracle enumerates 2^n supports; n = " + std::to_string(n));
  }
  double best = 0.0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) support.push_back(i);
    std::vector<double> c_sub(support.size());
    for (std::size_t a = 0; a < support.size(); ++a) c_sub[a] = c[support[a]];
    auto f = solve_spd(q.principal(support), c_sub);
    if (std::any_of(f.begin(), f.end(), [](double v) { return v < -1e-12; })) continue;
    // Q_SS f = c_S, so f^T Q f = c.f and the boundary-scaled value is sqrt(c.f).
    double cf = dot(c_sub, f);
    if (cf > 0.0) best = std::max(best, std::sqrt(cf));
  }
  return best;
}

// ---------------------------------------------------------------------------

namespace {

// Squared hyperspherical coordinates: n-1 angles -> point of the standard simplex.
void angles_to_weights(std::span<const double> theta, std::span<double> w) {
  double s = 1.0;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    const double ck = std::cos(theta[k]);
    const double sk = std::sin(theta[k]);
    w[k] = s * ck * ck;
    s *= sk * sk;
  }
  w[theta.size()] = s;
}

std::vector<double> weights_to_angles(std::span<const double> w) {
  const std::size_t n = w.size();
  std::vector<double> tail(n + 1, 0.0);
  for (std::size_t k = n; k-- > 0;) tail[k] = tail[k + 1] + std::max(0.0, w[k]);
  std::vector<double> theta(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    theta[k] = std::atan2(std::sqrt(tail[k + 1]), std::sqrt(std::max(0.0, w[k])));
  }
  return theta;
}

class FlooredSimplex {
 public:
  FlooredSimplex(const SimplexObjective& objective, std::size_t dim, double floor)
      : objective_(objective), dim_(dim), floor_(floor), scale_(1.0 - floor * dim), w_(dim), m_(dim) {}

  std::vector<double> measure(std::span<const double> theta) {
    angles_to_weights(theta, w_);
    for (std::size_t i = 0; i < dim_; ++i) m_[i] = floor_ + scale_ * w_[i];
    return m_;
  }

  std::vector<double> angles_of(std::span<const double> m) const {
    std::vector<double> w(dim_);
    for (std::size_t i = 0; i < dim_; ++i) w[i] = std::max(0.0, (m[i] - floor_) / scale_);
    double total = std::accumulate(w.begin(), w.end(), 0.0);
    if (total <= 0.0) std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(dim_));
    else
      for (double& v : w) v /= total;
    return weights_to_angles(w);
  }

  double operator()(std::span<const double> theta) {
    ++evaluations;
    angles_to_weights(theta, w_);
    for (std::size_t i = 0; i < dim_; ++i) m_[i] = floor_ + scale_ * w_[i];
    double v = objective_(m_);
    if (std::isnan(v)) throw Error(ErrorCode::ObjectiveNaN, "objective returned NaN");
    return v;
  }

  std::size_t evaluations = 0;

 private:
  const SimplexObjective& objective_;
  std::size_t dim_;
  double floor_;
  double scale_;
  std::vector<double> w_;
  std::vector<double> m_;
};

struct NmPoint {
  std::vector<double> x;
  double f;
};

// Nelder-Mead with dimension-adapted coefficients, restarted from the best
// vertex until a restart yields no further improvement.
NmPoint nelder_mead(FlooredSimplex& fn, std::vector<double> start, std::size_t budget) {
  const std::size_t d = start.size();
  const double dd = static_cast<double>(d);
  const double alpha = 1.0;
  const double gamma = 1.0 + 2.0 / dd;
  const double rho = 0.75 - 1.0 / (2.0 * dd);
  const double sigma = 1.0 - 1.0 / dd;

  const std::size_t stop_at = fn.evaluations + budget;
  NmPoint best{start, fn(start)};

  for (int restart = 0; restart < 4 && fn.evaluations < stop_at; ++restart) {
    std::vector<NmPoint> simplex;
    simplex.push_back(best);
    for (std::size_t i = 0; i < d; ++i) {
      auto x = best.x;
      x[i] += 0.2;
      simplex.push_back({x, fn(x)});
    }

    std::vector<double> centroid(d), xr(d), xe(d), xc(d);
    while (fn.evaluations < stop_at) {
      std::sort(simplex.begin(), simplex.end(), [](const NmPoint& a, const NmPoint& b) { return a.f < b.f; });
      const double f_lo = simplex.front().f;
      const double f_hi = simplex.back().f;
      double size = 0.0;
      for (std::size_t k = 1; k <= d; ++k)
        for (std::size_t i = 0; i < d; ++i)
          size = std::max(size, std::abs(simplex[k].x[i] - simplex[0].x[i]));
      if (f_hi - f_lo <= 1e-14 * (1.0 + std::abs(f_lo)) && size <= 1e-9) break;
      if (size <= 1e-13) break;

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i) centroid[i] += simplex[k].x[i] / dd;

      const auto& worst = simplex.back();
      for (std::size_t i = 0; i < d; ++i) xr[i] = centroid[i] + alpha * (centroid[i] - worst.x[i]);
      const double fr = fn(xr);

      if (fr < simplex[0].f) {
        for (std::size_t i = 0; i < d; ++i) xe[i] = centroid[i] + gamma * (xr[i] - centroid[i]);
        const double fe = fn(xe);
        simplex.back() = fe < fr ? NmPoint{xe, fe} : NmPoint{xr, fr};
        continue;
      }
      if (fr < simplex[d - 1].f) {
        simplex.back() = {xr, fr};
        continue;
      }
      const bool outside = fr < worst.f;
      for (std::size_t i = 0; i < d; ++i) {
        xc[i] = outside ? centroid[i] + rho * (xr[i] - centroid[i])
                        : centroid[i] + rho * (worst.x[i] - centroid[i]);
      }
      const double fc = fn(xc);
      if (fc < (outside ? fr : worst.f)) {
        simplex.back() = {xc, fc};
        continue;
      }
      for (std::size_t k = 1; k <= d; ++k) {
        for (std::size_t i = 0; i < d; ++i)
          simplex[k].x[i] = simplex[0].x[i] + sigma * (simplex[k].x[i] - simplex[0].x[i]);
        simplex[k].f = fn(simplex[k].x);
      }
    }
    auto it = std::min_element(simplex.begin(), simplex.end(),
                               [](const NmPoint& a, const NmPoint& b) { return a.f < b.f; });
    const bool improved = it->f < best.f - 1e-14 * (1.0 + std::abs(best.f));
    if (it->f < best.f) best = *it;
    if (!improved && restart > 0) break;
  }
  return best;
}

}  // namespace

SimplexResult minimize_over_simplex(const SimplexObjective& objective, std::size_t dim,
                                    const SimplexOptions& options) {
  if (dim == 0) throw Error(ErrorCode::BadParams, "simplex dimension must be positive");
  if (!(options.floor >= 1e-8 && options.floor <= 1e-2)) {
    throw Error(ErrorCode::BadParams, "mass floor must lie in [1e-8, 1e-2]");
  }
  if (options.floor * static_cast<double>(dim) >= 1.0) {
    throw Error(ErrorCode::BadParams, "mass floor too large for dimension " + std::to_string(dim));
  }

  SimplexResult result;
  if (dim == 1) {
    result.measure = {1.0};
    result.value = objective(result.measure);
    if (std::isnan(result.value)) throw Error(ErrorCode::ObjectiveNaN, "objective returned NaN");
    result.starts = 1;
    result.evaluations = 1;
    return result;
  }

  FlooredSimplex fn(objective, dim, options.floor);
  std::vector<std::vector<double>> starts;
  const double n = static_cast<double>(dim);
  starts.push_back(weights_to_angles(std::vector<double>(dim, 1.0 / n)));

  std::mt19937_64 rng(options.seed);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) pairs.emplace_back(i, j);
  if (pairs.size() > options.max_pair_starts) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(options.max_pair_starts);
  }
  for (auto [i, j] : pairs) {
    std::vector<double> w(dim, dim > 2 ? 0.1 / (n - 2.0) : 0.0);
    w[i] = w[j] = dim > 2 ? 0.45 : 0.5;
    starts.push_back(weights_to_angles(w));
  }

  // At least eight starts in total.
  std::size_t random_starts = options.random_starts;
  if (starts.size() + random_starts + options.extra_starts.size() < 8) {
    random_starts = 8 - starts.size() - options.extra_starts.size();
  }
  std::exponential_distribution<double> expo(1.0);
  for (std::size_t r = 0; r < random_starts; ++r) {
    std::vector<double> w(dim);
    for (double& v : w) v = expo(rng);
    double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (double& v : w) v /= total;
    starts.push_back(weights_to_angles(w));
  }
  for (const auto& m : options.extra_starts) {
    if (m.size() != dim) throw Error(ErrorCode::LengthMismatch, "extra start has wrong dimension");
    starts.push_back(fn.angles_of(m));
  }

  bool have_best = false;
  NmPoint best{{}, std::numeric_limits<double>::infinity()};
  for (std::size_t s = 0; s < starts.size(); ++s) {
    NmPoint p = nelder_mead(fn, starts[s], options.max_evaluations_per_start);
    if (!have_best || p.f < best.f) {
      best = std::move(p);
      result.best_start = s;
      have_best = true;
    }
  }
  result.measure = fn.measure(best.x);
  result.value = best.f;
  result.starts = starts.size();
  result.evaluations = fn.evaluations;
  return result;
}

}  // namespace gpc
