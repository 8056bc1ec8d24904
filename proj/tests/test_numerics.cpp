#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gpc/error.hpp"
#include "gpc/numerics.hpp"
#include "test_support.hpp"

using namespace gpc;
using gpc::testing::Rng;

namespace {

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double inf_norm(std::span<const double> a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST_CASE("solve_spd examples") {
  auto x = solve_spd(SymmetricMatrix::identity(2), std::vector<double>{1.0, 2.0});
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(2.0));

  x = solve_spd(SymmetricMatrix::diagonal(std::vector<double>{2.0, 4.0}), std::vector<double>{2.0, 4.0});
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(1.0));

  auto a = SymmetricMatrix::from_rows({{2.0, -1.0}, {-1.0, 2.0}});
  x = solve_spd(a, std::vector<double>{1.0, 0.0});
  CHECK(x[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  auto singular = SymmetricMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}});
  CHECK_THROWS_AS(solve_spd(singular, std::vector<double>{1.0, 0.0}), Error);
  CHECK_THROWS_AS(SymmetricMatrix::from_rows({{1.0, 2.0}, {0.0, 1.0}}), Error);
}

TEST_CASE("solve_spd residual on random SPD matrices") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = gpc::testing::uniform_index(rng, 1, 30);
    auto a = gpc::testing::random_spd(rng, n);
    auto rhs = gpc::testing::random_vector(rng, n, -5.0, 5.0);
    auto x = solve_spd(a, rhs);
    auto back = a.multiply(x);
    CHECK(max_abs_diff(back, rhs) <= 1e-9 * (1.0 + inf_norm(rhs)));
  }
}

TEST_CASE("symmetric_eigen examples") {
  auto s = symmetric_eigen(SymmetricMatrix::diagonal(std::vector<double>{3.0, 1.0, 2.0}));
  CHECK(s.eigenvalues == std::vector<double>{1.0, 2.0, 3.0});

  s = symmetric_eigen(SymmetricMatrix(2));
  CHECK(s.eigenvalues == std::vector<double>{0.0, 0.0});

  auto k3 = SymmetricMatrix::from_rows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  s = symmetric_eigen(k3);
  CHECK(std::abs(s.eigenvalues[0]) <= 1e-14);
  CHECK(s.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(s.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("eigenvalue trace and determinant identities") {
  Rng rng(22);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = gpc::testing::uniform_index(rng, 1, 6);
    auto a = gpc::testing::random_symmetric(rng, n, 3.0);
    auto s = symmetric_eigen(a, false);
    CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
    double sum = 0.0, prod = 1.0;
    for (double l : s.eigenvalues) {
      sum += l;
      prod *= l;
    }
    CHECK(std::abs(sum - a.trace()) <= 1e-9 * (1.0 + std::abs(a.trace())));
    const double det = gpc::testing::cofactor_det(gpc::testing::rows_of(a));
    CHECK(std::abs(prod - det) <= 1e-8 * std::max(1.0, std::abs(det)));
  }
}

TEST_CASE("eigenvector residuals and larger matrices") {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = gpc::testing::uniform_index(rng, 10, 50);
    auto a = gpc::testing::random_symmetric(rng, n);
    auto s = symmetric_eigen(a, true);
    for (std::size_t k = 0; k < n; ++k) {
      auto v = s.eigenvector(k);
      auto av = a.multiply(v);
      double r = 0.0;
      for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(av[i] - s.eigenvalues[k] * v[i]));
      CHECK(r <= 1e-10 * a.frobenius());
    }
  }
}

TEST_CASE("jacobi against characteristic polynomial roots") {
  Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = gpc::testing::uniform_index(rng, 1, 4);
    auto a = gpc::testing::random_symmetric(rng, n, 2.0);
    auto s = symmetric_eigen(a, false);
    auto roots = gpc::testing::charpoly_eigenvalues(a);
    REQUIRE(roots.size() == n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(roots[i] - s.eigenvalues[i]) <= 1e-10);
  }
}

TEST_CASE("nonnegative ellipsoid maximization examples") {
  auto id2 = SymmetricMatrix::identity(2);
  auto sol = max_linear_over_nonneg_ellipsoid(id2, std::vector<double>{1.0, 0.0});
  CHECK(sol.value == doctest::Approx(1.0));
  CHECK(sol.argmax[0] == doctest::Approx(1.0));
  CHECK(std::abs(sol.argmax[1]) <= 1e-12);

  sol = max_linear_over_nonneg_ellipsoid(id2, std::vector<double>{1.0, -1.0});
  CHECK(sol.value == doctest::Approx(1.0));
  CHECK(sol.argmax[0] == doctest::Approx(1.0));
  CHECK(std::abs(sol.argmax[1]) <= 1e-12);

  auto q1 = SymmetricMatrix::from_rows({{2.0}});
  CHECK(max_linear_over_nonneg_ellipsoid(q1, std::vector<double>{1.0}).value ==
        doctest::Approx(1.0 / std::sqrt(2.0)));

  CHECK(active_set_oracle(id2, std::vector<double>{1.0, 1.0}) == doctest::Approx(std::sqrt(2.0)));
  CHECK(active_set_oracle(id2, std::vector<double>{-1.0, 0.0}) == 0.0);
  CHECK(max_linear_over_nonneg_ellipsoid(id2, std::vector<double>{-1.0, -2.0}).value == 0.0);
  CHECK(active_set_oracle(q1, std::vector<double>{1.0}) == doctest::Approx(1.0 / std::sqrt(2.0)));

  CHECK_THROWS_AS(active_set_oracle(SymmetricMatrix::identity(13), std::vector<double>(13, 1.0)), Error);
  CHECK_THROWS_AS(max_linear_over_nonneg_ellipsoid(SymmetricMatrix(2), std::vector<double>{1.0, 0.0}), Error);
}

TEST_CASE("ellipsoid maximizer agrees with the support oracle") {
  Rng rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gpc::testing::uniform_index(rng, 1, 12);
    auto q = gpc::testing::random_spd(rng, n, gpc::testing::uniform(rng, 0.01, 1.0));
    auto c = gpc::testing::random_vector(rng, n);
    auto sol = max_linear_over_nonneg_ellipsoid(q, c);
    const double oracle = active_set_oracle(q, c);
    CHECK(std::abs(sol.value - oracle) <= 1e-6 * std::max(1.0, oracle));

    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(sol.argmax[i] >= -1e-10);
      dot += c[i] * sol.argmax[i];
    }
    CHECK(q.quadratic_form(sol.argmax) <= 1.0 + 1e-9);
    CHECK(std::abs(dot - sol.value) <= 1e-9 * std::max(1.0, sol.value));
  }
}

TEST_CASE("ellipsoid maximizer dominates random feasible points") {
  Rng rng(26);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = gpc::testing::uniform_index(rng, 2, 6);
    auto q = gpc::testing::random_spd(rng, n);
    auto c = gpc::testing::random_vector(rng, n);
    const double best = max_linear_over_nonneg_ellipsoid(q, c).value;
    double sampled = 0.0;
    for (int s = 0; s < 100000; ++s) {
      auto f = gpc::testing::random_vector(rng, n, 0.0, 1.0);
      const double scale = std::sqrt(q.quadratic_form(f));
      double v = 0.0;
      for (std::size_t i = 0; i < n; ++i) v += c[i] * f[i] / scale;
      sampled = std::max(sampled, v);
    }
    CHECK(best >= sampled - 1e-12);
  }
}

TEST_CASE("simplex search examples") {
  SimplexOptions opts;
  opts.floor = 1e-3;
  auto inv_sum = [](std::span<const double> m) {
    double s = 0.0;
    for (double x : m) s += 1.0 / x;
    return s;
  };
  auto res = minimize_over_simplex(inv_sum, 2, opts);
  CHECK(res.value == doctest::Approx(4.0).epsilon(1e-8));
  CHECK(res.measure[0] == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(res.starts >= 3);

  res = minimize_over_simplex(inv_sum, 4, opts);
  CHECK(res.value == doctest::Approx(16.0).epsilon(1e-8));
  double total = 0.0;
  for (double m : res.measure) {
    CHECK(m >= opts.floor - 1e-15);
    total += m;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

  res = minimize_over_simplex([](std::span<const double>) { return 7.5; }, 3, opts);
  CHECK(res.value == 7.5);
  CHECK(res.best_start == 0);

  // Linear objective: minimum at the vertex with all spare mass on coordinate 2.
  res = minimize_over_simplex([](std::span<const double> m) { return m[0] + 2.0 * m[1] + 0.5 * m[2]; }, 3, opts);
  CHECK(res.value == doctest::Approx(3.0 * opts.floor + 0.5 * (1.0 - 2.0 * opts.floor)).epsilon(1e-8));

  res = minimize_over_simplex(inv_sum, 1, opts);
  CHECK(res.measure == std::vector<double>{1.0});

  CHECK_THROWS_AS(minimize_over_simplex([](std::span<const double>) { return std::nan(""); }, 3, opts), Error);
  opts.floor = 0.5;
  CHECK_THROWS_AS(minimize_over_simplex(inv_sum, 3, opts), Error);
}
