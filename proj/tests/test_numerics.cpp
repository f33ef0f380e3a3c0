// SPDX-License-Identifier: Apache-2.0
#include "airy2/numerics.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

using namespace airy2;
using namespace airy2::numerics;

namespace {

// brute-force cofactor expansion, the independent determinant oracle
double det_cofactor(const DenseMatrix& m) {
  const int n = m.rows();
  if (n == 1) return m(0, 0);
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    DenseMatrix sub(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(r - 1, cc++) = m(r, c);
      }
    }
    sum += (j % 2 == 0 ? 1.0 : -1.0) * m(0, j) * det_cofactor(sub);
  }
  return sum;
}

double poly_integral(const std::vector<double>& c, double a, double b) {
  double s = 0.0;
  for (size_t k = 0; k < c.size(); ++k)
    s += c[k] * (std::pow(b, double(k + 1)) - std::pow(a, double(k + 1))) / (k + 1);
  return s;
}

double apply_rule(const QuadratureRule& r, const std::vector<double>& c) {
  double s = 0.0;
  for (size_t i = 0; i < r.nodes.size(); ++i) {
    double v = 0.0, p = 1.0;
    for (size_t k = 0; k < c.size(); ++k) {
      v += c[k] * p;
      p *= r.nodes[i];
    }
    s += r.weights[i] * v;
  }
  return s;
}

}  // namespace

TEST_CASE("gauss_legendre basic rules") {
  auto r1 = gauss_legendre(1, -1.0, 1.0);
  CHECK(r1.nodes.size() == 1);
  CHECK(r1.nodes[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

  auto r2 = gauss_legendre(2, -1.0, 1.0);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-15));

  // 5-point rule integrates x^8 on (0,1) exactly (degree 2n-1 = 9)
  auto r5 = gauss_legendre(5, 0.0, 1.0);
  std::vector<double> x8(9, 0.0);
  x8[8] = 1.0;
  CHECK(apply_rule(r5, x8) == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("gauss_legendre argument validation") {
  CHECK_THROWS_AS(gauss_legendre(0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_legendre(4, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_legendre(4, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("gauss_legendre rule invariants") {
  std::mt19937 rng(2024);
  for (int n : {3, 7, 16, 41, 80}) {
    auto r = gauss_legendre(n, -2.5, 4.0);
    double wsum = 0.0;
    for (size_t i = 0; i < r.nodes.size(); ++i) {
      CHECK(r.nodes[i] > r.a);
      CHECK(r.nodes[i] < r.b);
      if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
      CHECK(r.weights[i] > 0.0);
      wsum += r.weights[i];
    }
    CHECK(wsum == doctest::Approx(r.b - r.a).epsilon(1e-13));

    // exactness on random polynomials of degree <= 2n-1
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::vector<double> c(2 * std::min(n, 12));
    for (auto& v : c) v = coef(rng);
    const double exact = poly_integral(c, r.a, r.b);
    CHECK(apply_rule(r, c) == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("gauss_legendre converges superalgebraically on smooth integrands") {
  auto integrand = [](double z) { return std::exp(-z) * std::cos(3.0 * z); };
  auto value = [&](int n) {
    auto r = gauss_legendre(n, 0.0, 20.0);
    double s = 0.0;
    for (size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * integrand(r.nodes[i]);
    return s;
  };
  const double ref = value(200);
  const double e20 = std::abs(value(20) - ref);
  const double e40 = std::abs(value(40) - ref);
  CHECK(e40 < e20 / 1e4);
  CHECK(e40 < 1e-12);
}

TEST_CASE("determinant basics") {
  CHECK(determinant(DenseMatrix::identity(4)) == doctest::Approx(1.0).epsilon(1e-15));

  DenseMatrix m(2, 2);
  m(0, 0) = 2.0; m(0, 1) = 3.0;
  m(1, 0) = 1.0; m(1, 1) = 4.0;
  CHECK(determinant(m) == doctest::Approx(5.0).epsilon(1e-15));

  DenseMatrix rect(2, 3);
  CHECK_THROWS_AS(determinant(rect), std::invalid_argument);
}

TEST_CASE("determinant matches cofactor expansion on random 6x6") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    DenseMatrix m(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = u(rng);
    const double ref = det_cofactor(m);
    CHECK(determinant(m) == doctest::Approx(ref).epsilon(1e-12));
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 8; ++trial) {
    DenseMatrix a(5, 5), b(5, 5), ab(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        a(i, j) = u(rng);
        b(i, j) = u(rng);
      }
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        double s = 0.0;
        for (int k = 0; k < 5; ++k) s += a(i, k) * b(k, j);
        ab(i, j) = s;
      }
    const double lhs = determinant(ab);
    const double rhs = determinant(a) * determinant(b);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("solve_linear") {
  {
    auto x = solve_linear(DenseMatrix::identity(3), {1.0, -2.0, 3.0});
    CHECK(x[0] == doctest::Approx(1.0));
    CHECK(x[1] == doctest::Approx(-2.0));
    CHECK(x[2] == doctest::Approx(3.0));
  }
  {
    DenseMatrix d(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 4.0;
    auto x = solve_linear(d, {2.0, 8.0});
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(x[1] == doctest::Approx(2.0).epsilon(1e-15));
  }
  {
    // well-conditioned random system: residual check
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    DenseMatrix m(8, 8);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) m(i, j) = u(rng);
      m(i, i) += 6.0;  // diagonally dominant
    }
    std::vector<double> rhs(8);
    double rhs_inf = 0.0;
    for (auto& v : rhs) {
      v = u(rng);
      rhs_inf = std::max(rhs_inf, std::abs(v));
    }
    auto x = solve_linear(m, rhs);
    for (int i = 0; i < 8; ++i) {
      double r = -rhs[i];
      for (int j = 0; j < 8; ++j) r += m(i, j) * x[j];
      CHECK(std::abs(r) <= 1e-10 * rhs_inf);
    }
  }
  {
    DenseMatrix sing(2, 2);
    sing(0, 0) = 1.0; sing(0, 1) = 2.0;
    sing(1, 0) = 2.0; sing(1, 1) = 4.0;
    CHECK_THROWS_AS(solve_linear(sing, {1.0, 1.0}), SingularMatrixError);
  }
  {
    DenseMatrix rect(2, 3);
    CHECK_THROWS_AS(solve_linear(rect, {1.0, 1.0}), std::invalid_argument);
  }
}

TEST_CASE("GridFunction barycentric interpolation on Chebyshev points") {
  auto cheb_pts = [](int n, double a, double b) {
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j)
      x[j] = 0.5 * (a + b) + 0.5 * (b - a) * (-std::cos(M_PI * j / (n - 1.0)));
    return x;
  };

  SUBCASE("x^2 reproduced on [0,1]") {
    auto x = cheb_pts(30, 0.0, 1.0);
    std::vector<double> v(x.size());
    for (size_t i = 0; i < x.size(); ++i) v[i] = x[i] * x[i];
    GridFunction f(x, v, InterpScheme::chebyshev_barycentric);
    CHECK(f(0.37) == doctest::Approx(0.1369).epsilon(1e-10));
    // exact at a node
    CHECK(f(x[11]) == v[11]);
  }

  SUBCASE("exp on 40 points vs direct evaluation") {
    auto x = cheb_pts(40, 0.0, 1.0);
    std::vector<double> v(x.size());
    for (size_t i = 0; i < x.size(); ++i) v[i] = std::exp(x[i]);
    GridFunction f(x, v, InterpScheme::chebyshev_barycentric);
    CHECK(std::abs(f(0.5) - std::exp(0.5)) < 1e-9);
  }

  SUBCASE("out of domain throws") {
    auto x = cheb_pts(10, -1.0, 1.0);
    std::vector<double> v(x.size(), 1.0);
    GridFunction f(x, v, InterpScheme::chebyshev_barycentric);
    CHECK_THROWS_AS(f(1.5), std::domain_error);
    CHECK_THROWS_AS(f(-1.0001), std::domain_error);
  }
}

TEST_CASE("piecewise panels: interpolation, tails, derivatives") {
  PanelGrid g(-3.0, 5.0, 16, 10);
  std::vector<double> v(g.size());
  for (size_t i = 0; i < g.size(); ++i) v[i] = std::sin(g.nodes[i]);

  auto f = make_grid_function(g, v);
  for (double s : {-2.71, -0.4, 0.013, 2.6, 4.99}) {
    CHECK(f(s) == doctest::Approx(std::sin(s)).epsilon(1e-13));
  }

  auto tails = tail_integral(g, v);
  // int_s^5 sin = cos(s) - cos(5)
  for (size_t i = 0; i < g.size(); i += 13) {
    const double expect = std::cos(g.nodes[i]) - std::cos(5.0);
    CHECK(tails[i] == doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(std::abs(tails.back()) < 1e-14);

  CHECK(integrate(g, v) == doctest::Approx(std::cos(-3.0) - std::cos(5.0)).epsilon(1e-13));

  auto d = derivative(g, v);
  for (size_t i = 0; i < g.size(); i += 7) {
    CHECK(d[i] == doctest::Approx(std::cos(g.nodes[i])).epsilon(1e-10));
  }
}
