// SPDX-License-Identifier: Apache-2.0
#include "airy2/tw_core.hpp"

#include <cmath>
#include <stdexcept>

#include "airy2/painleve2.hpp"
#include "doctest.h"

using namespace airy2;
using tw::MomentSet;
using tw::TWProfile;
using tw::UTable;

namespace {

struct Fixture {
  painleve::HMSolution sol;
  TWProfile profile;
  UTable utable;
  Fixture()
      : sol(painleve::solve_hastings_mcleod()),
        profile(tw::build_profile(sol)),
        utable(tw::build_u_table(sol)) {}
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

// independent 30-digit references from the Taylor-integrated solution
struct TailRef {
  double s, u00, F2;
};
const TailRef kTailTable[] = {
    {-6.0, 9.02094813068326608726, 1.062254674124451068774e-8},
    {-4.0, 4.03193243286129027703, 0.00354455359550920029634},
    {-2.0, 1.068141370409660392346, 0.4132241425051225546881},
    {-1.7, 0.8012343765815426428675, 0.546338269088593005557},
    {0.0, 0.06909138070892340238924, 0.9693728283552626683499},
    {2.0, 0.0003792417560265291810689, 0.999887553698309172925},
    {4.0, 2.143793307641122138896e-7, 0.9999999504208784666895},
};

// Reference high-precision moments of f2
constexpr double kMu1 = -1.771086807411601626;
constexpr double kMu2 = 3.949943272220377513;
constexpr double kMu3 = -9.711844753027647354;
constexpr double kMu4 = 26.025435426839994565;

double rich_diff(const numerics::GridFunction& f, double s, double h) {
  auto d = [&](double hh) { return (f(s + hh) - f(s - hh)) / (2.0 * hh); };
  return (4.0 * d(h / 2) - d(h)) / 3.0;
}

}  // namespace

TEST_CASE("F2 and u00 against the independent tail-integral oracle") {
  for (const auto& r : kTailTable) {
    INFO("s = ", r.s);
    CHECK(std::abs(fx().profile.F2_at(r.s) - r.F2) < 1e-9);
    CHECK(std::abs(fx().utable.u_at(0, 0, r.s) - r.u00) < 1e-9);
  }
}

TEST_CASE("F2 boundary behaviour and monotonicity") {
  const auto& p = fx().profile;
  CHECK(std::abs(p.F2_at(p.s_max) - 1.0) < 1e-10);
  CHECK(p.F2_at(p.s_min) < 1e-12);
  const auto& v = p.F2.values();
  for (size_t i = 1; i < v.size(); ++i) CHECK(v[i] >= v[i - 1] - 1e-14);
  for (double f2v : p.f2_derivs[0].values()) CHECK(f2v >= -1e-12);
}

TEST_CASE("median sits near -1.74 and halves the mass") {
  const auto& p = fx().profile;
  double lo = -4.0, hi = 0.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (p.F2_at(mid) < 0.5 ? lo : hi) = mid;
  }
  const double median = 0.5 * (lo + hi);
  CHECK(median > -1.8);
  CHECK(median < -1.7);
  // quadrature oracle: mass below the median is one half
  const auto rule = numerics::gauss_legendre(240, p.s_min, median);
  double mass = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    mass += rule.weights[i] * p.f2_at(rule.nodes[i]);
  CHECK(mass == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("two-route u00: closed form vs tail integral") {
  const auto& sol = fx().sol;
  for (int i = 0; i <= 52; ++i) {
    const double s = -8.0 + 13.0 * i / 52.0;
    const double q = painleve::q_eval(sol, s);
    const double qp = painleve::qp_eval(sol, s);
    const double closed = qp * qp - s * q * q - q * q * q * q;
    CHECK(std::abs(closed - fx().utable.u_at(0, 0, s)) < 1e-8);
  }
}

TEST_CASE("u00 equals a direct quadrature of q^2") {
  const auto& sol = fx().sol;
  for (double s : {-6.0, -3.0, 0.0, 2.0}) {
    const auto rule = numerics::gauss_legendre(240, s, sol.s_max);
    double tail = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const double q = painleve::q_eval(sol, rule.nodes[i]);
      tail += rule.weights[i] * q * q;
    }
    CHECK(std::abs(tail - fx().utable.u_at(0, 0, s)) < 1e-8);
  }
}

TEST_CASE("printed closed forms for u10, u11, u20") {
  const auto& sol = fx().sol;
  const auto& t = fx().utable;
  for (int i = 0; i <= 40; ++i) {
    const double s = -8.0 + 13.0 * i / 40.0;
    const double q = painleve::q_eval(sol, s);
    const double qp = painleve::qp_eval(sol, s);
    const double u00 = t.u_at(0, 0, s);
    CHECK(std::abs(t.u_at(1, 0, s) - (0.5 * u00 * u00 - 0.5 * q * q)) < 1e-8);
    const double u11 = u00 * u00 * u00 / 3.0 - (q * q + s / 3.0) * u00 -
                       2.0 / 3.0 * q * qp;
    CHECK(std::abs(t.u_at(1, 1, s) - u11) < 1e-8);
    // the derivative-consistent reading of the u20 closed form is
    // (1/2) u11 + (1/2) s u00 (linear in u11; the squared variant fails
    // both the derivative relation and the identity table)
    CHECK(std::abs(t.u_at(2, 0, s) - (0.5 * u11 + 0.5 * s * u00)) < 1e-8);
  }
}

TEST_CASE("u table vanishes at s_max and the accessor symmetrizes") {
  const auto& t = fx().utable;
  const double s_max = fx().sol.s_max;
  for (int j = 0; j <= 8; ++j)
    for (int k = 0; k <= j && j + k <= 8; ++k)
      CHECK(std::abs(t.u_at(j, k, s_max)) <= 1e-10);
  CHECK(&t.u(1, 0) == &t.u(0, 1));
  CHECK(&t.u(5, 3) == &t.u(3, 5));
  CHECK_THROWS_AS(t.u(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(t.u(9, 0), std::invalid_argument);
}

TEST_CASE("u'_{k,j} = -q_k q_j") {
  const auto& t = fx().utable;
  for (int j = 0; j <= 8; ++j) {
    for (int k = 0; k <= j && j + k <= 8; ++k) {
      for (double s : {-7.5, -5.0, -2.5, 0.0, 2.0, 3.5}) {
        const double rhs = -t.qn(j)(s) * t.qn(k)(s);
        const double lhs = rich_diff(t.u(j, k), s, 4e-3);
        const double tol = 1e-7 * std::max(1.0, std::abs(rhs));
        INFO("u(", j, ",", k, ") at s = ", s);
        CHECK(std::abs(lhs - rhs) < tol);
      }
    }
  }
}

TEST_CASE("derivative chain: first derivative closed form") {
  // f2' = (u00^2 - q^2) F2
  const auto& sol = fx().sol;
  const auto& p = fx().profile;
  for (double s : {-6.0, -4.0, -2.0, -0.5, 1.0, 3.0}) {
    const double q = painleve::q_eval(sol, s);
    const double u00 = fx().utable.u_at(0, 0, s);
    const double expect = (u00 * u00 - q * q) * p.F2_at(s);
    CHECK(std::abs(p.f2_at(s, 1) - expect) < 1e-8);
  }
}

TEST_CASE("derivative chain is consistent under numerical differentiation") {
  const auto& p = fx().profile;
  // tail of the density vanishes at the right edge
  CHECK(std::abs(p.f2_at(p.s_max, 0)) < 1e-12);
  for (int k = 0; k + 1 <= 8; ++k) {
    for (double s : {-7.0, -4.5, -2.0, 0.5, 3.0}) {
      const double fd = rich_diff(p.f2_derivs[k], s, 4e-3);
      INFO("k = ", k, " s = ", s);
      CHECK(std::abs(fd - p.f2_at(s, k + 1)) < 1e-6);
    }
  }
}

TEST_CASE("f2^(3) agrees with three-fold differentiation of f2") {
  const auto& p = fx().profile;
  // third-derivative stencil with one Richardson step
  auto d3 = [&](double s, double h) {
    return (p.f2_at(s + 2 * h) - 2.0 * p.f2_at(s + h) + 2.0 * p.f2_at(s - h) -
            p.f2_at(s - 2 * h)) / (2.0 * h * h * h);
  };
  for (double s : {-5.5, -3.0, -1.0, 1.0, 2.8}) {
    const double fd = (4.0 * d3(s, 0.01) - d3(s, 0.02)) / 3.0;
    CHECK(std::abs(fd - p.f2_at(s, 3)) < 1e-5);
  }
}

TEST_CASE("identity suite: every row, the 8th-order identity, A, B, C") {
  for (const auto& name : tw::identity_names()) {
    const double resid = tw::verify_identity(fx().profile, fx().utable, name);
    INFO("identity ", name);
    CHECK(resid <= 1e-6);
  }
  CHECK_THROWS_AS(tw::verify_identity(fx().profile, fx().utable, "9,9"),
                  std::invalid_argument);
}

TEST_CASE("moments against the published high-precision values") {
  const MomentSet m = tw::moments(fx().profile);
  CHECK(std::abs(m.mu[0] - 1.0) < 1e-9);
  CHECK(std::abs(m.mu[1] - kMu1) < 1e-8);
  CHECK(std::abs(m.mu[2] - kMu2) < 1e-8);
  CHECK(std::abs(m.mu[3] - kMu3) < 1e-7);
  CHECK(std::abs(m.mu[4] - kMu4) < 1e-7);
  CHECK(m.variance == doctest::Approx(kMu2 - kMu1 * kMu1).epsilon(1e-9));
  CHECK(m.variance > 0.0);
  CHECK_THROWS_AS(tw::moments(fx().profile, 7), std::invalid_argument);
}

TEST_CASE("moment stability under quadrature refinement") {
  const auto& p = fx().profile;
  for (int n = 0; n <= 4; ++n) {
    auto integral = [&](int pts) {
      const auto rule = numerics::gauss_legendre(pts, p.s_min, p.s_max);
      double acc = 0.0;
      for (size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * std::pow(rule.nodes[i], n) * p.f2_at(rule.nodes[i]);
      return acc;
    };
    CHECK(std::abs(integral(240) - integral(480)) < 1e-10);
  }
}
