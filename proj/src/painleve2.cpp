// SPDX-License-Identifier: Apache-2.0
#include "airy2/painleve2.hpp"

#include <algorithm>
#include <cmath>

#include "airy2/airy.hpp"

namespace airy2 {
namespace painleve {

using numerics::DenseMatrix;
using numerics::GridFunction;
using numerics::PanelGrid;

namespace {

// Robin closure at the left boundary: q'/q of sqrt(-s/2) (1 + s^-3/8 - 73 s^-6/128)
double left_log_derivative(double s) {
  const double s3 = 1.0 / (s * s * s);
  const double w = 1.0 + 0.125 * s3 - (73.0 / 128.0) * s3 * s3;
  const double wp = -0.375 * s3 / s + (438.0 / 128.0) * s3 * s3 / s;
  return 0.5 / s + wp / w;
}

double initial_guess(double s) {
  if (s >= 0.0) return airy::airy_ai(s);
  return std::sqrt(-0.5 * s) + airy::airy_ai(0.0) * std::exp(3.0 * s);
}

struct Collocation {
  PanelGrid grid;
  std::vector<std::vector<double>> D;   // reference first-derivative matrix
  std::vector<std::vector<double>> D2;  // reference second-derivative matrix
  double dscale;                        // 2 / h
  double robin;                         // left Robin coefficient
  double ai_right;                      // Dirichlet value at s_max

  Collocation(double s_min, double s_max, int panels, int order)
      : grid(s_min, s_max, panels, order) {
    D = numerics::cheb::diff_matrix(order);
    const int p = order;
    D2.assign(p + 1, std::vector<double>(p + 1, 0.0));
    for (int i = 0; i <= p; ++i)
      for (int j = 0; j <= p; ++j) {
        double s = 0.0;
        for (int k = 0; k <= p; ++k) s += D[i][k] * D[k][j];
        D2[i][j] = s;
      }
    dscale = 2.0 / grid.panel_width();
    robin = left_log_derivative(s_min);
    ai_right = airy::airy_ai(s_max);
  }

  // row classification: 0 = left BC, N-1 = right BC, multiples of p are
  // interface continuity rows, the rest collocate the ODE
  void residual(const std::vector<double>& q, std::vector<double>& F) const {
    const int p = grid.order;
    const size_t n = grid.size();
    F.assign(n, 0.0);
    const double d2s = dscale * dscale;
    for (int pn = 0; pn < grid.panels; ++pn) {
      const size_t base = static_cast<size_t>(pn) * p;
      for (int i = 1; i < p; ++i) {
        long double acc = 0.0L;
        for (int j = 0; j <= p; ++j) acc += (long double)D2[i][j] * q[base + j];
        const size_t gi = base + i;
        const long double s = grid.nodes[gi];
        acc = acc * d2s - s * q[gi] - 2.0L * (long double)q[gi] * q[gi] * q[gi];
        F[gi] = static_cast<double>(acc);
      }
    }
    // interface rows: spectral derivative continuity
    for (int pn = 1; pn < grid.panels; ++pn) {
      const size_t gi = static_cast<size_t>(pn) * p;
      long double dl = 0.0L, dr = 0.0L;
      for (int j = 0; j <= p; ++j) {
        dl += (long double)D[p][j] * q[gi - p + j];
        dr += (long double)D[0][j] * q[gi + j];
      }
      F[gi] = static_cast<double>((dl - dr) * dscale);
    }
    // left Robin: q'(s_min) - robin * q(s_min) = 0
    {
      long double dq = 0.0L;
      for (int j = 0; j <= p; ++j) dq += (long double)D[0][j] * q[j];
      F[0] = static_cast<double>(dq * dscale - (long double)robin * q[0]);
    }
    F[n - 1] = q[n - 1] - ai_right;
  }

  DenseMatrix jacobian(const std::vector<double>& q) const {
    const int p = grid.order;
    const int n = static_cast<int>(grid.size());
    DenseMatrix J(n, n, 0.0);
    const double d2s = dscale * dscale;
    for (int pn = 0; pn < grid.panels; ++pn) {
      const int base = pn * p;
      for (int i = 1; i < p; ++i) {
        const int gi = base + i;
        for (int j = 0; j <= p; ++j) J(gi, base + j) += d2s * D2[i][j];
        J(gi, gi) -= grid.nodes[gi] + 6.0 * q[gi] * q[gi];
      }
    }
    for (int pn = 1; pn < grid.panels; ++pn) {
      const int gi = pn * p;
      for (int j = 0; j <= p; ++j) {
        J(gi, gi - p + j) += dscale * D[p][j];
        J(gi, gi + j) -= dscale * D[0][j];
      }
    }
    for (int j = 0; j <= p; ++j) J(0, j) += dscale * D[0][j];
    J(0, 0) -= robin;
    J(n - 1, n - 1) = 1.0;
    return J;
  }
};

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// per-panel spectral second derivative, averaged at shared interface nodes
std::vector<double> panel_second_derivative(const PanelGrid& g,
                                            const std::vector<double>& v) {
  const int p = g.order;
  const auto D = numerics::cheb::diff_matrix(p);
  std::vector<std::vector<double>> D2(p + 1, std::vector<double>(p + 1, 0.0));
  for (int i = 0; i <= p; ++i)
    for (int j = 0; j <= p; ++j) {
      double s = 0.0;
      for (int k = 0; k <= p; ++k) s += D[i][k] * D[k][j];
      D2[i][j] = s;
    }
  const double d2s = std::pow(2.0 / g.panel_width(), 2);
  std::vector<double> out(g.size(), 0.0), count(g.size(), 0.0);
  for (int pn = 0; pn < g.panels; ++pn) {
    const size_t base = static_cast<size_t>(pn) * p;
    for (int i = 0; i <= p; ++i) {
      long double acc = 0.0L;
      for (int j = 0; j <= p; ++j) acc += (long double)D2[i][j] * v[base + j];
      out[base + i] += static_cast<double>(acc) * d2s;
      count[base + i] += 1.0;
    }
  }
  for (size_t i = 0; i < out.size(); ++i) out[i] /= count[i];
  return out;
}

}  // namespace

HMSolution solve_hastings_mcleod(double s_min, double s_max, double tol,
                                 int panels, int order) {
  if (!(s_min < -6.0) || !(s_max > 6.0))
    throw std::invalid_argument("solve_hastings_mcleod: domain must cover [-6, 6]");
  if (!(tol >= 1e-13 && tol <= 1e-6))
    throw std::invalid_argument("solve_hastings_mcleod: tol outside [1e-13, 1e-6]");
  if (panels < 8 || order < 6)
    throw std::invalid_argument("solve_hastings_mcleod: resolution too low");

  Collocation c(s_min, s_max, panels, order);
  const size_t n = c.grid.size();

  std::vector<double> q(n);
  for (size_t i = 0; i < n; ++i) q[i] = initial_guess(c.grid.nodes[i]);

  std::vector<double> F, Ftrial;
  c.residual(q, F);
  double fnorm = inf_norm(F);

  bool converged = false;
  for (int iter = 0; iter < 60; ++iter) {
    if (fnorm <= tol) {
      converged = true;
      break;
    }
    numerics::LuDecomposition lu(c.jacobian(q));
    const auto step = lu.solve(F);

    double lambda = 1.0;
    bool accepted = false;
    std::vector<double> trial(n);
    for (int halving = 0; halving < 14; ++halving) {
      for (size_t i = 0; i < n; ++i) trial[i] = q[i] - lambda * step[i];
      c.residual(trial, Ftrial);
      const double tnorm = inf_norm(Ftrial);
      if (tnorm < fnorm * (1.0 - 1e-4 * lambda) || tnorm <= tol) {
        q = trial;
        F = Ftrial;
        fnorm = tnorm;
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted)
      throw NoConvergenceError("solve_hastings_mcleod: line search stalled");
  }
  if (!converged && fnorm > tol)
    throw NoConvergenceError("solve_hastings_mcleod: Newton did not reach tolerance");

  HMSolution sol;
  sol.s_min = s_min;
  sol.s_max = s_max;
  sol.panels = panels;
  sol.order = order;
  sol.q = numerics::make_grid_function(c.grid, q);
  sol.q_prime = numerics::make_grid_function(c.grid, numerics::derivative(c.grid, q));

  double worst = 0.0;
  for (double r : ode_residual(sol)) worst = std::max(worst, std::abs(r));
  sol.tolerance = worst;
  return sol;
}

double q_eval(const HMSolution& sol, double s) { return sol.q(s); }
double qp_eval(const HMSolution& sol, double s) { return sol.q_prime(s); }

std::vector<double> ode_residual(const HMSolution& sol) {
  const PanelGrid g(sol.s_min, sol.s_max, sol.panels, sol.order);
  const auto& q = sol.q.values();
  const auto qpp = panel_second_derivative(g, q);
  std::vector<double> r(q.size());
  for (size_t i = 0; i < q.size(); ++i)
    r[i] = qpp[i] - g.nodes[i] * q[i] - 2.0 * q[i] * q[i] * q[i];
  return r;
}

}  // namespace painleve
}  // namespace airy2
