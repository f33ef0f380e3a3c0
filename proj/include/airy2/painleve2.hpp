// SPDX-License-Identifier: Apache-2.0
//
// Hastings-McLeod solution of Painleve II: q'' = s q + 2 q^3 with
// q(s) ~ Ai(s) as s -> +infinity and q(s) ~ sqrt(-s/2) as s -> -infinity.
#pragma once

#include "airy2/numerics.hpp"

namespace airy2 {
namespace painleve {

struct HMSolution {
  double s_min = 0.0;
  double s_max = 0.0;
  int panels = 0;
  int order = 0;
  numerics::GridFunction q;
  numerics::GridFunction q_prime;
  double tolerance = 0.0;  // achieved max ODE residual on the grid

  const std::vector<double>& grid() const { return q.grid(); }
};

/// Solve the boundary-value problem by Chebyshev collocation on uniform
/// panels with a damped Newton iteration. The right boundary pins q to Ai;
/// the left imposes a Robin closure from the q ~ sqrt(-s/2) expansion.
HMSolution solve_hastings_mcleod(double s_min = -10.0, double s_max = 10.0,
                                 double tol = 1e-11, int panels = 32,
                                 int order = 12);

double q_eval(const HMSolution& sol, double s);
double qp_eval(const HMSolution& sol, double s);

/// Pointwise residual q'' - s q - 2 q^3 at every grid node, with q''
/// reconstructed from the panel differentiation matrices.
std::vector<double> ode_residual(const HMSolution& sol);

}  // namespace painleve
}  // namespace airy2
