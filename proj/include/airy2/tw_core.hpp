// SPDX-License-Identifier: Apache-2.0
//
// Tracy-Widom GUE machinery: F2, the density f2 and its derivatives through
// order 8, the u_{j,k} tail-integral table with its q_n hierarchy, moments,
// and the identity suite relating u-combinations to f2 derivatives.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "airy2/numerics.hpp"
#include "airy2/painleve2.hpp"

namespace airy2 {
namespace tw {

struct TWProfile {
  double s_min = 0.0;
  double s_max = 0.0;
  numerics::GridFunction F2;
  std::array<numerics::GridFunction, 9> f2_derivs;  // f2^(k), k = 0..8

  double F2_at(double s) const { return F2(s); }
  double f2_at(double s, int k = 0) const { return f2_derivs.at(k)(s); }
  const std::vector<double>& grid() const { return F2.grid(); }
};

/// u_{j,k}(s) = int_s^inf q_j q_k dx for j + k <= 8, plus the q_n hierarchy
/// q_0 = q, q_1 = q' + u00 q, q_n = (n-2) q_{n-3} + s q_{n-2}
///                                  - u_{n-2,1} q_0 + u_{n-2,0} q_1.
class UTable {
 public:
  /// Symmetrized accessor; throws std::invalid_argument past j + k > 8.
  const numerics::GridFunction& u(int j, int k) const;
  const numerics::GridFunction& qn(int n) const { return q_[n]; }

  double u_at(int j, int k, double s) const { return u(j, k)(s); }

 private:
  friend UTable build_u_table(const painleve::HMSolution& sol);
  std::array<numerics::GridFunction, 25> entries_;  // (j,k), j >= k, j+k <= 8
  std::array<numerics::GridFunction, 9> q_;
};

struct MomentSet {
  std::array<double, 5> mu{};  // mu_0 .. mu_4
  double variance = 0.0;       // mu_2 - mu_1^2
};

/// F2 on the solution grid from the double tail integral:
/// F2 = exp(-int_s u00), u00 = int_s q^2.
numerics::GridFunction build_F2(const painleve::HMSolution& sol);

UTable build_u_table(const painleve::HMSolution& sol);

/// f2^(k) = P_k(s, q, q', u00) F2 with exact integer-coefficient polynomials
/// generated by the derivation recurrence
///   P_0 = u00,
///   P_{k+1} = dP_k/ds + q' dP_k/dq + (s q + 2 q^3) dP_k/dq' - q^2 dP_k/du00
///             + u00 P_k.
std::vector<numerics::GridFunction> f2_derivative_chain(const painleve::HMSolution& sol);

TWProfile build_profile(const painleve::HMSolution& sol);

/// Names accepted by verify_identity: the table rows "j,k", the extra
/// eighth-order identity "8th", and "A", "B", "C".
const std::vector<std::string>& identity_names();

/// Max absolute residual of the named identity on s in [-6, 4].
double verify_identity(const TWProfile& profile, const UTable& utable,
                       const std::string& id);

MomentSet moments(const TWProfile& profile, int n_max = 4);

}  // namespace tw
}  // namespace airy2
