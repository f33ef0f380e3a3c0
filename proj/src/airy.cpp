// SPDX-License-Identifier: Apache-2.0
#include "airy2/airy.hpp"

#include <cmath>
#include <stdexcept>

namespace airy2 {
namespace airy {
namespace {

// Ai(0) = 3^{-2/3} / Gamma(2/3),  Ai'(0) = -3^{-1/3} / Gamma(1/3)
constexpr long double kAi0 = 0.3550280538878172392600631860041831763980L;
constexpr long double kAip0 = -0.2588194037928067984051835601892039634793L;

// Power series branch. The two auxiliary series
//   f = sum_k [prod_{i<=k}(3i-2)] x^{3k} / (3k)!
//   g = sum_k [prod_{i<=k}(3i-1)] x^{3k+1} / (3k+1)!
// solve the Airy equation; Ai = Ai(0) f + Ai'(0) g. Accumulated in long
// double with compensated summation, since the alternating terms grow to
// ~exp((2/3)|x|^{3/2}) before the sum collapses.
struct SeriesResult {
  long double ai;
  long double aip;
};

SeriesResult airy_series(double xd) {
  if (xd == 0.0) return {kAi0, kAip0};
  const long double x = xd;
  const long double x3 = x * x * x;

  long double tf = 1.0L;       // f term, k = 0
  long double tg = x;          // g term
  long double tfp = 0.0L;      // f' term (k = 0 vanishes)
  long double tgp = 1.0L;      // g' term

  long double f = tf, g = tg, fp = tfp, gp = tgp;
  long double cf = 0.0L, cg = 0.0L, cfp = 0.0L, cgp = 0.0L;  // Kahan carries

  auto add = [](long double& sum, long double& carry, long double term) {
    const long double y = term - carry;
    const long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  };

  for (int k = 1; k < 300; ++k) {
    const long double k3 = 3.0L * k;
    tf *= x3 / (k3 * (k3 - 1.0L));
    tg *= x3 / ((k3 + 1.0L) * k3);
    tfp = tf * k3 / x;  // d/dx of x^{3k} term
    tgp = tg * (k3 + 1.0L) / x;
    add(f, cf, tf);
    add(g, cg, tg);
    add(fp, cfp, tfp);
    add(gp, cgp, tgp);
    const long double mag = std::abs(tf) + std::abs(tg);
    if (mag < 1e-25L * (std::abs(f) + std::abs(g) + 1.0L)) break;
  }
  return {kAi0 * f + kAip0 * g, kAi0 * fp + kAip0 * gp};
}

// Asymptotic coefficients u_k (and v_k = -(6k+1)/(6k-1) u_k) of the standard
// large-argument expansions.
constexpr int kMaxAsym = 60;

long double asym_u(int k) {
  static long double u[kMaxAsym + 1];
  static bool init = false;
  if (!init) {
    u[0] = 1.0L;
    for (int j = 1; j <= kMaxAsym; ++j) {
      u[j] = u[j - 1] * (6.0L * j - 5.0L) * (6.0L * j - 3.0L) * (6.0L * j - 1.0L) /
             ((2.0L * j - 1.0L) * 216.0L * j);
    }
    init = true;
  }
  return u[k];
}

long double asym_v(int k) {
  if (k == 0) return 1.0L;
  return asym_u(k) * (6.0L * k + 1.0L) / (1.0L - 6.0L * k);
}

SeriesResult airy_asymptotic_right(double xd) {
  const long double x = xd;
  const long double zeta = 2.0L / 3.0L * x * std::sqrt(x);
  long double sa = 0.0L, sb = 0.0L;
  long double pow_z = 1.0L;  // (-1/zeta)^k
  long double prev = 1e30L;
  for (int k = 0; k <= kMaxAsym; ++k) {
    const long double ta = asym_u(k) * pow_z;
    const long double tb = asym_v(k) * pow_z;
    if (std::abs(ta) > prev) break;  // divergent tail reached
    sa += ta;
    sb += tb;
    prev = std::abs(ta);
    pow_z *= -1.0L / zeta;
    if (prev < 1e-22L) break;
  }
  const long double pref = std::exp(-zeta) / (2.0L * std::sqrt((long double)M_PI));
  const long double x14 = std::pow(x, 0.25L);
  return {pref / x14 * sa, -pref * x14 * sb};
}

SeriesResult airy_asymptotic_left(double xd) {
  const long double z = -static_cast<long double>(xd);
  const long double zeta = 2.0L / 3.0L * z * std::sqrt(z);
  // even/odd splits of the u and v series
  long double ue = 0.0L, uo = 0.0L, ve = 0.0L, vo = 0.0L;
  long double pow_z = 1.0L;  // zeta^{-k}
  long double prev = 1e30L;
  for (int k = 0; k <= kMaxAsym; ++k) {
    const long double tu = asym_u(k) * pow_z;
    const long double tv = asym_v(k) * pow_z;
    if (std::abs(tu) > prev) break;
    const long double sgn = ((k / 2) % 2 == 0) ? 1.0L : -1.0L;  // (-1)^{floor(k/2)}
    if (k % 2 == 0) {
      ue += sgn * tu;
      ve += sgn * tv;
    } else {
      uo += sgn * tu;
      vo += sgn * tv;
    }
    prev = std::abs(tu);
    pow_z /= zeta;
    if (prev < 1e-22L) break;
  }
  const long double phase = zeta - (long double)M_PI / 4.0L;
  const long double c = std::cos(phase), s = std::sin(phase);
  const long double z14 = std::pow(z, 0.25L);
  const long double rpi = std::sqrt((long double)M_PI);
  const long double ai = (c * ue + s * uo) / (rpi * z14);
  const long double aip = z14 / rpi * (s * ve - c * vo);
  return {ai, aip};
}

SeriesResult airy_pair(double x) {
  if (x > 6.5) return airy_asymptotic_right(x);
  if (x < -8.0) return airy_asymptotic_left(x);
  return airy_series(x);
}

}  // namespace

double airy_ai(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("airy_ai: non-finite argument");
  if (x > 108.0) return 0.0;  // exp(-zeta) underflows
  return static_cast<double>(airy_pair(x).ai);
}

double airy_ai_prime(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("airy_ai_prime: non-finite argument");
  if (x > 108.0) return -0.0;
  return static_cast<double>(airy_pair(x).aip);
}

double airy_derivative(int n, double x) {
  if (n < 0) throw std::invalid_argument("airy_derivative: order must be >= 0");
  const SeriesResult base = airy_pair(x);
  if (n == 0) return static_cast<double>(base.ai);
  if (n == 1) return static_cast<double>(base.aip);
  // v[m] = Ai^(m)(x); Ai'' = x Ai, then the recursion upward
  double vm3 = static_cast<double>(base.ai);   // Ai^(n-3) along the way
  double vm2 = static_cast<double>(base.aip);  // Ai^(n-2)
  double vm1 = x * vm3;                        // Ai^(n-1) = Ai''
  if (n == 2) return vm1;
  for (int m = 3; m <= n; ++m) {
    const double v = (m - 2) * vm3 + x * vm2;
    vm3 = vm2;
    vm2 = vm1;
    vm1 = v;
  }
  return vm1;
}

}  // namespace airy
}  // namespace airy2
