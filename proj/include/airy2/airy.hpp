// SPDX-License-Identifier: Apache-2.0
//
// Airy function Ai, its first derivative, and higher derivatives through the
// three-term recursion Ai^(n) = (n-2) Ai^(n-3) + x Ai^(n-2).
#pragma once

namespace airy2 {
namespace airy {

/// Ai(x), accurate to better than 1e-12 absolute on [-15, 20].
double airy_ai(double x);

/// Ai'(x), same accuracy contract as airy_ai.
double airy_ai_prime(double x);

/// Ai^(n)(x) for n >= 0. n = 2 is x*Ai(x); higher orders reduce to
/// polynomial combinations of Ai and Ai' via the recursion, never numerical
/// differentiation.
double airy_derivative(int n, double x);

}  // namespace airy
}  // namespace airy2
