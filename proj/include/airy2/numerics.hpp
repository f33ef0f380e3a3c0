// SPDX-License-Identifier: Apache-2.0
//
// Shared numerical kernels: Gauss-Legendre quadrature, dense LU with
// log-determinant accumulation, and barycentric interpolation on Chebyshev
// (single or piecewise) grids.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace airy2 {

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace numerics {

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing, inside (a, b)
  std::vector<double> weights;  // positive, summing to b - a
  double a = 0.0;
  double b = 0.0;
  int order = 0;
};

/// n-point Gauss-Legendre rule mapped affinely to (a, b).
/// Nodes are found by Newton iteration on the Legendre recurrence.
QuadratureRule gauss_legendre(int n, double a, double b);

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, double fill = 0.0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
  double* data() { return e_.data(); }
  const double* data() const { return e_.data(); }

  static DenseMatrix identity(int n);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> e_;  // row-major
};

/// LU with partial pivoting. The determinant is accumulated as
/// sign * exp(sum log|pivot|) so large Nystrom matrices cannot overflow.
class LuDecomposition {
 public:
  explicit LuDecomposition(DenseMatrix m);

  double determinant() const;
  double log_abs_determinant() const { return log_abs_det_; }
  int sign() const { return sign_; }
  bool singular() const { return singular_; }

  /// Back-substitution; throws SingularMatrixError when a pivot fell below
  /// 1e-14 of its row scale.
  std::vector<double> solve(const std::vector<double>& rhs) const;

 private:
  DenseMatrix lu_;
  std::vector<int> perm_;
  std::vector<double> row_scale_;
  double log_abs_det_ = 0.0;
  int sign_ = 1;
  bool singular_ = false;
};

double determinant(const DenseMatrix& m);
std::vector<double> solve_linear(const DenseMatrix& m, const std::vector<double>& rhs);

enum class InterpScheme {
  chebyshev_barycentric,  // one global Chebyshev-spaced grid
  piecewise_chebyshev,    // Chebyshev-Lobatto panels of fixed order
};

/// A sampled function with a fixed interpolation scheme. Interpolation is
/// exact at the grid nodes.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(std::vector<double> grid, std::vector<double> values,
               InterpScheme scheme, int panel_order = 0);

  double operator()(double s) const;
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  InterpScheme scheme() const { return scheme_; }
  int panel_order() const { return panel_order_; }
  double domain_min() const { return grid_.front(); }
  double domain_max() const { return grid_.back(); }

 private:
  std::vector<double> grid_;
  std::vector<double> values_;
  std::vector<double> bary_w_;  // global scheme only
  InterpScheme scheme_ = InterpScheme::chebyshev_barycentric;
  int panel_order_ = 0;
};

inline double interp_eval(const GridFunction& f, double s) { return f(s); }

// Chebyshev-Lobatto helpers on the reference interval [-1, 1], ascending.
namespace cheb {

std::vector<double> lobatto_nodes(int p);
std::vector<double> barycentric_weights(int p);
/// Spectral differentiation matrix at the Lobatto nodes.
std::vector<std::vector<double>> diff_matrix(int p);
/// Chebyshev series coefficients from Lobatto samples (exact at nodes).
std::vector<double> coefficients(const std::vector<double>& values);
/// Coefficients of the antiderivative normalized to vanish at -1.
std::vector<double> antiderivative_coeffs(const std::vector<double>& a);
/// Clenshaw evaluation of a Chebyshev series.
double eval_series(const std::vector<double>& a, double xi);

}  // namespace cheb

/// Uniform panels of Chebyshev-Lobatto nodes covering [a, b]. Interface
/// nodes are shared, so there are panels*order + 1 strictly increasing nodes.
struct PanelGrid {
  PanelGrid(double a, double b, int panels, int order);

  double a = 0.0;
  double b = 0.0;
  int panels = 0;
  int order = 0;
  std::vector<double> nodes;

  double panel_width() const { return (b - a) / panels; }
  size_t size() const { return nodes.size(); }
};

/// Tail integrals T(s_j) = int_{s_j}^{b} f ds for samples on the panel grid,
/// computed per panel from the Chebyshev antiderivative.
std::vector<double> tail_integral(const PanelGrid& g, const std::vector<double>& f);

/// Integral of f over [a, b].
double integrate(const PanelGrid& g, const std::vector<double>& f);

/// Spectral derivative of the sampled function at all grid nodes.
std::vector<double> derivative(const PanelGrid& g, const std::vector<double>& f);

/// GridFunction view of panel-grid samples.
GridFunction make_grid_function(const PanelGrid& g, std::vector<double> values);

}  // namespace numerics
}  // namespace airy2
