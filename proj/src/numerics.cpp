// SPDX-License-Identifier: Apache-2.0
#include "airy2/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace airy2 {
namespace numerics {

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  if (!(a < b)) throw std::invalid_argument("gauss_legendre: requires a < b");

  QuadratureRule rule;
  rule.a = a;
  rule.b = b;
  rule.order = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int m = (n + 1) / 2;

  for (int i = 0; i < m; ++i) {
    // Tricomi-style initial guess for the i-th root of P_n
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = -p1 / pp;
      z += dz;
      if (std::abs(dz) <= 1e-15) {
        // one polishing step, then stop
        double q1 = 1.0, q2 = 0.0;
        for (int j = 1; j <= n; ++j) {
          const double q3 = q2;
          q2 = q1;
          q1 = ((2.0 * j - 1.0) * z * q2 - (j - 1.0) * q3) / j;
        }
        pp = n * (z * q1 - q2) / (z * z - 1.0);
        z -= q1 / pp;
        break;
      }
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.nodes[i] = mid - half * z;
    rule.nodes[n - 1 - i] = mid + half * z;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = mid;  // center node is exact
  return rule;
}

DenseMatrix::DenseMatrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, fill) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("DenseMatrix: empty shape");
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

LuDecomposition::LuDecomposition(DenseMatrix m) : lu_(std::move(m)) {
  if (lu_.rows() != lu_.cols())
    throw std::invalid_argument("LuDecomposition: matrix must be square");
  const int n = lu_.rows();
  perm_.resize(n);
  row_scale_.resize(n);
  for (int i = 0; i < n; ++i) {
    perm_[i] = i;
    double s = 0.0;
    for (int j = 0; j < n; ++j) s = std::max(s, std::abs(lu_(i, j)));
    row_scale_[i] = s;
  }

  double* A = lu_.data();
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(A[static_cast<size_t>(k) * n + k]);
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(A[static_cast<size_t>(i) * n + k]);
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv != k) {
      for (int j = 0; j < n; ++j)
        std::swap(A[static_cast<size_t>(k) * n + j], A[static_cast<size_t>(piv) * n + j]);
      std::swap(perm_[k], perm_[piv]);
      std::swap(row_scale_[k], row_scale_[piv]);
      sign_ = -sign_;
    }
    const double pivot = A[static_cast<size_t>(k) * n + k];
    if (pivot == 0.0 || std::abs(pivot) < 1e-14 * std::max(row_scale_[k], 1e-300)) {
      singular_ = true;
    }
    if (pivot == 0.0) {
      log_abs_det_ = -std::numeric_limits<double>::infinity();
      continue;
    }
    log_abs_det_ += std::log(std::abs(pivot));
    if (pivot < 0.0) sign_ = -sign_;
    const double inv_pivot = 1.0 / pivot;
    for (int i = k + 1; i < n; ++i) {
      const double f = A[static_cast<size_t>(i) * n + k] * inv_pivot;
      A[static_cast<size_t>(i) * n + k] = f;
      if (f == 0.0) continue;
      const double* rk = A + static_cast<size_t>(k) * n;
      double* ri = A + static_cast<size_t>(i) * n;
      for (int j = k + 1; j < n; ++j) ri[j] -= f * rk[j];
    }
  }
}

double LuDecomposition::determinant() const {
  if (log_abs_det_ == -std::numeric_limits<double>::infinity()) return 0.0;
  return sign_ * std::exp(log_abs_det_);
}

std::vector<double> LuDecomposition::solve(const std::vector<double>& rhs) const {
  const int n = lu_.rows();
  if (static_cast<int>(rhs.size()) != n)
    throw std::invalid_argument("LuDecomposition::solve: rhs length mismatch");
  if (singular_) throw SingularMatrixError("solve_linear: pivot below 1e-14 of row scale");

  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[perm_[i]];
  // forward: L has unit diagonal
  for (int i = 1; i < n; ++i) {
    double s = x[i];
    for (int j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
    x[i] = s;
  }
  // backward
  for (int i = n - 1; i >= 0; --i) {
    double s = x[i];
    for (int j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
    x[i] = s / lu_(i, i);
  }
  return x;
}

double determinant(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix must be square");
  return LuDecomposition(m).determinant();
}

std::vector<double> solve_linear(const DenseMatrix& m, const std::vector<double>& rhs) {
  if (m.rows() != m.cols()) throw std::invalid_argument("solve_linear: matrix must be square");
  return LuDecomposition(m).solve(rhs);
}

namespace {

std::vector<double> bary_weights_general(const std::vector<double>& x) {
  const size_t n = x.size();
  std::vector<double> w(n, 1.0);
  // rescale by the half-span to keep products within range
  const double c = 0.25 * (x.back() - x.front());
  for (size_t j = 0; j < n; ++j) {
    double v = 1.0;
    for (size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      v *= (x[j] - x[k]) / c;
    }
    w[j] = 1.0 / v;
  }
  double scale = 0.0;
  for (double v : w) scale = std::max(scale, std::abs(v));
  for (double& v : w) v /= scale;
  return w;
}

double bary_eval(const double* x, const double* v, const double* w, size_t n, double s) {
  double num = 0.0, den = 0.0;
  for (size_t j = 0; j < n; ++j) {
    const double d = s - x[j];
    if (d == 0.0) return v[j];
    const double t = w[j] / d;
    num += t * v[j];
    den += t;
  }
  return num / den;
}

}  // namespace

GridFunction::GridFunction(std::vector<double> grid, std::vector<double> values,
                           InterpScheme scheme, int panel_order)
    : grid_(std::move(grid)), values_(std::move(values)), scheme_(scheme),
      panel_order_(panel_order) {
  if (grid_.size() != values_.size() || grid_.size() < 4)
    throw std::invalid_argument("GridFunction: grid/values must match, length >= 4");
  for (size_t i = 1; i < grid_.size(); ++i)
    if (!(grid_[i] > grid_[i - 1]))
      throw std::invalid_argument("GridFunction: grid must be strictly increasing");
  if (scheme_ == InterpScheme::piecewise_chebyshev) {
    if (panel_order_ < 2 || (grid_.size() - 1) % panel_order_ != 0)
      throw std::invalid_argument("GridFunction: grid does not tile into panels");
  } else {
    bary_w_ = bary_weights_general(grid_);
  }
}

double GridFunction::operator()(double s) const {
  const double lo = grid_.front(), hi = grid_.back();
  const double slop = 1e-12 * (hi - lo);
  if (s < lo - slop || s > hi + slop)
    throw std::domain_error("GridFunction: argument outside the grid range");
  s = std::clamp(s, lo, hi);

  if (scheme_ == InterpScheme::chebyshev_barycentric) {
    return bary_eval(grid_.data(), values_.data(), bary_w_.data(), grid_.size(), s);
  }

  const int p = panel_order_;
  const int npan = static_cast<int>(grid_.size() - 1) / p;
  // locate the panel by its interfaces
  int pn = 0;
  {
    int lo_pn = 0, hi_pn = npan - 1;
    while (lo_pn < hi_pn) {
      const int mid = (lo_pn + hi_pn + 1) / 2;
      if (s >= grid_[static_cast<size_t>(mid) * p]) lo_pn = mid;
      else hi_pn = mid - 1;
    }
    pn = lo_pn;
  }
  static thread_local std::vector<double> cgl_w;
  if (static_cast<int>(cgl_w.size()) != p + 1) {
    cgl_w.resize(p + 1);
    for (int j = 0; j <= p; ++j) cgl_w[j] = (j % 2 == 0 ? 1.0 : -1.0);
    cgl_w[0] *= 0.5;
    cgl_w[p] *= 0.5;
  }
  const size_t base = static_cast<size_t>(pn) * p;
  return bary_eval(grid_.data() + base, values_.data() + base, cgl_w.data(), p + 1, s);
}

namespace cheb {

std::vector<double> lobatto_nodes(int p) {
  std::vector<double> x(p + 1);
  for (int j = 0; j <= p; ++j) x[j] = -std::cos(M_PI * j / p);
  x[0] = -1.0;
  x[p] = 1.0;
  if (p % 2 == 0) x[p / 2] = 0.0;
  return x;
}

std::vector<double> barycentric_weights(int p) {
  std::vector<double> w(p + 1);
  for (int j = 0; j <= p; ++j) w[j] = (j % 2 == 0 ? 1.0 : -1.0);
  w[0] *= 0.5;
  w[p] *= 0.5;
  return w;
}

std::vector<std::vector<double>> diff_matrix(int p) {
  const auto x = lobatto_nodes(p);
  const auto w = barycentric_weights(p);
  std::vector<std::vector<double>> D(p + 1, std::vector<double>(p + 1, 0.0));
  for (int i = 0; i <= p; ++i) {
    double diag = 0.0;
    for (int j = 0; j <= p; ++j) {
      if (i == j) continue;
      D[i][j] = (w[j] / w[i]) / (x[i] - x[j]);
      diag -= D[i][j];
    }
    D[i][i] = diag;  // negative-sum trick
  }
  return D;
}

std::vector<double> coefficients(const std::vector<double>& values) {
  const int p = static_cast<int>(values.size()) - 1;
  std::vector<double> a(p + 1, 0.0);
  for (int k = 0; k <= p; ++k) {
    double s = 0.5 * (values[p] + (k % 2 == 0 ? values[0] : -values[0]));
    for (int i = 1; i < p; ++i) {
      // node j=i sits at -cos(i pi / p) = cos((p - i) pi / p)
      s += values[i] * std::cos(k * (p - i) * M_PI / p);
    }
    a[k] = 2.0 * s / p;
  }
  a[0] *= 0.5;
  a[p] *= 0.5;
  return a;
}

std::vector<double> antiderivative_coeffs(const std::vector<double>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<double> b(n + 2, 0.0);
  auto ae = [&](int k) -> double {
    if (k == 0) return 2.0 * a[0];
    if (k <= n) return a[k];
    return 0.0;
  };
  for (int m = 1; m <= n + 1; ++m) b[m] = (ae(m - 1) - ae(m + 1)) / (2.0 * m);
  double at_minus1 = 0.0;
  for (int m = 1; m <= n + 1; ++m) at_minus1 += (m % 2 == 0 ? b[m] : -b[m]);
  b[0] = -at_minus1;
  return b;
}

double eval_series(const std::vector<double>& a, double xi) {
  double b1 = 0.0, b2 = 0.0;
  for (int k = static_cast<int>(a.size()) - 1; k >= 1; --k) {
    const double b0 = 2.0 * xi * b1 - b2 + a[k];
    b2 = b1;
    b1 = b0;
  }
  return xi * b1 - b2 + a[0];
}

}  // namespace cheb

PanelGrid::PanelGrid(double a_, double b_, int panels_, int order_)
    : a(a_), b(b_), panels(panels_), order(order_) {
  if (!(a < b) || panels < 1 || order < 2)
    throw std::invalid_argument("PanelGrid: invalid geometry");
  const auto xi = cheb::lobatto_nodes(order);
  const double h = panel_width();
  nodes.reserve(static_cast<size_t>(panels) * order + 1);
  for (int pn = 0; pn < panels; ++pn) {
    const double left = a + pn * h;
    for (int j = (pn == 0 ? 0 : 1); j <= order; ++j)
      nodes.push_back(left + 0.5 * h * (xi[j] + 1.0));
  }
  nodes.front() = a;
  nodes.back() = b;
}

std::vector<double> tail_integral(const PanelGrid& g, const std::vector<double>& f) {
  if (f.size() != g.size()) throw std::invalid_argument("tail_integral: size mismatch");
  const int p = g.order;
  const double h = g.panel_width();
  const auto xi = cheb::lobatto_nodes(p);

  std::vector<double> full(g.panels);
  std::vector<std::vector<double>> B(g.panels);
  std::vector<double> local(p + 1);
  for (int pn = 0; pn < g.panels; ++pn) {
    for (int j = 0; j <= p; ++j) local[j] = f[static_cast<size_t>(pn) * p + j];
    B[pn] = cheb::antiderivative_coeffs(cheb::coefficients(local));
    full[pn] = 0.5 * h * cheb::eval_series(B[pn], 1.0);
  }
  std::vector<double> suffix(g.panels + 1, 0.0);
  for (int pn = g.panels - 1; pn >= 0; --pn) suffix[pn] = suffix[pn + 1] + full[pn];

  std::vector<double> out(g.size());
  for (int pn = 0; pn < g.panels; ++pn) {
    for (int j = 0; j <= p; ++j) {
      const double here = 0.5 * h * cheb::eval_series(B[pn], xi[j]);
      out[static_cast<size_t>(pn) * p + j] = (full[pn] - here) + suffix[pn + 1];
    }
  }
  return out;
}

double integrate(const PanelGrid& g, const std::vector<double>& f) {
  if (f.size() != g.size()) throw std::invalid_argument("integrate: size mismatch");
  const int p = g.order;
  const double h = g.panel_width();
  std::vector<double> local(p + 1);
  double total = 0.0;
  for (int pn = 0; pn < g.panels; ++pn) {
    for (int j = 0; j <= p; ++j) local[j] = f[static_cast<size_t>(pn) * p + j];
    const auto B = cheb::antiderivative_coeffs(cheb::coefficients(local));
    total += 0.5 * h * cheb::eval_series(B, 1.0);
  }
  return total;
}

std::vector<double> derivative(const PanelGrid& g, const std::vector<double>& f) {
  if (f.size() != g.size()) throw std::invalid_argument("derivative: size mismatch");
  const int p = g.order;
  const double scale = 2.0 / g.panel_width();
  static thread_local std::vector<std::vector<double>> D;
  static thread_local int D_order = -1;
  if (D_order != p) {
    D = cheb::diff_matrix(p);
    D_order = p;
  }

  std::vector<double> out(g.size(), 0.0);
  std::vector<double> counted(g.size(), 0.0);
  for (int pn = 0; pn < g.panels; ++pn) {
    const size_t base = static_cast<size_t>(pn) * p;
    for (int i = 0; i <= p; ++i) {
      double s = 0.0;
      for (int j = 0; j <= p; ++j) s += D[i][j] * f[base + j];
      out[base + i] += scale * s;
      counted[base + i] += 1.0;
    }
  }
  for (size_t i = 0; i < out.size(); ++i) out[i] /= counted[i];  // average at interfaces
  return out;
}

GridFunction make_grid_function(const PanelGrid& g, std::vector<double> values) {
  return GridFunction(g.nodes, std::move(values), InterpScheme::piecewise_chebyshev, g.order);
}

}  // namespace numerics
}  // namespace airy2
