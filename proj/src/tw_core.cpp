// SPDX-License-Identifier: Apache-2.0
#include "airy2/tw_core.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace airy2 {
namespace tw {

using numerics::GridFunction;
using numerics::PanelGrid;

namespace {

PanelGrid grid_of(const painleve::HMSolution& sol) {
  return PanelGrid(sol.s_min, sol.s_max, sol.panels, sol.order);
}

// ---------------------------------------------------------------------------
// Exact polynomial recurrence for the f2 derivative chain.
// Monomials are exponent tuples in (s, q, q', u00) with integer coefficients.
// ---------------------------------------------------------------------------

using Mono = std::array<int, 4>;  // exponents of s, q, qp, u
using Poly = std::map<Mono, long long>;

void add_term(Poly& p, Mono m, long long c) {
  if (c == 0) return;
  auto [it, fresh] = p.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Poly derive(const Poly& p) {
  Poly out;
  for (const auto& [m, c] : p) {
    const auto [a, b, d, e] = std::tuple{m[0], m[1], m[2], m[3]};
    if (a > 0) add_term(out, {a - 1, b, d, e}, c * a);            // d/ds
    if (b > 0) add_term(out, {a, b - 1, d + 1, e}, c * b);        // q' d/dq
    if (d > 0) {                                                  // q'' = s q + 2 q^3
      add_term(out, {a + 1, b + 1, d - 1, e}, c * d);
      add_term(out, {a, b + 3, d - 1, e}, 2 * c * d);
    }
    if (e > 0) add_term(out, {a, b + 2, d, e - 1}, -c * e);       // u00' = -q^2
  }
  return out;
}

const std::array<Poly, 9>& chain_polynomials() {
  static const std::array<Poly, 9> chain = [] {
    std::array<Poly, 9> ps;
    ps[0][{0, 0, 0, 1}] = 1;  // P_0 = u00
    for (int k = 1; k <= 8; ++k) {
      Poly next = derive(ps[k - 1]);
      for (const auto& [m, c] : ps[k - 1])
        add_term(next, {m[0], m[1], m[2], m[3] + 1}, c);  // + u00 P_{k-1}
      ps[k] = std::move(next);
    }
    return ps;
  }();
  return chain;
}

double eval_poly(const Poly& p, double s, double q, double qp, double u) {
  double total = 0.0;
  for (const auto& [m, c] : p) {
    double v = static_cast<double>(c);
    for (int i = 0; i < m[0]; ++i) v *= s;
    for (int i = 0; i < m[1]; ++i) v *= q;
    for (int i = 0; i < m[2]; ++i) v *= qp;
    for (int i = 0; i < m[3]; ++i) v *= u;
    total += v;
  }
  return total;
}

// ---------------------------------------------------------------------------
// u_{j,k} storage layout: (j, k) with j >= k and j + k <= 8, flattened.
// ---------------------------------------------------------------------------

int u_index(int j, int k) {
  if (j < k) std::swap(j, k);
  if (k < 0 || j + k > 8) throw std::invalid_argument("u_{j,k}: requires j + k <= 8");
  // enumerate by level n = j + k, then by k
  static const auto table = [] {
    std::array<std::array<int, 9>, 9> idx{};
    for (auto& row : idx) row.fill(-1);
    int next = 0;
    for (int n = 0; n <= 8; ++n)
      for (int k2 = n / 2; k2 >= 0; --k2) idx[n - k2][k2] = next++;
    return idx;
  }();
  return table[j][k];
}

std::vector<double> tail_u00(const painleve::HMSolution& sol, const PanelGrid& g) {
  const auto& q = sol.q.values();
  std::vector<double> q2(q.size());
  for (size_t i = 0; i < q.size(); ++i) q2[i] = q[i] * q[i];
  return numerics::tail_integral(g, q2);
}

// s-polynomial coefficients (rational) for the identity table
struct STerm {
  long long num, den;
  int pow;
};
using SPoly = std::vector<STerm>;

double eval_spoly(const SPoly& sp, double s) {
  double v = 0.0;
  for (const auto& t : sp)
    v += static_cast<double>(t.num) / static_cast<double>(t.den) * std::pow(s, t.pow);
  return v;
}

struct IdentityRow {
  int j, k;
  std::array<SPoly, 9> cols;  // multipliers of f2^(0..8)
};

std::array<SPoly, 9> make_cols(std::vector<SPoly> cols) {
  std::array<SPoly, 9> out;
  for (size_t i = 0; i < cols.size(); ++i) out[i] = std::move(cols[i]);
  return out;
}

// u_{j,k} F2 written in f2 and its derivatives, rows ordered by j + k
const std::vector<IdentityRow>& identity_table() {
  static const std::vector<IdentityRow> rows = [] {
    std::vector<IdentityRow> t;
    auto R = [&t](int j, int k, std::vector<SPoly> cols) {
      t.push_back({j, k, make_cols(std::move(cols))});
    };
    R(0, 0, {{{1, 1, 0}}});
    R(1, 0, {{}, {{1, 2, 0}}});
    R(1, 1, {{{-1, 3, 1}}, {}, {{1, 3, 0}}});
    R(2, 0, {{{1, 3, 1}}, {}, {{1, 6, 0}}});
    R(2, 1, {{{-1, 4, 0}}, {}, {}, {{1, 8, 0}}});
    R(3, 0, {{{7, 12, 0}}, {{1, 3, 1}}, {}, {{1, 24, 0}}});
    R(2, 2, {{{1, 5, 2}}, {{-3, 10, 0}}, {}, {}, {{1, 20, 0}}});
    R(3, 1, {{{-1, 5, 2}}, {{2, 15, 0}}, {{1, 6, 1}}, {}, {{1, 30, 0}}});
    R(4, 0, {{{1, 5, 2}}, {{47, 60, 0}}, {{1, 6, 1}}, {}, {{1, 120, 0}}});
    R(3, 2, {{{2, 9, 1}}, {{1, 18, 2}}, {{-1, 12, 0}}, {{1, 18, 1}}, {}, {{1, 72, 0}}});
    R(4, 1, {{{-13, 18, 1}}, {{-1, 18, 2}}, {{11, 24, 0}}, {{1, 9, 1}}, {}, {{1, 144, 0}}});
    R(5, 0, {{{101, 90, 1}}, {{23, 90, 2}}, {{59, 120, 0}}, {{1, 18, 1}}, {}, {{1, 720, 0}}});
    R(3, 3, {{{-1, 7, 3}, {34, 63, 0}}, {{17, 42, 1}}, {{1, 9, 2}}, {{-1, 18, 0}},
             {{1, 36, 1}}, {}, {{1, 252, 0}}});
    R(4, 2, {{{1, 7, 3}, {-11, 42, 0}}, {{-13, 84, 1}}, {}, {{1, 8, 0}},
             {{1, 24, 1}}, {}, {{1, 336, 0}}});
    R(5, 1, {{{-1, 7, 3}, {-74, 105, 0}}, {{-47, 420, 1}}, {{1, 10, 2}}, {{7, 20, 0}},
             {{1, 24, 1}}, {}, {{1, 840, 0}}});
    R(6, 0, {{{1, 7, 3}, {1151, 630, 0}}, {{733, 420, 1}}, {{7, 45, 2}}, {{71, 360, 0}},
             {{1, 72, 1}}, {}, {{1, 5040, 0}}});
    R(4, 3, {{{-1, 4, 2}}, {{127, 288, 0}}, {{5, 18, 1}}, {{1, 18, 2}},
             {{5, 288, 0}}, {{1, 72, 1}}, {}, {{1, 1152, 0}}});
    R(5, 2, {{{43, 60, 2}}, {{1, 15, 3}, {-123, 160, 0}}, {{-3, 20, 1}}, {{1, 30, 2}},
             {{61, 480, 0}}, {{1, 60, 1}}, {}, {{1, 1920, 0}}});
    R(6, 1, {{{-73, 60, 2}}, {{-1, 15, 3}, {271, 1440, 0}}, {{29, 36, 1}}, {{17, 180, 2}},
             {{221, 1440, 0}}, {{1, 90, 1}}, {}, {{1, 5760, 0}}});
    R(7, 0, {{{691, 420, 2}}, {{22, 105, 3}, {4873, 1440, 0}}, {{394, 315, 1}}, {{11, 180, 2}},
             {{83, 1440, 0}}, {{1, 360, 1}}, {}, {{1, 40320, 0}}});
    R(4, 4, {{{1, 9, 4}, {-118, 81, 1}}, {{-17, 54, 2}}, {{-1, 81, 3}, {119, 144, 0}},
             {{31, 108, 1}}, {{1, 27, 2}}, {{1, 144, 0}}, {{1, 216, 1}}, {}, {{1, 5184, 0}}});
    R(5, 3, {{{-1, 9, 4}, {667, 810, 1}}, {{197, 540, 2}}, {{32, 405, 3}, {-4, 45, 0}},
             {{119, 1080, 1}}, {{29, 1080, 2}}, {{11, 360, 0}}, {{11, 2160, 1}}, {},
             {{1, 6480, 0}}});
    R(6, 2, {{{1, 9, 4}, {322, 405, 1}}, {{103, 540, 2}}, {{1, 162, 3}, {-35, 72, 0}},
             {{113, 540, 1}}, {{37, 1080, 2}}, {{11, 180, 0}}, {{1, 216, 1}}, {},
             {{1, 12960, 0}}});
    R(7, 1, {{{-1, 9, 4}, {-21167, 5670, 1}}, {{-1999, 3780, 2}}, {{37, 567, 3}, {115, 63, 0}},
             {{6107, 7560, 1}}, {{47, 1080, 2}}, {{17, 360, 0}}, {{1, 432, 1}}, {},
             {{1, 45360, 0}}});
    R(8, 0, {{{1, 9, 4}, {19912, 2835, 1}}, {{5297, 1890, 2}}, {{409, 2835, 3}, {28319, 10080, 0}},
             {{4273, 7560, 1}}, {{19, 1080, 2}}, {{19, 1440, 0}}, {{1, 2160, 1}}, {},
             {{1, 362880, 0}}});
    return t;
  }();
  return rows;
}

// the extra combinations: "8th" and A share one right-hand side
const std::array<SPoly, 9>& rhs_8th() {
  static const std::array<SPoly, 9> r =
      make_cols({{{-1, 6, 0}}, {{1, 3, 1}}, {}, {{-1, 12, 0}}});
  return r;
}
const std::array<SPoly, 9>& rhs_B() {
  static const std::array<SPoly, 9> r =
      make_cols({{{-1, 3, 1}}, {{2, 3, 2}}, {}, {{-1, 6, 0}}});
  return r;
}
const std::array<SPoly, 9>& rhs_C() {
  static const std::array<SPoly, 9> r =
      make_cols({{}, {{1, 12, 0}}, {{1, 6, 1}}, {}, {{-1, 24, 0}}});
  return r;
}

}  // namespace

const numerics::GridFunction& UTable::u(int j, int k) const {
  return entries_[u_index(j, k)];
}

numerics::GridFunction build_F2(const painleve::HMSolution& sol) {
  const PanelGrid g = grid_of(sol);
  const auto u00 = tail_u00(sol, g);
  const auto I1 = numerics::tail_integral(g, u00);
  std::vector<double> F2(I1.size());
  for (size_t i = 0; i < I1.size(); ++i) F2[i] = std::exp(-I1[i]);
  return numerics::make_grid_function(g, F2);
}

UTable build_u_table(const painleve::HMSolution& sol) {
  const PanelGrid g = grid_of(sol);
  const size_t n = g.size();
  const auto& q0 = sol.q.values();
  const auto& qp = sol.q_prime.values();

  UTable table;
  std::array<std::vector<double>, 9> qn;   // node values of q_0 .. q_8
  std::array<std::vector<double>, 25> uv;  // node values of the entries

  qn[0] = q0;
  auto tail_product = [&](const std::vector<double>& f1, const std::vector<double>& f2) {
    std::vector<double> prod(n);
    for (size_t i = 0; i < n; ++i) prod[i] = f1[i] * f2[i];
    return numerics::tail_integral(g, prod);
  };

  for (int level = 0; level <= 8; ++level) {
    if (level == 1) {
      qn[1].resize(n);
      const auto& u00 = uv[u_index(0, 0)];
      for (size_t i = 0; i < n; ++i) qn[1][i] = qp[i] + u00[i] * q0[i];
    } else if (level >= 2) {
      // q_n = (n-2) q_{n-3} + s q_{n-2} - u_{n-2,1} q_0 + u_{n-2,0} q_1
      qn[level].resize(n);
      const auto& ua = uv[u_index(level - 2, 1)];
      const auto& ub = uv[u_index(level - 2, 0)];
      for (size_t i = 0; i < n; ++i) {
        double v = g.nodes[i] * qn[level - 2][i] - ua[i] * q0[i] + ub[i] * qn[1][i];
        if (level >= 3) v += (level - 2) * qn[level - 3][i];
        qn[level][i] = v;
      }
    }
    for (int k = std::min(level, 8 - level); k >= 0; --k)
      uv[u_index(level, k)] = tail_product(qn[level], qn[k]);
  }

  for (int jk = 0; jk < 25; ++jk)
    table.entries_[jk] = numerics::make_grid_function(g, std::move(uv[jk]));
  for (int m = 0; m <= 8; ++m)
    table.q_[m] = numerics::make_grid_function(g, std::move(qn[m]));
  return table;
}

std::vector<numerics::GridFunction> f2_derivative_chain(const painleve::HMSolution& sol) {
  const PanelGrid g = grid_of(sol);
  const size_t n = g.size();
  const auto& q = sol.q.values();
  const auto& qp = sol.q_prime.values();
  const auto u00 = tail_u00(sol, g);
  const auto I1 = numerics::tail_integral(g, u00);

  std::vector<numerics::GridFunction> out;
  out.reserve(9);
  const auto& chain = chain_polynomials();
  for (int k = 0; k <= 8; ++k) {
    std::vector<double> vals(n);
    for (size_t i = 0; i < n; ++i) {
      vals[i] = eval_poly(chain[k], g.nodes[i], q[i], qp[i], u00[i]) * std::exp(-I1[i]);
    }
    out.push_back(numerics::make_grid_function(g, std::move(vals)));
  }
  return out;
}

TWProfile build_profile(const painleve::HMSolution& sol) {
  TWProfile p;
  p.s_min = sol.s_min;
  p.s_max = sol.s_max;
  p.F2 = build_F2(sol);
  auto chain = f2_derivative_chain(sol);
  for (int k = 0; k <= 8; ++k) p.f2_derivs[k] = std::move(chain[k]);
  return p;
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& row : identity_table())
      v.push_back(std::to_string(row.j) + "," + std::to_string(row.k));
    v.insert(v.end(), {"8th", "A", "B", "C"});
    return v;
  }();
  return names;
}

double verify_identity(const TWProfile& profile, const UTable& utable,
                       const std::string& id) {
  const std::array<SPoly, 9>* rhs = nullptr;
  enum class Lhs { table, eighth, b, c } kind = Lhs::table;
  const IdentityRow* row = nullptr;

  if (id == "8th" || id == "A") {
    rhs = &rhs_8th();
    kind = Lhs::eighth;
  } else if (id == "B") {
    rhs = &rhs_B();
    kind = Lhs::b;
  } else if (id == "C") {
    rhs = &rhs_C();
    kind = Lhs::c;
  } else {
    for (const auto& r : identity_table()) {
      if (id == std::to_string(r.j) + "," + std::to_string(r.k)) {
        row = &r;
        break;
      }
    }
    if (row == nullptr) throw std::invalid_argument("verify_identity: unknown identity " + id);
  }

  const double lo = -6.0, hi = 4.0;
  const int npts = 201;
  double worst = 0.0;
  for (int i = 0; i < npts; ++i) {
    const double s = lo + (hi - lo) * i / (npts - 1.0);
    const double F2 = profile.F2_at(s);
    double lhs = 0.0;
    switch (kind) {
      case Lhs::table:
        lhs = utable.u_at(row->j, row->k, s) * F2;
        break;
      case Lhs::eighth: {
        const double u10 = utable.u_at(1, 0, s), u00 = utable.u_at(0, 0, s);
        const double u11 = utable.u_at(1, 1, s);
        lhs = (u10 * u10 - u00 * u11) * F2;
        break;
      }
      case Lhs::b: {
        const double u00 = utable.u_at(0, 0, s), u10 = utable.u_at(1, 0, s);
        const double u11 = utable.u_at(1, 1, s), u20 = utable.u_at(2, 0, s);
        const double u21 = utable.u_at(2, 1, s), u22 = utable.u_at(2, 2, s);
        const double u30 = utable.u_at(3, 0, s), u31 = utable.u_at(3, 1, s);
        lhs = (-2.0 * u20 * u20 + u11 * u20 - u10 * u21 + 2.0 * u00 * u22 +
               3.0 * u10 * u30 - 3.0 * u00 * u31) * F2;
        break;
      }
      case Lhs::c: {
        const double u00 = utable.u_at(0, 0, s), u10 = utable.u_at(1, 0, s);
        const double u20 = utable.u_at(2, 0, s), u21 = utable.u_at(2, 1, s);
        lhs = (u10 * u20 - u00 * u21) * F2;
        break;
      }
    }
    double rhs_val = 0.0;
    const auto& cols = (kind == Lhs::table) ? row->cols : *rhs;
    for (int k = 0; k <= 8; ++k) {
      if (cols[k].empty()) continue;
      rhs_val += eval_spoly(cols[k], s) * profile.f2_at(s, k);
    }
    worst = std::max(worst, std::abs(lhs - rhs_val));
  }
  return worst;
}

MomentSet moments(const TWProfile& profile, int n_max) {
  if (n_max < 0 || n_max > 4)
    throw std::invalid_argument("moments: n_max must be in [0, 4]");
  MomentSet m;
  const auto rule = numerics::gauss_legendre(240, profile.s_min, profile.s_max);
  for (int n = 0; n <= n_max; ++n) {
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      acc += rule.weights[i] * std::pow(rule.nodes[i], n) * profile.f2_at(rule.nodes[i]);
    }
    m.mu[n] = acc;
  }
  if (n_max >= 2) m.variance = m.mu[2] - m.mu[1] * m.mu[1];
  return m;
}

}  // namespace tw
}  // namespace airy2
