// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/darboux.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>

#include "dunkl/error.hpp"

namespace dunkl::darboux {
namespace {

constexpr std::size_t kMaxColumns = kMaxOrder + 1;
constexpr std::size_t kMaxDerivs = kMaxColumns + 2;  // rows 0..N-1 plus two for W''

constexpr double kStandardResidualTol = 1e-7;
constexpr double kConfluentResidualTol = 1e-5;
// Near a pole Phi_hat ~ 1/(y - p); the stencil must resolve that scale.
constexpr double kPoleStepFraction = 0.02;

// Value with a first derivative in one external parameter.
struct Dual {
  double v = 0.0;
  double d = 0.0;
  Dual() = default;
  Dual(double value, double deriv = 0.0) : v(value), d(deriv) {}  // NOLINT
};

Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
Dual operator-(Dual a) { return {-a.v, -a.d}; }
Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
Dual operator/(Dual a, Dual b) { return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)}; }
Dual& operator+=(Dual& a, Dual b) { return a = a + b; }
Dual& operator-=(Dual& a, Dual b) { return a = a - b; }
Dual& operator*=(Dual& a, Dual b) { return a = a * b; }

double value_of(double x) { return x; }
double value_of(const Dual& x) { return x.v; }

template <class T>
using Matrix = std::array<std::array<T, kMaxColumns>, kMaxColumns>;

// Partial-pivot elimination; n <= 5 so nothing cleverer is needed.
template <class T>
T determinant(Matrix<T> a, std::size_t n) {
  T det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::fabs(value_of(a[r][c])) > std::fabs(value_of(a[piv][c]))) piv = r;
    }
    if (value_of(a[piv][c]) == 0.0) return T(0.0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const T f = a[r][c] / a[c][c];
      for (std::size_t k = c + 1; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

struct Column {
  const Solution* f;
  double eps;
  int pred;  // index of u_{j-1} for confluent members, else -1
  const Solution* df = nullptr;  // parameter derivative, Dual tables only
};

// table[c][k] = k-th derivative of column c at y.
template <class T>
using Table = std::array<std::array<T, kMaxDerivs>, kMaxColumns>;

template <class T>
Table<T> derivative_table(const std::vector<Column>& cols, const std::array<T, kMaxDerivs>& u,
                          double y, std::size_t max_k) {
  Table<T> t{};
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if constexpr (std::is_same_v<T, Dual>) {
      t[c][0] = Dual(cols[c].f->value(y), cols[c].df ? cols[c].df->value(y) : 0.0);
      t[c][1] = Dual(cols[c].f->deriv(y), cols[c].df ? cols[c].df->deriv(y) : 0.0);
    } else {
      t[c][0] = cols[c].f->value(y);
      t[c][1] = cols[c].f->deriv(y);
    }
    for (std::size_t k = 2; k <= max_k; ++k) {
      const int m = static_cast<int>(k) - 2;
      T s = -cols[c].eps * t[c][m];
      for (int i = 0; i <= m; ++i) s += binomial(m, i) * u[i] * t[c][m - i];
      if (cols[c].pred >= 0) s -= t[cols[c].pred][m];
      t[c][k] = s;
    }
  }
  return t;
}

std::array<double, kMaxDerivs> background_row(const Background& bg, double y, std::size_t max_k) {
  std::array<double, kMaxDerivs> u{};
  for (std::size_t i = 0; i + 2 <= max_k; ++i) u[i] = bg.derivative(y, static_cast<int>(i));
  return u;
}

template <class T>
T det_rows(const Table<T>& t, const std::vector<int>& rows, std::size_t n) {
  Matrix<T> m{};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = t[c][rows[r]];
  }
  return determinant(m, n);
}

// d^times/dy^times of det[f_c^(rows[r])]: differentiate one row at a time,
// dropping terms with repeated rows.
template <class T>
T det_derivative(const Table<T>& t, std::vector<int> rows, std::size_t n, int times) {
  if (times == 0) return det_rows(t, rows, n);
  T s = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const int next = rows[r] + 1;
    if (std::find(rows.begin(), rows.end(), next) != rows.end()) continue;
    auto bumped = rows;
    bumped[r] = next;
    s += det_derivative(t, std::move(bumped), n, times - 1);
  }
  return s;
}

std::vector<Column> columns(const DarbouxChain& chain, const ExtraColumn* extra) {
  std::vector<Column> cols;
  const auto& funcs = chain.funcs();
  for (std::size_t j = 0; j < funcs.size(); ++j) {
    const int pred = (chain.kind() == ChainKind::Confluent && j > 0) ? static_cast<int>(j) - 1 : -1;
    cols.push_back({&funcs[j], chain.eps_of(j), pred});
  }
  if (extra != nullptr) cols.push_back({&extra->phi, extra->eps, -1});
  return cols;
}

void check_residuals(const DarbouxChain& chain, const std::vector<double>& grid) {
  const double scale = numerics::tolerance_scale();
  for (std::size_t j = 0; j < chain.order(); ++j) {
    const bool confluent_tail = chain.kind() == ChainKind::Confluent && j > 0;
    const double tol = (confluent_tail ? kConfluentResidualTol : kStandardResidualTol) * scale;
    const double r = chain.member_residual(j, grid);
    if (!(r <= tol)) {
      fail(ErrorKind::Construction, "transformation function " + std::to_string(j + 1) +
                                        " residual " + std::to_string(r) + " exceeds " +
                                        std::to_string(tol));
    }
  }
}

}  // namespace

Background Background::from_form(const pointmap::SchrodingerForm& form, double E) {
  Background b;
  b.u = [f = form.u_e, E](double y) { return f(E, y); };
  if (form.u_e_deriv) b.u_deriv = [d = form.u_e_deriv, E](double y, int k) { return d(E, y, k); };
  return b;
}

double Background::derivative(double y, int k) const {
  if (k == 0) return u(y);
  if (u_deriv) return u_deriv(y, k);
  if (k > 3) fail(ErrorKind::Capability, "background: derivative order above 3 needs u_deriv");
  return numerics::derivative(u, y, k);
}

const char* to_string(ChainKind k) noexcept {
  return k == ChainKind::Standard ? "standard" : "confluent";
}

DarbouxChain::DarbouxChain(ChainKind kind, std::vector<Solution> funcs, std::vector<double> eps,
                           Background background)
    : kind_(kind), funcs_(std::move(funcs)), eps_(std::move(eps)), background_(std::move(background)) {
  if (funcs_.size() > kMaxOrder) {
    fail(ErrorKind::Capability, "chain order " + std::to_string(funcs_.size()) +
                                    " above the supported maximum " + std::to_string(kMaxOrder));
  }
  if (!background_.u) fail(ErrorKind::Construction, "chain needs a background potential");
}

DarbouxChain DarbouxChain::standard(std::vector<Solution> funcs, std::vector<double> eps,
                                    Background background, const std::vector<double>& grid) {
  if (funcs.size() != eps.size()) {
    fail(ErrorKind::Construction, "standard chain: one eps per transformation function");
  }
  for (std::size_t i = 0; i < eps.size(); ++i) {
    for (std::size_t j = i + 1; j < eps.size(); ++j) {
      if (std::fabs(eps[i] - eps[j]) <= 1e-12 * std::max(1.0, std::fabs(eps[i]))) {
        fail(ErrorKind::Construction, "standard chain: eps values must be distinct");
      }
    }
  }
  DarbouxChain c(ChainKind::Standard, std::move(funcs), std::move(eps), std::move(background));
  check_residuals(c, grid);
  return c;
}

DarbouxChain DarbouxChain::confluent(std::vector<Solution> funcs, double eps1,
                                     Background background, const std::vector<double>& grid) {
  if (funcs.empty()) fail(ErrorKind::Construction, "confluent chain needs u_1");
  DarbouxChain c(ChainKind::Confluent, std::move(funcs), {eps1}, std::move(background));
  check_residuals(c, grid);
  return c;
}

DarbouxChain DarbouxChain::empty(Background background) {
  return DarbouxChain(ChainKind::Standard, {}, {}, std::move(background));
}

double DarbouxChain::eps_of(std::size_t j) const {
  if (j >= funcs_.size()) fail(ErrorKind::Argument, "eps_of: index out of range");
  return kind_ == ChainKind::Confluent ? eps_.front() : eps_[j];
}

double DarbouxChain::member_residual(std::size_t j, const std::vector<double>& grid) const {
  if (j >= funcs_.size()) fail(ErrorKind::Argument, "member_residual: index out of range");
  const auto& f = funcs_[j];
  const Solution* pred = (kind_ == ChainKind::Confluent && j > 0) ? &funcs_[j - 1] : nullptr;
  const double eps = eps_of(j);
  double worst = 0.0;
  for (double y : grid) {
    const double u2 = numerics::derivative(f.deriv, y, 1);
    const double v = f.value(y);
    const double pot = background_.u(y) - eps;
    const double p = pred ? pred->value(y) : 0.0;
    const double scale = std::fabs(u2) + std::fabs(pot * v) + std::fabs(p);
    if (scale == 0.0) continue;
    worst = std::max(worst, std::fabs(u2 - pot * v + p) / scale);
  }
  return worst;
}

WronskianValue wronskian_full(const DarbouxChain& chain, double y, const ExtraColumn* extra) {
  if (chain.order() > kMaxOrder) fail(ErrorKind::Capability, "wronskian: order above maximum");
  const auto cols = columns(chain, extra);
  const std::size_t n = cols.size();
  if (n == 0) return {1.0, 0.0, 0.0, 1.0};

  const auto t = derivative_table<double>(cols, background_row(chain.background(), y, n + 1), y, n + 1);
  std::vector<int> rows(n);
  for (std::size_t r = 0; r < n; ++r) rows[r] = static_cast<int>(r);

  WronskianValue out;
  out.w = det_rows(t, rows, n);
  out.w1 = det_derivative(t, rows, n, 1);
  out.w2 = det_derivative(t, rows, n, 2);
  out.scale = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) s += t[c][r] * t[c][r];
    out.scale *= std::sqrt(s);
  }
  return out;
}

double wronskian(const DarbouxChain& chain, double y, const ExtraColumn* extra) {
  return wronskian_full(chain, y, extra).w;
}

double transformed_potential(const DarbouxChain& chain, double y, double floor) {
  const double u = chain.background().u(y);
  if (chain.order() == 0) return u;
  const auto w = wronskian_full(chain, y);
  if (!(std::fabs(w.w) >= floor * w.scale) || w.w == 0.0) {
    fail(ErrorKind::Singularity, "transformed potential: Wronskian vanishes at y=" + std::to_string(y));
  }
  return u - 2.0 * (w.w2 * w.w - w.w1 * w.w1) / (w.w * w.w);
}

double transformed_potential_energy_derivative(const DarbouxChain& chain,
                                              const EnergySensitivity& s, double y) {
  if (!s.du_de) fail(ErrorKind::Argument, "energy sensitivity: missing dU/dE");
  if (chain.order() == 0) return s.du_de(y, 0);
  if (s.dfuncs.size() != chain.order()) {
    fail(ErrorKind::Argument, "energy sensitivity: one derivative per chain member");
  }
  auto cols = columns(chain, nullptr);
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c].df = &s.dfuncs[c];
  const std::size_t n = cols.size();
  std::array<Dual, kMaxDerivs> u{};
  for (std::size_t i = 0; i + 2 <= n + 1; ++i) {
    const int k = static_cast<int>(i);
    u[i] = Dual(chain.background().derivative(y, k), s.du_de(y, k));
  }
  const auto t = derivative_table<Dual>(cols, u, y, n + 1);
  std::vector<int> rows(n);
  for (std::size_t r = 0; r < n; ++r) rows[r] = static_cast<int>(r);
  const Dual w = det_rows(t, rows, n);
  const Dual w1 = det_derivative(t, rows, n, 1);
  const Dual w2 = det_derivative(t, rows, n, 2);
  if (w.v == 0.0) {
    fail(ErrorKind::Singularity, "energy derivative: Wronskian vanishes at y=" + std::to_string(y));
  }
  const Dual corr = (w2 * w - w1 * w1) / (w * w);
  return s.du_de(y, 0) - 2.0 * corr.d;
}

double transformed_solution(const DarbouxChain& chain, const ExtraColumn& phi, double y,
                            double floor) {
  if (chain.order() == 0) return phi.phi.value(y);
  const auto den = wronskian_full(chain, y);
  if (!(std::fabs(den.w) >= floor * den.scale) || den.w == 0.0) {
    fail(ErrorKind::Singularity, "transformed solution: Wronskian vanishes at y=" + std::to_string(y));
  }
  return wronskian(chain, y, &phi) / den.w;
}

std::vector<double> wronskian_zeros(const DarbouxChain& chain, double lo, double hi,
                                    std::size_t count) {
  std::vector<double> zeros;
  if (chain.order() == 0) return zeros;
  const auto nodes = numerics::linspace(lo, hi, count);
  double a = nodes.front();
  double wa = wronskian(chain, a);
  if (wa == 0.0) zeros.push_back(a);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double b = nodes[i];
    const double wb = wronskian(chain, b);
    if (wb == 0.0) {
      zeros.push_back(b);
    } else if (wa != 0.0 && std::signbit(wa) != std::signbit(wb)) {
      double l = a, r = b, wl = wa;
      for (int it = 0; it < 200 && r - l > 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(l)); ++it) {
        const double mid = 0.5 * (l + r);
        const double wm = wronskian(chain, mid);
        if (wm == 0.0) {
          l = r = mid;
          break;
        }
        if (std::signbit(wm) == std::signbit(wl)) {
          l = mid;
          wl = wm;
        } else {
          r = mid;
        }
      }
      zeros.push_back(0.5 * (l + r));
    }
    a = b;
    wa = wb;
  }
  return zeros;
}

DarbouxChain build_confluent_chain(const FamilyFn& family, const FamilyFn& family_deriv,
                                   double eps1, std::size_t order, Background background,
                                   const std::vector<double>& grid, double h_eps) {
  if (!(h_eps > 0.0)) h_eps = 2e-3 * std::max(1.0, std::fabs(eps1));
  if (order != 2) fail(ErrorKind::Capability, "confluent chains are built for order 2 only");
  Solution u1{[family, eps1](double y) { return family(eps1, y); },
              [family_deriv, eps1](double y) { return family_deriv(eps1, y); }};
  Solution u2{[family, eps1, h_eps](double y) {
                return numerics::parameter_derivative(family, eps1, y, h_eps);
              },
              [family_deriv, eps1, h_eps](double y) {
                return numerics::parameter_derivative(family_deriv, eps1, y, h_eps);
              }};

  double max1 = 0.0, max2 = 0.0;
  for (double y : grid) {
    max1 = std::max(max1, std::fabs(u1.value(y)));
    max2 = std::max(max2, std::fabs(u2.value(y)));
  }
  if (!grid.empty() && !(max2 > 1e-12 * max1)) {
    fail(ErrorKind::Construction, "confluent chain: family does not depend on eps (u_2 = 0)");
  }
  return DarbouxChain::confluent({std::move(u1), std::move(u2)}, eps1, std::move(background), grid);
}

DarbouxOutput transform(const DarbouxChain& chain, const ExtraColumn& phi,
                        const std::vector<double>& grid, double exclusion) {
  DarbouxOutput out;
  if (grid.size() >= 2) out.poles = wronskian_zeros(chain, grid.front(), grid.back(), 4 * grid.size());

  double floor = std::numeric_limits<double>::infinity();
  for (double y : grid) {
    const bool near_pole = std::any_of(out.poles.begin(), out.poles.end(),
                                       [&](double p) { return std::fabs(y - p) < exclusion; });
    if (near_pole) continue;
    out.nodes.push_back(y);
    floor = std::min(floor, std::fabs(wronskian(chain, y)));
  }
  out.wronskian_floor = out.nodes.empty() ? 0.0 : floor;
  out.phi_hat = [chain, phi](double y) { return transformed_solution(chain, phi, y); };
  out.u_hat = [chain](double y) { return transformed_potential(chain, y); };
  return out;
}

IntertwiningResidual intertwining_residual(const DarbouxOutput& out, double eps, double y,
                                           double h) {
  if (!(h > 0.0)) h = 1e-3 * std::max(1.0, std::fabs(y));
  for (double p : out.poles) h = std::min(h, kPoleStepFraction * std::fabs(y - p));
  const double f = out.phi_hat(y);
  const double f2 = numerics::derivative(out.phi_hat, y, 2, h);
  const double res = f2 + (eps - out.u_hat(y)) * f;
  return {res, std::fabs(f) + std::fabs(f2)};
}

}  // namespace dunkl::darboux
