// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dunkl/error.hpp"

namespace dunkl::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long double kEpsLong = std::numeric_limits<long double>::epsilon();
constexpr int kMaxSeriesTerms = 4000;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

void require_finite(double x, const char* name, const char* where) {
  if (!std::isfinite(x)) {
    fail(ErrorKind::Domain, std::string(where) + ": non-finite " + name);
  }
}

// Terminating 1F1(-n; b; z), Horner form
//   1 + z a/b (1 + z (a+1)/(2(b+1)) (1 + ...)).
SpecialValue kummer_polynomial(double a, double b, double z) {
  const auto n = static_cast<long>(-a);
  long double acc = 1.0L;
  long double abs_acc = 1.0L;
  for (long k = n; k >= 1; --k) {
    const long double c =
        static_cast<long double>(z) * (a + static_cast<double>(k - 1)) /
        ((b + static_cast<double>(k - 1)) * static_cast<long double>(k));
    acc = 1.0L + acc * c;
    abs_acc = 1.0L + abs_acc * std::fabs(c);
  }
  const double value = static_cast<double>(acc);
  return {value, 4.0 * kEps * static_cast<double>(abs_acc) * (1.0 + 0.1 * n)};
}

}  // namespace

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  const double g = std::tgamma(x);
  if (std::isinf(g)) return 0.0;
  return 1.0 / g;
}

namespace detail {

SpecialValue kummer_series(double a, double b, double z) {
  long double sum = 1.0L;
  long double term = 1.0L;
  long double abs_sum = 1.0L;
  double tail_bound = 0.0;
  bool converged = false;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    const long double ak = a + k;
    if (ak == 0.0L) {  // terminated exactly
      converged = true;
      break;
    }
    term *= ak * z / ((b + k) * static_cast<long double>(k + 1));
    sum += term;
    abs_sum += std::fabs(term);
    // Once the term ratio is below one and shrinking (k beyond -a and past
    // |z|), the tail is bounded by a geometric series.
    const long double next_ratio =
        std::fabs((a + k + 1) * static_cast<long double>(z) /
                  ((b + k + 1) * static_cast<long double>(k + 2)));
    if (k + 1 > -a && next_ratio < 0.5L &&
        std::fabs(term) <= kEpsLong * std::fabs(sum)) {
      tail_bound = static_cast<double>(std::fabs(term) * next_ratio /
                                       (1.0L - next_ratio));
      converged = true;
      break;
    }
  }
  if (!converged) {
    fail(ErrorKind::Accuracy, "kummer_m: series did not converge");
  }
  const double value = static_cast<double>(sum);
  const double err =
      tail_bound + 2.0 * kEps * static_cast<double>(abs_sum) + kEps * std::fabs(value);
  return {value, err};
}

SpecialValue bessel_i_series(int order, double z) {
  const long double half = 0.5L * z;
  const long double q = half * half;
  long double term = order == 0 ? 1.0L : half;
  long double sum = term;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    term *= q / (static_cast<long double>(k + 1) * (k + 1 + order));
    sum += term;
    if (term <= kEpsLong * sum && static_cast<long double>(k + 1) > half) break;
  }
  const double value = static_cast<double>(sum);
  return {value, 2.0 * kEps * std::fabs(value)};
}

SpecialValue bessel_i_asymptotic(int order, double z) {
  // I_v(z) ~ e^z / sqrt(2 pi z) * sum_k (-1)^k prod_{j<=k} (4v^2 - (2j-1)^2) / (k! (8z)^k)
  const double mu = 4.0 * order * order;
  long double sum = 1.0L;
  long double term = 1.0L;
  long double neglected = 0.0L;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const long double next = -term * (mu - odd * odd) / (k * 8.0L * z);
    if (std::fabs(next) >= std::fabs(term)) {  // expansion started to diverge
      neglected = std::fabs(term);
      break;
    }
    term = next;
    sum += term;
    neglected = std::fabs(term);
    if (term == 0.0L) break;
  }
  const double pref = std::exp(z) / std::sqrt(2.0 * std::numbers::pi * z);
  const double value = pref * static_cast<double>(sum);
  return {value, pref * static_cast<double>(neglected) + 2.0 * kEps * std::fabs(value)};
}

}  // namespace detail

SpecialValue kummer_m(double a, double b, double z) {
  require_finite(a, "a", "kummer_m");
  require_finite(b, "b", "kummer_m");
  require_finite(z, "z", "kummer_m");
  if (is_nonpositive_integer(b)) {
    fail(ErrorKind::Domain, "kummer_m: b must not be zero or a negative integer");
  }
  if (std::fabs(z) > kKummerMaxAbsZ) {
    fail(ErrorKind::Domain, "kummer_m: |z| exceeds supported range");
  }
  if (z == 0.0) return {1.0, 0.0};
  if (is_nonpositive_integer(a)) return kummer_polynomial(a, b, z);
  if (z > 0.0) return detail::kummer_series(a, b, z);

  // z < 0: Kummer's transformation removes the alternating cancellation.
  const double c = b - a;
  const SpecialValue inner = is_nonpositive_integer(c) ? kummer_polynomial(c, b, -z)
                                                       : detail::kummer_series(c, b, -z);
  const double ez = std::exp(z);
  const double value = ez * inner.value;
  return {value, ez * inner.est_abs_error + kEps * std::fabs(value)};
}

SpecialValue kummer_m_derivative(double a, double b, double z) {
  if (a == 0.0) return {0.0, 0.0};
  require_finite(b, "b", "kummer_m_derivative");
  if (is_nonpositive_integer(b)) {
    fail(ErrorKind::Domain, "kummer_m_derivative: b must not be zero or a negative integer");
  }
  const SpecialValue m = kummer_m(a + 1.0, b + 1.0, z);
  const double f = a / b;
  return {f * m.value, std::fabs(f) * m.est_abs_error};
}

SpecialValue assoc_laguerre(double degree, double alpha, double z) {
  require_finite(degree, "degree", "assoc_laguerre");
  require_finite(alpha, "alpha", "assoc_laguerre");
  require_finite(z, "z", "assoc_laguerre");
  if (is_nonpositive_integer(alpha + 1.0)) {
    fail(ErrorKind::Domain, "assoc_laguerre: alpha + 1 must not be a nonpositive integer");
  }

  double pref = 1.0;
  if (degree >= 0.0 && degree == std::floor(degree) && degree <= 170.0) {
    // binom(n + alpha, n) as an exact product
    const auto n = static_cast<int>(degree);
    for (int k = 1; k <= n; ++k) pref *= (alpha + k) / k;
  } else {
    const double top = degree + alpha + 1.0;
    const double r = rgamma(degree + 1.0);
    if (r == 0.0) return {0.0, 0.0};
    if (is_nonpositive_integer(top)) {
      fail(ErrorKind::Domain, "assoc_laguerre: binomial prefactor diverges");
    }
    pref = std::tgamma(top) * r * rgamma(alpha + 1.0);
  }

  const SpecialValue m = kummer_m(-degree, alpha + 1.0, z);
  const double value = pref * m.value;
  return {value, std::fabs(pref) * m.est_abs_error + 8.0 * kEps * std::fabs(value)};
}

SpecialValue assoc_laguerre_derivative(double degree, double alpha, double z) {
  const SpecialValue l = assoc_laguerre(degree - 1.0, alpha + 1.0, z);
  return {-l.value, l.est_abs_error};
}

SpecialValue bessel_i(int order, double z) {
  if (order != 0 && order != 1) {
    fail(ErrorKind::Domain, "bessel_i: only orders 0 and 1 are supported");
  }
  require_finite(z, "z", "bessel_i");
  const double az = std::fabs(z);
  if (az > kBesselMaxAbsZ) {
    fail(ErrorKind::Domain, "bessel_i: |z| exceeds supported range");
  }
  SpecialValue r = az <= kBesselSeriesCrossover ? detail::bessel_i_series(order, az)
                                                : detail::bessel_i_asymptotic(order, az);
  if (order == 1 && z < 0.0) r.value = -r.value;
  return r;
}

}  // namespace dunkl::specfun
