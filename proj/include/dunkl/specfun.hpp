// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Special functions needed by the closed-form solutions: Kummer's confluent
// hypergeometric function M = 1F1, associated Laguerre functions of real
// degree, and the modified Bessel functions I0 and I1.
//
// Everything here is pure and reentrant. Each routine returns its value
// together with a conservative absolute error estimate built from the
// magnitude of the neglected/accumulated terms.

namespace dunkl::specfun {

struct SpecialValue {
  double value = 0.0;
  double est_abs_error = 0.0;
};

/// Largest |z| accepted by kummer_m.
inline constexpr double kKummerMaxAbsZ = 100.0;
/// Largest |z| accepted by bessel_i (exp overflows beyond ~709).
inline constexpr double kBesselMaxAbsZ = 700.0;
/// Power series is used for |z| <= this value, the asymptotic expansion above.
inline constexpr double kBesselSeriesCrossover = 17.0;

/// 1F1(a; b; z).
///
/// For a = -n (n a nonnegative integer) the series terminates and the
/// polynomial is evaluated by Horner's rule. For z < 0 (non-terminating case)
/// Kummer's transformation M(a,b,z) = e^z M(b-a,b,-z) is applied so that the
/// summed series has no cancellation.
///
/// Throws Error(Domain) if b is a nonpositive integer, an input is not
/// finite, or |z| > kKummerMaxAbsZ.
SpecialValue kummer_m(double a, double b, double z);

/// d/dz 1F1(a; b; z) = (a/b) 1F1(a+1; b+1; z).
SpecialValue kummer_m_derivative(double a, double b, double z);

/// L_degree^alpha(z) = binom(degree+alpha, degree) 1F1(-degree; alpha+1; z),
/// valid for real degree through the Gamma-function binomial.
SpecialValue assoc_laguerre(double degree, double alpha, double z);

/// d/dz L_degree^alpha(z) = -L_{degree-1}^{alpha+1}(z).
SpecialValue assoc_laguerre_derivative(double degree, double alpha, double z);

/// Modified Bessel function of the first kind, order 0 or 1.
SpecialValue bessel_i(int order, double z);

/// 1/Gamma(x); exactly zero at the poles of Gamma.
double rgamma(double x);

namespace detail {
// Exposed for seam tests; both expect z >= 0.
SpecialValue bessel_i_series(int order, double z);
SpecialValue bessel_i_asymptotic(int order, double z);
// Direct power series of 1F1, no transformation applied.
SpecialValue kummer_series(double a, double b, double z);
}  // namespace detail

}  // namespace dunkl::specfun
