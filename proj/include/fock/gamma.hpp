#pragma once

namespace fock {

// Gamma-function ratios evaluated in log space so that arguments in the
// hundreds stay finite. Exact rising-product fast paths cover integer
// argument differences; they agree with the log path to 1e-13 (tested).

/// Gamma(a)/Gamma(b) for a, b > 0.
double gamma_ratio(double a, double b);

/// log(Gamma(a)/Gamma(b)) for a, b > 0.
double log_gamma_ratio(double a, double b);

/// Degree-k fractional differentiation coefficient Gamma(n+s+k)/Gamma(n+k).
/// For s < 0 only k > |s| is admitted.
double dcoeff(int n, double s, int k);

/// Degree-k fractional integration coefficient Gamma(n+k)/Gamma(n+s+k);
/// reciprocal of dcoeff with the same admissibility rule.
double icoeff(int n, double s, int k);

/// a(a-1)...(a-j+1); j = 0 gives 1. Valid for any real a (may be negative).
double falling_factorial(double a, int j);

}  // namespace fock
