#pragma once

#include "fock/polynomial.hpp"

namespace fock {

/// Order decomposition s = m + r with m a nonnegative integer and 0 <= r < 1.
struct OrderSplit {
    double s;
    int m;
    double r;
};
OrderSplit order_split(double s);  // requires s > 0

/// Fractional derivative: the degree-k homogeneous part is scaled by
/// Gamma(n+s+k)/Gamma(n+k); for s < 0 the parts with k <= |s| are dropped.
Polynomial dfrac_series(const Polynomial& f, double s);

/// Fractional integral: degree-k part scaled by Gamma(n+k)/Gamma(n+s+k);
/// same truncation rule for s < 0.
Polynomial ifrac_series(const Polynomial& f, double s);

// Integral representations on (0,1). The (m+1)-st t-derivative under the
// integral sign is carried out exactly on the monomial t-powers; the Jacobi
// quadrature only ever sees a polynomial against its endpoint weight.

/// Order +s derivative, s > 0. Uses the separate m! f(0) branch when n = 1
/// and s is a positive integer.
Complex dfrac_integral(const Polynomial& f, double s, const CPoint& z);

/// Order -s derivative, s > 0 (acts on the Taylor tail above |s|).
Complex dfrac_neg_integral(const Polynomial& f, double s, const CPoint& z);

/// Order +s integral, s > 0.
Complex ifrac_integral(const Polynomial& f, double s, const CPoint& z);

/// Order -s integral, s > 0 (acts on the Taylor tail above |s|).
Complex ifrac_neg_integral(const Polynomial& f, double s, const CPoint& z);

/// Truncated exponential e_k(x) = e^x - sum_{j<=k} x^j/j!, with a tail-series
/// branch below |x| = 1 that avoids the subtractive cancellation.
Complex truncated_exp(int k, Complex lambda);

/// Radial differentiation (1+|z|)^{-s} D^s f(z).
Complex rop(const Polynomial& f, double s, const CPoint& z);

/// Radial integration (1+|z|)^{-s} I^{-s} f(z).
Complex rop_tilde(const Polynomial& f, double s, const CPoint& z);

}  // namespace fock
