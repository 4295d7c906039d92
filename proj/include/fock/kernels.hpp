#pragma once

#include <functional>
#include <vector>

#include "fock/polynomial.hpp"

namespace fock {

/// One-variable power series sum_{k>=start} c_k lambda^k with factorially
/// decaying coefficients, evaluated by term recurrence. `ratio(k)` returns
/// c_{k+1}/c_k; `growth` is the exponent q in |c_k| <= C k^q / k!, used by
/// the truncation stop rule.
class RadialSeries {
public:
    RadialSeries(std::function<double(int)> first_coeff, std::function<double(int)> ratio,
                 int start, double growth);

    /// Adaptive evaluation: stops once k > 2|lambda| + growth + 10 and the
    /// last term is below 1e-15 of the running sum three times in a row.
    /// Throws numerical_error past 1e5 terms. `terms_used` reports the
    /// adaptive truncation index when non-null.
    Complex eval(Complex lambda, int* terms_used = nullptr) const;

    /// Fixed truncation after `terms` terms (no adaptivity); for truncation
    /// soundness checks.
    Complex eval_truncated(Complex lambda, int terms) const;

    int start_index() const { return start_; }

private:
    std::function<double(int)> coeff_;
    std::function<double(int)> ratio_;
    int start_;
    double growth_;
};

struct KernelParams {
    int n;
    double alpha;
};

/// e^{z . conj(w)}.
Complex fock_kernel(const CPoint& z, const CPoint& w);

/// Reproducing kernel of the weighted space as a series in lambda = z.conj(w):
/// Gamma-ratio coefficients throughout for alpha < 2n; for alpha >= 2n the
/// low degrees k <= alpha/2 carry plain 1/k! and the Gamma ratios start above.
Complex kernel_alpha(const KernelParams& p, const CPoint& z, const CPoint& w);

/// Low-degree polynomial correction: 0 for alpha <= 0; the k <= alpha/2
/// Gamma-ratio terms for 0 < alpha < 2n; the k <= alpha/2 exponential Taylor
/// terms for alpha >= 2n.
Complex error_term(const KernelParams& p, const CPoint& z, const CPoint& w);

/// High-degree part of the kernel (alpha >= 2n only): kernel minus error term.
Complex truncated_kernel_plus(const KernelParams& p, const CPoint& z, const CPoint& w);

/// Series for the order -s fractional integral of the exponential kernel;
/// equals the kernel series without its low-degree correction.
RadialSeries ifrac_kernel_series(int n, double s);

/// Series for the order s fractional derivative of the exponential kernel.
RadialSeries dfrac_kernel_series(int n, double s);

/// Scalar kernel series in lambda (full kernel including the split).
Complex kernel_alpha_lambda(const KernelParams& p, Complex lambda);
Complex error_term_lambda(const KernelParams& p, Complex lambda);

struct ConeParams {
    double epsilon;  // in (0,1)
    double delta;    // arccos(epsilon/2)

    explicit ConeParams(double eps);
};

/// Comparison envelope e^{Re lambda} [angle < delta] + e^{eps |z||w|}.
/// The angle between z and w as real vectors is 0 when either point is 0.
double lambda_bound(const ConeParams& c, const CPoint& z, const CPoint& w);

enum class BoundKind { DsK, IsK, Kalpha };

/// Fitted constant: max over the grid of |LHS| / RHS-shape where LHS is the
/// named kernel series and RHS the corresponding growth envelope with the
/// constant stripped. Points where both sides vanish are skipped.
double check_kernel_bound(BoundKind which, double s_or_alpha, const ConeParams& c,
                          const std::vector<std::pair<CPoint, CPoint>>& grid);

/// Deterministic sampling grid for bound checks: `count` pairs in the box
/// |z|,|w| <= radius (fixed seed), plus aligned and orthogonal extremes.
std::vector<std::pair<CPoint, CPoint>> bound_check_grid(int n, double radius, int count,
                                                        uint64_t seed);

}  // namespace fock
