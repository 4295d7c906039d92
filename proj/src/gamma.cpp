#include "fock/gamma.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fock {

namespace {

bool near_integer(double x, double& rounded) {
    rounded = std::round(x);
    return std::abs(x - rounded) <= 1e-12 * std::max(1.0, std::abs(x));
}

void require_positive(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::domain_error("gamma_ratio: arguments must be positive, got a=" +
                                std::to_string(a) + " b=" + std::to_string(b));
    }
}

// Stirling correction S(x) with lgamma(x) = (x-1/2)ln x - x + ln(2*pi)/2 + S(x);
// below 1e-16 truncation for x >= 16.
double stirling_tail(double x) {
    const double x2 = x * x;
    const double inv = 1.0 / x;
    return inv * (1.0 / 12.0 +
                  (1.0 / x2) * (-1.0 / 360.0 +
                                (1.0 / x2) * (1.0 / 1260.0 +
                                              (1.0 / x2) * (-1.0 / 1680.0 +
                                                            (1.0 / x2) * (1.0 / 1188.0)))));
}

// lgamma(a) - lgamma(b) for a, b >= 16 without subtracting two large logs:
// the leading terms are rearranged through log1p((a-b)/b).
double stirling_log_ratio(double a, double b) {
    const double d = a - b;
    return (a - 0.5) * std::log1p(d / b) + d * (std::log(b) - 1.0) + stirling_tail(a) -
           stirling_tail(b);
}

double log_ratio_impl(double a, double b) {
    if (a == b) return 0.0;
    // Differences much larger than the arguments gain nothing from the
    // rearrangement; plain lgamma is adequate there.
    if (std::abs(a - b) > 64.0) return std::lgamma(a) - std::lgamma(b);
    double shift_log = 0.0;
    while (std::min(a, b) < 16.0) {
        // Gamma(a)/Gamma(b) = [Gamma(a+1)/Gamma(b+1)] * (b/a)
        shift_log += std::log(b) - std::log(a);
        a += 1.0;
        b += 1.0;
    }
    return shift_log + stirling_log_ratio(a, b);
}

}  // namespace

double gamma_ratio(double a, double b) {
    require_positive(a, b);
    if (a == b) return 1.0;
    // Integer argument difference: rising product, exact up to rounding.
    double d;
    if (near_integer(a - b, d) && std::abs(d) <= 64.0 && d != 0.0) {
        if (d > 0) {
            double p = 1.0;
            for (int j = 0; j < static_cast<int>(d); ++j) p *= b + j;
            return p;
        }
        double p = 1.0;
        for (int j = 0; j < static_cast<int>(-d); ++j) p *= a + j;
        return 1.0 / p;
    }
    return std::exp(log_ratio_impl(a, b));
}

double log_gamma_ratio(double a, double b) {
    require_positive(a, b);
    return log_ratio_impl(a, b);
}

namespace {

void check_order_range(int n, double s, int k) {
    if (n < 1) throw std::domain_error("dcoeff/icoeff: dimension must be >= 1");
    if (k < 0) throw std::domain_error("dcoeff/icoeff: degree index must be >= 0");
    // Negative order sums run over k > |s| only.
    if (s < 0.0 && !(static_cast<double>(k) > -s)) {
        throw std::domain_error("dcoeff/icoeff: k=" + std::to_string(k) +
                                " is outside the admissible range k > |s| for s=" +
                                std::to_string(s));
    }
}

}  // namespace

double dcoeff(int n, double s, int k) {
    check_order_range(n, s, k);
    return gamma_ratio(n + s + k, static_cast<double>(n + k));
}

double icoeff(int n, double s, int k) {
    check_order_range(n, s, k);
    return gamma_ratio(static_cast<double>(n + k), n + s + k);
}

double falling_factorial(double a, int j) {
    double p = 1.0;
    for (int i = 0; i < j; ++i) p *= a - i;
    return p;
}

}  // namespace fock
