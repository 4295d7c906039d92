#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace fock {

using Complex = std::complex<double>;

/// Thrown when an iterative numerical procedure fails to reach its target
/// accuracy (quadrature non-convergence, series truncation cap, ...).
/// Carries the achieved error estimate in the message.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Compensated (Kahan) accumulator for complex sums with cancellation.
class KahanSum {
public:
    void add(Complex term) {
        const Complex y = term - comp_;
        const Complex t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    Complex value() const { return sum_; }

private:
    Complex sum_{0.0, 0.0};
    Complex comp_{0.0, 0.0};
};

/// log(e^a + e^b) without overflow.
inline double log_add_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double m = std::max(a, b);
    return m + std::log1p(std::exp(-std::abs(a - b)));
}

/// Streaming log-sum-exp for sums of positive terms given by their logs.
class LogSumExp {
public:
    void add(double log_term) { total_ = log_add_exp(total_, log_term); }
    double log_value() const { return total_; }

private:
    double total_ = -std::numeric_limits<double>::infinity();
};

/// |a - b| relative to the larger magnitude, with an absolute floor for the
/// both-nearly-zero case.
inline double rel_diff(Complex a, Complex b, double floor = 0.0) {
    const double denom = std::max({std::abs(a), std::abs(b), floor});
    if (denom == 0.0) return 0.0;
    return std::abs(a - b) / denom;
}

inline double rel_diff(double a, double b, double floor = 0.0) {
    return rel_diff(Complex(a, 0.0), Complex(b, 0.0), floor);
}

}  // namespace fock
