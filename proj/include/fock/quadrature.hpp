#pragma once

#include <functional>
#include <vector>

#include "fock/numerics.hpp"

namespace fock {

/// Gauss-Jacobi rule on (0,1) against the weight t^b (1-t)^a, a,b > -1.
/// Exact for polynomial factors of degree <= 2*order-1.
struct QuadratureRule {
    double a = 0.0;  // exponent of (1-t) at t=1
    double b = 0.0;  // exponent of t at t=0
    std::vector<double> nodes;
    std::vector<double> weights;

    int order() const { return static_cast<int>(nodes.size()); }

    template <typename F>
    auto sum(F&& g) const {
        using R = decltype(g(0.0));
        R acc{};
        for (size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * g(nodes[i]);
        return acc;
    }
};

/// Nodes/weights by Golub-Welsch on the Jacobi recurrence.
const QuadratureRule& gauss_jacobi(int order, double a, double b);

inline const QuadratureRule& gauss_legendre(int order) { return gauss_jacobi(order, 0.0, 0.0); }

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
};

/// Composite Gauss-Legendre over [lo,hi], doubling the panel count until the
/// relative change drops below tol. Throws numerical_error when the doubling
/// budget runs out, reporting the achieved estimate.
IntegralResult adaptive_panels(const std::function<double(double)>& f, double lo, double hi,
                               double tol, int initial_panels = 4, int max_panels = 1 << 14);

/// integral_0^inf e^{-c t^2} t^A (1+t)^{-W} g(t) dt for smooth g with at most
/// polynomial growth t^tail_exponent. Requires c > 0 and A > -1.
double radial_integral(double c, double A, double W, const std::function<double(double)>& g,
                       double tail_exponent, double tol = 1e-12);

/// Closed-form-free Gaussian radial moment: g == 1.
double radial_integral(double c, double A, double W, double tol = 1e-12);

/// Radius beyond which e^{-c t^2} t^A (1+t)^{grow} has decayed ~55 e-folds
/// under its scale on [1, inf).
double gaussian_tail_radius(double c, double A, double grow);

}  // namespace fock
