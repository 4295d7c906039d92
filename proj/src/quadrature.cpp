#include "fock/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace fock {

namespace {

// Implicit-shift QL for a symmetric tridiagonal matrix, accumulating only the
// first row of the eigenvector matrix (all that Golub-Welsch needs).
void symtridiag_eigen(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z0) {
    const int n = static_cast<int>(d.size());
    e.resize(static_cast<size_t>(n), 0.0);  // e[n-1] used as scratch
    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 64) throw numerical_error("symtridiag_eigen: QL did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double bb = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * bb;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - bb;
                    f = z0[i + 1];
                    z0[i + 1] = s * z0[i] + c * f;
                    z0[i] = c * z0[i] - s * f;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

QuadratureRule build_gauss_jacobi(int order, double a, double b) {
    if (order < 1) throw std::invalid_argument("gauss_jacobi: order must be >= 1");
    if (!(a > -1.0) || !(b > -1.0)) {
        throw std::invalid_argument("gauss_jacobi: endpoint exponents must be > -1");
    }
    // Recurrence coefficients for the (1-x)^a (1+x)^b weight on (-1,1).
    std::vector<double> diag(static_cast<size_t>(order));
    std::vector<double> off(static_cast<size_t>(order), 0.0);
    const double ab = a + b;
    diag[0] = (b - a) / (ab + 2.0);
    for (int k = 1; k < order; ++k) {
        const double t = 2.0 * k + ab;
        diag[static_cast<size_t>(k)] = (b * b - a * a) / (t * (t + 2.0));
    }
    for (int k = 1; k < order; ++k) {
        double beta;
        if (k == 1) {
            beta = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        } else {
            const double t = 2.0 * k + ab;
            beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (t * t * (t + 1.0) * (t - 1.0));
        }
        off[static_cast<size_t>(k - 1)] = std::sqrt(beta);
    }

    std::vector<double> z0(static_cast<size_t>(order), 0.0);
    z0[0] = 1.0;
    symtridiag_eigen(diag, off, z0);

    std::vector<size_t> idx(static_cast<size_t>(order));
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) { return diag[i] < diag[j]; });

    // Total mass of t^b (1-t)^a on (0,1).
    const double mass = std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));

    QuadratureRule rule;
    rule.a = a;
    rule.b = b;
    rule.nodes.reserve(idx.size());
    rule.weights.reserve(idx.size());
    for (size_t i : idx) {
        rule.nodes.push_back(0.5 * (diag[i] + 1.0));
        rule.weights.push_back(mass * z0[i] * z0[i]);
    }
    return rule;
}

}  // namespace

const QuadratureRule& gauss_jacobi(int order, double a, double b) {
    static std::map<std::tuple<int, double, double>, QuadratureRule> cache;
    const auto key = std::make_tuple(order, a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_gauss_jacobi(order, a, b)).first;
    return it->second;
}

namespace {

double panel_pass(const std::function<double(double)>& f, double lo, double hi, int npanels,
                  const QuadratureRule& gl) {
    const double h = (hi - lo) / npanels;
    double total = 0.0;
    for (int p = 0; p < npanels; ++p) {
        const double base = lo + p * h;
        double acc = 0.0;
        for (size_t i = 0; i < gl.nodes.size(); ++i) acc += gl.weights[i] * f(base + h * gl.nodes[i]);
        total += h * acc;
    }
    return total;
}

}  // namespace

IntegralResult adaptive_panels(const std::function<double(double)>& f, double lo, double hi,
                               double tol, int initial_panels, int max_panels) {
    if (!(hi > lo)) return {0.0, 0.0, true};
    const QuadratureRule& gl = gauss_jacobi(24, 0.0, 0.0);
    double prev = panel_pass(f, lo, hi, initial_panels, gl);
    for (int np = 2 * initial_panels; np <= max_panels; np *= 2) {
        const double cur = panel_pass(f, lo, hi, np, gl);
        const double err = std::abs(cur - prev);
        if (err <= tol * std::max(std::abs(cur), 1e-300)) {
            return {cur, err, true};
        }
        prev = cur;
    }
    throw numerical_error("adaptive_panels: no convergence to tol=" + std::to_string(tol) +
                          ", last change " + std::to_string(std::abs(prev)));
}

double radial_integral(double c, double A, double W, const std::function<double(double)>& g,
                       double tail_exponent, double tol) {
    if (!(c > 0.0)) throw std::invalid_argument("radial_integral: Gaussian rate must be positive");
    if (!(A > -1.0)) throw std::invalid_argument("radial_integral: endpoint exponent must be > -1");

    // [0,1]: t^A folded into a Jacobi weight, the rest is analytic.
    auto head = [&](double t) { return std::exp(-c * t * t) * std::pow(1.0 + t, -W) * g(t); };
    double head_val = 0.0;
    {
        double prev = 0.0;
        bool ok = false;
        for (int order = 24; order <= 192; order *= 2) {
            const QuadratureRule& rule = gauss_jacobi(order, 0.0, A);
            const double cur = rule.sum(head);
            if (order > 24 && std::abs(cur - prev) <= 0.5 * tol * std::max(std::abs(cur), 1e-300)) {
                head_val = cur;
                ok = true;
                break;
            }
            prev = cur;
        }
        if (!ok) throw numerical_error("radial_integral: head segment did not converge");
    }

    // [1,T]: pick T where the integrand has decayed ~1e-24 below its scale.
    const double grow = std::max(0.0, -W) + std::max(0.0, tail_exponent);
    const double T = gaussian_tail_radius(c, A, grow);

    auto full = [&](double t) { return std::exp(-c * t * t) * std::pow(t, A) * std::pow(1.0 + t, -W) * g(t); };
    const IntegralResult tail = adaptive_panels(full, 1.0, T, tol, 8);
    return head_val + tail.value;
}

double radial_integral(double c, double A, double W, double tol) {
    return radial_integral(c, A, W, [](double) { return 1.0; }, 0.0, tol);
}

double gaussian_tail_radius(double c, double A, double grow) {
    auto log_envelope = [&](double t) {
        return -c * t * t + A * std::log(t) + grow * std::log1p(t);
    };
    const double log_scale =
        std::max(log_envelope(std::sqrt(std::max(A, 1.0) / (2.0 * c))), log_envelope(1.0));
    double T = 1.0 + std::sqrt((std::max(A, 0.0) + grow + 60.0) / c);
    while (log_envelope(T) > log_scale - 55.0 && T < 1e6) T *= 1.25;
    return T;
}

}  // namespace fock
