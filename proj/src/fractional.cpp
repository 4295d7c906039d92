#include "fock/fractional.hpp"

#include <cmath>
#include <stdexcept>

#include "fock/gamma.hpp"
#include "fock/quadrature.hpp"

namespace fock {

OrderSplit order_split(double s) {
    if (!(s > 0.0)) throw std::invalid_argument("order_split: requires s > 0");
    int m = static_cast<int>(std::floor(s));
    double r = s - m;
    if (r >= 1.0) {  // guard against floor rounding at integer s
        m += 1;
        r = 0.0;
    }
    return {s, m, r};
}

namespace {

Polynomial scale_by_degree(const Polynomial& f, double s, bool derivative) {
    const int n = f.dim();
    Polynomial out(n);
    for (const auto& [gamma, c] : f.terms()) {
        const int k = gamma.order();
        if (s < 0.0 && !(static_cast<double>(k) > -s)) continue;
        const double factor = derivative ? dcoeff(n, s, k) : icoeff(n, s, k);
        out.set_coeff(gamma, c * factor);
    }
    return out;
}

int quad_order(const Polynomial& f, int m) { return std::max(20, f.degree() + m + 5); }

}  // namespace

Polynomial dfrac_series(const Polynomial& f, double s) { return scale_by_degree(f, s, true); }

Polynomial ifrac_series(const Polynomial& f, double s) { return scale_by_degree(f, s, false); }

Complex dfrac_integral(const Polynomial& f, double s, const CPoint& z) {
    const auto [order, m, r] = order_split(s);
    const int n = f.dim();
    if (f.is_zero()) return {0.0, 0.0};
    const std::vector<Complex> prof = radial_profile(f, z);
    const int deg = static_cast<int>(prof.size()) - 1;

    if (n == 1 && r == 0.0) {
        // m! f(0) plus d_t^{m+1}[t^m f(tz)] integrated with no endpoint weight;
        // the k = 0 term dies under the derivative.
        Complex value = gamma_ratio(m + 1.0, 1.0) * prof[0];
        if (deg >= 1) {
            const QuadratureRule& rule = gauss_legendre(quad_order(f, m));
            KahanSum acc;
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                const double t = rule.nodes[i];
                Complex poly{0.0, 0.0};
                double tpow = 1.0;  // t^{k-1}
                for (int k = 1; k <= deg; ++k) {
                    poly += gamma_ratio(m + 1.0 + k, static_cast<double>(k)) *
                            prof[static_cast<size_t>(k)] * tpow;
                    tpow *= t;
                }
                acc.add(rule.weights[i] * poly);
            }
            value += acc.value();
        }
        return value;
    }

    // d_t^{m+1}[t^{n+s-1+k}] = [Gamma(n+s+k)/Gamma(n+r-1+k)] t^{n+r+k-2};
    // t^{n+r-2} joins the Jacobi weight, leaving a plain polynomial in t.
    const QuadratureRule& rule = gauss_jacobi(quad_order(f, m), -r, n + r - 2.0);
    std::vector<double> factor(static_cast<size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) {
        factor[static_cast<size_t>(k)] = gamma_ratio(n + s + k, n + r - 1.0 + k);
    }
    KahanSum acc;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = rule.nodes[i];
        Complex poly{0.0, 0.0};
        double tpow = 1.0;
        for (int k = 0; k <= deg; ++k) {
            poly += factor[static_cast<size_t>(k)] * prof[static_cast<size_t>(k)] * tpow;
            tpow *= t;
        }
        acc.add(rule.weights[i] * poly);
    }
    return acc.value() / std::tgamma(1.0 - r);
}

Complex dfrac_neg_integral(const Polynomial& f, double s, const CPoint& z) {
    if (!(s > 0.0)) throw std::invalid_argument("dfrac_neg_integral: requires s > 0");
    const int n = f.dim();
    const Polynomial tail = tail_split(f, s).first;
    if (tail.is_zero()) return {0.0, 0.0};
    const std::vector<Complex> prof = radial_profile(tail, z);
    const int deg = static_cast<int>(prof.size()) - 1;
    const int kmin = static_cast<int>(std::floor(s)) + 1;

    // Integrand t^{n-s-1+k} (1-t)^{s-1}; the tail vanishes to order kmin, so
    // t^{n-s-1+kmin} goes into the Jacobi weight.
    const QuadratureRule& rule = gauss_jacobi(quad_order(f, 0), s - 1.0, n - s - 1.0 + kmin);
    KahanSum acc;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = rule.nodes[i];
        Complex poly{0.0, 0.0};
        double tpow = 1.0;  // t^{k-kmin}
        for (int k = kmin; k <= deg; ++k) {
            poly += prof[static_cast<size_t>(k)] * tpow;
            tpow *= t;
        }
        acc.add(rule.weights[i] * poly);
    }
    return acc.value() / std::tgamma(s);
}

Complex ifrac_integral(const Polynomial& f, double s, const CPoint& z) {
    if (!(s > 0.0)) throw std::invalid_argument("ifrac_integral: requires s > 0");
    const int n = f.dim();
    if (f.is_zero()) return {0.0, 0.0};
    const std::vector<Complex> prof = radial_profile(f, z);
    const int deg = static_cast<int>(prof.size()) - 1;

    const QuadratureRule& rule = gauss_jacobi(quad_order(f, 0), s - 1.0, n - 1.0);
    KahanSum acc;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = rule.nodes[i];
        Complex poly{0.0, 0.0};
        double tpow = 1.0;
        for (int k = 0; k <= deg; ++k) {
            poly += prof[static_cast<size_t>(k)] * tpow;
            tpow *= t;
        }
        acc.add(rule.weights[i] * poly);
    }
    return acc.value() / std::tgamma(s);
}

Complex ifrac_neg_integral(const Polynomial& f, double s, const CPoint& z) {
    const auto [order, m, r] = order_split(s);
    const int n = f.dim();
    const Polynomial tail = tail_split(f, s).first;
    if (tail.is_zero()) return {0.0, 0.0};
    const std::vector<Complex> prof = radial_profile(tail, z);
    const int deg = static_cast<int>(prof.size()) - 1;
    const int kmin = m + 1;

    // t^s d_t^{m+1}[t^{n-r+k}] = [Gamma(n+k+1-r)/Gamma(n+k-s)] t^{n+k-1};
    // with k >= kmin every Gamma argument stays positive even at r = 0.
    const QuadratureRule& rule = gauss_jacobi(quad_order(f, m), -r, n + kmin - 1.0);
    std::vector<double> factor(static_cast<size_t>(deg) + 1, 0.0);
    for (int k = kmin; k <= deg; ++k) {
        factor[static_cast<size_t>(k)] = gamma_ratio(n + k + 1.0 - r, n + k - s);
    }
    KahanSum acc;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = rule.nodes[i];
        Complex poly{0.0, 0.0};
        double tpow = 1.0;  // t^{k-kmin}
        for (int k = kmin; k <= deg; ++k) {
            poly += factor[static_cast<size_t>(k)] * prof[static_cast<size_t>(k)] * tpow;
            tpow *= t;
        }
        acc.add(rule.weights[i] * poly);
    }
    return acc.value() / std::tgamma(1.0 - r);
}

Complex truncated_exp(int k, Complex lambda) {
    if (k < 0) throw std::invalid_argument("truncated_exp: k must be >= 0");
    if (std::abs(lambda) < 1.0) {
        // Tail series sum_{l>=0} lambda^{k+1+l}/(k+1+l)!.
        Complex term{1.0, 0.0};
        for (int j = 1; j <= k + 1; ++j) term *= lambda / static_cast<double>(j);
        KahanSum acc;
        int l = 0;
        while (l < 200) {
            acc.add(term);
            ++l;
            term *= lambda / static_cast<double>(k + 1 + l);
            if (l > 3 && std::abs(term) <= 1e-18 * std::abs(acc.value())) break;
        }
        return acc.value();
    }
    Complex partial{0.0, 0.0};
    Complex term{1.0, 0.0};
    for (int j = 0; j <= k; ++j) {
        partial += term;
        term *= lambda / static_cast<double>(j + 1);
    }
    return std::exp(lambda) - partial;
}

Complex rop(const Polynomial& f, double s, const CPoint& z) {
    return std::pow(1.0 + z.norm(), -s) * dfrac_series(f, s)(z);
}

Complex rop_tilde(const Polynomial& f, double s, const CPoint& z) {
    return std::pow(1.0 + z.norm(), -s) * ifrac_series(f, -s)(z);
}

}  // namespace fock
