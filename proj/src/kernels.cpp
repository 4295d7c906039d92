#include "fock/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fock/gamma.hpp"
#include "fock/random.hpp"

namespace fock {

namespace {

constexpr int kTruncationCap = 100000;

double factorial(int k) {
    double p = 1.0;
    for (int j = 2; j <= k; ++j) p *= j;
    return p;
}

}  // namespace

RadialSeries::RadialSeries(std::function<double(int)> first_coeff, std::function<double(int)> ratio,
                           int start, double growth)
    : coeff_(std::move(first_coeff)), ratio_(std::move(ratio)), start_(start), growth_(growth) {}

Complex RadialSeries::eval(Complex lambda, int* terms_used) const {
    const double mag = std::abs(lambda);
    if (terms_used) *terms_used = 1;
    if (mag == 0.0) return start_ == 0 ? Complex{coeff_(0), 0.0} : Complex{0.0, 0.0};

    Complex term = coeff_(start_) * std::pow(lambda, start_);
    KahanSum acc;
    const double kmin = 2.0 * mag + growth_ + 10.0;
    int consecutive_small = 0;
    for (int k = start_; k - start_ < kTruncationCap; ++k) {
        acc.add(term);
        if (terms_used) *terms_used = k - start_ + 1;
        if (k > kmin) {
            if (std::abs(term) < 1e-15 * std::abs(acc.value())) {
                if (++consecutive_small >= 3) return acc.value();
            } else {
                consecutive_small = 0;
            }
        }
        term *= ratio_(k) * lambda;
    }
    throw numerical_error("RadialSeries: truncation cap exceeded at |lambda|=" +
                          std::to_string(mag) + "; tolerance unreachable");
}

Complex RadialSeries::eval_truncated(Complex lambda, int terms) const {
    if (std::abs(lambda) == 0.0) return start_ == 0 ? Complex{coeff_(0), 0.0} : Complex{0.0, 0.0};
    Complex term = coeff_(start_) * std::pow(lambda, start_);
    KahanSum acc;
    for (int k = start_; k < start_ + terms; ++k) {
        acc.add(term);
        term *= ratio_(k) * lambda;
    }
    return acc.value();
}

Complex fock_kernel(const CPoint& z, const CPoint& w) { return std::exp(inner(z, w)); }

RadialSeries ifrac_kernel_series(int n, double s) {
    // Coefficient of lambda^k: [Gamma(n+k)/Gamma(n+s+k)] / k!; degrees k > |s|
    // only when s < 0.
    const int start = s < 0.0 ? static_cast<int>(std::floor(-s)) + 1 : 0;
    return RadialSeries([n, s](int k) { return icoeff(n, s, k) / factorial(k); },
                        [n, s](int k) { return (n + k) / ((n + s + k) * (k + 1.0)); }, start,
                        std::abs(s));
}

RadialSeries dfrac_kernel_series(int n, double s) {
    const int start = s < 0.0 ? static_cast<int>(std::floor(-s)) + 1 : 0;
    return RadialSeries([n, s](int k) { return dcoeff(n, s, k) / factorial(k); },
                        [n, s](int k) { return (n + s + k) / ((n + k) * (k + 1.0)); }, start,
                        std::abs(s));
}

Complex error_term_lambda(const KernelParams& p, Complex lambda) {
    if (p.alpha <= 0.0) return {0.0, 0.0};
    const int kmax = static_cast<int>(std::floor(p.alpha / 2.0));
    const bool high = p.alpha >= 2.0 * p.n;
    KahanSum acc;
    Complex pw{1.0, 0.0};
    for (int k = 0; k <= kmax; ++k) {
        const double coeff =
            high ? 1.0 / factorial(k)
                 : gamma_ratio(p.n + static_cast<double>(k), p.n + k - p.alpha / 2.0) / factorial(k);
        acc.add(coeff * pw);
        pw *= lambda;
    }
    return acc.value();
}

Complex kernel_alpha_lambda(const KernelParams& p, Complex lambda) {
    if (p.alpha < 2.0 * p.n) {
        // No Gamma poles: ratio coefficients at every degree.
        RadialSeries s(
            [&p](int k) {
                return gamma_ratio(p.n + static_cast<double>(k), p.n + k - p.alpha / 2.0) /
                       factorial(k);
            },
            [&p](int k) { return (p.n + k) / ((p.n + k - p.alpha / 2.0) * (k + 1.0)); }, 0,
            std::abs(p.alpha) / 2.0);
        return s.eval(lambda);
    }
    return error_term_lambda(p, lambda) + ifrac_kernel_series(p.n, -p.alpha / 2.0).eval(lambda);
}

Complex kernel_alpha(const KernelParams& p, const CPoint& z, const CPoint& w) {
    return kernel_alpha_lambda(p, inner(z, w));
}

Complex error_term(const KernelParams& p, const CPoint& z, const CPoint& w) {
    return error_term_lambda(p, inner(z, w));
}

Complex truncated_kernel_plus(const KernelParams& p, const CPoint& z, const CPoint& w) {
    if (p.alpha < 2.0 * p.n) {
        throw std::invalid_argument("truncated_kernel_plus: requires alpha >= 2n");
    }
    return ifrac_kernel_series(p.n, -p.alpha / 2.0).eval(inner(z, w));
}

ConeParams::ConeParams(double eps) : epsilon(eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("ConeParams: epsilon must be in (0,1)");
    }
    delta = std::acos(eps / 2.0);
}

double lambda_bound(const ConeParams& c, const CPoint& z, const CPoint& w) {
    const Complex lam = inner(z, w);
    const double zn = z.norm();
    const double wn = w.norm();
    double theta = 0.0;  // either point at the origin: inside every cone
    if (zn > 0.0 && wn > 0.0) {
        const double cosv = std::clamp(lam.real() / (zn * wn), -1.0, 1.0);
        theta = std::acos(cosv);
    }
    double value = std::exp(c.epsilon * zn * wn);
    if (theta < c.delta) value += std::exp(lam.real());
    return value;
}

double check_kernel_bound(BoundKind which, double s_or_alpha, const ConeParams& c,
                          const std::vector<std::pair<CPoint, CPoint>>& grid) {
    if (grid.empty()) throw std::invalid_argument("check_kernel_bound: empty grid");
    const int n = grid.front().first.dim();
    const double s = s_or_alpha;

    double c_hat = 0.0;
    for (const auto& [z, w] : grid) {
        const Complex lam = inner(z, w);
        const double lmag = std::abs(lam);
        const double prod = z.norm() * w.norm();
        const double env = lambda_bound(c, z, w);

        double lhs = 0.0;
        double rhs = 0.0;
        switch (which) {
            case BoundKind::DsK:
                lhs = std::abs(dfrac_kernel_series(n, s).eval(lam));
                rhs = (s >= 0.0 ? std::pow(1.0 + lmag, s) : std::pow(1.0 + prod, s)) * env;
                break;
            case BoundKind::IsK:
                lhs = std::abs(ifrac_kernel_series(n, s).eval(lam));
                rhs = (s >= 0.0 ? std::pow(1.0 + prod, -s) : std::pow(lmag, -s)) * env;
                break;
            case BoundKind::Kalpha: {
                const KernelParams p{n, s_or_alpha};
                lhs = std::abs(kernel_alpha_lambda(p, lam));
                rhs = s_or_alpha > 0.0 ? 1.0 + std::pow(lmag, s_or_alpha / 2.0) * env
                                       : std::pow(1.0 + prod, s_or_alpha / 2.0) * env;
                break;
            }
        }
        if (rhs <= 0.0) {
            if (lhs == 0.0) continue;  // removable 0/0 (negative order at lambda = 0)
            throw numerical_error("check_kernel_bound: vanishing envelope at a sample");
        }
        c_hat = std::max(c_hat, lhs / rhs);
    }
    return c_hat;
}

std::vector<std::pair<CPoint, CPoint>> bound_check_grid(int n, double radius, int count,
                                                        uint64_t seed) {
    RandomSource rng(seed);
    std::vector<std::pair<CPoint, CPoint>> grid;
    grid.reserve(static_cast<size_t>(count) + 24);
    for (int i = 0; i < count; ++i) {
        grid.emplace_back(rng.point_in_ball(n, radius), rng.point_in_ball(n, radius));
    }
    // Aligned pairs probe the cone interior at full strength, orthogonal pairs
    // the complement.
    for (int i = 1; i <= 12; ++i) {
        const double t = radius * i / 12.0;
        CPoint z(std::vector<Complex>(static_cast<size_t>(n), Complex{0.0, 0.0}));
        z.coord[0] = t;
        grid.emplace_back(z, z);
        CPoint w = z;
        w.coord[0] = Complex{0.0, t};  // z . conj(w) purely imaginary
        grid.emplace_back(z, w);
    }
    return grid;
}

}  // namespace fock
