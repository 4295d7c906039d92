#include "fock/probes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "fock/fractional.hpp"
#include "fock/gamma.hpp"
#include "fock/kernels.hpp"
#include "fock/norms.hpp"
#include "fock/quadrature.hpp"

namespace fock {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Log-space integration over the plane (one complex variable, normalized
// volume) and over a half line. Everything here assumes positive integrands
// given through their logarithm; magnitudes like e^{p^2 |z|^2 / 4} stay in
// range that way.

struct PlaneIntegrand {
    std::function<double(double rho, double phi)> log_f;
    std::vector<double> phi_breaks;  // sorted, within [0, 2pi]
    double rho_max = 10.0;
};

double log_plane_pass(const PlaneIntegrand& f, int rho_panels, int phi_nodes) {
    const QuadratureRule& gl = gauss_jacobi(24, 0.0, 0.0);
    std::vector<std::pair<double, double>> segments;
    if (f.phi_breaks.empty()) {
        segments.emplace_back(0.0, 2.0 * kPi);
    } else {
        for (size_t i = 0; i + 1 < f.phi_breaks.size(); ++i) {
            segments.emplace_back(f.phi_breaks[i], f.phi_breaks[i + 1]);
        }
        segments.emplace_back(f.phi_breaks.back(), f.phi_breaks.front() + 2.0 * kPi);
    }
    const QuadratureRule& glphi = gauss_jacobi(phi_nodes, 0.0, 0.0);

    LogSumExp acc;
    const double h = f.rho_max / rho_panels;
    for (int p = 0; p < rho_panels; ++p) {
        const double base = p * h;
        for (size_t i = 0; i < gl.nodes.size(); ++i) {
            const double rho = base + h * gl.nodes[i];
            if (rho <= 0.0) continue;
            const double log_rho_w = std::log(h * gl.weights[i] * rho);
            for (const auto& [lo, hi] : segments) {
                const double width = hi - lo;
                for (size_t j = 0; j < glphi.nodes.size(); ++j) {
                    const double phi = lo + width * glphi.nodes[j];
                    acc.add(log_rho_w + std::log(width * glphi.weights[j]) + f.log_f(rho, phi));
                }
            }
        }
    }
    return acc.log_value() - std::log(kPi);
}

// Refines the angular and radial resolutions one direction at a time, so a
// kink in one variable does not force the smooth direction to escalate too.
double log_plane_integral(const PlaneIntegrand& f, double tol_log = 1e-8) {
    int panels = 8, nodes = 24;
    double best = log_plane_pass(f, panels, nodes);
    double last_change = 0.0;
    for (int round = 0; round < 12; ++round) {
        bool moved = false;
        if (nodes < 512) {
            const double finer = log_plane_pass(f, panels, 2 * nodes);
            last_change = std::abs(finer - best);
            if (last_change > tol_log) {
                nodes *= 2;
                best = finer;
                moved = true;
            }
        }
        if (panels < 512) {
            const double finer = log_plane_pass(f, 2 * panels, nodes);
            last_change = std::max(last_change, std::abs(finer - best));
            if (std::abs(finer - best) > tol_log) {
                panels *= 2;
                best = finer;
                moved = true;
            }
        }
        if (!moved) return best;
    }
    throw numerical_error("log_plane_integral: no convergence, remaining log-change " +
                          std::to_string(last_change));
}

double log_halfline_pass(const std::function<double(double)>& log_f, double hi, int panels) {
    const QuadratureRule& gl = gauss_jacobi(24, 0.0, 0.0);
    LogSumExp acc;
    const double h = hi / panels;
    for (int p = 0; p < panels; ++p) {
        const double base = p * h;
        for (size_t i = 0; i < gl.nodes.size(); ++i) {
            acc.add(std::log(h * gl.weights[i]) + log_f(base + h * gl.nodes[i]));
        }
    }
    return acc.log_value();
}

double log_halfline_integral(const std::function<double(double)>& log_f, double hi,
                             double tol_log = 1e-9) {
    double prev = log_halfline_pass(log_f, hi, 8);
    for (int panels = 16; panels <= 1024; panels *= 2) {
        const double cur = log_halfline_pass(log_f, hi, panels);
        if (std::abs(cur - prev) <= tol_log) return cur;
        prev = cur;
    }
    throw numerical_error("log_halfline_integral: no convergence");
}

// ---------------------------------------------------------------------------
// Shared sampling helpers. Index 0..7 hit deterministic extremes of the box;
// later indices are seeded draws.

Complex sample_z1(RandomSource& rng, int index, double radius) {
    switch (index) {
        case 0: return {radius, 0.0};
        case 1: return {0.5 * radius, 0.0};
        case 2: return {0.0, radius};
        case 3: return {-0.7 * radius, 0.3 * radius};
        case 4: return {0.1, 0.0};
        case 5: return {0.0, 0.0};
        case 6: return {radius / 3.0, -radius / 3.0};
        case 7: return {-radius, -0.2};
        default: {
            const CPoint p = rng.point_in_ball(1, radius);
            return p.coord[0];
        }
    }
}

std::pair<Complex, Complex> sample_pair1(RandomSource& rng, int index, double radius) {
    switch (index) {
        case 0: return {{radius, 0.0}, {radius, 0.0}};       // aligned, cone center
        case 1: return {{radius, 0.0}, {0.0, radius}};       // orthogonal inner product
        case 2: return {{radius, 0.0}, {-radius, 0.0}};      // antipodal
        case 3: return {{0.6 * radius, 0.0}, {0.6 * radius, 0.1 * radius}};
        case 4: return {{radius, 0.0}, {0.0, 0.0}};
        case 5: return {{0.3, 0.2}, {0.3, 0.2}};
        case 6: return {{0.9 * radius, 0.1}, {0.8 * radius, -0.1}};
        case 7: return {{0.2, -0.4}, {-0.1, 0.5}};
        default:
            return {sample_z1(rng, 8 + index, radius), sample_z1(rng, 9 + index * 2, radius)};
    }
}

double log_abs(Complex v) {
    const double a = std::abs(v);
    return a > 0.0 ? std::log(a) : kNegInf;
}

// Dense coefficients of a one-variable polynomial, for allocation-free Horner
// evaluation inside quadrature loops.
std::vector<Complex> dense_coeffs(const Polynomial& f) {
    std::vector<Complex> c(static_cast<size_t>(std::max(0, f.degree() + 1)), Complex{0.0, 0.0});
    for (const auto& [gamma, v] : f.terms()) c[static_cast<size_t>(gamma.exp[0])] = v;
    return c;
}

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex val{0.0, 0.0};
    for (size_t k = c.size(); k-- > 0;) val = val * z + c[k];
    return val;
}

// Gaussian-envelope radius: integrands of the form e^{b rho - a rho^2} decay
// 60 e-folds below their peak by this point.
double envelope_radius(double linear, double quadratic) {
    return std::max(0.0, linear / (2.0 * quadratic)) + std::sqrt(62.0 / quadratic) + 2.0;
}

// ---------------------------------------------------------------------------
// Individual inequality specs. Everything is one complex variable; parameter
// choices are fixed per spec and recorded in the description.

InequalitySpec make_mean_value_ball() {
    const double p = 2.0, a = 1.0, t = 0.8, alpha = 1.3, box = 5.0;
    return {"mean-value-ball",
            "pointwise |f|^p e^{-a|z|^2}(1+|z|)^{-alpha} vs the weighted mass of the radius-" +
                std::to_string(t).substr(0, 3) + " ball around z (p=2, a=1, alpha=1.3, n=1)",
            [=](RandomSource& rng, int index) {
                const Polynomial f = random_polynomial(rng, 1, 8, 8);
                const std::vector<Complex> fc = dense_coeffs(f);
                const Complex z = sample_z1(rng, index, box);
                const double log_lhs = p * log_abs(horner(fc, z)) - a * std::norm(z) -
                                       alpha * std::log1p(std::abs(z));
                PlaneIntegrand ball;
                ball.rho_max = t;
                ball.log_f = [&](double rho, double phi) {
                    const Complex w = z + std::polar(rho, phi);
                    const double wn = std::abs(w);
                    return p * log_abs(horner(fc, w)) - a * wn * wn - alpha * std::log1p(wn);
                };
                return std::make_pair(log_lhs, log_plane_integral(ball, 1e-6));
            }};
}

InequalitySpec make_pointwise_growth(int derivative_order) {
    const double p = 2.0, alpha = 1.0;
    const std::string id = derivative_order == 0 ? "pointwise-growth-g0" : "pointwise-growth-g1";
    return {id,
            "derivative of order " + std::to_string(derivative_order) +
                " vs e^{|z|^2/2}(1+|z|)^{alpha/p+|gamma|} ||f|| (p=2, alpha=1, n=1)",
            [=](RandomSource& rng, int index) {
                // Monomials first (they sit near the extremal ratios), then
                // random draws; each sample maximizes over a fixed z-sweep so
                // only the choice of f varies between samples.
                Polynomial f = index < 8 ? Polynomial::monomial(MultiIndex({index}), 1.0)
                                         : random_polynomial(rng, 1, 8, 8);
                const double norm = fock_norm_p(f, p, alpha);
                Polynomial g = derivative_order == 0 ? f : f.derivative(0);
                double best_gap = kNegInf;  // log lhs - log rhs, maximized
                for (double r : {0.5, 1.5, 2.5, 3.5, 4.2, 5.0}) {
                    for (double phase : {0.0, 1.5707963267948966, 3.141592653589793, 4.71238898038469}) {
                        const Complex z = std::polar(r, phase);
                        const double gap = log_abs(g(CPoint({z}))) -
                                           (0.5 * r * r +
                                            (alpha / p + derivative_order) * std::log1p(r));
                        best_gap = std::max(best_gap, gap);
                    }
                }
                return std::make_pair(best_gap, std::log(norm));
            }};
}

InequalitySpec make_kernel_growth(BoundKind which, double order, const std::string& id,
                                  const std::string& what) {
    const double box = 6.0;
    const ConeParams cone(0.5);
    return {id, what + " against its cone envelope (epsilon=0.5, n=1, order " +
                    std::to_string(order).substr(0, 4) + ")",
            [=](RandomSource& rng, int index) {
                // Structured pairs cover the cone center, the indicator
                // boundary and orthogonal geometry; every sampled direction
                // pair is swept over a radial ladder so the maximum within a
                // ray is found deterministically.
                Complex z0, w0;
                if (index < 8) {
                    const double angles[8] = {0.0,  cone.delta - 0.05, cone.delta + 0.05,
                                              0.5 * cone.delta, 2.0 * cone.delta, 0.5 * kPi,
                                              kPi, 0.25};
                    z0 = Complex{box, 0.0};
                    w0 = std::polar(box, angles[index]);
                } else {
                    const auto pair = sample_pair1(rng, 8 + index, box);
                    z0 = pair.first;
                    w0 = pair.second;
                }
                double best_gap = kNegInf;
                for (int step = 1; step <= 6; ++step) {
                    const double t = step / 6.0;
                    const Complex z = t * z0;
                    const Complex w = t * w0;
                    const CPoint zp({z}), wp({w});
                    const Complex lam = z * std::conj(w);
                    const double lmag = std::abs(lam);
                    const double prod = std::abs(z) * std::abs(w);
                    const double log_env = std::log(lambda_bound(cone, zp, wp));
                    double log_lhs = kNegInf, log_rhs = kNegInf;
                    switch (which) {
                        case BoundKind::DsK:
                            log_lhs = log_abs(dfrac_kernel_series(1, order).eval(lam));
                            log_rhs = (order >= 0.0 ? order * std::log1p(lmag)
                                                    : order * std::log1p(prod)) +
                                      log_env;
                            break;
                        case BoundKind::IsK:
                            log_lhs = log_abs(ifrac_kernel_series(1, order).eval(lam));
                            log_rhs =
                                (order >= 0.0
                                     ? -order * std::log1p(prod) + log_env
                                     : (lmag > 0.0 ? -order * std::log(lmag) + log_env : kNegInf));
                            break;
                        case BoundKind::Kalpha: {
                            const KernelParams kp{1, order};
                            log_lhs = log_abs(kernel_alpha_lambda(kp, lam));
                            log_rhs = order > 0.0
                                          ? log_add_exp(0.0, 0.5 * order *
                                                                 (lmag > 0.0 ? std::log(lmag)
                                                                             : kNegInf) +
                                                                 log_env)
                                          : 0.5 * order * std::log1p(prod) + log_env;
                            break;
                        }
                    }
                    if (log_rhs == kNegInf) continue;
                    best_gap = std::max(best_gap, log_lhs - log_rhs);
                }
                return std::make_pair(best_gap, 0.0);
            }};
}

InequalitySpec make_envelope_gaussian_moment() {
    const double p = 1.5, a = 1.0, eps = 0.5, alpha = 0.8, box = 6.0;
    const ConeParams cone(eps);
    return {"envelope-gaussian-moment",
            "p-th moment of the cone envelope against the Gaussian vs e^{p^2|z|^2/4a}(1+|z|)^{-alpha} "
            "(p=1.5, a=1, eps=0.5, alpha=0.8, n=1)",
            [=](RandomSource& rng, int index) {
                // Only the radius matters; a deterministic radius ladder first.
                const double zn = index <= 12 ? box * index / 12.0
                                              : std::abs(sample_z1(rng, index, box));
                PlaneIntegrand f;
                f.rho_max = envelope_radius(p * std::max(1.0, zn), a) + p * eps * zn / a;
                if (zn > 0.0) f.phi_breaks = {cone.delta, 2.0 * kPi - cone.delta};
                f.log_f = [=](double rho, double phi) {
                    double log_env = eps * zn * rho;  // e^{eps |z||w|}
                    const double re = zn * rho * std::cos(phi);
                    // angle between z and w equals |phi| here
                    const double wrapped = phi > kPi ? 2.0 * kPi - phi : phi;
                    if (zn == 0.0 || wrapped < cone.delta) log_env = log_add_exp(log_env, re);
                    return p * log_env - a * rho * rho - alpha * std::log1p(rho);
                };
                const double log_lhs = log_plane_integral(f, 1e-6);
                const double log_rhs = p * p * zn * zn / (4.0 * a) - alpha * std::log1p(zn);
                return std::make_pair(log_lhs, log_rhs);
            }};
}

InequalitySpec make_jensen_small_exponent() {
    const double p = 0.5, a = 1.0, alpha = 0.7;
    return {"jensen-small-exponent",
            "p-th power of the weighted L^1 mass vs the L^p mass with weight power p*alpha "
            "(p=0.5, a=1, alpha=0.7, n=1)",
            [=](RandomSource& rng, int index) {
                (void)index;
                const Polynomial f = random_polynomial(rng, 1, 6, 6);
                const std::vector<Complex> fc = dense_coeffs(f);
                const double rho_max = envelope_radius(0.0, p * a) + 4.0;
                PlaneIntegrand lhs_f;
                lhs_f.rho_max = rho_max;
                lhs_f.log_f = [&](double rho, double phi) {
                    const Complex w = std::polar(rho, phi);
                    return log_abs(horner(fc, w)) - a * rho * rho - alpha * std::log1p(rho);
                };
                PlaneIntegrand rhs_f;
                rhs_f.rho_max = rho_max;
                rhs_f.log_f = [&](double rho, double phi) {
                    const Complex w = std::polar(rho, phi);
                    return p * (log_abs(horner(fc, w)) - a * rho * rho) -
                           p * alpha * std::log1p(rho);
                };
                // |f|^p has root-type kinks at the zeros of f; the constants
                // only need a few digits here.
                return std::make_pair(p * log_plane_integral(lhs_f, 1e-5),
                                      log_plane_integral(rhs_f, 1e-5));
            }};
}

InequalitySpec make_truncexp_derivative() {
    const int m = 2;
    const double a = 1.7;
    return {"truncexp-derivative",
            "(m+1)-st t-derivative of t^a e_m(t lambda) vs t^a |lambda|^{m+1} e^{t Re lambda} "
            "(m=2, a=1.7)",
            [=](RandomSource& rng, int index) {
                double t;
                Complex lam;
                if (index < 8) {
                    t = 0.05 + 0.13 * index;
                    lam = Complex{0.5 + 0.7 * index, index % 2 == 0 ? 3.0 : -2.0};
                } else {
                    t = rng.uniform(0.01, 1.0);
                    lam = Complex{rng.uniform(0.05, 6.0), rng.uniform(-6.0, 6.0)};
                }
                // d_t^{m+1}[t^a e_m(t lam)] as a binomial sum: the j-th lambda
                // derivative drops the truncation index to m-j, with the full
                // exponential at j = m+1.
                KahanSum acc;
                for (int j = 0; j <= m + 1; ++j) {
                    double binom = 1.0;
                    for (int i = 0; i < j; ++i) binom = binom * (m + 1 - i) / (i + 1);
                    const Complex ek =
                        j <= m ? truncated_exp(m - j, t * lam) : std::exp(t * lam);
                    acc.add(binom * falling_factorial(a, m + 1 - j) *
                            std::pow(t, a - (m + 1 - j)) * std::pow(lam, j) * ek);
                }
                const double log_lhs = log_abs(acc.value());
                const double log_rhs =
                    a * std::log(t) + (m + 1) * std::log(std::abs(lam)) + t * lam.real();
                return std::make_pair(log_lhs, log_rhs);
            }};
}

InequalitySpec make_gaussian_shift(bool exact) {
    const double p = exact ? 1.0 : 1.2;
    const double a = exact ? 1.0 : 0.9;
    const double alpha = exact ? 0.0 : 1.4;
    const double box = 6.0;
    return {exact ? "gaussian-shift-exact" : "gaussian-shift",
            std::string("shifted Gaussian mass vs e^{p^2|z|^2/4a}(1+|z|)^{-alpha} ") +
                (exact ? "(p=a=1, alpha=0: completing the square makes the constant exactly 1)"
                       : "(p=1.2, a=0.9, alpha=1.4, n=1)"),
            [=](RandomSource& rng, int index) {
                const double zn = index <= 12 ? box * index / 12.0
                                              : std::abs(sample_z1(rng, index, box));
                // The angular integral is a modified Bessel function, leaving
                // one smooth radial integral.
                const double hi = envelope_radius(p * zn, a);
                const double log_lhs =
                    std::log(2.0) +
                    log_halfline_integral(
                        [=](double rho) {
                            return std::log(std::max(rho, 1e-300)) +
                                   std::log(std::cyl_bessel_i(0.0, p * zn * rho)) -
                                   a * rho * rho - alpha * std::log1p(rho);
                        },
                        hi, 1e-10);
                const double log_rhs = p * p * zn * zn / (4.0 * a) - alpha * std::log1p(zn);
                return std::make_pair(log_lhs, log_rhs);
            }};
}

InequalitySpec make_radial_exp_moment(bool critical) {
    const double p = 1.1, a = 1.0, eps = 0.6;
    const double alpha = critical ? 2.0 : 0.9;  // 2n = 2 in one variable
    const double box = 6.0;
    return {critical ? "radial-exp-moment-critical" : "radial-exp-moment",
            "mass of e^{p eps |z||w| - a|w|^2} vs its Gaussian peak times the polynomial "
            "(or logarithmic) volume factor (p=1.1, a=1, eps=0.6, alpha=" +
                std::to_string(alpha).substr(0, 3) + ", n=1)",
            [=](RandomSource& rng, int index) {
                const double zn = index <= 12 ? box * index / 12.0
                                              : std::abs(sample_z1(rng, index, box));
                const double hi = envelope_radius(p * eps * zn, a);
                // angular integrand is constant: integral = 2 int r e^{...} dr
                const double log_lhs =
                    std::log(2.0) + log_halfline_integral(
                                        [=](double rho) {
                                            return std::log(std::max(rho, 1e-300)) +
                                                   p * eps * zn * rho - a * rho * rho -
                                                   alpha * std::log1p(rho);
                                        },
                                        hi);
                const double vol = critical ? std::log1p(std::log1p(zn))
                                            : std::log1p(std::pow(zn, 2.0 - alpha));
                const double log_rhs = p * p * eps * eps * zn * zn / (4.0 * a) + vol;
                return std::make_pair(log_lhs, log_rhs);
            }};
}

InequalitySpec make_beta_gaussian_tail() {
    const double a = 1.3, b = 0.8, alpha = 1.1, box = 6.0;
    return {"beta-gaussian-tail",
            "Beta-weighted Gaussian growth along the segment t z vs e^{|z|^2/2}(1+|z|)^{alpha-2b} "
            "(a=1.3, b=0.8, alpha=1.1)",
            [=](RandomSource& rng, int index) {
                const double zn = index <= 12 ? box * index / 12.0
                                              : std::abs(sample_z1(rng, index, box));
                const QuadratureRule& rule = gauss_jacobi(96, b - 1.0, a - 1.0);
                LogSumExp acc;
                for (size_t i = 0; i < rule.nodes.size(); ++i) {
                    const double t = rule.nodes[i];
                    acc.add(std::log(rule.weights[i]) + 0.5 * t * t * zn * zn +
                            alpha * std::log1p(t * zn));
                }
                const double log_rhs = 0.5 * zn * zn + (alpha - 2.0 * b) * std::log1p(zn);
                return std::make_pair(acc.log_value(), log_rhs);
            }};
}

InequalitySpec make_kernel_pnorm_integral() {
    const double p = 1.0, a = 1.0, beta = 1.0, alpha = 0.5, box = 6.0;
    return {"kernel-pnorm-integral",
            "Gaussian p-mass of the weighted kernel vs e^{p^2|z|^2/4a}(1+|z|)^{beta p - alpha} "
            "(p=1, a=1, beta=1, alpha=0.5, n=1)",
            [=](RandomSource& rng, int index) {
                const double zn = index <= 12 ? box * index / 12.0
                                              : std::abs(sample_z1(rng, index, box));
                const KernelParams kp{1, beta};
                PlaneIntegrand f;
                f.rho_max = envelope_radius(p * zn, a);
                f.log_f = [&, zn](double rho, double phi) {
                    const Complex lam = zn * rho * std::polar(1.0, -phi);
                    return p * log_abs(kernel_alpha_lambda(kp, lam)) -
                           a * rho * rho - alpha * std::log1p(rho);
                };
                const double log_lhs = log_plane_integral(f, 1e-5);
                const double log_rhs =
                    p * p * zn * zn / (4.0 * a) - (alpha - beta * p) * std::log1p(zn);
                return std::make_pair(log_lhs, log_rhs);
            }};
}

InequalitySpec make_kernel_norm_growth_p2() {
    const double beta = 1.0, alpha = 1.5, box = 6.0;
    // Radial moments per degree are shared across samples.
    auto moments = std::make_shared<std::vector<double>>();
    return {"kernel-norm-growth-p2",
            "Hilbert norm of the weighted kernel at w vs e^{|w|^2/2}(1+|w|)^{beta-alpha/2} "
            "(beta=1, alpha=1.5, n=1)",
            [=](RandomSource& rng, int index) {
                const double wn = index <= 12 ? box * index / 12.0
                                              : std::abs(sample_z1(rng, index, box));
                const int kmax = static_cast<int>(2.0 * wn * wn + 48.0);
                while (static_cast<int>(moments->size()) <= kmax) {
                    const int k = static_cast<int>(moments->size());
                    moments->push_back(
                        radial_integral(1.0, 2.0 * k + 1.0, alpha, 1e-12));
                }
                LogSumExp norm2;
                double log_fact = 0.0;  // log k!
                for (int k = 0; k <= kmax; ++k) {
                    if (k > 0) log_fact += std::log(static_cast<double>(k));
                    const double ck = gamma_ratio(1.0 + k, 1.0 + k - beta / 2.0);
                    const double lt = 2.0 * std::log(ck) + std::log(2.0 * (*moments)[k]) +
                                      2.0 * k * std::log(std::max(wn, 1e-300)) - 2.0 * log_fact;
                    norm2.add(lt);
                }
                const double log_lhs = 0.5 * norm2.log_value();
                const double log_rhs = 0.5 * wn * wn - (alpha / 2.0 - beta) * std::log1p(wn);
                return std::make_pair(log_lhs, log_rhs);
            }};
}

InequalitySpec make_kernel_norm_growth_p1() {
    const double beta = 0.8, alpha = 0.6, box = 6.0;
    return {"kernel-norm-growth-p1",
            "L^1 norm of the weighted kernel at w vs e^{|w|^2/2}(1+|w|)^{beta-alpha} "
            "(beta=0.8, alpha=0.6, n=1)",
            [=](RandomSource& rng, int index) {
                const double wn = index <= 12 ? box * index / 12.0
                                              : std::abs(sample_z1(rng, index, box));
                const KernelParams kp{1, beta};
                PlaneIntegrand f;
                f.rho_max = envelope_radius(wn, 0.5);
                f.log_f = [&, wn](double rho, double phi) {
                    const Complex lam = rho * wn * std::polar(1.0, phi);
                    return log_abs(kernel_alpha_lambda(kp, lam)) -
                           0.5 * rho * rho - alpha * std::log1p(rho);
                };
                const double log_lhs = log_plane_integral(f, 1e-5);
                const double log_rhs = 0.5 * wn * wn - (alpha - beta) * std::log1p(wn);
                return std::make_pair(log_lhs, log_rhs);
            }};
}

InequalitySpec make_kernel_gradient_growth() {
    const double alpha = 1.0, box = 6.0, h = 1e-6;
    return {"kernel-gradient-growth",
            "first z-derivative of the weighted kernel (central difference, step 1e-6) vs "
            "|w|(1+|z||w|)^{alpha/2} e^{|z||w|} (alpha=1, n=1)",
            [=](RandomSource& rng, int index) {
                const auto [z, w] = sample_pair1(rng, index, box);
                const KernelParams kp{1, alpha};
                const Complex plus = kernel_alpha_lambda(kp, (z + h) * std::conj(w));
                const Complex minus = kernel_alpha_lambda(kp, (z - h) * std::conj(w));
                const double log_lhs = log_abs((plus - minus) / (2.0 * h));
                const double prod = std::abs(z) * std::abs(w);
                const double log_rhs = (std::abs(w) > 0.0 ? std::log(std::abs(w)) : kNegInf) +
                                       0.5 * alpha * std::log1p(prod) + prod;
                return std::make_pair(log_lhs, log_rhs);
            }};
}

std::vector<InequalitySpec> build_registry() {
    std::vector<InequalitySpec> specs;
    specs.push_back(make_mean_value_ball());
    specs.push_back(make_pointwise_growth(0));
    specs.push_back(make_pointwise_growth(1));
    specs.push_back(make_kernel_growth(BoundKind::DsK, 1.5, "dkernel-growth-pos",
                                       "positive-order kernel derivative"));
    specs.push_back(make_kernel_growth(BoundKind::DsK, -1.5, "dkernel-growth-neg",
                                       "negative-order kernel derivative"));
    specs.push_back(make_kernel_growth(BoundKind::IsK, 1.5, "ikernel-growth-pos",
                                       "positive-order kernel integral"));
    specs.push_back(make_kernel_growth(BoundKind::IsK, -1.5, "ikernel-growth-neg",
                                       "negative-order kernel integral"));
    specs.push_back(make_envelope_gaussian_moment());
    specs.push_back(make_jensen_small_exponent());
    specs.push_back(make_truncexp_derivative());
    specs.push_back(make_gaussian_shift(false));
    specs.push_back(make_gaussian_shift(true));
    specs.push_back(make_radial_exp_moment(false));
    specs.push_back(make_radial_exp_moment(true));
    specs.push_back(make_beta_gaussian_tail());
    specs.push_back(make_kernel_pnorm_integral());
    specs.push_back(make_kernel_norm_growth_p2());
    specs.push_back(make_kernel_norm_growth_p1());
    specs.push_back(make_kernel_growth(BoundKind::Kalpha, 1.5, "wkernel-growth-pos",
                                       "positive-weight reproducing kernel"));
    specs.push_back(make_kernel_growth(BoundKind::Kalpha, -2.0, "wkernel-growth-neg",
                                       "negative-weight reproducing kernel"));
    specs.push_back(make_kernel_gradient_growth());
    return specs;
}

}  // namespace

const std::vector<InequalitySpec>& probe_registry() {
    static const std::vector<InequalitySpec> registry = build_registry();
    return registry;
}

std::vector<std::string> registry_list() {
    std::vector<std::string> ids;
    for (const auto& spec : probe_registry()) ids.push_back(spec.id);
    return ids;
}

const InequalitySpec& find_spec(const std::string& id) {
    for (const auto& spec : probe_registry()) {
        if (spec.id == id) return spec;
    }
    throw std::invalid_argument("unknown inequality id: " + id);
}

ProbeResult probe(const InequalitySpec& spec, int samples, uint64_t seed) {
    if (samples < 16) throw std::invalid_argument("probe: need at least 16 samples");
    const RandomSource base(seed);
    double c_base = 0.0;
    double c_refined = 0.0;
    for (int i = 0; i < 4 * samples; ++i) {
        RandomSource stream = base.substream(static_cast<uint64_t>(i));
        std::pair<double, double> logs;
        try {
            logs = spec.sample(stream, i);
        } catch (const numerical_error& e) {
            throw numerical_error(spec.id + " sample " + std::to_string(i) + ": " + e.what());
        }
        const auto [log_lhs, log_rhs] = logs;
        if (log_rhs == kNegInf) {
            if (log_lhs == kNegInf) continue;  // removable 0/0 corner
            throw numerical_error("probe: vanishing bound shape at sample " + std::to_string(i) +
                                  " of " + spec.id);
        }
        const double ratio = std::exp(log_lhs - log_rhs);
        if (i < samples) c_base = std::max(c_base, ratio);
        c_refined = std::max(c_refined, ratio);
    }
    const double drift = c_base > 0.0 ? (c_refined - c_base) / c_base : 0.0;
    return {c_refined, drift, samples};
}

}  // namespace fock
