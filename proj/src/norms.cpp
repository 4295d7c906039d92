#include "fock/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>
#include <stdexcept>

#include "fock/fractional.hpp"
#include "fock/gamma.hpp"
#include "fock/quadrature.hpp"
#include "fock/random.hpp"

namespace fock {

MixedPolynomial::MixedPolynomial(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("MixedPolynomial: dimension must be >= 1");
}

MixedPolynomial MixedPolynomial::from_holomorphic(const Polynomial& f) {
    MixedPolynomial out(f.dim());
    const MultiIndex zero = MultiIndex::zero(f.dim());
    for (const auto& [gamma, c] : f.terms()) out.set_coeff(gamma, zero, c);
    return out;
}

void MixedPolynomial::set_coeff(const MultiIndex& a, const MultiIndex& b, Complex c) {
    if (a.dim() != n_ || b.dim() != n_) {
        throw std::invalid_argument("MixedPolynomial: index dimension mismatch");
    }
    if (c == Complex{0.0, 0.0}) {
        terms_.erase({a, b});
    } else {
        terms_[{a, b}] = c;
    }
}

void MixedPolynomial::add_term(const MultiIndex& a, const MultiIndex& b, Complex c) {
    auto it = terms_.find({a, b});
    set_coeff(a, b, (it == terms_.end() ? Complex{0.0, 0.0} : it->second) + c);
}

bool MixedPolynomial::holomorphic() const {
    for (const auto& [key, c] : terms_) {
        if (key.second.order() != 0) return false;
    }
    return true;
}

MixedPolynomial MixedPolynomial::conjugated() const {
    MixedPolynomial out(n_);
    for (const auto& [key, c] : terms_) out.set_coeff(key.second, key.first, std::conj(c));
    return out;
}

Complex MixedPolynomial::evaluate(const CPoint& z) const {
    if (z.dim() != n_) throw std::invalid_argument("MixedPolynomial::evaluate: dimension mismatch");
    KahanSum acc;
    for (const auto& [key, c] : terms_) {
        Complex m = c;
        for (int j = 0; j < n_; ++j) {
            for (int p = 0; p < key.first.exp[j]; ++p) m *= z.coord[j];
            for (int p = 0; p < key.second.exp[j]; ++p) m *= std::conj(z.coord[j]);
        }
        acc.add(m);
    }
    return acc.value();
}

namespace {

bool high_weight_low_degree(double alpha, int n, int k) {
    return alpha >= 2.0 * n && static_cast<double>(k) <= alpha / 2.0;
}

// Kernel series coefficient of degree k, without the 1/k!.
double kernel_degree_coeff(double alpha, int n, int k) {
    if (high_weight_low_degree(alpha, n, k)) return 1.0;
    return gamma_ratio(static_cast<double>(n + k), n + k - alpha / 2.0);
}

}  // namespace

double monomial_norm_sq(double alpha, const MultiIndex& gamma) {
    const int n = gamma.dim();
    const int k = gamma.order();
    if (high_weight_low_degree(alpha, n, k)) return gamma.factorial();
    return gamma.factorial() * gamma_ratio(n + k - alpha / 2.0, static_cast<double>(n + k));
}

double monomial_norm_sq_quadrature(double alpha, const MultiIndex& gamma) {
    const int n = gamma.dim();
    const int k = gamma.order();
    if (!(n + k - alpha / 2.0 > 0.0)) {
        throw std::domain_error("monomial_norm_sq_quadrature: |z|^{-alpha} not integrable here");
    }
    // (2/Gamma(n)) * sphere factor * radial moment with the |z|^{-alpha} weight.
    const double sphere = gamma.factorial() * gamma_ratio(static_cast<double>(n),
                                                          static_cast<double>(n + k));
    return 2.0 / std::tgamma(static_cast<double>(n)) * sphere *
           radial_integral(1.0, 2.0 * k + 2.0 * n - 1.0 - alpha, 0.0, 1e-13);
}

Complex pairing(const Polynomial& f, const Polynomial& g, double alpha) {
    if (f.dim() != g.dim()) throw std::invalid_argument("pairing: dimension mismatch");
    KahanSum acc;
    for (const auto& [gamma, cf] : f.terms()) {
        const Complex cg = g.coeff(gamma);
        if (cg == Complex{0.0, 0.0}) continue;
        acc.add(cf * std::conj(cg) * monomial_norm_sq(alpha, gamma));
    }
    return acc.value();
}

Complex pairing_raw(const Polynomial& f, const Polynomial& g, double alpha) {
    if (f.dim() != g.dim()) throw std::invalid_argument("pairing_raw: dimension mismatch");
    const int n = f.dim();
    KahanSum acc;
    for (const auto& [gamma, cf] : f.terms()) {
        const Complex cg = g.coeff(gamma);
        if (cg == Complex{0.0, 0.0}) continue;
        const int k = gamma.order();
        if (!(n + k - alpha / 2.0 > 0.0)) {
            throw std::domain_error(
                "pairing_raw: degree " + std::to_string(k) +
                " is not integrable against |z|^{-alpha} for alpha=" + std::to_string(alpha));
        }
        acc.add(cf * std::conj(cg) * gamma.factorial() *
                gamma_ratio(n + k - alpha / 2.0, static_cast<double>(n + k)));
    }
    return acc.value();
}

double sphere_monomial_integral(double p, const MultiIndex& nu) {
    const int n = nu.dim();
    double lg = std::lgamma(static_cast<double>(n)) -
                std::lgamma(0.5 * p * nu.order() + n);
    for (int j = 0; j < n; ++j) lg += std::lgamma(0.5 * p * nu.exp[j] + 1.0);
    return std::exp(lg);
}

namespace {

double monomial_norm_p(const MultiIndex& nu, double coeff_abs, double p, double alpha) {
    const int n = nu.dim();
    const double sphere = sphere_monomial_integral(p, nu);
    const double radial = radial_integral(0.5 * p, nu.order() * p + 2.0 * n - 1.0, alpha, 1e-12);
    const double pth = std::pow(coeff_abs, p) * 2.0 / std::tgamma(static_cast<double>(n)) * sphere *
                       radial;
    return std::pow(pth, 1.0 / p);
}

std::vector<Complex> unit_phases(int m) {
    std::vector<Complex> ph(static_cast<size_t>(m));
    const double step = 2.0 * 3.14159265358979323846 / m;
    for (int j = 0; j < m; ++j) ph[static_cast<size_t>(j)] = std::polar(1.0, step * j);
    return ph;
}

// Mean of |f(t e^{i theta})|^p over the circle with a fixed angle count, so
// the radial profile stays smooth in t. Exact for even integer p once the
// trig-polynomial degree is resolved.
double circle_average(const std::vector<Complex>& coeffs, double t, double p,
                      const std::vector<Complex>& phases) {
    KahanSum acc;
    for (const Complex& ph : phases) {
        const Complex zp = t * ph;
        Complex val{0.0, 0.0};
        for (size_t k = coeffs.size(); k-- > 0;) val = val * zp + coeffs[k];
        acc.add(Complex{std::pow(std::abs(val), p), 0.0});
    }
    return acc.value().real() / static_cast<double>(phases.size());
}

// Angle count resolved once per polynomial, judged at the level of the full
// radial integral (a coarse fixed grid suffices): isolated near-circle zeros
// of f average out and do not force the angle count up.
std::vector<Complex> resolve_circle_phases(const std::vector<Complex>& coeffs, double p, int deg,
                                           double c, double W) {
    const double T = gaussian_tail_radius(c, 1.0, p * deg + std::max(0.0, -W));
    const QuadratureRule& gl = gauss_jacobi(24, 0.0, 0.0);
    std::vector<std::pair<double, double>> grid;  // (t, combined weight)
    const int panels = 12;
    const double h = T / panels;
    for (int q = 0; q < panels; ++q) {
        for (size_t i = 0; i < gl.nodes.size(); ++i) {
            const double t = q * h + h * gl.nodes[i];
            grid.emplace_back(t, h * gl.weights[i] * t * std::exp(-c * t * t) *
                                     std::pow(1.0 + t, -W));
        }
    }
    auto coarse_integral = [&](const std::vector<Complex>& ph) {
        double acc = 0.0;
        for (const auto& [t, w] : grid) acc += w * circle_average(coeffs, t, p, ph);
        return acc;
    };
    int m = 4 * deg + 16;
    std::vector<Complex> cur = unit_phases(m);
    double cur_val = coarse_integral(cur);
    for (; m < 2048; m *= 2) {
        std::vector<Complex> next = unit_phases(2 * m);
        const double next_val = coarse_integral(next);
        if (std::abs(next_val - cur_val) <= 1e-8 * std::max(next_val, 1e-300)) return cur;
        cur = std::move(next);
        cur_val = next_val;
    }
    return cur;
}

// integral_0^inf g(t) e^{-c t^2} t^{2n-1} (1+t)^{-W} dt by adaptive panels on
// a Gaussian-truncated window; tolerates the isolated radial kinks that |f|^p
// introduces for odd p.
double radial_profile_integral(double c, int n, double W, double grow,
                               const std::function<double(double)>& g, double tol) {
    const double T = gaussian_tail_radius(c, 2.0 * n - 1.0, grow + std::max(0.0, -W));
    auto integrand = [&](double t) {
        return g(t) * std::exp(-c * t * t) * std::pow(t, 2.0 * n - 1.0) * std::pow(1.0 + t, -W);
    };
    return adaptive_panels(integrand, 0.0, T, tol, 8).value;
}

NormEstimate norm_circle(const Polynomial& f, double p, double alpha) {
    const int deg = f.degree();
    std::vector<Complex> coeffs(static_cast<size_t>(deg) + 1, Complex{0.0, 0.0});
    for (const auto& [gamma, c] : f.terms()) coeffs[static_cast<size_t>(gamma.exp[0])] = c;
    const std::vector<Complex> phases = resolve_circle_phases(coeffs, p, deg, 0.5 * p, alpha);
    const double pth = 2.0 * radial_profile_integral(
                                 0.5 * p, 1, alpha, p * deg,
                                 [&](double t) { return circle_average(coeffs, t, p, phases); },
                                 1e-8);
    return {std::pow(pth, 1.0 / p), 0.0, "circle-quadrature"};
}

double cached_radial_moment(double rate, double exponent, double weight) {
    static std::map<std::tuple<double, double, double>, double> cache;
    const auto key = std::make_tuple(rate, exponent, weight);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, radial_integral(rate, exponent, weight, 1e-12)).first;
    }
    return it->second;
}

// |f|^{2q} = |f^q|^2, so monomial orthogonality against the radial weight
// makes every even integer exponent an exact finite sum.
NormEstimate norm_orthogonal_even(const Polynomial& f, int q, double alpha) {
    const int n = f.dim();
    Polynomial g = f;
    for (int j = 1; j < q; ++j) g = g * f;
    KahanSum acc;
    for (const auto& [gamma, c] : g.terms()) {
        const int k = gamma.order();
        const double mono2 =
            2.0 * gamma.factorial() * gamma_ratio(1.0, static_cast<double>(n + k)) *
            cached_radial_moment(static_cast<double>(q), 2.0 * k + 2.0 * n - 1.0, alpha);
        acc.add(Complex{std::norm(c) * mono2, 0.0});
    }
    return {std::pow(acc.value().real(), 0.5 / q), 0.0, "monomial-orthogonality"};
}

NormEstimate norm_monte_carlo(const Polynomial& f, double p, double alpha, int directions,
                              uint64_t seed) {
    const int n = f.dim();
    const int deg = f.degree();
    RandomSource base(seed);
    double sum = 0.0;
    double sumsq = 0.0;
    for (int i = 0; i < directions; ++i) {
        RandomSource stream = base.substream(static_cast<uint64_t>(i));
        const CPoint dir = stream.unit_sphere_point(n);
        const std::vector<Complex> prof = radial_profile(f, dir);
        auto along_ray = [&](double t) {
            Complex val{0.0, 0.0};
            for (size_t k = prof.size(); k-- > 0;) val = val * t + prof[k];
            return std::pow(std::abs(val), p);
        };
        const double x = radial_profile_integral(0.5 * p, n, alpha, p * deg, along_ray, 1e-8);
        sum += x;
        sumsq += x * x;
    }
    const double mean = sum / directions;
    const double var = std::max(0.0, sumsq / directions - mean * mean) / std::max(1, directions - 1);
    const double scale = 2.0 / std::tgamma(static_cast<double>(n));
    const double pth = scale * mean;
    const double value = std::pow(pth, 1.0 / p);
    // First-order propagation of the mean's standard error through x^{1/p}.
    const double se = scale * std::sqrt(var);
    const double value_se = pth > 0.0 ? value * se / (p * pth) : 0.0;
    return {value, value_se, "monte-carlo-sphere"};
}

}  // namespace

NormEstimate fock_norm_p_detail(const Polynomial& f, double p, double alpha, int mc_directions,
                                uint64_t mc_seed) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw std::invalid_argument("fock_norm_p: exponent must be positive and finite");
    }
    if (f.is_zero()) return {0.0, 0.0, "zero"};
    if (f.terms().size() == 1) {
        const auto& [gamma, c] = *f.terms().begin();
        return {monomial_norm_p(gamma, std::abs(c), p, alpha), 0.0, "monomial-closed-form"};
    }
    // Monomial orthogonality holds against any radial weight: exact for even
    // integer exponents through |f|^{2q} = |f^q|^2.
    if (p == std::round(p) && static_cast<int>(p) % 2 == 0) {
        return norm_orthogonal_even(f, static_cast<int>(p) / 2, alpha);
    }
    if (f.dim() == 1) return norm_circle(f, p, alpha);
    return norm_monte_carlo(f, p, alpha, mc_directions, mc_seed);
}

double fock_norm_p(const Polynomial& f, double p, double alpha) {
    return fock_norm_p_detail(f, p, alpha).value;
}

namespace {

double sup_weight(double t, double alpha) {
    return std::exp(-0.5 * t * t) * std::pow(1.0 + t, -alpha);
}

// Best value over a radius x angle grid for one complex variable.
double sup_scan_1d(const std::vector<Complex>& coeffs, double alpha, double t_lo, double t_hi,
                   double th_lo, double th_hi, int nt, int nth, double* best_t, double* best_th) {
    double best = -1.0;
    for (int i = 0; i <= nt; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / nt;
        const double w = sup_weight(t, alpha);
        for (int j = 0; j <= nth; ++j) {
            const double th = th_lo + (th_hi - th_lo) * j / nth;
            const Complex zp = std::polar(t, th);
            Complex val{0.0, 0.0};
            for (size_t k = coeffs.size(); k-- > 0;) val = val * zp + coeffs[k];
            const double v = std::abs(val) * w;
            if (v > best) {
                best = v;
                *best_t = t;
                *best_th = th;
            }
        }
    }
    return best;
}

}  // namespace

double fock_norm_inf(const Polynomial& f, double alpha, uint64_t seed) {
    if (f.is_zero()) return 0.0;
    const int n = f.dim();
    const int deg = f.degree();
    const double R = deg + std::sqrt(2.0 * std::abs(alpha)) + 6.0;
    const double two_pi = 2.0 * 3.14159265358979323846;

    if (n == 1) {
        std::vector<Complex> coeffs(static_cast<size_t>(deg) + 1, Complex{0.0, 0.0});
        for (const auto& [gamma, c] : f.terms()) coeffs[static_cast<size_t>(gamma.exp[0])] = c;
        double bt = 0.0, bth = 0.0;
        double best = sup_scan_1d(coeffs, alpha, 0.0, R, 0.0, two_pi, 320, 320, &bt, &bth);
        double wt = R / 320.0, wth = two_pi / 320.0;
        for (int pass = 0; pass < 2; ++pass) {
            const double t0 = std::max(0.0, bt - 2.0 * wt), t1 = std::min(R, bt + 2.0 * wt);
            const double h0 = bth - 2.0 * wth, h1 = bth + 2.0 * wth;
            best = std::max(best, sup_scan_1d(coeffs, alpha, t0, t1, h0, h1, 64, 64, &bt, &bth));
            wt = (t1 - t0) / 64.0;
            wth = (h1 - h0) / 64.0;
        }
        return best;
    }

    // Several variables: seeded direction search with a radial scan per
    // direction, then two shrinking perturbation passes around the best ray.
    RandomSource rng(seed);
    auto ray_sup = [&](const CPoint& dir, double* arg_t) {
        const std::vector<Complex> prof = radial_profile(f, dir);
        double best = -1.0;
        double bt = 0.0;
        for (int i = 0; i <= 600; ++i) {
            const double t = R * i / 600.0;
            Complex val{0.0, 0.0};
            for (size_t k = prof.size(); k-- > 0;) val = val * t + prof[k];
            const double v = std::abs(val) * sup_weight(t, alpha);
            if (v > best) {
                best = v;
                bt = t;
            }
        }
        // local radius refinement
        double w = R / 600.0;
        for (int pass = 0; pass < 2; ++pass) {
            const double lo = std::max(0.0, bt - w), hi = std::min(R, bt + w);
            for (int i = 0; i <= 40; ++i) {
                const double t = lo + (hi - lo) * i / 40.0;
                Complex val{0.0, 0.0};
                for (size_t k = prof.size(); k-- > 0;) val = val * t + prof[k];
                const double v = std::abs(val) * sup_weight(t, alpha);
                if (v > best) {
                    best = v;
                    bt = t;
                }
            }
            w /= 20.0;
        }
        if (arg_t) *arg_t = bt;
        return best;
    };

    double best = -1.0;
    CPoint best_dir = rng.unit_sphere_point(n);
    // Coordinate rays first; they are exact maximizers for monomials.
    for (int j = 0; j < n; ++j) {
        CPoint e(std::vector<Complex>(static_cast<size_t>(n), Complex{0.0, 0.0}));
        e.coord[static_cast<size_t>(j)] = 1.0;
        const double v = ray_sup(e, nullptr);
        if (v > best) {
            best = v;
            best_dir = e;
        }
    }
    if (f.terms().size() == 1) {
        // One monomial: the optimal direction has |zeta_j|^2 = nu_j/|nu|.
        const MultiIndex& nu = f.terms().begin()->first;
        if (nu.order() > 0) {
            CPoint opt(std::vector<Complex>(static_cast<size_t>(n), Complex{0.0, 0.0}));
            for (int j = 0; j < n; ++j) {
                opt.coord[static_cast<size_t>(j)] =
                    std::sqrt(static_cast<double>(nu.exp[j]) / nu.order());
            }
            const double v = ray_sup(opt, nullptr);
            if (v > best) {
                best = v;
                best_dir = opt;
            }
        }
    }
    for (int i = 0; i < 1024; ++i) {
        const CPoint dir = rng.unit_sphere_point(n);
        const double v = ray_sup(dir, nullptr);
        if (v > best) {
            best = v;
            best_dir = dir;
        }
    }
    for (double sigma : {0.3, 0.1, 0.03, 0.01}) {
        for (int i = 0; i < 96; ++i) {
            CPoint cand = best_dir;
            for (auto& c : cand.coord) c += sigma * Complex{rng.normal(), rng.normal()};
            double norm = 0.0;
            for (const auto& c : cand.coord) norm += std::norm(c);
            norm = std::sqrt(norm);
            if (norm < 1e-12) continue;
            for (auto& c : cand.coord) c /= norm;
            const double v = ray_sup(cand, nullptr);
            if (v > best) {
                best = v;
                best_dir = cand;
            }
        }
    }
    return best;
}

double sobolev_norm(const Polynomial& f, double p, double alpha, double s, SobolevFlavor flavor) {
    const bool infinite_p = std::isinf(p);
    const double shift = infinite_p ? s : p * s;

    const Polynomial op_image =
        flavor == SobolevFlavor::Differentiation ? dfrac_series(f, s) : ifrac_series(f, -s);
    double base = infinite_p ? fock_norm_inf(op_image, alpha + shift)
                             : fock_norm_p(op_image, p, alpha + shift);

    const bool keep_low = (flavor == SobolevFlavor::Differentiation) ? (s < 0.0) : (s > 0.0);
    if (keep_low) {
        const Polynomial low = tail_split(f, s).second;
        if (!low.is_zero()) {
            base += infinite_p ? fock_norm_inf(low, alpha) : fock_norm_p(low, p, alpha);
        }
    }
    return base;
}

double reproduce_check(const Polynomial& f, double alpha, const CPoint& z) {
    const int n = f.dim();
    // <f, K_z> truncated at degree(f): orthogonality kills everything higher.
    KahanSum acc;
    for (const auto& [gamma, c] : f.terms()) {
        const int k = gamma.order();
        const double factor =
            kernel_degree_coeff(alpha, n, k) * monomial_norm_sq(alpha, gamma) / gamma.factorial();
        Complex zp = c * factor;
        for (int j = 0; j < n; ++j) {
            for (int q = 0; q < gamma.exp[j]; ++q) zp *= z.coord[j];
        }
        acc.add(zp);
    }
    return std::abs(f(z) - acc.value());
}

Polynomial project(const MixedPolynomial& psi, double alpha) {
    const int n = psi.dim();
    const bool high = alpha >= 2.0 * n;
    Polynomial out(n);
    for (const auto& [key, c] : psi.terms()) {
        const auto& [a, b] = key;
        // Only a = b + gamma (componentwise) pairs against a holomorphic
        // kernel monomial.
        std::vector<int> diff(static_cast<size_t>(n));
        bool ok = true;
        for (int j = 0; j < n; ++j) {
            diff[static_cast<size_t>(j)] = a.exp[j] - b.exp[j];
            if (diff[static_cast<size_t>(j)] < 0) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        const MultiIndex gamma(diff);
        const int k = gamma.order();
        if (high && static_cast<double>(k) <= alpha / 2.0) continue;  // truncated kernel
        const double ckernel = gamma_ratio(static_cast<double>(n + k), n + k - alpha / 2.0);
        const double moment = a.factorial() *
                              gamma_ratio(n + a.order() - alpha / 2.0,
                                          static_cast<double>(n + a.order()));
        out.add_term(gamma, c * ckernel * moment / gamma.factorial());
    }
    return out;
}

}  // namespace fock
