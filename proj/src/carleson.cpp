#include "fock/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <unordered_map>

#include "fock/norms.hpp"
#include "fock/quadrature.hpp"
#include "fock/random.hpp"

namespace fock {

void PointMeasure::validate() const {
    if (points.size() != weights.size()) {
        throw std::invalid_argument("PointMeasure: points/weights length mismatch");
    }
    for (double w : weights) {
        if (!(w > 0.0)) throw std::invalid_argument("PointMeasure: weights must be positive");
    }
    for (const CPoint& p : points) {
        if (p.dim() != dim()) throw std::invalid_argument("PointMeasure: mixed dimensions");
    }
}

namespace {

// Spatial hash over R^{2n} with cell size r; queries check the 3^{2n}
// neighboring cells and test the closed-ball condition exactly.
class BallIndex {
public:
    BallIndex(const PointMeasure& mu, double r) : mu_(mu), r_(r) {
        if (!(r > 0.0)) throw std::invalid_argument("ball_mass: radius must be positive");
        for (size_t i = 0; i < mu.points.size(); ++i) {
            cells_[cell_key(mu.points[i])].push_back(i);
        }
    }

    double mass(const CPoint& z) const {
        const int n = z.dim();
        std::vector<int> base(static_cast<size_t>(2 * n));
        for (int j = 0; j < n; ++j) {
            base[static_cast<size_t>(2 * j)] = grid_coord(z.coord[j].real());
            base[static_cast<size_t>(2 * j + 1)] = grid_coord(z.coord[j].imag());
        }
        double total = 0.0;
        std::vector<int> probe = base;
        visit_neighbors(base, probe, 0, z, total);
        return total;
    }

private:
    int grid_coord(double x) const { return static_cast<int>(std::floor(x / r_)); }

    uint64_t cell_key(const CPoint& p) const {
        uint64_t h = 1469598103934665603ULL;
        auto mix = [&h](int v) {
            h ^= static_cast<uint64_t>(static_cast<uint32_t>(v));
            h *= 1099511628211ULL;
        };
        for (const Complex& c : p.coord) {
            mix(grid_coord(c.real()));
            mix(grid_coord(c.imag()));
        }
        return h;
    }

    uint64_t key_of(const std::vector<int>& cell) const {
        uint64_t h = 1469598103934665603ULL;
        for (int v : cell) {
            h ^= static_cast<uint64_t>(static_cast<uint32_t>(v));
            h *= 1099511628211ULL;
        }
        return h;
    }

    void visit_neighbors(const std::vector<int>& base, std::vector<int>& probe, size_t axis,
                         const CPoint& z, double& total) const {
        if (axis == base.size()) {
            auto it = cells_.find(key_of(probe));
            if (it == cells_.end()) return;
            const double r2 = r_ * r_;
            for (size_t i : it->second) {
                double d2 = 0.0;
                for (int j = 0; j < z.dim(); ++j) {
                    d2 += std::norm(mu_.points[i].coord[j] - z.coord[j]);
                }
                if (d2 <= r2 * (1.0 + 1e-15)) total += mu_.weights[i];
            }
            return;
        }
        for (int d = -1; d <= 1; ++d) {
            probe[axis] = base[axis] + d;
            visit_neighbors(base, probe, axis + 1, z, total);
        }
    }

    const PointMeasure& mu_;
    double r_;
    std::unordered_map<uint64_t, std::vector<size_t>> cells_;
};

}  // namespace

double ball_mass(const PointMeasure& mu, const CPoint& z, double r) {
    mu.validate();
    if (mu.points.empty()) return 0.0;
    return BallIndex(mu, r).mass(z);
}

double ball_mass(const ParametricMeasure& mu, const CPoint& z, double r, double tol) {
    if (!(r > 0.0)) throw std::invalid_argument("ball_mass: radius must be positive");
    const int n = mu.n;
    const double zn = z.norm();
    // Shells around z: the sphere average of (1+|w|)^{-beta} over |w - z| = rho
    // reduces to a one-dimensional Jacobi integral in the cosine of the angle.
    const double q = (2.0 * n - 3.0) / 2.0;
    const QuadratureRule& urule = gauss_jacobi(48, q, q);
    const double cnorm = std::exp(std::lgamma(static_cast<double>(n)) - 0.5 * std::log(M_PI) -
                                  std::lgamma(n - 0.5));
    auto shell_avg = [&](double rho) {
        double acc = 0.0;
        for (size_t i = 0; i < urule.nodes.size(); ++i) {
            const double u = 2.0 * urule.nodes[i] - 1.0;  // cos(angle)
            const double wn = std::sqrt(std::max(0.0, zn * zn + rho * rho + 2.0 * rho * zn * u));
            acc += urule.weights[i] * std::pow(1.0 + wn, -mu.beta);
        }
        // map u = 2t-1 contributes 2^{2q+1}; fold into the normalization
        return cnorm * std::pow(2.0, 2.0 * q + 1.0) * acc;
    };
    const IntegralResult shell = adaptive_panels(
        [&](double rho) { return std::pow(rho, 2.0 * n - 1.0) * shell_avg(rho); }, 0.0, r, tol, 4);
    return 2.0 / std::tgamma(static_cast<double>(n)) * shell.value;
}

double ball_mass(const Measure& mu, const CPoint& z, double r) {
    if (std::holds_alternative<PointMeasure>(mu)) return ball_mass(std::get<PointMeasure>(mu), z, r);
    return ball_mass(std::get<ParametricMeasure>(mu), z, r);
}

std::string to_string(CarlesonVerdict v) {
    switch (v) {
        case CarlesonVerdict::carleson: return "carleson";
        case CarlesonVerdict::vanishing: return "vanishing";
        case CarlesonVerdict::not_carleson: return "not_carleson";
        case CarlesonVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

CarlesonScan carleson_scan(const Measure& mu, double r, double alpha, double r_max, int density,
                           uint64_t seed) {
    if (!(r > 0.0)) throw std::invalid_argument("carleson_scan: radius must be positive");
    if (!(r_max > r)) throw std::invalid_argument("carleson_scan: window must exceed the radius");
    if (density < 1) throw std::invalid_argument("carleson_scan: density must be >= 1");

    const int n = std::holds_alternative<PointMeasure>(mu) ? std::get<PointMeasure>(mu).dim()
                                                           : std::get<ParametricMeasure>(mu).n;
    if (n == 0) {
        // empty discrete measure: bounded with q = 0 everywhere
        CarlesonScan out;
        out.verdict = CarlesonVerdict::carleson;
        return out;
    }

    const PointMeasure* pm = std::get_if<PointMeasure>(&mu);
    std::unique_ptr<BallIndex> index;
    if (pm && !pm->points.empty()) {
        pm->validate();
        index = std::make_unique<BallIndex>(*pm, r);
    }
    auto mass_at = [&](const CPoint& z) {
        if (pm) return index ? index->mass(z) : 0.0;
        return ball_mass(std::get<ParametricMeasure>(mu), z, r);
    };

    CarlesonScan out;
    RandomSource rng(seed);
    const double spacing = 0.5 * r;
    const double two_pi = 2.0 * M_PI;
    for (double rho = 0.0; rho <= r_max + 1e-12; rho += spacing) {
        double ring_max = 0.0;
        if (rho == 0.0 || !pm) {
            // parametric densities are radial: one point represents the ring
            CPoint z(std::vector<Complex>(static_cast<size_t>(n), Complex{}));
            z.coord[0] = rho;
            ring_max = mass_at(z) * std::pow(1.0 + rho, alpha);
        } else if (n == 1) {
            for (int i = 0; i < density; ++i) {
                const double phi = two_pi * i / density;
                const CPoint z({std::polar(rho, phi)});
                ring_max = std::max(ring_max, mass_at(z) * std::pow(1.0 + rho, alpha));
            }
        } else {
            RandomSource ring = rng.substream(static_cast<uint64_t>(rho / spacing));
            for (int i = 0; i < density; ++i) {
                CPoint z = ring.unit_sphere_point(n);
                for (auto& c : z.coord) c *= rho;
                ring_max = std::max(ring_max, mass_at(z) * std::pow(1.0 + rho, alpha));
            }
        }
        out.annulus_radii.push_back(rho);
        out.annulus_max.push_back(ring_max);
        out.sup_q = std::max(out.sup_q, ring_max);
    }

    const size_t count = out.annulus_max.size();
    if (count < 6) {
        out.verdict = CarlesonVerdict::inconclusive;
        return out;
    }
    const auto& m = out.annulus_max;
    const double peak = out.sup_q;
    double interior_max = 0.0;
    for (size_t j = 0; j + 3 < count; ++j) interior_max = std::max(interior_max, m[j]);
    const double tail_max = std::max({m[count - 3], m[count - 2], m[count - 1]});

    // Decreasing monotonically from the peak to below 10% of it.
    size_t jpeak = 0;
    for (size_t j = 0; j < count; ++j) {
        if (m[j] == peak) jpeak = j;
    }
    bool decreasing = peak > 0.0;
    for (size_t j = jpeak; j + 1 < count && decreasing; ++j) {
        if (m[j + 1] > m[j] * (1.0 + 1e-9)) decreasing = false;
    }
    if (decreasing && m[count - 1] < 0.1 * peak) {
        out.verdict = CarlesonVerdict::vanishing;
        return out;
    }
    if (tail_max <= interior_max * 1.05) {
        out.verdict = CarlesonVerdict::carleson;
        return out;
    }
    const bool growing = m[count - 3] < m[count - 2] && m[count - 2] < m[count - 1];
    if (growing && m[count - 1] > interior_max * 1.05) {
        out.verdict = CarlesonVerdict::not_carleson;
        return out;
    }
    out.verdict = CarlesonVerdict::inconclusive;
    return out;
}

double embedding_check(const PointMeasure& mu, double p, double alpha,
                       const std::vector<Polynomial>& ensemble) {
    mu.validate();
    if (ensemble.empty()) throw std::invalid_argument("embedding_check: empty ensemble");
    double c_hat = 0.0;
    for (const Polynomial& f : ensemble) {
        const double norm = fock_norm_p(f, p, alpha);
        if (!(norm > 0.0)) throw std::invalid_argument("embedding_check: zero-norm ensemble member");
        double mass = 0.0;
        for (size_t i = 0; i < mu.points.size(); ++i) {
            const double zn = mu.points[i].norm();
            mass += mu.weights[i] * std::pow(std::abs(f(mu.points[i])) *
                                                 std::exp(-0.5 * zn * zn),
                                             p);
        }
        c_hat = std::max(c_hat, mass / std::pow(norm, p));
    }
    return c_hat;
}

}  // namespace fock
