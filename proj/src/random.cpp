#include "fock/random.hpp"

#include <cmath>

namespace fock {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

RandomSource::RandomSource(uint64_t seed) : seed_(seed), rng_(splitmix64(seed)) {}

RandomSource RandomSource::substream(uint64_t index) const {
    return RandomSource(splitmix64(seed_ ^ splitmix64(index + 0x51ed2701)));
}

double RandomSource::uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng_);
}

double RandomSource::normal() {
    std::normal_distribution<double> d(0.0, 1.0);
    return d(rng_);
}

int RandomSource::uniform_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng_);
}

Complex RandomSource::complex_unit_box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

CPoint RandomSource::point_in_ball(int n, double radius) {
    // Uniform on the ball of C^n = R^{2n}: Gaussian direction x radial cdf.
    CPoint z = unit_sphere_point(n);
    const double u = uniform(0.0, 1.0);
    const double r = radius * std::pow(u, 1.0 / (2.0 * n));
    for (Complex& c : z.coord) c *= r;
    return z;
}

CPoint RandomSource::unit_sphere_point(int n) {
    std::vector<Complex> v(static_cast<size_t>(n));
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (auto& c : v) {
            c = {normal(), normal()};
            norm2 += std::norm(c);
        }
    } while (norm2 < 1e-30);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : v) c *= inv;
    return CPoint(std::move(v));
}

Polynomial random_polynomial(RandomSource& rng, int n, int max_degree, int nterms) {
    Polynomial f(n);
    for (int t = 0; t < nterms; ++t) {
        const int deg = rng.uniform_int(0, max_degree);
        // Random composition of deg into n parts.
        std::vector<int> e(static_cast<size_t>(n), 0);
        for (int j = 0; j < deg; ++j) e[static_cast<size_t>(rng.uniform_int(0, n - 1))] += 1;
        Complex c = rng.complex_unit_box();
        if (std::abs(c) < 1e-3) c += Complex{1.0, 0.0};  // keep coefficients away from 0
        f.set_coeff(MultiIndex(e), c);
    }
    if (f.is_zero()) f.set_coeff(MultiIndex::zero(n), Complex{1.0, 0.0});
    return f;
}

}  // namespace fock
