#pragma once

#include <cstdint>
#include <random>

#include "fock/polynomial.hpp"

namespace fock {

/// Seeded randomness with cheap derived substreams, so ensembles are
/// reproducible regardless of evaluation order.
class RandomSource {
public:
    explicit RandomSource(uint64_t seed);

    /// Independent stream derived from (seed, index); deterministic.
    RandomSource substream(uint64_t index) const;

    double uniform(double lo, double hi);
    double normal();
    int uniform_int(int lo, int hi);  // inclusive bounds

    Complex complex_unit_box();            // re, im uniform in [-1,1]
    CPoint point_in_ball(int n, double radius);
    CPoint unit_sphere_point(int n);       // |z| = 1 in C^n

    uint64_t seed() const { return seed_; }

private:
    uint64_t seed_;
    std::mt19937_64 rng_;
};

/// Sparse random polynomial: `nterms` draws of multi-indices with total degree
/// <= max_degree, coefficients uniform in the complex unit box. Never zero.
Polynomial random_polynomial(RandomSource& rng, int n, int max_degree, int nterms);

}  // namespace fock
