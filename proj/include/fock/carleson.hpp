#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fock/polynomial.hpp"

namespace fock {

/// Finite positive point mass list.
struct PointMeasure {
    std::vector<CPoint> points;
    std::vector<double> weights;

    int dim() const { return points.empty() ? 0 : points.front().dim(); }
    void validate() const;  // equal lengths, positive weights, consistent dims
};

/// Density (1+|z|)^{-beta} against the normalized Gaussian-free volume.
struct ParametricMeasure {
    int n;
    double beta;
};

using Measure = std::variant<PointMeasure, ParametricMeasure>;

/// Closed-ball mass. The discrete overload is an exact weighted count through
/// a spatial hash with cell size r (neighbor-cell lookup); the parametric one
/// is a radial-shell quadrature around z.
double ball_mass(const PointMeasure& mu, const CPoint& z, double r);
double ball_mass(const ParametricMeasure& mu, const CPoint& z, double r, double tol = 1e-8);
double ball_mass(const Measure& mu, const CPoint& z, double r);

enum class CarlesonVerdict { carleson, vanishing, not_carleson, inconclusive };
std::string to_string(CarlesonVerdict v);

/// Extrapolation heuristic over a finite window: the verdict reports how the
/// annulus maxima of q(z) = mass(B(z,r)) (1+|z|)^alpha behave up to R_max, it
/// certifies nothing beyond the window.
struct CarlesonScan {
    std::vector<double> annulus_radii;
    std::vector<double> annulus_max;
    double sup_q = 0.0;
    CarlesonVerdict verdict = CarlesonVerdict::inconclusive;
    bool extrapolated = true;
};

CarlesonScan carleson_scan(const Measure& mu, double r, double alpha, double r_max, int density,
                           uint64_t seed = 20240903);

/// Fitted embedding constant: max over the ensemble of the discrete
/// Gaussian-weighted p-mass divided by the p-th norm power.
double embedding_check(const PointMeasure& mu, double p, double alpha,
                       const std::vector<Polynomial>& ensemble);

}  // namespace fock
