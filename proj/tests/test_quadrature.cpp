#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "doctest.h"
#include "fock/gamma.hpp"
#include "fock/quadrature.hpp"

using namespace fock;

namespace {

double beta_fn(double x, double y) {
    return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

}  // namespace

TEST_CASE("gauss_legendre order 3 reference nodes") {
    const QuadratureRule& r = gauss_legendre(3);
    const double off = 0.5 * std::sqrt(3.0 / 5.0);
    CHECK(r.nodes[0] == doctest::Approx(0.5 - off).epsilon(1e-14));
    CHECK(r.nodes[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.nodes[2] == doctest::Approx(0.5 + off).epsilon(1e-14));
    CHECK(r.weights[0] == doctest::Approx(5.0 / 18.0).epsilon(1e-14));
    CHECK(r.weights[1] == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("gauss_jacobi integrates moments exactly") {
    // integral_0^1 t^(b+j) (1-t)^a dt = B(b+j+1, a+1), exact for j <= 2N-1.
    for (double a : {-0.5, 0.0, 1.5, 24.0}) {
        for (double b : {-0.9, 0.0, 0.3, 7.0, 19.5}) {
            const int N = 12;
            const QuadratureRule& r = gauss_jacobi(N, a, b);
            for (double w : r.weights) CHECK(w > 0.0);
            for (int j = 0; j < 2 * N; ++j) {
                const double got = r.sum([&](double t) { return std::pow(t, j); });
                const double want = beta_fn(b + j + 1.0, a + 1.0);
                CHECK(got == doctest::Approx(want).epsilon(5e-13));
            }
        }
    }
}

TEST_CASE("gauss_jacobi handles the Chebyshev-like corner a+b=-1") {
    const QuadratureRule& r = gauss_jacobi(10, -0.5, -0.5);
    const double got = r.sum([](double t) { return t * t; });
    CHECK(got == doctest::Approx(beta_fn(2.5, 0.5)).epsilon(1e-13));
}

TEST_CASE("gauss_jacobi rejects invalid parameters") {
    CHECK_THROWS_AS(gauss_jacobi(0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_jacobi(4, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("adaptive_panels on a smooth integrand") {
    const IntegralResult r = adaptive_panels([](double x) { return std::exp(-x); }, 0.0, 10.0, 1e-13);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0 - std::exp(-10.0)).epsilon(1e-12));
}

TEST_CASE("radial_integral matches Gamma moments at W=0") {
    // integral_0^inf e^{-c t^2} t^A dt = Gamma((A+1)/2) / (2 c^{(A+1)/2}).
    for (double c : {0.5, 1.0, 2.0}) {
        for (double A : {0.0, 1.0, 3.5, 12.0, 41.0}) {
            const double want = 0.5 * std::exp(std::lgamma(0.5 * (A + 1.0))) / std::pow(c, 0.5 * (A + 1.0));
            CHECK(radial_integral(c, A, 0.0) == doctest::Approx(want).epsilon(1e-11));
        }
    }
}

TEST_CASE("radial_integral with rational weight against panel-only route") {
    for (double W : {-3.0, -1.0, 0.5, 2.0, 6.0}) {
        const double got = radial_integral(1.0, 4.0, W);
        // Brute panels over a wide window as an independent oracle.
        const IntegralResult ref = adaptive_panels(
            [&](double t) { return std::exp(-t * t) * std::pow(t, 4.0) * std::pow(1.0 + t, -W); }, 0.0,
            14.0, 1e-13, 16);
        CHECK(got == doctest::Approx(ref.value).epsilon(1e-11));
    }
}
