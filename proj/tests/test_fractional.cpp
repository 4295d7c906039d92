#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "doctest.h"
#include "fock/fractional.hpp"
#include "fock/gamma.hpp"
#include "fock/quadrature.hpp"
#include "fock/random.hpp"

using namespace fock;
using namespace std::complex_literals;

namespace {

double dual_path_err(Complex series, Complex integral, const Polynomial& f, double znorm) {
    const double floor = 1e-12 * std::max(1.0, evaluation_scale(f, znorm));
    return rel_diff(series, integral, floor);
}

}  // namespace

TEST_CASE("series operators at order zero are the identity") {
    RandomSource rng(77);
    Polynomial f = random_polynomial(rng, 2, 8, 10);
    CHECK(dfrac_series(f, 0.0) == f);
    CHECK(ifrac_series(f, 0.0) == f);
}

TEST_CASE("integer-order derivative of a constant") {
    for (int m = 0; m <= 6; ++m) {
        Polynomial one = Polynomial::constant(1, 1.0);
        double fact = 1.0;
        for (int j = 2; j <= m; ++j) fact *= j;
        const Polynomial d = dfrac_series(one, m);
        CHECK(std::abs(d.coeff(MultiIndex::zero(1)) - fact) < 1e-13 * fact);
    }
}

TEST_CASE("half-order derivative of z") {
    const Polynomial f = Polynomial::monomial(MultiIndex({1}), 1.0);
    const Polynomial d = dfrac_series(f, 0.5);
    // Gamma(2.5)/Gamma(2) = 0.75 sqrt(pi)
    CHECK(std::abs(d.coeff(MultiIndex({1}))) ==
          doctest::Approx(1.3293403881791370).epsilon(1e-12));
}

TEST_CASE("order-one integral scales z^k by 1/(k+1)") {
    for (int k = 0; k <= 10; ++k) {
        const Polynomial f = Polynomial::monomial(MultiIndex({k}), 1.0);
        const Polynomial g = ifrac_series(f, 1.0);
        CHECK(std::abs(g.coeff(MultiIndex({k})) - 1.0 / (k + 1.0)) < 1e-14);
    }
}

TEST_CASE("series inversion for nonnegative order") {
    RandomSource rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 3;
        Polynomial f = random_polynomial(rng, n, 12, 15);
        for (double s : {0.0, 0.5, 1.0, 2.5}) {
            const Polynomial back = ifrac_series(dfrac_series(f, s), s);
            const Polynomial forth = dfrac_series(ifrac_series(f, s), s);
            for (const auto& [gamma, c] : f.terms()) {
                CHECK(std::abs(back.coeff(gamma) - c) <= 1e-13 * std::abs(c));
                CHECK(std::abs(forth.coeff(gamma) - c) <= 1e-13 * std::abs(c));
            }
        }
    }
}

TEST_CASE("series inversion for negative order recovers the Taylor tail") {
    RandomSource rng(2025);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 3;
        Polynomial f = random_polynomial(rng, n, 12, 15);
        for (double s : {-0.5, -1.0, -2.5}) {
            const Polynomial back = ifrac_series(dfrac_series(f, s), s);
            const Polynomial tail = tail_split(f, s).first;
            REQUIRE(back.terms().size() == tail.terms().size());
            for (const auto& [gamma, c] : tail.terms()) {
                CHECK(std::abs(back.coeff(gamma) - c) <= 1e-13 * std::abs(c));
            }
        }
    }
}

TEST_CASE("series operators preserve homogeneous degree and linearity") {
    RandomSource rng(88);
    Polynomial f = random_polynomial(rng, 2, 9, 12);
    for (double s : {-1.5, 0.7, 2.0}) {
        const Polynomial d = dfrac_series(f, s);
        for (int k = 0; k <= f.degree(); ++k) {
            const Polynomial dk = dfrac_series(f.homogeneous_part(k), s);
            // Degree-k inputs map to degree-k outputs (or zero).
            CHECK((dk.is_zero() || dk.degree() == k));
            for (const auto& [gamma, c] : dk.terms()) {
                CHECK(std::abs(d.coeff(gamma) - c) < 1e-15 * std::max(1.0, std::abs(c)));
            }
        }
    }
}

TEST_CASE("derivative integral representation: closed-form cases") {
    // One variable, s = 1 (m = 1, r = 0 branch), f = z^2: both paths give
    // dcoeff(1,1,2) * z^2 = 3 * 9 = 27 at z = 3.
    const Polynomial f2 = Polynomial::monomial(MultiIndex({2}), 1.0);
    const CPoint z3({3.0 + 0i});
    CHECK(std::abs(dfrac_integral(f2, 1.0, z3) - 27.0) < 1e-10);
    CHECK(std::abs(dfrac_series(f2, 1.0)(z3) - 27.0) < 1e-12);

    // n = 2, s = 0.5, f = z_1 at (1,0): Gamma(3.5)/Gamma(3).
    const Polynomial f1 = Polynomial::monomial(MultiIndex({1, 0}), 1.0);
    const CPoint e1({1.0 + 0i, 0.0 + 0i});
    CHECK(std::abs(dfrac_integral(f1, 0.5, e1) - 1.6616754853133093) < 1e-10);

    // n = 1, s = 2 (m = 2, r = 0), constant input: 2! f(0).
    const Polynomial one = Polynomial::constant(1, 1.0);
    CHECK(std::abs(dfrac_integral(one, 2.0, CPoint({0.7 + 2.0i})) - 2.0) < 1e-12);
}

TEST_CASE("derivative integral representation matches the series path") {
    RandomSource rng(515);
    const std::initializer_list<double> orders = {0.5, 1.0, 1.5, 2.0, 2.5};
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + trial % 3;
        Polynomial f = random_polynomial(rng, n, 12, 12);
        for (double s : orders) {
            for (int pt = 0; pt < 5; ++pt) {
                const CPoint z = rng.point_in_ball(n, 5.0);
                const Complex series = dfrac_series(f, s)(z);
                const Complex integral = dfrac_integral(f, s, z);
                CHECK(dual_path_err(series, integral, f, z.norm()) <= 1e-8);
            }
        }
    }
}

TEST_CASE("negative-order derivative representation matches the series path") {
    RandomSource rng(516);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + trial % 3;
        Polynomial f = random_polynomial(rng, n, 10, 12);
        for (double s : {0.5, 1.0, 2.5}) {
            for (int pt = 0; pt < 5; ++pt) {
                const CPoint z = rng.point_in_ball(n, 3.0);
                const Complex series = dfrac_series(f, -s)(z);
                const Complex integral = dfrac_neg_integral(f, s, z);
                CHECK(dual_path_err(series, integral, f, z.norm()) <= 1e-8);
            }
        }
    }
    // Tail-free input: the representation returns exactly zero.
    Polynomial low = Polynomial::constant(1, 2.0) + Polynomial::monomial(MultiIndex({1}), 1.0);
    CHECK(dfrac_neg_integral(low, 2.5, CPoint({1.0 + 1i})) == Complex{0.0, 0.0});
}

TEST_CASE("closed-form negative-order values") {
    // D^{-1} z^2 = (1/2) z^2 in one variable.
    const Polynomial f = Polynomial::monomial(MultiIndex({2}), 1.0);
    const CPoint z({2.0 + 0i});
    CHECK(std::abs(dfrac_neg_integral(f, 1.0, z) - 2.0) < 1e-10);
    // I^{-1} z^2 = 2 z^2.
    CHECK(std::abs(ifrac_neg_integral(f, 1.0, z) - 8.0) < 1e-10);
}

TEST_CASE("integral representation of the fractional integral") {
    // f = 1: I^1 f = 1 (Beta(1,1) normalized); f = z: I^1 z = z/2.
    const Polynomial one = Polynomial::constant(1, 1.0);
    CHECK(std::abs(ifrac_integral(one, 1.0, CPoint({0.5 + 0i})) - 1.0) < 1e-12);
    const Polynomial zf = Polynomial::monomial(MultiIndex({1}), 1.0);
    CHECK(std::abs(ifrac_integral(zf, 1.0, CPoint({1.0 + 0i})) - 0.5) < 1e-12);

    RandomSource rng(517);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + trial % 3;
        Polynomial f = random_polynomial(rng, n, 12, 12);
        for (double s : {0.5, 1.5, 2.5}) {
            for (int pt = 0; pt < 5; ++pt) {
                const CPoint z = rng.point_in_ball(n, 5.0);
                CHECK(dual_path_err(ifrac_series(f, s)(z), ifrac_integral(f, s, z), f, z.norm()) <=
                      1e-8);
            }
        }
    }
}

TEST_CASE("negative-order integral representation matches the series path") {
    RandomSource rng(518);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + trial % 3;
        Polynomial f = random_polynomial(rng, n, 10, 12);
        for (double s : {0.5, 1.0, 2.5}) {
            for (int pt = 0; pt < 5; ++pt) {
                const CPoint z = rng.point_in_ball(n, 3.0);
                CHECK(dual_path_err(ifrac_series(f, -s)(z), ifrac_neg_integral(f, s, z), f,
                                    z.norm()) <= 1e-8);
            }
        }
    }
    Polynomial low = Polynomial::constant(2, 1.0);
    CHECK(ifrac_neg_integral(low, 1.5, CPoint({1.0 + 0i, 0.0 + 0i})) == Complex{0.0, 0.0});
}

TEST_CASE("truncated exponential values and branches") {
    // e_1(1) = e - 2.
    CHECK(std::abs(truncated_exp(1, 1.0) - (std::exp(1.0) - 2.0)) < 1e-14);
    // Small-argument limit e_k(x)/x^{k+1} -> 1/(k+1)!.
    for (int k = 0; k <= 6; ++k) {
        const Complex lam{1e-8, 0.0};
        const Complex ratio = truncated_exp(k, lam) / std::pow(lam, k + 1);
        double fact = 1.0;
        for (int j = 2; j <= k + 1; ++j) fact *= j;
        CHECK(std::abs(ratio - 1.0 / fact) <= 1e-6 / fact);
    }
    // Branch agreement at the switch radius: the subtractive formula evaluated
    // in-test against the tail-series branch at the same points.
    RandomSource rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const double phi = rng.uniform(0.0, 6.283185307179586);
        const Complex lam = std::polar(0.999, phi);
        for (int k : {0, 2, 5}) {
            Complex partial{0.0, 0.0};
            Complex term{1.0, 0.0};
            for (int j = 0; j <= k; ++j) {
                partial += term;
                term *= lam / static_cast<double>(j + 1);
            }
            const Complex direct = std::exp(lam) - partial;
            CHECK(std::abs(truncated_exp(k, lam) - direct) <=
                  1e-12 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST_CASE("truncated exponential integral identity") {
    // e_k(lambda)/lambda^{k+1} = (1/k!) integral_0^1 (1-t)^k e^{t lambda} dt.
    RandomSource rng(12);
    for (int k = 0; k <= 8; ++k) {
        double fact = 1.0;
        for (int j = 2; j <= k; ++j) fact *= j;
        for (int trial = 0; trial < 10; ++trial) {
            const Complex lam = std::polar(rng.uniform(0.05, 20.0), rng.uniform(0.0, 6.2831853));
            const QuadratureRule& rule = gauss_jacobi(64, static_cast<double>(k), 0.0);
            Complex integral{0.0, 0.0};
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                integral += rule.weights[i] * std::exp(rule.nodes[i] * lam);
            }
            integral /= fact;
            const Complex lhs = truncated_exp(k, lam) / std::pow(lam, k + 1);
            CHECK(rel_diff(lhs, integral) <= 1e-10);
        }
    }
}

TEST_CASE("truncated exponential inequalities") {
    RandomSource rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = rng.uniform_int(0, 6);
        // Re(lambda) > 0 comparison against the real axis.
        const Complex lam{rng.uniform(0.05, 8.0), rng.uniform(-8.0, 8.0)};
        const double x = lam.real();
        const double bound = std::pow(std::abs(lam) / x, k + 1) *
                             truncated_exp(k, Complex{x, 0.0}).real();
        CHECK(std::abs(truncated_exp(k, lam)) <= bound * (1.0 + 1e-12));
        // Positive-axis two-sided bound.
        const double ratio = truncated_exp(k, Complex{x, 0.0}).real() / std::pow(x, k + 1);
        CHECK(ratio > 0.0);
        CHECK(ratio <= std::exp(x) * (1.0 + 1e-12));
    }
}

TEST_CASE("radial operators") {
    const Polynomial f = Polynomial::monomial(MultiIndex({1}), 1.0);
    // s = 0: both reduce to evaluation.
    const CPoint z({0.3 + 0.4i});
    CHECK(std::abs(rop(f, 0.0, z) - f(z)) < 1e-15);
    CHECK(std::abs(rop_tilde(f, 0.0, z) - f(z)) < 1e-15);
    // At the origin the weight is 1.
    const CPoint zero({0.0 + 0i});
    CHECK(std::abs(rop(f, 1.0, zero) - dfrac_series(f, 1.0)(zero)) < 1e-15);
    // (1+1)^{-1} * dcoeff(1,1,1) * 1 = 1.
    CHECK(std::abs(rop(f, 1.0, CPoint({1.0 + 0i})) - 1.0) < 1e-14);
}

TEST_CASE("order_split decomposition") {
    auto a = order_split(2.5);
    CHECK(a.m == 2);
    CHECK(a.r == doctest::Approx(0.5));
    auto b = order_split(3.0);
    CHECK(b.m == 3);
    CHECK(b.r == 0.0);
    CHECK_THROWS_AS(order_split(0.0), std::invalid_argument);
}
