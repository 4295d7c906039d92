#include <complex>

#include "doctest.h"
#include "fock/polynomial.hpp"
#include "fock/random.hpp"

using namespace fock;
using namespace std::complex_literals;

namespace {

// Evaluation oracle independent of Polynomial::evaluate: expand each monomial
// by repeated multiplication in a flat loop with plain summation.
Complex evaluate_oracle(const Polynomial& f, const CPoint& z) {
    Complex total = 0.0;
    for (const auto& [gamma, c] : f.terms()) {
        Complex m = c;
        for (int j = 0; j < f.dim(); ++j) {
            for (int p = 0; p < gamma.exp[j]; ++p) m *= z.coord[j];
        }
        total += m;
    }
    return total;
}

}  // namespace

TEST_CASE("evaluate on hand-expanded cases") {
    // z_1^2 at (2, 0)
    Polynomial f = Polynomial::monomial(MultiIndex({2, 0}), 1.0);
    CHECK(f(CPoint({2.0 + 0i, 0.0 + 0i})) == 4.0 + 0i);

    // constants
    Polynomial c = Polynomial::constant(3, 1.0);
    CHECK(c(CPoint({0.3 + 1i, -2.0 + 0i, 0.0 + 5i})) == 1.0 + 0i);

    // z_1 z_2 + 3 at (i, i): i*i + 3 = 2
    Polynomial g(2);
    g.set_coeff(MultiIndex({1, 1}), 1.0);
    g.set_coeff(MultiIndex({0, 0}), 3.0);
    const CPoint zi({1i, 1i});
    CHECK(std::abs(g(zi) - evaluate_oracle(g, zi)) < 1e-15);
    CHECK(g(zi) == 2.0 + 0i);
}

TEST_CASE("evaluate dimension mismatch") {
    Polynomial f = Polynomial::constant(2, 1.0);
    CHECK_THROWS_AS(f(CPoint({1.0 + 0i})), std::invalid_argument);
}

TEST_CASE("homogeneous_part filters by total degree") {
    Polynomial f(2);
    f.set_coeff(MultiIndex({0, 0}), 1.0);
    f.set_coeff(MultiIndex({1, 0}), 1.0);
    f.set_coeff(MultiIndex({1, 1}), 1.0);

    Polynomial f2 = f.homogeneous_part(2);
    CHECK(f2.terms().size() == 1);
    CHECK(f2.coeff(MultiIndex({1, 1})) == 1.0 + 0i);
    CHECK(f.homogeneous_part(5).is_zero());
}

TEST_CASE("homogeneous decomposition re-sums exactly") {
    RandomSource rng(917);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 3;
        Polynomial f = random_polynomial(rng, n, 6, 12);
        Polynomial sum(n);
        for (const Polynomial& part : f.homogeneous_decomposition()) sum += part;
        CHECK(sum == f);
    }
}

TEST_CASE("tail_split boundary conventions") {
    Polynomial f(1);
    f.set_coeff(MultiIndex({0}), 1.0);
    f.set_coeff(MultiIndex({1}), 1.0);
    f.set_coeff(MultiIndex({2}), 1.0);

    SUBCASE("fractional bound keeps k=2 in the tail") {
        auto [plus, minus] = tail_split(f, 1.5);
        CHECK(plus.terms().size() == 1);
        CHECK(plus.coeff(MultiIndex({2})) == 1.0 + 0i);
        CHECK(minus.terms().size() == 2);
    }
    SUBCASE("integer bound goes to the low part") {
        auto [plus, minus] = tail_split(f, -2.0);
        CHECK(plus.is_zero());
        CHECK(minus == f);
    }
    SUBCASE("zero order splits off the constant term") {
        auto [plus, minus] = tail_split(f, 0.0);
        CHECK(minus.terms().size() == 1);
        CHECK(minus.coeff(MultiIndex({0})) == 1.0 + 0i);
        CHECK(plus.coeff(MultiIndex({1})) == 1.0 + 0i);
        CHECK(plus.coeff(MultiIndex({2})) == 1.0 + 0i);
    }
}

TEST_CASE("tail_split reassembles and bounds the low-part degree") {
    RandomSource rng(4182);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 3;
        Polynomial f = random_polynomial(rng, n, 9, 14);
        const double s = rng.uniform(-4.0, 4.0);
        auto [plus, minus] = tail_split(f, s);
        CHECK(plus + minus == f);
        if (!minus.is_zero()) CHECK(minus.degree() <= static_cast<int>(std::floor(std::abs(s))));
        for (const auto& [gamma, c] : plus.terms()) CHECK(gamma.order() > std::abs(s));
    }
}

TEST_CASE("evaluation is linear in the coefficients") {
    RandomSource rng(55);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + trial % 3;
        Polynomial f = random_polynomial(rng, n, 7, 10);
        Polynomial g = random_polynomial(rng, n, 7, 10);
        const Complex a = rng.complex_unit_box();
        const Complex b = rng.complex_unit_box();
        const CPoint z = rng.point_in_ball(n, 2.0);

        const Complex lhs = (a * f + b * g)(z);
        const Complex rhs = a * f(z) + b * g(z);
        const double scale = evaluation_scale(f, z.norm()) + evaluation_scale(g, z.norm());
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, scale));
    }
}

TEST_CASE("evaluate matches the independent oracle on random input") {
    RandomSource rng(9001);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 3;
        Polynomial f = random_polynomial(rng, n, 8, 12);
        const CPoint z = rng.point_in_ball(n, 3.0);
        const double scale = evaluation_scale(f, z.norm());
        CHECK(std::abs(f(z) - evaluate_oracle(f, z)) <= 1e-13 * std::max(1.0, scale));
    }
}

TEST_CASE("derivative is exact on monomials") {
    Polynomial f = Polynomial::monomial(MultiIndex({3, 1}), 2.0);
    Polynomial d0 = f.derivative(0);
    CHECK(d0.coeff(MultiIndex({2, 1})) == 6.0 + 0i);
    CHECK(f.derivative(1).coeff(MultiIndex({3, 0})) == 2.0 + 0i);
    CHECK(Polynomial::constant(2, 5.0).derivative(0).is_zero());
}

TEST_CASE("multi-index invariants") {
    MultiIndex g({2, 0, 3});
    CHECK(g.order() == 5);
    CHECK(g.factorial() == 12.0);
    CHECK_THROWS_AS(MultiIndex({-1}), std::invalid_argument);
    CHECK_THROWS_AS(MultiIndex(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("inner product is conjugate-symmetric") {
    RandomSource rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + trial % 3;
        const CPoint z = rng.point_in_ball(n, 4.0);
        const CPoint w = rng.point_in_ball(n, 4.0);
        CHECK(std::abs(inner(z, w) - std::conj(inner(w, z))) < 1e-14);
        CHECK(z.norm() >= 0.0);
    }
}
