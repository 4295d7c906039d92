#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "doctest.h"
#include "fock/gamma.hpp"

using namespace fock;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("gamma_ratio closed-form values") {
    CHECK(gamma_ratio(5.0, 3.0) == doctest::Approx(12.0).epsilon(1e-13));
    // Gamma(2.5) = (3/4) sqrt(pi), Gamma(1) = 1.
    CHECK(gamma_ratio(2.5, 1.0) == doctest::Approx(0.75 * std::sqrt(kPi)).epsilon(1e-13));
    for (int k = 0; k <= 50; ++k) {
        CHECK(gamma_ratio(k + 101.0, k + 100.0) == doctest::Approx(k + 100.0).epsilon(1e-13));
    }
}

TEST_CASE("gamma_ratio fast path agrees with log path") {
    for (double b : {0.3, 1.0, 2.75, 10.0, 99.5, 400.25}) {
        for (int d = 1; d <= 12; ++d) {
            const double direct = gamma_ratio(b + d, b);  // exact rising product
            const double viaLog = std::exp(log_gamma_ratio(b + d, b));
            CHECK(direct == doctest::Approx(viaLog).epsilon(1e-13));
        }
    }
    // Non-integer differences: reciprocal pairs and the half-integer identity
    // Gamma(x+1/2)Gamma(x) duplication check via Gamma(2x) = 2^{2x-1}/sqrt(pi) *
    // Gamma(x)Gamma(x+1/2).
    for (double x : {1.25, 8.0, 40.5, 250.0}) {
        const double lhs = log_gamma_ratio(2.0 * x, x);
        const double rhs = (2.0 * x - 1.0) * std::log(2.0) - 0.5 * std::log(kPi) +
                           std::lgamma(x + 0.5);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        CHECK(gamma_ratio(x + 0.75, x) * gamma_ratio(x, x + 0.75) ==
              doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("gamma_ratio rejects nonpositive arguments") {
    CHECK_THROWS_AS(gamma_ratio(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(gamma_ratio(1.0, -2.0), std::domain_error);
}

TEST_CASE("dcoeff closed forms") {
    for (int k = 0; k <= 30; ++k) {
        CHECK(dcoeff(1, 1.0, k) == doctest::Approx(k + 1.0).epsilon(1e-14));
        CHECK(dcoeff(2, 0.0, k) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(icoeff(1, 1.0, k) == doctest::Approx(1.0 / (k + 1.0)).epsilon(1e-14));
    }
    // Order-m derivative of a constant in one variable is m!.
    for (int m = 0; m <= 8; ++m) {
        double fact = 1.0;
        for (int j = 2; j <= m; ++j) fact *= j;
        CHECK(dcoeff(1, m, 0) == doctest::Approx(fact).epsilon(1e-14));
    }
}

TEST_CASE("dcoeff and icoeff are reciprocal") {
    for (int n : {1, 2, 3}) {
        for (double s : {-2.5, -1.0, -0.5, 0.0, 0.5, 1.5, 2.5, 7.0}) {
            for (int k = 0; k <= 40; ++k) {
                if (s < 0.0 && !(k > -s)) continue;
                CHECK(dcoeff(n, s, k) * icoeff(n, s, k) == doctest::Approx(1.0).epsilon(1e-14));
                CHECK(dcoeff(n, s, k) > 0.0);
            }
        }
    }
}

TEST_CASE("dcoeff rejects the excluded negative-order range") {
    CHECK_THROWS_AS(dcoeff(1, -2.0, 2), std::domain_error);
    CHECK_THROWS_AS(dcoeff(1, -2.0, 1), std::domain_error);
    CHECK_NOTHROW(dcoeff(1, -2.0, 3));
    CHECK_THROWS_AS(icoeff(2, -1.5, 1), std::domain_error);
    CHECK_NOTHROW(icoeff(2, -1.5, 2));
}

TEST_CASE("dcoeff grows like k^s for large k") {
    const int k = 10000;
    for (double s : {-5.0, -2.5, -1.0, 1.0, 2.5, 5.0}) {
        const double ratio = dcoeff(1, s, k) / std::pow(static_cast<double>(k), s);
        CHECK(ratio == doctest::Approx(1.0).epsilon(0.01));
    }
}

TEST_CASE("dcoeff is increasing in k for positive order") {
    for (double s : {0.5, 1.5, 3.0}) {
        double prev = dcoeff(2, s, 0);
        for (int k = 1; k <= 60; ++k) {
            const double cur = dcoeff(2, s, k);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("falling_factorial basics") {
    CHECK(falling_factorial(4.0, 0) == 1.0);
    CHECK(falling_factorial(4.0, 2) == 12.0);
    CHECK(falling_factorial(1.5, 3) == doctest::Approx(1.5 * 0.5 * (-0.5)));
}
