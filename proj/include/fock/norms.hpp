#pragma once

#include <map>
#include <string>
#include <utility>

#include "fock/polynomial.hpp"

namespace fock {

/// Finite sum of z^a conj(z)^b monomials; the test class for the reproducing
/// operator. Purely holomorphic iff every b = 0.
class MixedPolynomial {
public:
    using Key = std::pair<MultiIndex, MultiIndex>;

    explicit MixedPolynomial(int n);
    static MixedPolynomial from_holomorphic(const Polynomial& f);

    int dim() const { return n_; }
    const std::map<Key, Complex>& terms() const { return terms_; }
    void set_coeff(const MultiIndex& a, const MultiIndex& b, Complex c);
    void add_term(const MultiIndex& a, const MultiIndex& b, Complex c);
    bool holomorphic() const;

    /// Swaps (a,b) on every term and conjugates the coefficients.
    MixedPolynomial conjugated() const;

    Complex evaluate(const CPoint& z) const;

private:
    int n_;
    std::map<Key, Complex> terms_;
};

/// Squared norm of z^gamma under the adjusted inner product:
/// gamma! Gamma(n+|gamma|-alpha/2)/Gamma(n+|gamma|), except that for
/// alpha >= 2n the degrees |gamma| <= alpha/2 fall back to the unweighted
/// value gamma!.
double monomial_norm_sq(double alpha, const MultiIndex& gamma);

/// Same quantity by sphere factor x radial quadrature against the |z|^{-alpha}
/// weight; independent of the closed form (only valid where the Gamma
/// argument is positive).
double monomial_norm_sq_quadrature(double alpha, const MultiIndex& gamma);

/// Adjusted inner product <f,g>: exact finite sum over monomial orthogonality;
/// handles the alpha >= 2n split internally.
Complex pairing(const Polynomial& f, const Polynomial& g, double alpha);

/// Unadjusted |z|^{-alpha}-weighted pairing; throws std::domain_error when a
/// jointly supported degree violates integrability (n+|gamma|-alpha/2 <= 0).
Complex pairing_raw(const Polynomial& f, const Polynomial& g, double alpha);

/// integral_S |zeta^nu|^p dsigma over the normalized unit sphere of C^n.
double sphere_monomial_integral(double p, const MultiIndex& nu);

struct NormEstimate {
    double value = 0.0;
    double stderr_estimate = 0.0;  // nonzero only for the Monte Carlo route
    std::string method;
};

/// Gaussian-weighted p-norm with the (1+|z|)^{-alpha} volume deformation.
/// Monomials use the exact sphere factor x radial quadrature; one complex
/// variable uses a spectrally convergent circle rule; several variables use
/// seeded Monte Carlo directions except at p = 2 where monomial orthogonality
/// is exact.
NormEstimate fock_norm_p_detail(const Polynomial& f, double p, double alpha,
                                int mc_directions = 2048, uint64_t mc_seed = 20240901);
double fock_norm_p(const Polynomial& f, double p, double alpha);

/// Weighted sup norm sup |f| e^{-|z|^2/2} (1+|z|)^{-alpha} by radial-angular
/// grid search with two refinement passes; search radius degree+sqrt(2|alpha|)+6.
double fock_norm_inf(const Polynomial& f, double alpha, uint64_t seed = 20240902);

enum class SobolevFlavor { Differentiation, Integration };

/// Norm built from the radial operators: the weighted norm of the order-s
/// derivative (or order -s integral), plus the plain norm of the low-degree
/// Taylor part on the side where the operator drops it. p may be infinity.
double sobolev_norm(const Polynomial& f, double p, double alpha, double s, SobolevFlavor flavor);

/// |f(z) - <f, K_z>| with the kernel truncated at degree(f); pure rounding
/// when everything is consistent.
double reproduce_check(const Polynomial& f, double alpha, const CPoint& z);

/// Reproducing operator on mixed polynomials: pairs against the kernel
/// (alpha < 2n) or against its high-degree truncation (alpha >= 2n); output is
/// holomorphic.
Polynomial project(const MixedPolynomial& psi, double alpha);

}  // namespace fock
