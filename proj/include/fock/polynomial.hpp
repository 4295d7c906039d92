#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "fock/numerics.hpp"

namespace fock {

/// Exponent tuple of a monomial z^gamma on C^n.
struct MultiIndex {
    std::vector<int> exp;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e);
    static MultiIndex zero(int n);

    int dim() const { return static_cast<int>(exp.size()); }
    int order() const;          // |gamma|
    double factorial() const;   // gamma! as double

    auto operator<=>(const MultiIndex&) const = default;
};

/// Point of C^n.
struct CPoint {
    std::vector<Complex> coord;

    CPoint() = default;
    explicit CPoint(std::vector<Complex> c) : coord(std::move(c)) {}

    int dim() const { return static_cast<int>(coord.size()); }
    double norm() const;  // |z|
};

/// Hermitian inner product z . conj(w).
Complex inner(const CPoint& z, const CPoint& w);

/// Sparse holomorphic polynomial on C^n: finite map MultiIndex -> coefficient.
/// Canonical form stores no zero coefficients; only exact zeros are dropped,
/// so algebraic identities keep bitwise-stable structure.
class Polynomial {
public:
    explicit Polynomial(int n);
    static Polynomial constant(int n, Complex c);
    static Polynomial monomial(const MultiIndex& gamma, Complex c);

    int dim() const { return n_; }
    /// Max |gamma| over stored terms; -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return terms_.empty(); }
    const std::map<MultiIndex, Complex>& terms() const { return terms_; }

    Complex coeff(const MultiIndex& gamma) const;
    void set_coeff(const MultiIndex& gamma, Complex c);
    void add_term(const MultiIndex& gamma, Complex c);

    Complex evaluate(const CPoint& z) const;
    Complex operator()(const CPoint& z) const { return evaluate(z); }

    Polynomial homogeneous_part(int k) const;
    std::vector<Polynomial> homogeneous_decomposition() const;

    /// d/dz_j, exact on coefficients.
    Polynomial derivative(int j) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(Complex c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Complex c, Polynomial p) { return p *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial&) const = default;

private:
    int n_;
    std::map<MultiIndex, Complex> terms_;
};

/// Taylor-tail split at order bound |s|: first = sum of parts of degree
/// strictly above |s|, second = the complementary low-degree part.
std::pair<Polynomial, Polynomial> tail_split(const Polynomial& f, double s);

/// Degree profile along a ray: c[k] = f_k(dir), so f(t*dir) = sum c[k] t^k.
std::vector<Complex> radial_profile(const Polynomial& f, const CPoint& dir);

/// Sum of |c_gamma| * max(1,|z|)^|gamma|; conditioning scale for relative
/// comparisons of evaluated values.
double evaluation_scale(const Polynomial& f, double znorm);

}  // namespace fock
