#include "fock/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace fock {

MultiIndex::MultiIndex(std::vector<int> e) : exp(std::move(e)) {
    if (exp.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
    for (int g : exp) {
        if (g < 0) throw std::invalid_argument("MultiIndex: exponents must be nonnegative");
    }
}

MultiIndex MultiIndex::zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }

int MultiIndex::order() const {
    int s = 0;
    for (int g : exp) s += g;
    return s;
}

double MultiIndex::factorial() const {
    double p = 1.0;
    for (int g : exp) {
        for (int j = 2; j <= g; ++j) p *= j;
    }
    return p;
}

double CPoint::norm() const {
    double s = 0.0;
    for (const Complex& c : coord) s += std::norm(c);
    return std::sqrt(s);
}

Complex inner(const CPoint& z, const CPoint& w) {
    if (z.dim() != w.dim()) {
        throw std::invalid_argument("inner: dimension mismatch");
    }
    KahanSum acc;
    for (int j = 0; j < z.dim(); ++j) acc.add(z.coord[j] * std::conj(w.coord[j]));
    return acc.value();
}

Polynomial::Polynomial(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Polynomial: dimension must be >= 1");
}

Polynomial Polynomial::constant(int n, Complex c) {
    Polynomial p(n);
    p.set_coeff(MultiIndex::zero(n), c);
    return p;
}

Polynomial Polynomial::monomial(const MultiIndex& gamma, Complex c) {
    Polynomial p(gamma.dim());
    p.set_coeff(gamma, c);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [gamma, c] : terms_) d = std::max(d, gamma.order());
    return d;
}

Complex Polynomial::coeff(const MultiIndex& gamma) const {
    auto it = terms_.find(gamma);
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

void Polynomial::set_coeff(const MultiIndex& gamma, Complex c) {
    if (gamma.dim() != n_) throw std::invalid_argument("Polynomial: index dimension mismatch");
    if (c == Complex{0.0, 0.0}) {
        terms_.erase(gamma);
    } else {
        terms_[gamma] = c;
    }
}

void Polynomial::add_term(const MultiIndex& gamma, Complex c) {
    set_coeff(gamma, coeff(gamma) + c);
}

namespace {

Complex cpow(Complex z, int k) {
    Complex p{1.0, 0.0};
    for (int j = 0; j < k; ++j) p *= z;
    return p;
}

}  // namespace

Complex Polynomial::evaluate(const CPoint& z) const {
    if (z.dim() != n_) throw std::invalid_argument("Polynomial::evaluate: dimension mismatch");
    KahanSum acc;
    for (const auto& [gamma, c] : terms_) {
        Complex m = c;
        for (int j = 0; j < n_; ++j) m *= cpow(z.coord[j], gamma.exp[j]);
        acc.add(m);
    }
    return acc.value();
}

Polynomial Polynomial::homogeneous_part(int k) const {
    Polynomial out(n_);
    for (const auto& [gamma, c] : terms_) {
        if (gamma.order() == k) out.set_coeff(gamma, c);
    }
    return out;
}

std::vector<Polynomial> Polynomial::homogeneous_decomposition() const {
    std::vector<Polynomial> parts(static_cast<size_t>(degree() + 1), Polynomial(n_));
    for (const auto& [gamma, c] : terms_) {
        parts[static_cast<size_t>(gamma.order())].set_coeff(gamma, c);
    }
    return parts;
}

Polynomial Polynomial::derivative(int j) const {
    if (j < 0 || j >= n_) throw std::invalid_argument("Polynomial::derivative: bad variable index");
    Polynomial out(n_);
    for (const auto& [gamma, c] : terms_) {
        if (gamma.exp[j] == 0) continue;
        MultiIndex g = gamma;
        g.exp[j] -= 1;
        out.add_term(g, c * static_cast<double>(gamma.exp[j]));
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("Polynomial: dimension mismatch");
    for (const auto& [gamma, c] : rhs.terms_) add_term(gamma, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("Polynomial: dimension mismatch");
    for (const auto& [gamma, c] : rhs.terms_) add_term(gamma, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
    if (c == Complex{0.0, 0.0}) {
        *this = Polynomial(n_);
        return *this;
    }
    for (auto& [gamma, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Polynomial: dimension mismatch");
    Polynomial out(a.dim());
    for (const auto& [ga, ca] : a.terms()) {
        for (const auto& [gb, cb] : b.terms()) {
            std::vector<int> e(static_cast<size_t>(a.dim()));
            for (int j = 0; j < a.dim(); ++j) e[static_cast<size_t>(j)] = ga.exp[j] + gb.exp[j];
            out.add_term(MultiIndex(std::move(e)), ca * cb);
        }
    }
    return out;
}

std::pair<Polynomial, Polynomial> tail_split(const Polynomial& f, double s) {
    const double bound = std::abs(s);
    Polynomial plus(f.dim());
    Polynomial minus(f.dim());
    for (const auto& [gamma, c] : f.terms()) {
        if (static_cast<double>(gamma.order()) > bound) {
            plus.set_coeff(gamma, c);
        } else {
            minus.set_coeff(gamma, c);
        }
    }
    return {plus, minus};
}

std::vector<Complex> radial_profile(const Polynomial& f, const CPoint& dir) {
    if (dir.dim() != f.dim()) throw std::invalid_argument("radial_profile: dimension mismatch");
    std::vector<Complex> prof(static_cast<size_t>(std::max(0, f.degree() + 1)), Complex{0.0, 0.0});
    for (const auto& [gamma, c] : f.terms()) {
        Complex m = c;
        for (int j = 0; j < f.dim(); ++j) m *= cpow(dir.coord[j], gamma.exp[j]);
        prof[static_cast<size_t>(gamma.order())] += m;
    }
    return prof;
}

double evaluation_scale(const Polynomial& f, double znorm) {
    const double b = std::max(1.0, znorm);
    double s = 0.0;
    for (const auto& [gamma, c] : f.terms()) s += std::abs(c) * std::pow(b, gamma.order());
    return s;
}

}  // namespace fock
