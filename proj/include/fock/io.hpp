#pragma once

#include <iosfwd>
#include <string>

#include "fock/carleson.hpp"
#include "fock/norms.hpp"
#include "fock/polynomial.hpp"

namespace fock {

// Polynomial JSON: {"n": <int>, "terms": [{"gamma": [<int>...], "re": <f>,
// "im": <f>}, ...]}. Duplicate gammas are an input error.
Polynomial polynomial_from_json(const std::string& text);
std::string polynomial_to_json(const Polynomial& f);
Polynomial load_polynomial(const std::string& path);

// Mixed terms carry two exponent tuples: {"a": [...], "b": [...], "re": , "im": }.
MixedPolynomial mixed_from_json(const std::string& text);
std::string mixed_to_json(const MixedPolynomial& psi);
MixedPolynomial load_mixed(const std::string& path);

// Measure CSV with mandatory header re_1,im_1,...,re_n,im_n,weight.
PointMeasure measure_from_csv(std::istream& in);
PointMeasure load_measure_csv(const std::string& path);

/// Complex literal a+bi / a-bi (also plain reals and pure bi forms).
Complex parse_complex(const std::string& text);

/// Comma-separated complex literals.
CPoint parse_point(const std::string& text);

std::string format_significant(double v, int digits = 12);
std::string format_complex(Complex v, int digits = 12);

}  // namespace fock
