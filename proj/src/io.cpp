#include "fock/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fock {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MultiIndex index_from_json(const json& arr, int n, const char* field) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != n) {
        throw std::invalid_argument(std::string("term field '") + field + "' must be an array of " +
                                    std::to_string(n) + " integers");
    }
    std::vector<int> e;
    e.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number_integer() || v.get<int>() < 0) {
            throw std::invalid_argument(std::string("term field '") + field +
                                        "' must hold nonnegative integers");
        }
        e.push_back(v.get<int>());
    }
    return MultiIndex(std::move(e));
}

}  // namespace

Polynomial polynomial_from_json(const std::string& text) {
    const json doc = json::parse(text);  // parse_error carries the byte position
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("terms")) {
        throw std::invalid_argument("polynomial JSON must be {\"n\": ..., \"terms\": [...]}");
    }
    const int n = doc.at("n").get<int>();
    if (n < 1) throw std::invalid_argument("polynomial JSON: n must be >= 1");
    Polynomial f(n);
    for (const auto& term : doc.at("terms")) {
        const MultiIndex gamma = index_from_json(term.at("gamma"), n, "gamma");
        if (f.coeff(gamma) != Complex{0.0, 0.0}) {
            throw std::invalid_argument("polynomial JSON: duplicate gamma entry");
        }
        f.set_coeff(gamma, Complex{term.at("re").get<double>(), term.at("im").get<double>()});
    }
    return f;
}

std::string polynomial_to_json(const Polynomial& f) {
    ordered_json doc;
    doc["n"] = f.dim();
    doc["terms"] = ordered_json::array();
    for (const auto& [gamma, c] : f.terms()) {
        ordered_json term;
        term["gamma"] = gamma.exp;
        term["re"] = c.real();
        term["im"] = c.imag();
        doc["terms"].push_back(std::move(term));
    }
    return doc.dump(2);
}

Polynomial load_polynomial(const std::string& path) { return polynomial_from_json(read_file(path)); }

MixedPolynomial mixed_from_json(const std::string& text) {
    const json doc = json::parse(text);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("terms")) {
        throw std::invalid_argument("mixed polynomial JSON must be {\"n\": ..., \"terms\": [...]}");
    }
    const int n = doc.at("n").get<int>();
    if (n < 1) throw std::invalid_argument("mixed polynomial JSON: n must be >= 1");
    MixedPolynomial psi(n);
    for (const auto& term : doc.at("terms")) {
        const MultiIndex a = index_from_json(term.at("a"), n, "a");
        const MultiIndex b = index_from_json(term.at("b"), n, "b");
        psi.add_term(a, b, Complex{term.at("re").get<double>(), term.at("im").get<double>()});
    }
    return psi;
}

std::string mixed_to_json(const MixedPolynomial& psi) {
    ordered_json doc;
    doc["n"] = psi.dim();
    doc["terms"] = ordered_json::array();
    for (const auto& [key, c] : psi.terms()) {
        ordered_json term;
        term["a"] = key.first.exp;
        term["b"] = key.second.exp;
        term["re"] = c.real();
        term["im"] = c.imag();
        doc["terms"].push_back(std::move(term));
    }
    return doc.dump(2);
}

MixedPolynomial load_mixed(const std::string& path) { return mixed_from_json(read_file(path)); }

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trimmed(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double_strict(const std::string& s, const std::string& where) {
    const std::string t = trimmed(s);
    if (t.empty()) throw std::invalid_argument(where + ": empty number");
    size_t pos = 0;
    double v;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(where + ": bad number '" + t + "'");
    }
    if (pos != t.size()) throw std::invalid_argument(where + ": trailing junk in '" + t + "'");
    return v;
}

}  // namespace

PointMeasure measure_from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("measure CSV: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split(line, ',');
    if (header.size() < 3 || header.size() % 2 == 0) {
        throw std::invalid_argument("measure CSV: header must be re_1,im_1,...,re_n,im_n,weight");
    }
    const int n = static_cast<int>(header.size() / 2);
    for (int j = 0; j < n; ++j) {
        const std::string re = "re_" + std::to_string(j + 1);
        const std::string im = "im_" + std::to_string(j + 1);
        if (trimmed(header[static_cast<size_t>(2 * j)]) != re ||
            trimmed(header[static_cast<size_t>(2 * j + 1)]) != im) {
            throw std::invalid_argument("measure CSV: expected header column '" + re + "," + im +
                                        "'");
        }
    }
    if (trimmed(header.back()) != "weight") {
        throw std::invalid_argument("measure CSV: last header column must be 'weight'");
    }

    PointMeasure mu;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trimmed(line).empty()) continue;
        const std::vector<std::string> cols = split(line, ',');
        const std::string where = "measure CSV line " + std::to_string(lineno);
        if (cols.size() != header.size()) {
            throw std::invalid_argument(where + ": expected " + std::to_string(header.size()) +
                                        " columns, got " + std::to_string(cols.size()));
        }
        std::vector<Complex> coord(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            coord[static_cast<size_t>(j)] = {
                parse_double_strict(cols[static_cast<size_t>(2 * j)], where),
                parse_double_strict(cols[static_cast<size_t>(2 * j + 1)], where)};
        }
        const double w = parse_double_strict(cols.back(), where);
        if (!(w > 0.0)) throw std::invalid_argument(where + ": weight must be positive");
        mu.points.emplace_back(std::move(coord));
        mu.weights.push_back(w);
    }
    mu.validate();
    return mu;
}

PointMeasure load_measure_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return measure_from_csv(in);
}

Complex parse_complex(const std::string& text) {
    const std::string t = trimmed(text);
    if (t.empty()) throw std::invalid_argument("empty complex literal");
    if (t.back() != 'i') return {parse_double_strict(t, "complex literal"), 0.0};

    const std::string body = t.substr(0, t.size() - 1);
    // Split at the last +/- that is not an exponent sign and not leading.
    size_t cut = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        const char ch = body[k];
        if ((ch == '+' || ch == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    auto imag_of = [](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return parse_double_strict(s, "complex literal (imaginary part)");
    };
    if (cut == std::string::npos) return {0.0, imag_of(body)};
    return {parse_double_strict(body.substr(0, cut), "complex literal (real part)"),
            imag_of(body.substr(cut))};
}

CPoint parse_point(const std::string& text) {
    std::vector<Complex> coord;
    for (const std::string& piece : split(text, ',')) coord.push_back(parse_complex(piece));
    return CPoint(std::move(coord));
}

std::string format_significant(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

std::string format_complex(Complex v, int digits) {
    if (v.imag() == 0.0) return format_significant(v.real(), digits);
    const std::string re = format_significant(v.real(), digits);
    std::string im = format_significant(std::abs(v.imag()), digits);
    return re + (v.imag() < 0.0 ? "-" : "+") + im + "i";
}

}  // namespace fock
