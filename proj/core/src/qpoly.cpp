#include "pairweave/qpoly.hpp"

#include <algorithm>

namespace pairweave {

QPoly::QPoly(Rational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(std::size_t k, Rational c) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(k + 1);
    v[k] = std::move(c);
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

QPoly QPoly::reflect() const {
    QPoly r = *this;
    for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) {
    *this = *this * o;
    return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

std::string QPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = abs(c);
        const bool unit = mag == Rational(1);
        if (k == 0 || !unit) out += mag.to_string();
        if (k >= 1) out += var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

std::vector<std::string> QPoly::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_string());
    return out;
}

QPoly QPoly::from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) v.push_back(Rational::parse(s));
    return QPoly(std::move(v));
}

QPoly pow(const QPoly& base, unsigned exponent) {
    QPoly result(1);
    QPoly b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent > 0) b *= b;
    }
    return result;
}

}  // namespace pairweave
