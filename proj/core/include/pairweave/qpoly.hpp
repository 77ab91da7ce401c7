#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pairweave/rational.hpp"

namespace pairweave {

/// Univariate polynomial with exact rational coefficients.
///
/// coeffs()[k] is the coefficient of q^k. The representation is canonical:
/// no trailing zero coefficient, and the zero polynomial has no coefficients,
/// so structural equality is polynomial equality.
class QPoly {
public:
    QPoly() = default;
    QPoly(Rational constant);  // NOLINT(google-explicit-constructor)
    QPoly(long constant) : QPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
    explicit QPoly(std::vector<Rational> coeffs);

    /// c * q^k
    static QPoly monomial(std::size_t k, Rational c = Rational(1));
    /// The indeterminate itself.
    static QPoly q() { return monomial(1); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    /// Horner evaluation.
    Rational eval(const Rational& x) const;

    /// Substitution q -> -q.
    QPoly reflect() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const Rational& c);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
    friend QPoly operator*(const Rational& c, QPoly a) { return a *= c; }
    QPoly operator-() const;

    friend bool operator==(const QPoly& a, const QPoly& b) = default;

    /// Human-readable form, e.g. "5 - 6q + 2q^2".
    std::string to_string(char var = 'q') const;
    /// Coefficient strings, constant term first.
    std::vector<std::string> to_strings() const;
    static QPoly from_strings(const std::vector<std::string>& coeffs);

private:
    void trim();

    std::vector<Rational> coeffs_;
};

QPoly pow(const QPoly& base, unsigned exponent);

}  // namespace pairweave
