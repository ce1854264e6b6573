#ifndef DIAGLAB_POLY_HPP
#define DIAGLAB_POLY_HPP

#include <string>
#include <vector>

#include "diaglab/rational.hpp"

namespace diaglab {

// Dense univariate polynomial with exact rational coefficients.
// Trailing zero coefficients are trimmed; the zero polynomial is {}.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, int degree);
    // t + shift, handy for building operator factors.
    static Poly linear(const Rational& constantTerm);

    bool isZero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(i)];
    }
    Rational leading() const { return isZero() ? Rational(0) : c_.back(); }

    // Lowest exponent with nonzero coefficient; -1 for the zero polynomial.
    int valuation() const;

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    // p(t + a), exact Taylor shift.
    Poly shiftArgument(const Rational& a) const;
    // Multiply by x^k (k >= 0), or divide exactly by x^k (k < 0 requires valuation >= -k).
    Poly shiftExponent(int k) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& s) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // gcd of numerators over lcm of denominators, signed like the leading
    // coefficient; content(0) = 0.
    Rational content() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().isZero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace diaglab

#endif
