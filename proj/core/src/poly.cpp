#include "diaglab/poly.hpp"

#include <sstream>

namespace diaglab {

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, int degree) {
    if (c.isZero()) return Poly();
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const Rational& constantTerm) { return Poly({constantTerm, Rational(1)}); }

int Poly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].isZero()) return static_cast<int>(i);
    return -1;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::shiftArgument(const Rational& a) const {
    // Horner: p(t+a) computed by repeated multiply-by-(t+a) and add.
    Poly acc;
    Poly lin({a, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Poly::constant(*it);
    return acc;
}

Poly Poly::shiftExponent(int k) const {
    if (isZero()) return Poly();
    if (k >= 0) {
        std::vector<Rational> v(c_.size() + static_cast<std::size_t>(k), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i + static_cast<std::size_t>(k)] = c_[i];
        return Poly(std::move(v));
    }
    if (valuation() < -k) throw InvalidArgument("shiftExponent: not divisible by x^" + std::to_string(-k));
    std::vector<Rational> v(c_.begin() + static_cast<std::ptrdiff_t>(-k), c_.end());
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Rational> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.isZero() || b.isZero()) return Poly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].isZero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::scaled(const Rational& s) const {
    std::vector<Rational> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return Poly(std::move(v));
}

Rational Poly::content() const {
    if (isZero()) return Rational(0);
    Integer num(0), den(1);
    for (const auto& c : c_) {
        if (c.isZero()) continue;
        Integer g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), c.numerator().get_mpz_t());
        num = g;
        Integer l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
        den = l;
    }
    Rational r(num, den);
    if (leading().sign() < 0) r = -r;
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c.isZero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.sign() < 0 ? -c : c;
        bool unitCoeff = (a == Rational(1)) && i > 0;
        if (!unitCoeff) os << a.str();
        if (i > 0) {
            if (!unitCoeff) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace diaglab
