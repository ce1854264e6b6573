#ifndef DIAGLAB_RATIONAL_HPP
#define DIAGLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "diaglab/errors.hpp"

namespace diaglab {

using Integer = mpz_class;

// Arbitrary-precision rational, always in canonical form:
// gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
    Rational(const Integer& n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) { canonicalize(); }
    Rational(const Integer& num, const Integer& den) : v_(num, den) { canonicalize(); }

    // Accepts "p", "-p", "p/q" with q > 0. Anything else throws ParseError.
    static Rational fromString(const std::string& text);

    const mpq_class& raw() const noexcept { return v_; }
    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool isZero() const { return sgn(v_) == 0; }
    bool isInteger() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Largest integer <= value.
    Integer floor() const {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    // Fractional part in [0, 1).
    Rational fractionalPart() const { return *this - Rational(floor()); }

    Rational pow(long e) const;

    std::string str() const;

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.isZero()) throw InvalidArgument("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    void canonicalize() {
        if (v_.get_den() == 0) throw InvalidArgument("rational with zero denominator");
        v_.canonicalize();
    }
    mpq_class v_;
};

inline Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (isZero()) {
        if (e < 0) throw InvalidArgument("0 raised to a negative power");
        return Rational(0);
    }
    Integer n = numerator(), d = denominator();
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Integer np, dp;
    mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), k);
    mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), k);
    return neg ? Rational(dp, np) : Rational(np, dp);
}

inline std::string Rational::str() const {
    if (isInteger()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

inline Rational Rational::fromString(const std::string& text) {
    auto bad = [&] { throw ParseError("not a rational: '" + text + "'"); };
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t numStart = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == numStart) bad();
    Integer num(text.substr(0, i));
    if (i == text.size()) return Rational(num);
    if (text[i] != '/') bad();
    ++i;
    std::size_t denStart = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == denStart || i != text.size()) bad();
    Integer den(text.substr(denStart));
    if (den == 0) bad();
    return Rational(num, den);
}

// Rising factorial (x)_n = x(x+1)...(x+n-1), with (x)_0 = 1.
inline Rational pochhammer(const Rational& x, int n) {
    Rational acc(1);
    Rational t = x;
    for (int i = 0; i < n; ++i) {
        acc *= t;
        t += Rational(1);
    }
    return acc;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace diaglab

#endif
