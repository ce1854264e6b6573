#ifndef DIAGLAB_SERIES_HPP
#define DIAGLAB_SERIES_HPP

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "diaglab/multiseries.hpp"
#include "diaglab/rational.hpp"

namespace diaglab {

// Exact univariate power series truncated at order `trunc`:
// coefficients of x^0..x^trunc, stored densely.
class UniSeries {
public:
    UniSeries(int trunc, std::vector<Rational> coeffs);
    static UniSeries zero(int trunc);
    static UniSeries constant(const Rational& c, int trunc);

    int trunc() const { return trunc_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;  // throws WindowTooSmall beyond trunc

    bool isZeroThrough(int n) const;

private:
    int trunc_ = 0;
    std::vector<Rational> c_;
};

// Coefficientwise equality on the common window.
bool agrees(const UniSeries& a, const UniSeries& b);
// Equality through order n; both series must reach n.
bool agreesThrough(const UniSeries& a, const UniSeries& b, int n);

UniSeries add(const UniSeries& a, const UniSeries& b);
UniSeries sub(const UniSeries& a, const UniSeries& b);
UniSeries scale(const UniSeries& a, const Rational& s);
UniSeries derivative(const UniSeries& a);
// Multiplication by x^k, k >= 0.
UniSeries shiftUp(const UniSeries& a, int k);
UniSeries truncate(const UniSeries& a, int n);

// Equal-index coefficients of an (n+1)-variate series (requires low = 0).
UniSeries diagonal(const TruncatedMultiSeries& ms, int n);

// Coefficientwise product; the unit is the all-ones series.
UniSeries hadamard(const UniSeries& f, const UniSeries& g);

// Arithmetic-progression subsequence: result_k = f_{r+km}.
UniSeries section(const UniSeries& f, int r, int m);

// sum_r x^r sections[r](x^m); inverse of taking all m sections.
UniSeries recompose(const std::vector<UniSeries>& sections);

// Keeps the terms whose last exponent equals the sum of the others and
// drops that last variable. Strata with exponent sum beyond the last
// variable's cap are unknowable and are dropped.
TruncatedMultiSeries dmap(const TruncatedMultiSeries& ms);

// Generating function of constant terms of powers of a Laurent polynomial.
UniSeries constantTermSeries(const RationalExpr& laurentPoly, int order);

// (1 + c x)^gamma via generalized binomial coefficients.
UniSeries binomialPowerSeries(const Rational& c, const Rational& gamma, int order);

struct BinomialPower {
    Rational c;
    Rational gamma;
};

// Bivariate annihilator P(x, y), exponent pair -> coefficient.
struct BivarPoly {
    std::map<std::pair<int, int>, Rational> terms;
};

struct PolynomialRoot {
    BivarPoly annihilator;
    std::vector<Rational> seed;
};

// The two kinds of algebraic series the grade witnesses use.
struct AlgebraicSpec {
    std::variant<BinomialPower, PolynomialRoot> kind;
};

// Expands the specified algebraic series to the given order. For a
// PolynomialRoot the result y is verified to satisfy P(x, y) = 0 mod
// x^{order+1}.
UniSeries algebraicSeries(const AlgebraicSpec& spec, int order);

}  // namespace diaglab

#endif
