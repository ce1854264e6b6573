#ifndef DIAGLAB_MULTISERIES_HPP
#define DIAGLAB_MULTISERIES_HPP

#include <map>
#include <optional>
#include <vector>

#include "diaglab/expr.hpp"
#include "diaglab/rational.hpp"

namespace diaglab {

// Exact truncated multivariate Laurent series. The box [low, cap] is the
// sound window: within it the stored terms agree with the exact expansion,
// and zero coefficients are never stored. low <= 0 <= cap componentwise.
class TruncatedMultiSeries {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    TruncatedMultiSeries(int arity, Exponents low, Exponents cap, TermMap terms);
    static TruncatedMultiSeries zero(int arity, const Exponents& low, const Exponents& cap);

    int arity() const { return arity_; }
    const Exponents& low() const { return low_; }
    const Exponents& cap() const { return cap_; }
    const TermMap& terms() const { return terms_; }

    bool insideWindow(const Exponents& e) const;
    // Coefficient inside the sound window; reading outside it throws.
    Rational coeff(const Exponents& e) const;

private:
    int arity_ = 0;
    Exponents low_, cap_;
    TermMap terms_;
};

// Sum/difference sound on the window intersection; product sound on the
// usual convolution window min(capA + lowB, capB + lowA).
TruncatedMultiSeries add(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b);
TruncatedMultiSeries sub(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b);
TruncatedMultiSeries mul(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b);

// Product of two series with *complete* finite support (Laurent
// polynomials, tensor factors): no window shrinkage, the result window is
// the support hull.
TruncatedMultiSeries mulExact(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b);

// Coefficientwise agreement on the intersection of the two windows.
bool agrees(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b);

// Taylor/Laurent expansion of `expr` at the origin, sound on [low, cap]
// where `low` is determined by the monomial factors cleared from
// denominators. If `lowFloor` is given, an expansion needing exponents
// below it is rejected with DenominatorVanishes.
TruncatedMultiSeries expand(const RationalExpr& expr, const std::vector<int>& cap,
                            std::optional<int> lowFloor = std::nullopt);

// Exact expansion of a Laurent *polynomial*: finite support, no truncation.
// Division is only allowed by subexpressions that evaluate to a single
// monomial; anything else throws NotLaurentPolynomial.
TruncatedMultiSeries expandLaurent(const RationalExpr& expr);

}  // namespace diaglab

#endif
