#ifndef DIAGLAB_DIFFOP_HPP
#define DIAGLAB_DIFFOP_HPP

#include <string>
#include <vector>

#include "diaglab/poly.hpp"
#include "diaglab/series.hpp"

namespace diaglab {

enum class OpForm { Theta, Dx };

// Linear differential operator with polynomial coefficients, either
// sum p_i(x) theta^i (theta = x d/dx) or sum a_i(x) (d/dx)^i.
// The leading coefficient polynomial is nonzero; the zero operator has
// no coefficients and order -1.
class DiffOp {
public:
    DiffOp() = default;
    DiffOp(OpForm form, std::vector<Poly> coeffs);

    static DiffOp theta();                             // theta, in theta form
    static DiffOp dx();                                // d/dx, in dx form
    static DiffOp thetaShift(const Rational& a);       // theta + a
    static DiffOp multiplication(OpForm form, Poly p); // order-0 operator

    OpForm form() const { return form_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    const std::vector<Poly>& coeffs() const { return c_; }
    const Poly& coeff(int i) const;
    Poly leading() const { return c_.empty() ? Poly() : c_.back(); }

    int maxXDegree() const;
    // Smallest x-valuation over all coefficient monomials present.
    int minXValuation() const;

    std::string str() const;

private:
    OpForm form_ = OpForm::Theta;
    std::vector<Poly> c_;
};

// Exact identity theta^i = sum_j S(i,j) x^j (d/dx)^j; the returned operator
// equals the input as an operator.
DiffOp toDxForm(const DiffOp& op);
// Left-multiplies a d/dx-form operator by x^order and clears the common
// monomial factor: same solution space, equal to the input only up to a
// monomial times content.
DiffOp toThetaForm(const DiffOp& op);

// Exact image; output trunc is the largest order computable from f's window.
UniSeries applyOp(const DiffOp& op, const UniSeries& f);

// Noncommutative composition a(b(.)): apply b first.
DiffOp multiply(const DiffOp& a, const DiffOp& b);

DiffOp addOp(const DiffOp& a, const DiffOp& b);
DiffOp subOp(const DiffOp& a, const DiffOp& b);
DiffOp scaleOp(const DiffOp& a, const Rational& s);

// Divides by the rational content of all coefficients and fixes the sign so
// the leading polynomial has positive leading coefficient.
DiffOp normalized(const DiffOp& op);

bool operator==(const DiffOp& a, const DiffOp& b);

// Fuchs criterion at x = 0 on the d/dx form:
// ord_x(a_i) >= ord_x(a_r) - (r - i) for every i.
bool isRegularSingularAtZero(const DiffOp& op);

}  // namespace diaglab

#endif
