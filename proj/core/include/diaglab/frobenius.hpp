#ifndef DIAGLAB_FROBENIUS_HPP
#define DIAGLAB_FROBENIUS_HPP

#include <map>
#include <utility>
#include <vector>

#include "diaglab/diffop.hpp"

namespace diaglab {

struct IndicialData {
    Poly chi;  // indicial polynomial in the local exponent
    std::vector<std::pair<Rational, int>> roots;  // rational roots with multiplicity, ascending
};

// Indicial polynomial sum_i p_i(0) rho^i of the cleared theta form.
// Throws IrregularSingular, and IrrationalExponent when the polynomial has
// a non-rational root (roots are found exactly, never approximated).
IndicialData indicial(const DiffOp& op);

// Local solution x^rho * sum_{j,k} c_{j,k} x^j log(x)^k at the origin,
// table truncated at shift j <= trunc.
struct FormalSolution {
    Rational exponent;
    std::map<std::pair<int, int>, Rational> table;  // (shift, log power) -> coefficient
    int logDegree = 0;
    int trunc = 0;

    Rational coeff(int shift, int logPower) const {
        auto it = table.find({shift, logPower});
        return it == table.end() ? Rational(0) : it->second;
    }
};

// Basis of formal solutions at 0, exactly `op.order()` of them, each
// annihilated through its truncation window. Log powers appear exactly as
// forced by the rank deficiencies of the coefficient recursion.
std::vector<FormalSolution> frobeniusBasis(const DiffOp& op, int order);

struct NilReport {
    int nil = 1;  // 1 + max log degree over the basis
    std::vector<std::pair<Rational, int>> exponents;
    std::vector<FormalSolution> basis;
};

NilReport nilIndex(const DiffOp& op);
NilReport nilIndex(const DiffOp& op, int basisOrder);

// Test oracle: applies the operator to the truncated log-solution through
// its window (the theta action is theta(x^s log^k) = s x^s log^k +
// k x^s log^{k-1}) and reports whether every computable entry vanishes.
bool annihilatesFormal(const DiffOp& op, const FormalSolution& s);

}  // namespace diaglab

#endif
