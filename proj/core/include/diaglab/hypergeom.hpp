#ifndef DIAGLAB_HYPERGEOM_HPP
#define DIAGLAB_HYPERGEOM_HPP

#include <string>
#include <vector>

#include "diaglab/diffop.hpp"
#include "diaglab/series.hpp"

namespace diaglab {

// Parameter lists (alpha_1..alpha_n; beta_1..beta_n) with the trailing
// beta_n = 1 stored explicitly; all counts include it.
class HypergeomParams {
public:
    HypergeomParams(std::vector<Rational> alpha, std::vector<Rational> beta);

    // "1/2,1/2;1,1"
    static HypergeomParams parse(const std::string& text);

    int n() const { return static_cast<int>(alpha_.size()); }
    const std::vector<Rational>& alpha() const { return alpha_; }
    const std::vector<Rational>& beta() const { return beta_; }

    std::string str() const;

private:
    std::vector<Rational> alpha_, beta_;
};

// Coefficient i is prod_k (alpha_k)_i / prod_k (beta_k)_i, the trailing
// (1)_i supplying the i!.
UniSeries hgCoeffs(const HypergeomParams& p, int order);

// prod_i (theta + beta_i - 1) - x prod_i (theta + alpha_i), for arbitrary
// parameter lists of equal length (no trailing-1 convention).
DiffOp hypergeomOperator(const std::vector<Rational>& alpha, const std::vector<Rational>& beta);

// The operator annihilating hgCoeffs(p, .): the sign in front of x is
// negative; the annihilation tests pin it down.
DiffOp hgOperator(const HypergeomParams& p);

struct ResonantPair {
    int i, j;          // 1-based parameter indices
    Integer difference;  // alpha_i - beta_j
};
std::vector<ResonantPair> resonantPairs(const HypergeomParams& p);

struct Contraction {
    std::vector<Rational> alphaReduced, betaReduced;  // nonresonant
    std::vector<Rational> gammas;  // left factors (theta + gamma), from differences in N
    std::vector<Rational> deltas;  // right factors (theta + delta), from negative differences
    struct Removed {
        int i, j;            // original 1-based indices
        Integer difference;  // original alpha_i - beta_j
    };
    std::vector<Removed> removed;
};

// Removes resonant pairs, lexicographically smallest (i, j) first, shifting
// a parameter by unit steps until the pair reaches one of the two base
// cases: difference 0 gives a left factor (theta + alpha_i - 1), difference
// -1 gives a right factor (theta + beta_j - 1).
Contraction contract(const HypergeomParams& p);

// #{j : beta_j integer} - #{i : alpha_i integer}.
int height(const HypergeomParams& p);

// exp(2 pi i value) with value reduced into [0, 1).
struct RotationNumber {
    Rational value;
    static RotationNumber of(const Rational& r) { return {r.fractionalPart()}; }
    friend bool operator==(const RotationNumber& a, const RotationNumber& b) {
        return a.value == b.value;
    }
    friend bool operator<(const RotationNumber& a, const RotationNumber& b) {
        return a.value < b.value;
    }
};

std::vector<RotationNumber> rotationsOf(const std::vector<Rational>& params);

struct JordanBlock {
    RotationNumber rotation;
    int size;
};

// One block per distinct rotation, sized by multiplicity.
struct JordanStructure {
    std::vector<JordanBlock> blocks;
};

JordanStructure leveltJordan(const std::vector<RotationNumber>& rotations);

// max(#integer reduced betas, #integer reduced alphas) = |height|.
int nilLowerBoundFromLevelt(const HypergeomParams& p);

}  // namespace diaglab

#endif
