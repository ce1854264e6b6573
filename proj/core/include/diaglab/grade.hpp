#ifndef DIAGLAB_GRADE_HPP
#define DIAGLAB_GRADE_HPP

#include <optional>
#include <string>
#include <vector>

#include "diaglab/frobenius.hpp"
#include "diaglab/guess.hpp"
#include "diaglab/multiseries.hpp"
#include "diaglab/series.hpp"

namespace diaglab {

// f = diagonal of expr in claimedGrade + 1 variables.
struct DiagonalRep {
    RationalExpr expr;
    int claimedGrade = 0;
};

DiagonalRep makeDiagonalRep(RationalExpr expr, int claimedGrade);

// f = Hadamard product of the algebraic factors.
struct HadamardRep {
    std::vector<AlgebraicSpec> factors;
};

struct NilOfSeries {
    NilReport report;
    DiffOp op;  // the guessed minimal annihilator
};

// Guesses the minimal operator, then reads the nilpotence index off its
// local solution basis at 0. Throws GuessFailed when the search box or
// window is insufficient.
NilOfSeries nilOfSeries(const UniSeries& f, int maxOrder, int maxDeg);

bool verifyDiagonalRep(const DiagonalRep& rep, const UniSeries& f, int order);
bool verifyHadamardRep(const HadamardRep& rep, const UniSeries& f, int order);

// Product of the factor series placed on disjoint variables; its diagonal
// is the Hadamard product of the factors.
TruncatedMultiSeries hadamardToDisjointProduct(const HadamardRep& rep, int order);

struct GradeBounds {
    int lower = 0;
    std::optional<int> upper;
    int window = 0;
    bool rationalRecognized = false;
    std::optional<RationalForm> rationalForm;
    std::optional<NilReport> nil;
    std::optional<DiffOp> guessedOperator;
    std::string upperEvidence;  // "diagonal_rep", "hadamard_rep", "rational", or ""
};

// Verifies witnesses first (WitnessFailed on mismatch), recognizes rational
// series as grade (0, 0), otherwise lower = Nil from the guessed operator
// and upper = the verified witness grade (unknown without a witness).
GradeBounds gradeBounds(const UniSeries& f, const std::optional<DiagonalRep>& diag,
                        const std::optional<HadamardRep>& had, int maxOrder, int maxDeg,
                        int window);

struct ZeroDivisorWitness {
    int m = 1;
    std::vector<int> fResidues;  // residues with vanishing sections of f
    std::vector<int> gResidues;
};

// Smallest m <= mMax whose vanishing-section residue sets cover
// {0..m-1}; nullopt when the Hadamard product is nonzero in the window or
// no modulus up to mMax works (truncation cannot certify nonexistence).
std::optional<ZeroDivisorWitness> zeroDivisorWitness(const UniSeries& f, const UniSeries& g,
                                                     int mMax, int order);

}  // namespace diaglab

#endif
