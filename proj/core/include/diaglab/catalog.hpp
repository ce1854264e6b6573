#ifndef DIAGLAB_CATALOG_HPP
#define DIAGLAB_CATALOG_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diaglab/grade.hpp"

namespace diaglab {

// A(n) = sum_k C(n,k)^2 C(n+k,k)^2 by direct summation, n = 0..N.
std::vector<Integer> aperyNumbers(int N);
UniSeries aperySeries(int N);

// (x^4 - 34x^3 + x^2) D^3 + (6x^3 - 153x^2 + 3x) D^2 + (7x^2 - 112x + 1) D + (x - 5)
DiffOp aperyOperator();

// 1/((1-x0-x1)*(1-x3-x2)+x0*x1*x2*x3) with claimed grade 3.
DiagonalRep straubRep();

// B_ell(n) = sum over compositions of n into ell+1 parts of the squared
// multinomial coefficient, by direct enumeration.
std::vector<Integer> bananaNumbers(int ell, int N);
UniSeries bananaTerms(int ell, int N);

// (x1+...+xell+1)(1/x1+...+1/xell+1), arity ell+1 with x0 unused.
RationalExpr bananaLaurent(int ell);

// 1/(1 - x0*x1*...*xell * g_ell); the Laurent factor clears against the
// variable product, leaving a polynomial denominator.
DiagonalRep bananaDiagonalRep(int ell);

// The mixed-parity pair built from sections of 1/(1-x) and sqrt(1-x);
// their Hadamard product is sqrt(1-x).
std::pair<UniSeries, UniSeries> sectionExamplePair(int order);

struct CatalogEntry {
    std::string name;
    std::string summary;
    std::function<UniSeries(int)> series;  // order -> series
    std::optional<DiagonalRep> diagonalRep;
    std::optional<HadamardRep> hadamardRep;
    std::optional<DiffOp> annihilator;
    int expectedNil = 1;
    int expectedLower = 0;
    int expectedUpper = 0;
    int defaultWindow = 8;   // multivariate expansion / verification window
    int guessWindow = 30;    // univariate window for operator guessing
    int guessMaxOrder = 1;
    int guessMaxDegree = 2;
};

const std::vector<CatalogEntry>& catalogEntries();
const CatalogEntry* findCatalogEntry(const std::string& name);

struct CatalogCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CatalogVerdict {
    std::string name;
    int window = 0;
    int guessWindow = 0;
    std::uint64_t seed = 0;
    std::vector<CatalogCheck> checks;
    std::optional<GradeBounds> bounds;
    bool allPass = false;
};

// Runs every attached artifact of the entry: operator annihilation,
// witness verification, nilpotence, grade bounds, and a seeded random
// section-compatibility sample against the diagonal representation.
CatalogVerdict runCatalogEntry(const CatalogEntry& entry, std::optional<int> windowOverride,
                               std::uint64_t seed);

}  // namespace diaglab

#endif
