#ifndef DIAGLAB_GUESS_HPP
#define DIAGLAB_GUESS_HPP

#include <optional>

#include "diaglab/diffop.hpp"
#include "diaglab/series.hpp"

namespace diaglab {

// Minimal annihilating operator search inside the box
// order <= maxOrder, coefficient degree <= maxDegree, minimal order first
// and then minimal degree. A box entry (r, d) is only admissible when
// f.trunc() >= (r+1)(d+1) + 10, so every accepted operator annihilates at
// least ten coefficients beyond the interpolation window; the returned
// operator (d/dx form) annihilates f through the entire window and is
// content/sign normalized. Returns nullopt when no admissible box entry
// has a nontrivial nullspace.
std::optional<DiffOp> guessOperator(const UniSeries& f, int maxOrder, int maxDegree);

inline constexpr int kGuessGuard = 10;

struct RationalForm {
    Poly numerator;
    Poly denominator;  // denominator(0) > 0, jointly primitive
};

// Pade-style denominator reconstruction: f = P/Q with deg P, deg Q <=
// maxDegree, checked through the whole window with the same guard band.
std::optional<RationalForm> reconstructRational(const UniSeries& f, int maxDegree);

}  // namespace diaglab

#endif
