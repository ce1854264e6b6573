#include "diaglab/guess.hpp"

#include <algorithm>

#include "diaglab/errors.hpp"
#include "diaglab/parallel.hpp"

namespace diaglab {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Nullspace basis vector of the homogeneous system rows * v = 0, chosen
// canonically: reduced echelon form, first free column set to 1. Returns
// an empty vector when the nullspace is trivial.
std::vector<Rational> firstNullspaceVector(Matrix rows, std::size_t cols) {
    std::vector<std::size_t> pivotOfCol(cols, static_cast<std::size_t>(-1));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t sel = static_cast<std::size_t>(-1);
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (!rows[r][col].isZero()) {
                sel = r;
                break;
            }
        }
        if (sel == static_cast<std::size_t>(-1)) continue;
        std::swap(rows[rank], rows[sel]);
        Rational inv = Rational(1) / rows[rank][col];
        for (std::size_t c = col; c < cols; ++c) rows[rank][c] *= inv;
        const auto& pivotRow = rows[rank];
        auto eliminate = [&](std::size_t r) {
            if (r == rank) return;
            Rational f = rows[r][col];
            if (f.isZero()) return;
            for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * pivotRow[c];
        };
        if (rows.size() * cols >= 4096) {
            parallelFor(rows.size(), eliminate);
        } else {
            for (std::size_t r = 0; r < rows.size(); ++r) eliminate(r);
        }
        pivotOfCol[col] = rank;
        ++rank;
    }
    std::size_t freeCol = static_cast<std::size_t>(-1);
    for (std::size_t col = 0; col < cols; ++col) {
        if (pivotOfCol[col] == static_cast<std::size_t>(-1)) {
            freeCol = col;
            break;
        }
    }
    if (freeCol == static_cast<std::size_t>(-1)) return {};
    std::vector<Rational> v(cols, Rational(0));
    v[freeCol] = Rational(1);
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t p = pivotOfCol[col];
        if (p == static_cast<std::size_t>(-1)) continue;
        v[col] = -rows[p][freeCol];
    }
    return v;
}

}  // namespace

std::optional<DiffOp> guessOperator(const UniSeries& f, int maxOrder, int maxDegree) {
    if (maxOrder < 0 || maxDegree < 0) throw InvalidArgument("guess box bounds must be >= 0");

    // D^i f for all candidate orders.
    std::vector<UniSeries> derivs{f};
    for (int i = 1; i <= maxOrder && derivs.back().trunc() > 0; ++i)
        derivs.push_back(derivative(derivs.back()));

    for (int r = 0; r <= maxOrder; ++r) {
        if (r >= static_cast<int>(derivs.size())) break;
        for (int d = 0; d <= maxDegree; ++d) {
            long unknowns = static_cast<long>(r + 1) * (d + 1);
            if (f.trunc() < unknowns + kGuessGuard) continue;
            std::size_t cols = static_cast<std::size_t>(unknowns);
            std::size_t eqs = static_cast<std::size_t>(f.trunc() - r + 1);
            Matrix rows(eqs, std::vector<Rational>(cols, Rational(0)));
            auto fillRow = [&](std::size_t k) {
                for (int i = 0; i <= r; ++i) {
                    for (int j = 0; j <= d; ++j) {
                        // column value: coefficient of x^k in x^j D^i f
                        int src = static_cast<int>(k) - j;
                        if (src < 0 || src > derivs[static_cast<std::size_t>(i)].trunc()) continue;
                        rows[k][static_cast<std::size_t>(i) * (static_cast<std::size_t>(d) + 1) +
                                static_cast<std::size_t>(j)] =
                            derivs[static_cast<std::size_t>(i)].coeff(src);
                    }
                }
            };
            if (eqs * cols >= 4096) {
                parallelFor(eqs, fillRow);
            } else {
                for (std::size_t k = 0; k < eqs; ++k) fillRow(k);
            }
            std::vector<Rational> v = firstNullspaceVector(std::move(rows), cols);
            if (v.empty()) continue;
            std::vector<Poly> coeffs(static_cast<std::size_t>(r) + 1);
            for (int i = 0; i <= r; ++i) {
                std::vector<Rational> pc(static_cast<std::size_t>(d) + 1);
                for (int j = 0; j <= d; ++j)
                    pc[static_cast<std::size_t>(j)] =
                        v[static_cast<std::size_t>(i) * (static_cast<std::size_t>(d) + 1) +
                          static_cast<std::size_t>(j)];
                coeffs[static_cast<std::size_t>(i)] = Poly(std::move(pc));
            }
            return normalized(DiffOp(OpForm::Dx, std::move(coeffs)));
        }
    }
    return std::nullopt;
}

std::optional<RationalForm> reconstructRational(const UniSeries& f, int maxDegree) {
    if (maxDegree < 0) throw InvalidArgument("denominator degree bound must be >= 0");
    const int d = maxDegree;
    long eqCount = static_cast<long>(f.trunc()) - d;
    if (eqCount < static_cast<long>(d) + 1 + kGuessGuard) return std::nullopt;

    std::size_t cols = static_cast<std::size_t>(d) + 1;
    Matrix rows(static_cast<std::size_t>(eqCount), std::vector<Rational>(cols, Rational(0)));
    for (long e = 0; e < eqCount; ++e) {
        int k = d + 1 + static_cast<int>(e);
        for (int j = 0; j <= d; ++j)
            rows[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)] = f.coeff(k - j);
    }
    std::vector<Rational> q = firstNullspaceVector(std::move(rows), cols);
    if (q.empty()) return std::nullopt;

    Poly Q{std::vector<Rational>(q)};
    if (Q.isZero()) return std::nullopt;
    // P = lower part of Q*f; valuation common to P and Q shifts out.
    std::vector<Rational> pc(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int k = 0; k <= d; ++k)
        for (int j = 0; j <= std::min(k, d); ++j) pc[static_cast<std::size_t>(k)] += Q.coeff(j) * f.coeff(k - j);
    Poly P(std::move(pc));
    int v = Q.valuation();
    if (v > 0) {
        if (!P.isZero() && P.valuation() < v) return std::nullopt;
        Q = Q.shiftExponent(-v);
        P = P.isZero() ? P : P.shiftExponent(-v);
    }

    // Full re-check of Q f = P across the window.
    for (int k = 0; k <= f.trunc(); ++k) {
        Rational acc(0);
        for (int j = 0; j <= Q.degree() && j <= k; ++j) acc += Q.coeff(j) * f.coeff(k - j);
        if (acc != P.coeff(k)) return std::nullopt;
    }

    // Primitive denominator with positive constant term.
    Rational s = Rational(1) / Q.content();
    if ((Q.coeff(0) * s).sign() < 0) s = -s;
    return RationalForm{P.scaled(s), Q.scaled(s)};
}

}  // namespace diaglab
