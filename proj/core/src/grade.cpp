#include "diaglab/grade.hpp"

#include <algorithm>

#include "diaglab/errors.hpp"

namespace diaglab {

DiagonalRep makeDiagonalRep(RationalExpr expr, int claimedGrade) {
    if (expr.arity() != claimedGrade + 1)
        throw InvalidArgument("diagonal representation needs arity = claimed grade + 1");
    return DiagonalRep{std::move(expr), claimedGrade};
}

NilOfSeries nilOfSeries(const UniSeries& f, int maxOrder, int maxDeg) {
    auto op = guessOperator(f, maxOrder, maxDeg);
    if (!op)
        throw GuessFailed("no annihilating operator of order <= " + std::to_string(maxOrder) +
                          ", degree <= " + std::to_string(maxDeg) + " found in a window of " +
                          std::to_string(f.trunc() + 1) + " coefficients");
    return NilOfSeries{nilIndex(*op), *op};
}

bool verifyDiagonalRep(const DiagonalRep& rep, const UniSeries& f, int order) {
    if (f.trunc() < order) throw WindowTooSmall("series window shorter than the verification order");
    std::vector<int> cap(static_cast<std::size_t>(rep.expr.arity()), order);
    TruncatedMultiSeries ms = expand(rep.expr, cap);
    UniSeries diag = diagonal(ms, rep.claimedGrade);
    return agreesThrough(diag, f, order);
}

bool verifyHadamardRep(const HadamardRep& rep, const UniSeries& f, int order) {
    if (rep.factors.empty()) throw EmptyList("Hadamard representation needs at least one factor");
    if (f.trunc() < order) throw WindowTooSmall("series window shorter than the verification order");
    UniSeries acc = algebraicSeries(rep.factors[0], order);
    for (std::size_t i = 1; i < rep.factors.size(); ++i)
        acc = hadamard(acc, algebraicSeries(rep.factors[i], order));
    return agreesThrough(acc, f, order);
}

TruncatedMultiSeries hadamardToDisjointProduct(const HadamardRep& rep, int order) {
    if (rep.factors.empty()) throw EmptyList("Hadamard representation needs at least one factor");
    const int k = static_cast<int>(rep.factors.size());
    const std::size_t n = static_cast<std::size_t>(k);

    TruncatedMultiSeries::TermMap acc;
    acc.emplace(TruncatedMultiSeries::Exponents(n, 0), Rational(1));
    for (int i = 0; i < k; ++i) {
        UniSeries fi = algebraicSeries(rep.factors[static_cast<std::size_t>(i)], order);
        TruncatedMultiSeries::TermMap next;
        for (const auto& [e, c] : acc) {
            for (int t = 0; t <= order; ++t) {
                Rational ci = fi.coeff(t);
                if (ci.isZero()) continue;
                TruncatedMultiSeries::Exponents e2 = e;
                e2[static_cast<std::size_t>(i)] = t;
                next.emplace(std::move(e2), c * ci);
            }
        }
        acc = std::move(next);
    }
    return TruncatedMultiSeries(k, TruncatedMultiSeries::Exponents(n, 0),
                                TruncatedMultiSeries::Exponents(n, order), std::move(acc));
}

GradeBounds gradeBounds(const UniSeries& f, const std::optional<DiagonalRep>& diag,
                        const std::optional<HadamardRep>& had, int maxOrder, int maxDeg,
                        int window) {
    GradeBounds out;
    out.window = window;

    std::optional<int> upper;
    std::string upperEvidence;
    if (diag) {
        if (!verifyDiagonalRep(*diag, f, window))
            throw WitnessFailed("diagonal representation does not reproduce the series through order " +
                                std::to_string(window));
        upper = diag->claimedGrade;
        upperEvidence = "diagonal_rep";
    }
    if (had) {
        if (!verifyHadamardRep(*had, f, window))
            throw WitnessFailed("Hadamard representation does not reproduce the series through order " +
                                std::to_string(window));
        int hg = static_cast<int>(had->factors.size());
        if (!upper || hg < *upper) {
            upper = hg;
            upperEvidence = "hadamard_rep";
        }
    }

    if (auto rat = reconstructRational(f, maxDeg)) {
        out.lower = 0;
        out.upper = 0;
        out.rationalRecognized = true;
        out.rationalForm = rat;
        out.upperEvidence = "rational";
        return out;
    }

    NilOfSeries nil = nilOfSeries(f, maxOrder, maxDeg);
    out.lower = nil.report.nil;
    out.nil = std::move(nil.report);
    out.guessedOperator = std::move(nil.op);
    out.upper = upper;
    out.upperEvidence = upperEvidence;
    if (out.upper && out.lower > *out.upper)
        throw WindowTooSmall(
            "nilpotence lower bound " + std::to_string(out.lower) + " exceeds the witness grade " +
            std::to_string(*out.upper) +
            "; the witness cannot be exact, so the verification window was too small");
    return out;
}

std::optional<ZeroDivisorWitness> zeroDivisorWitness(const UniSeries& f, const UniSeries& g,
                                                     int mMax, int order) {
    if (mMax < 1) throw InvalidArgument("mMax must be >= 1");
    if (f.trunc() < order || g.trunc() < order)
        throw WindowTooSmall("series windows shorter than the requested order " +
                             std::to_string(order));
    int window = order;
    UniSeries fw = truncate(f, window);
    UniSeries gw = truncate(g, window);
    if (!hadamard(fw, gw).isZeroThrough(window)) return std::nullopt;

    for (int m = 1; m <= mMax; ++m) {
        if (window < m - 1) break;  // not every residue observable
        ZeroDivisorWitness w;
        w.m = m;
        bool covered = true;
        for (int r = 0; r < m; ++r) {
            UniSeries sf = section(fw, r, m);
            UniSeries sg = section(gw, r, m);
            bool fzero = sf.isZeroThrough(sf.trunc());
            bool gzero = sg.isZeroThrough(sg.trunc());
            if (fzero) w.fResidues.push_back(r);
            if (gzero) w.gResidues.push_back(r);
            if (!fzero && !gzero) covered = false;
        }
        if (covered) return w;
    }
    return std::nullopt;
}

}  // namespace diaglab
