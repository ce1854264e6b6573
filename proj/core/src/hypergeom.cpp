#include "diaglab/hypergeom.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "diaglab/errors.hpp"

namespace diaglab {

namespace {

std::vector<Rational> parseList(const std::string& text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t a = piece.find_first_not_of(" \t");
        std::size_t b = piece.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty entry in parameter list");
        out.push_back(Rational::fromString(piece.substr(a, b - a + 1)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Poly productOfShifts(const std::vector<Rational>& shifts) {
    Poly p = Poly::constant(Rational(1));
    for (const auto& s : shifts) p = p * Poly({s, Rational(1)});
    return p;
}

}  // namespace

HypergeomParams::HypergeomParams(std::vector<Rational> alpha, std::vector<Rational> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.empty() || alpha_.size() != beta_.size())
        throw InvalidArgument("need n >= 1 and matching parameter counts");
    if (beta_.back() != Rational(1)) throw InvalidArgument("the last beta must be 1");
}

HypergeomParams HypergeomParams::parse(const std::string& text) {
    std::size_t semi = text.find(';');
    if (semi == std::string::npos) throw ParseError("expected 'alphas;betas'");
    return HypergeomParams(parseList(text.substr(0, semi)), parseList(text.substr(semi + 1)));
}

std::string HypergeomParams::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < alpha_.size(); ++i) os << (i ? "," : "") << alpha_[i].str();
    os << ";";
    for (std::size_t i = 0; i < beta_.size(); ++i) os << (i ? "," : "") << beta_[i].str();
    return os.str();
}

UniSeries hgCoeffs(const HypergeomParams& p, int order) {
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
    Rational c(1);
    v[0] = c;
    for (int i = 0; i < order; ++i) {
        for (const auto& a : p.alpha()) c *= a + Rational(i);
        for (std::size_t j = 0; j < p.beta().size(); ++j) {
            Rational b = p.beta()[j] + Rational(i);
            if (b.isZero())
                throw PochhammerZeroDenominator(
                    static_cast<int>(j) + 1, i + 1,
                    "(beta_" + std::to_string(j + 1) + ")_" + std::to_string(i + 1) + " vanishes");
            c /= b;
        }
        v[static_cast<std::size_t>(i) + 1] = c;
    }
    return UniSeries(order, std::move(v));
}

DiffOp hypergeomOperator(const std::vector<Rational>& alpha, const std::vector<Rational>& beta) {
    if (alpha.size() != beta.size() || alpha.empty())
        throw InvalidArgument("need matching nonempty parameter lists");
    std::vector<Rational> betaShift;
    betaShift.reserve(beta.size());
    for (const auto& b : beta) betaShift.push_back(b - Rational(1));
    Poly A = productOfShifts(betaShift);  // prod (theta + beta_i - 1)
    Poly B = productOfShifts(alpha);      // prod (theta + alpha_i)
    int n = static_cast<int>(alpha.size());
    std::vector<Poly> coeffs(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) coeffs[static_cast<std::size_t>(i)] = Poly({A.coeff(i), -B.coeff(i)});
    return DiffOp(OpForm::Theta, std::move(coeffs));
}

DiffOp hgOperator(const HypergeomParams& p) { return hypergeomOperator(p.alpha(), p.beta()); }

std::vector<ResonantPair> resonantPairs(const HypergeomParams& p) {
    std::vector<ResonantPair> out;
    for (std::size_t i = 0; i < p.alpha().size(); ++i) {
        for (std::size_t j = 0; j < p.beta().size(); ++j) {
            Rational d = p.alpha()[i] - p.beta()[j];
            if (d.isInteger())
                out.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1, d.numerator()});
        }
    }
    return out;
}

Contraction contract(const HypergeomParams& p) {
    struct Entry {
        Rational value;
        int orig;  // 1-based original index
    };
    std::vector<Entry> alpha, beta;
    for (std::size_t i = 0; i < p.alpha().size(); ++i)
        alpha.push_back({p.alpha()[i], static_cast<int>(i) + 1});
    for (std::size_t j = 0; j < p.beta().size(); ++j)
        beta.push_back({p.beta()[j], static_cast<int>(j) + 1});

    Contraction c;
    while (true) {
        std::size_t bi = alpha.size(), bj = beta.size();
        bool foundPair = false;
        for (std::size_t i = 0; i < alpha.size() && !foundPair; ++i) {
            for (std::size_t j = 0; j < beta.size() && !foundPair; ++j) {
                if ((alpha[i].value - beta[j].value).isInteger()) {
                    bi = i;
                    bj = j;
                    foundPair = true;
                }
            }
        }
        if (!foundPair) break;
        Rational a = alpha[bi].value;
        Rational b = beta[bj].value;
        Integer m = (a - b).numerator();
        c.removed.push_back({alpha[bi].orig, beta[bj].orig, m});
        if (m >= 0) {
            // shift beta up to alpha; left factor (theta + alpha - 1)
            c.gammas.push_back(a - Rational(1));
        } else {
            // shift alpha up to beta - 1; right factor (theta + beta - 1)
            c.deltas.push_back(b - Rational(1));
        }
        alpha.erase(alpha.begin() + static_cast<std::ptrdiff_t>(bi));
        beta.erase(beta.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    for (const auto& e : alpha) c.alphaReduced.push_back(e.value);
    for (const auto& e : beta) c.betaReduced.push_back(e.value);
    return c;
}

int height(const HypergeomParams& p) {
    int h = 0;
    for (const auto& b : p.beta())
        if (b.isInteger()) ++h;
    for (const auto& a : p.alpha())
        if (a.isInteger()) --h;
    return h;
}

std::vector<RotationNumber> rotationsOf(const std::vector<Rational>& params) {
    std::vector<RotationNumber> out;
    out.reserve(params.size());
    for (const auto& r : params) out.push_back(RotationNumber::of(r));
    return out;
}

JordanStructure leveltJordan(const std::vector<RotationNumber>& rotations) {
    if (rotations.empty()) throw EmptyList("need at least one rotation number");
    std::map<Rational, int> mult;
    for (const auto& r : rotations) ++mult[r.value];
    JordanStructure js;
    for (const auto& [v, m] : mult) js.blocks.push_back({RotationNumber{v}, m});
    return js;
}

int nilLowerBoundFromLevelt(const HypergeomParams& p) {
    Contraction c = contract(p);
    int a = 0, b = 0;
    for (const auto& x : c.alphaReduced)
        if (x.isInteger()) ++a;
    for (const auto& x : c.betaReduced)
        if (x.isInteger()) ++b;
    return std::max(a, b);
}

}  // namespace diaglab
