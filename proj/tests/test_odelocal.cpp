#include <doctest.h>

#include <algorithm>

#include "diaglab/catalog.hpp"
#include "diaglab/errors.hpp"
#include "diaglab/frobenius.hpp"
#include "diaglab/guess.hpp"
#include "diaglab/hypergeom.hpp"
#include "testutil.hpp"

using namespace diaglab;

namespace {

HypergeomParams halves(int n) {
    return HypergeomParams(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, 2)),
                           std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

// a = s * x^k * b for some rational s and integer k >= 0 (applied to b).
bool equalUpToMonomialScalar(const DiffOp& a, const DiffOp& b) {
    if (a.form() != b.form() || a.order() != b.order() || a.isZero() != b.isZero()) return false;
    if (a.isZero()) return true;
    int k = a.leading().valuation() - b.leading().valuation();
    Rational s = a.leading().coeff(a.leading().valuation()) /
                 b.leading().coeff(b.leading().valuation());
    for (int i = 0; i <= a.order(); ++i) {
        Poly expected = b.coeff(i).isZero()
                            ? Poly()
                            : (k >= 0 ? b.coeff(i).shiftExponent(k).scaled(s)
                                      : b.coeff(i).scaled(s).shiftExponent(k));
        if (a.coeff(i) != expected) return false;
    }
    return true;
}

UniSeries geometric(int n) {
    return UniSeries(n, std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(1)));
}

DiffOp randomThetaOp(testutil::Rng& rng, int maxOrder, int maxDeg) {
    int order = testutil::uniformInt(rng, 0, maxOrder);
    std::vector<Poly> coeffs(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        std::vector<Rational> c(static_cast<std::size_t>(testutil::uniformInt(rng, 0, maxDeg)) + 1);
        for (auto& x : c) x = Rational(testutil::uniformInt(rng, -4, 4));
        coeffs[static_cast<std::size_t>(i)] = Poly(std::move(c));
    }
    if (coeffs.back().isZero()) coeffs.back() = Poly::constant(Rational(1));
    return DiffOp(OpForm::Theta, std::move(coeffs));
}

}  // namespace

TEST_CASE("theta in d/dx form is x times D") {
    DiffOp t = toDxForm(DiffOp::theta());
    CHECK(t.order() == 1);
    CHECK(t.coeff(1) == Poly::monomial(Rational(1), 1));
    CHECK(t.coeff(0).isZero());
}

TEST_CASE("theta-form round trip is exact for cleared operators") {
    DiffOp op = hgOperator(halves(2));  // theta^2 - x(theta+1/2)^2
    DiffOp back = toThetaForm(toDxForm(op));
    CHECK(back == op);
}

TEST_CASE("the order-3 catalog operator clears to a theta form of x-degree 2") {
    DiffOp theta = toThetaForm(aperyOperator());
    CHECK(theta.order() == 3);
    CHECK(theta.maxXDegree() <= 2);
    // round trip is the original up to a monomial times content
    DiffOp back = toDxForm(theta);
    CHECK(equalUpToMonomialScalar(back, aperyOperator()));
    // both forms annihilate the coefficient series
    UniSeries f = aperySeries(15);
    CHECK(applyOp(theta, f).isZeroThrough(applyOp(theta, f).trunc()));
    CHECK(applyOp(aperyOperator(), f).isZeroThrough(applyOp(aperyOperator(), f).trunc()));
}

TEST_CASE("apply: theta scales coefficients by their index") {
    UniSeries g = geometric(8);
    UniSeries tg = applyOp(DiffOp::theta(), g);
    for (int i = 0; i <= tg.trunc(); ++i) CHECK(tg.coeff(i) == Rational(i));
    UniSeries one = UniSeries::constant(Rational(1), 5);
    CHECK(applyOp(DiffOp::dx(), one).isZeroThrough(4));
}

TEST_CASE("multiply: the commutator of theta and x is x") {
    DiffOp x = DiffOp::multiplication(OpForm::Theta, Poly::monomial(Rational(1), 1));
    DiffOp lhs = subOp(multiply(DiffOp::theta(), x), multiply(x, DiffOp::theta()));
    CHECK(lhs == x);
    CHECK(multiply(x, DiffOp::multiplication(OpForm::Theta, Poly::constant(Rational(1)))) == x);
}

TEST_CASE("theta-to-dx conversion is an exact operator identity under application") {
    testutil::Rng rng(271);
    for (int trial = 0; trial < 40; ++trial) {
        DiffOp op = randomThetaOp(rng, 3, 2);
        UniSeries f = testutil::randomSeries(rng, 16);
        CHECK(agrees(applyOp(op, f), applyOp(toDxForm(op), f)));
    }
}

TEST_CASE("multiply agrees with composed application") {
    testutil::Rng rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        DiffOp a = randomThetaOp(rng, 2, 2);
        DiffOp b = randomThetaOp(rng, 2, 2);
        UniSeries f = testutil::randomSeries(rng, 18);
        UniSeries lhs = applyOp(multiply(a, b), f);
        UniSeries rhs = applyOp(a, applyOp(b, f));
        CHECK(agrees(lhs, rhs));
    }
}

TEST_CASE("indicial data for the catalog operators") {
    IndicialData apery = indicial(aperyOperator());
    CHECK(apery.chi == Poly({Rational(0), Rational(0), Rational(0), Rational(1)}));  // rho^3
    REQUIRE(apery.roots.size() == 1);
    CHECK(apery.roots[0].first == Rational(0));
    CHECK(apery.roots[0].second == 3);

    IndicialData gauss = indicial(hgOperator(halves(2)));
    CHECK(gauss.chi == Poly({Rational(0), Rational(0), Rational(1)}));
    REQUIRE(gauss.roots.size() == 1);
    CHECK(gauss.roots[0].second == 2);

    IndicialData euler = indicial(DiffOp::thetaShift(Rational(-1, 2)));
    REQUIRE(euler.roots.size() == 1);
    CHECK(euler.roots[0].first == Rational(1, 2));
}

TEST_CASE("indicial polynomial is the x-constant part of the theta form") {
    testutil::Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        // operators with a prescribed rational-rooted x-constant part
        int order = testutil::uniformInt(rng, 1, 3);
        DiffOp op = DiffOp::thetaShift(testutil::randomRational(rng, 4, 3));
        for (int i = 1; i < order; ++i)
            op = multiply(op, DiffOp::thetaShift(testutil::randomRational(rng, 4, 3)));
        op = addOp(op, DiffOp::multiplication(
                           OpForm::Theta,
                           Poly::monomial(Rational(testutil::uniformInt(rng, -4, 4)), 1)));
        IndicialData data = indicial(op);
        for (int i = 0; i <= op.order(); ++i) CHECK(data.chi.coeff(i) == op.coeff(i).coeff(0));
    }
}

TEST_CASE("frobenius basis of the Gauss half-operator has one logarithm") {
    DiffOp op = hgOperator(halves(2));
    auto basis = frobeniusBasis(op, 12);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].logDegree == 0);
    CHECK(basis[1].logDegree == 1);
    for (const auto& s : basis) CHECK(annihilatesFormal(op, s));
    // the log-free row is the hypergeometric series itself
    UniSeries f = hgCoeffs(halves(2), 12);
    for (int j = 0; j <= 12; ++j) CHECK(basis[0].coeff(j, 0) == f.coeff(j));
}

TEST_CASE("frobenius basis of the order-3 catalog operator carries log degrees 0,1,2") {
    DiffOp op = aperyOperator();
    auto basis = frobeniusBasis(op, 8);
    REQUIRE(basis.size() == 3);
    std::vector<int> degrees;
    for (const auto& s : basis) degrees.push_back(s.logDegree);
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{0, 1, 2});
    for (const auto& s : basis) CHECK(annihilatesFormal(op, s));
}

TEST_CASE("separated rational exponents give log-free solutions") {
    DiffOp op = multiply(DiffOp::theta(), DiffOp::thetaShift(Rational(-1, 2)));
    auto basis = frobeniusBasis(op, 6);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].exponent == Rational(0));
    CHECK(basis[1].exponent == Rational(1, 2));
    for (const auto& s : basis) {
        CHECK(s.logDegree == 0);
        CHECK(annihilatesFormal(op, s));
    }
}

TEST_CASE("integer-separated exponents without logs stay log-free") {
    // theta(theta-2): solutions 1 and x^2
    DiffOp op = multiply(DiffOp::theta(), DiffOp::thetaShift(Rational(-2)));
    auto basis = frobeniusBasis(op, 6);
    REQUIRE(basis.size() == 2);
    for (const auto& s : basis) CHECK(s.logDegree == 0);
    CHECK(nilIndex(op).nil == 1);
}

TEST_CASE("resonance with coupling forces a logarithm") {
    // theta(theta-2) - x: the lower solution feeds the resonant stratum
    DiffOp op = subOp(multiply(DiffOp::theta(), DiffOp::thetaShift(Rational(-2))),
                      DiffOp::multiplication(OpForm::Theta, Poly::monomial(Rational(1), 1)));
    auto basis = frobeniusBasis(op, 8);
    REQUIRE(basis.size() == 2);
    std::vector<int> degrees{basis[0].logDegree, basis[1].logDegree};
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{0, 1});
    for (const auto& s : basis) CHECK(annihilatesFormal(op, s));
}

TEST_CASE("nil index examples") {
    NilReport apery = nilIndex(aperyOperator());
    CHECK(apery.nil == 3);
    REQUIRE(apery.exponents.size() == 1);
    CHECK(apery.exponents[0].first == Rational(0));
    CHECK(apery.exponents[0].second == 3);

    for (int n = 2; n <= 4; ++n) CHECK(nilIndex(hgOperator(halves(n))).nil == n);
    CHECK(nilIndex(DiffOp::thetaShift(Rational(2, 3))).nil == 1);
}

TEST_CASE("nil index is stable under scaling and content normalization") {
    DiffOp op = aperyOperator();
    CHECK(nilIndex(scaleOp(op, Rational(7, 3))).nil == 3);
    CHECK(nilIndex(normalized(scaleOp(op, Rational(-2, 5)))).nil == 3);
}

TEST_CASE("solution counts per coset match indicial multiplicities") {
    testutil::Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        int n = testutil::uniformInt(rng, 1, 3);
        std::vector<Rational> alpha;
        for (int i = 0; i < n; ++i) alpha.push_back(testutil::randomRational(rng, 6, 4));
        HypergeomParams p(alpha, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
        DiffOp op = hgOperator(p);
        IndicialData ind = indicial(op);
        auto basis = frobeniusBasis(op, 4);
        REQUIRE(static_cast<int>(basis.size()) == op.order());
        for (const auto& s : basis) CHECK(annihilatesFormal(op, s));
        for (const auto& [root, mult] : ind.roots) {
            int inCoset = 0;
            for (const auto& s : basis)
                if ((s.exponent - root).isInteger()) ++inCoset;
            int cosetMult = 0;
            for (const auto& [other, m] : ind.roots)
                if ((other - root).isInteger()) cosetMult += m;
            CHECK(inCoset == cosetMult);
        }
    }
}

TEST_CASE("stress: clustered resonances across several cosets") {
    // operators built as prod (theta - root) + x A(theta) + x^2 B(theta)
    // with roots drawn from a pool that forces repeated and integer-spaced
    // exponents in more than one coset
    const Rational pool[] = {Rational(0), Rational(1),     Rational(2),
                             Rational(1, 2), Rational(3, 2), Rational(1, 3)};
    testutil::Rng rng(606);
    for (int trial = 0; trial < 60; ++trial) {
        int order = testutil::uniformInt(rng, 2, 4);
        Poly chi = Poly::constant(Rational(1));
        for (int i = 0; i < order; ++i)
            chi = chi * Poly({-pool[testutil::uniformInt(rng, 0, 5)], Rational(1)});
        std::vector<Poly> coeffs(static_cast<std::size_t>(order) + 1);
        for (int i = 0; i <= order; ++i) {
            std::vector<Rational> c{chi.coeff(i)};
            if (i < order) {
                c.push_back(Rational(testutil::uniformInt(rng, -3, 3)));
                c.push_back(Rational(testutil::uniformInt(rng, -3, 3)));
            }
            coeffs[static_cast<std::size_t>(i)] = Poly(std::move(c));
        }
        DiffOp op(OpForm::Theta, std::move(coeffs));
        auto basis = frobeniusBasis(op, 10);
        REQUIRE(static_cast<int>(basis.size()) == order);
        for (const auto& s : basis) CHECK(annihilatesFormal(op, s));
        NilReport r = nilIndex(op);
        CHECK(r.nil >= 1);
        CHECK(r.nil <= order);
        for (const auto& [root, mult] : indicial(op).roots) {
            int inCoset = 0;
            for (const auto& s : basis)
                if ((s.exponent - root).isInteger()) ++inCoset;
            int cosetMult = 0;
            for (const auto& [other, m] : indicial(op).roots)
                if ((other - root).isInteger()) cosetMult += m;
            CHECK(inCoset == cosetMult);
        }
    }
}

TEST_CASE("nonresonant unit-beta operators: frobenius and Levelt agree") {
    testutil::Rng rng(57);
    int done = 0;
    while (done < 15) {
        int n = testutil::uniformInt(rng, 1, 3);
        std::vector<Rational> alpha;
        for (int i = 0; i < n; ++i) {
            Rational a = testutil::randomRational(rng, 8, 5);
            if (a.isInteger()) a += Rational(1, 7);  // keep it nonresonant
            alpha.push_back(a);
        }
        HypergeomParams p(alpha, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
        if (!resonantPairs(p).empty()) continue;
        CHECK(nilIndex(hgOperator(p)).nil == nilLowerBoundFromLevelt(p));
        ++done;
    }
}

TEST_CASE("regular-singular detection") {
    CHECK(isRegularSingularAtZero(aperyOperator()));
    for (int n = 1; n <= 4; ++n) CHECK(isRegularSingularAtZero(hgOperator(halves(n))));
    // x^3 D^2 + 1 fails the valuation criterion
    DiffOp bad(OpForm::Dx, {Poly::constant(Rational(1)), Poly(), Poly::monomial(Rational(1), 3)});
    CHECK(!isRegularSingularAtZero(bad));
    CHECK_THROWS_AS(indicial(bad), IrregularSingular);
    CHECK_THROWS_AS(frobeniusBasis(bad, 4), IrregularSingular);
}

TEST_CASE("irrational exponents are reported, not approximated") {
    // theta^2 - 2: exponents are +-sqrt(2)
    DiffOp op(OpForm::Theta, {Poly::constant(Rational(-2)), Poly(), Poly::constant(Rational(1))});
    CHECK_THROWS_AS(indicial(op), IrrationalExponent);
    CHECK_THROWS_AS(nilIndex(op), IrrationalExponent);
}

TEST_CASE("guess recovers the geometric-series operator") {
    auto op = guessOperator(geometric(30), 1, 1);
    REQUIRE(op.has_value());
    // (1-x) D - 1 up to sign normalization
    DiffOp expected = normalized(
        DiffOp(OpForm::Dx, {Poly::constant(Rational(-1)), Poly({Rational(1), Rational(-1)})}));
    CHECK(*op == expected);
    UniSeries image = applyOp(*op, geometric(30));
    CHECK(image.isZeroThrough(image.trunc()));
}

TEST_CASE("guess recovers the order-3 catalog operator from 31 coefficients") {
    auto op = guessOperator(aperySeries(30), 3, 4);
    REQUIRE(op.has_value());
    CHECK(*op == normalized(aperyOperator()));
}

TEST_CASE("guess declines when the window is too small") {
    CHECK(!guessOperator(aperySeries(4), 3, 4).has_value());
}

TEST_CASE("guessed operators annihilate fresh coefficients beyond the window") {
    auto op = guessOperator(aperySeries(30), 3, 4);
    REQUIRE(op.has_value());
    UniSeries longer = aperySeries(45);
    UniSeries image = applyOp(*op, longer);
    CHECK(image.isZeroThrough(image.trunc()));
}

TEST_CASE("guess searches by order first, then degree") {
    // the central binomial series has an order-1 operator; the box also
    // contains order-2 annihilators but the order-1 one must win
    std::vector<Rational> v(31);
    for (int n = 0; n <= 30; ++n)
        v[static_cast<std::size_t>(n)] =
            Rational(binomial(2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n)));
    UniSeries cb(30, std::move(v));
    auto op = guessOperator(cb, 3, 4);
    REQUIRE(op.has_value());
    CHECK(op->order() == 1);
}
