#include <doctest.h>

#include "diaglab/errors.hpp"
#include "diaglab/multiseries.hpp"
#include "testutil.hpp"

using namespace diaglab;

namespace {
TruncatedMultiSeries::Exponents ev(std::initializer_list<int> e) { return {e}; }
}  // namespace

TEST_CASE("parser round-trips the basic grammar") {
    RationalExpr e = parseExpr("1/(1-x0-x1)", 2);
    CHECK(e.arity() == 2);
    CHECK(e.root()->kind == ExprNode::Kind::Div);
    CHECK(e.root()->right->kind == ExprNode::Kind::Sub);  // denominator subtree
    CHECK(e.str() == "1/(1-x0-x1)");
    CHECK(parseExpr(e.str(), 2).structurallyEqual(e));
}

TEST_CASE("parser accepts the 4-variable product-minus-monomial denominator") {
    RationalExpr e = parseExpr("1/((1-x0-x1)*(1-x3-x2)-x0*x1*x2*x3)", 4);
    CHECK(e.arity() == 4);
    CHECK(parseExpr(e.str(), 4).structurallyEqual(e));
}

TEST_CASE("parser accepts Laurent expressions with unused variables") {
    RationalExpr e = parseExpr("(x1+x2+1)*(1/x1+1/x2+1)", 3);
    CHECK(e.arity() == 3);
    CHECK(parseExpr(e.str(), 3).structurallyEqual(e));
}

TEST_CASE("parser reports syntax errors with positions") {
    CHECK_THROWS_AS(parseExpr("1+", 1), SyntaxError);
    CHECK_THROWS_AS(parseExpr("1//2", 1), SyntaxError);
    CHECK_THROWS_AS(parseExpr("(1-x0", 1), SyntaxError);
    CHECK_THROWS_AS(parseExpr("x", 1), SyntaxError);
    try {
        parseExpr("1+ +", 1);
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("parser rejects variables beyond the declared arity") {
    CHECK_THROWS_AS(parseExpr("x5", 2), ArityError);
    try {
        parseExpr("1-x3", 3);
        CHECK(false);
    } catch (const ArityError& e) {
        CHECK(e.index() == 3);
        CHECK(e.arity() == 3);
    }
}

TEST_CASE("powers parse with negative exponents") {
    RationalExpr e = parseExpr("x0^-2*(1+x0)^3", 1);
    CHECK(parseExpr(e.str(), 1).structurallyEqual(e));
}

TEST_CASE("printing is a fixed point of parse-then-print") {
    const char* cases[] = {
        "1/(1-x0-x1)", "x0^-2", "1-(2-x0)", "x0-(x1-x2)", "(x0+x1)*(x0-x1)",
        "3*-2+x0", "(x0^2)^3", "1/(1/(1-x0))",
    };
    for (const char* c : cases) {
        RationalExpr e = parseExpr(c, 3);
        std::string printed = e.str();
        CHECK(parseExpr(printed, 3).str() == printed);
    }
    testutil::Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        RationalExpr e = testutil::randomRationalExpr(rng, 3, 3);
        std::string printed = e.str();
        CHECK(parseExpr(printed, 3).str() == printed);
        CHECK(parseExpr(printed, 3).structurallyEqual(e));
    }
}

TEST_CASE("expand: geometric series") {
    auto ms = expand(parseExpr("1/(1-x0)", 1), {3});
    CHECK(ms.coeff(ev({0})) == Rational(1));
    CHECK(ms.coeff(ev({1})) == Rational(1));
    CHECK(ms.coeff(ev({2})) == Rational(1));
    CHECK(ms.coeff(ev({3})) == Rational(1));
}

TEST_CASE("expand: central binomial coefficients via the multinomial oracle") {
    auto ms = expand(parseExpr("1/(1-x0-x1)", 2), {4, 4});
    // coefficient of x0^a x1^b is (a+b)! / (a! b!)
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            CHECK(ms.coeff(ev({a, b})) == Rational(testutil::multinomial(a + b, {a, b})));
    CHECK(ms.coeff(ev({2, 2})) == Rational(6));
}

TEST_CASE("expand: Laurent monomial inversion tracks low") {
    auto ms = expand(parseExpr("1/x0", 1), {3});
    CHECK(ms.low() == std::vector<int>{-1});
    CHECK(ms.coeff(ev({-1})) == Rational(1));
    CHECK(ms.coeff(ev({0})) == Rational(0));
    CHECK_THROWS_AS(expand(parseExpr("1/x0", 1), {3}, 0), DenominatorVanishes);
}

TEST_CASE("expand: non-clearable denominators are rejected") {
    CHECK_THROWS_AS(expand(parseExpr("1/(x0+x1)", 2), {3, 3}), DenominatorVanishes);
    // cancellation to an exact zero denominator
    CHECK_THROWS_AS(expand(parseExpr("1/(1-x0-1+x0)", 1), {3}), DenominatorVanishes);
    // cancellation to a bare monomial still expands
    auto ms = expand(parseExpr("1/(1-x0-1)", 1), {3});
    CHECK(ms.coeff({-1}) == Rational(-1));
}

TEST_CASE("expand: negative caps are rejected") {
    CHECK_THROWS_AS(expand(parseExpr("1", 1), {-1}), CapNegative);
}

TEST_CASE("expand: negative powers expand as divisions") {
    auto a = expand(parseExpr("(1-x0)^-1", 1), {5});
    auto b = expand(parseExpr("1/(1-x0)", 1), {5});
    CHECK(agrees(a, b));
    auto c = expand(parseExpr("x0^-2", 1), {2});
    CHECK(c.low() == std::vector<int>{-2});
    CHECK(c.coeff(ev({-2})) == Rational(1));
}

TEST_CASE("expand: nested quotients recover the numerator") {
    auto a = expand(parseExpr("1/(1/(1-x0))", 1), {4});
    auto b = expand(parseExpr("1-x0", 1), {4});
    CHECK(agrees(a, b));
}

TEST_CASE("expand is a ring morphism on the overlap window") {
    testutil::Rng rng(77);
    std::vector<int> cap{4, 4};
    for (int i = 0; i < 60; ++i) {
        RationalExpr e1 = testutil::randomRationalExpr(rng, 2, 2);
        RationalExpr e2 = testutil::randomRationalExpr(rng, 2, 2);
        auto s1 = expand(e1, cap);
        auto s2 = expand(e2, cap);
        CHECK(agrees(expand(RationalExpr::add(e1, e2), cap), add(s1, s2)));
        CHECK(agrees(expand(RationalExpr::mul(e1, e2), cap), mul(s1, s2)));
    }
}

TEST_CASE("expand(expr) times expand(1/expr) is 1") {
    testutil::Rng rng(91);
    std::vector<int> cap{4, 4};
    RationalExpr one = RationalExpr::constant(2, Rational(1));
    for (int i = 0; i < 40; ++i) {
        // denominators 1 - x*(poly): always invertible at the origin
        RationalExpr v = RationalExpr::variable(2, testutil::uniformInt(rng, 0, 1));
        RationalExpr q = RationalExpr::sub(
            one, RationalExpr::mul(v, testutil::randomPolyExpr(rng, 2, 2)));
        auto s = expand(q, cap);
        auto sInv = expand(RationalExpr::div(one, q), cap);
        auto prod = mul(s, sInv);
        for (const auto& [e, c] : prod.terms()) {
            bool isOrigin = e == std::vector<int>{0, 0};
            CHECK(c == (isOrigin ? Rational(1) : Rational(0)));
        }
        CHECK(prod.coeff(ev({0, 0})) == Rational(1));
    }
}

TEST_CASE("expansion windows are sound: larger caps refine, never revise") {
    testutil::Rng rng(313);
    for (int trial = 0; trial < 60; ++trial) {
        RationalExpr e = testutil::randomRationalExpr(rng, 2, 2);
        if (testutil::uniformInt(rng, 0, 2) == 0) {
            // mix in a Laurent factor
            RationalExpr inv = RationalExpr::div(
                RationalExpr::constant(2, Rational(1)),
                RationalExpr::variable(2, testutil::uniformInt(rng, 0, 1)));
            e = RationalExpr::mul(e, inv);
        }
        auto small = expand(e, {3, 3});
        auto large = expand(e, {6, 6});
        for (const auto& [exp, c] : small.terms()) CHECK(large.coeff(exp) == c);
        for (const auto& [exp, c] : large.terms()) {
            if (small.insideWindow(exp)) CHECK(small.coeff(exp) == c);
        }
    }
}

TEST_CASE("multiseries JSON shape invariants") {
    CHECK_THROWS_AS(TruncatedMultiSeries(1, {1}, {3}, {}), InvalidArgument);   // low > 0
    CHECK_THROWS_AS(TruncatedMultiSeries(1, {0}, {-2}, {}), CapNegative);      // cap < 0
    CHECK_THROWS_AS(TruncatedMultiSeries(1, {0}, {3}, {{ev({1}), Rational(0)}}),
                    InvalidArgument);                                          // zero stored
    CHECK_THROWS_AS(TruncatedMultiSeries(1, {0}, {3}, {{ev({4}), Rational(1)}}),
                    InvalidArgument);                                          // outside window
}
