#include "diaglab/catalog.hpp"

#include <algorithm>
#include <random>

#include "diaglab/errors.hpp"
#include "diaglab/hypergeom.hpp"

namespace diaglab {

std::vector<Integer> aperyNumbers(int N) {
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        Integer a(0);
        for (int k = 0; k <= n; ++k) {
            Integer b1 = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
            Integer b2 = binomial(static_cast<unsigned long>(n + k), static_cast<unsigned long>(k));
            a += b1 * b1 * b2 * b2;
        }
        out.push_back(a);
    }
    return out;
}

UniSeries aperySeries(int N) {
    auto nums = aperyNumbers(N);
    std::vector<Rational> v;
    v.reserve(nums.size());
    for (const auto& n : nums) v.emplace_back(n);
    return UniSeries(N, std::move(v));
}

DiffOp aperyOperator() {
    auto poly = [](std::initializer_list<long> ascending) {
        std::vector<Rational> c;
        for (long x : ascending) c.emplace_back(x);
        return Poly(std::move(c));
    };
    return DiffOp(OpForm::Dx, {
                                  poly({-5, 1}),
                                  poly({1, -112, 7}),
                                  poly({0, 3, -153, 6}),
                                  poly({0, 0, 1, -34, 1}),
                              });
}

DiagonalRep straubRep() {
    return makeDiagonalRep(parseExpr("1/((1-x0-x1)*(1-x3-x2)-x0*x1*x2*x3)", 4), 3);
}

std::vector<Integer> bananaNumbers(int ell, int N) {
    if (ell < 1) throw InvalidArgument("banana family needs ell >= 1");
    std::vector<Integer> factorial(static_cast<std::size_t>(N) + 1);
    factorial[0] = 1;
    for (int i = 1; i <= N; ++i) factorial[static_cast<std::size_t>(i)] = factorial[static_cast<std::size_t>(i - 1)] * i;

    std::vector<Integer> out(static_cast<std::size_t>(N) + 1, Integer(0));
    for (int n = 0; n <= N; ++n) {
        Integer total(0);
        // enumerate r_0..r_ell >= 0 summing to n
        std::vector<int> parts(static_cast<std::size_t>(ell) + 1, 0);
        std::function<void(int, int)> rec = [&](int idx, int remaining) {
            if (idx == ell) {
                parts[static_cast<std::size_t>(idx)] = remaining;
                Integer mult = factorial[static_cast<std::size_t>(n)];
                for (int p : parts) mult /= factorial[static_cast<std::size_t>(p)];
                total += mult * mult;
                return;
            }
            for (int r = 0; r <= remaining; ++r) {
                parts[static_cast<std::size_t>(idx)] = r;
                rec(idx + 1, remaining - r);
            }
        };
        rec(0, n);
        out[static_cast<std::size_t>(n)] = total;
    }
    return out;
}

UniSeries bananaTerms(int ell, int N) {
    auto nums = bananaNumbers(ell, N);
    std::vector<Rational> v;
    v.reserve(nums.size());
    for (const auto& n : nums) v.emplace_back(n);
    return UniSeries(N, std::move(v));
}

RationalExpr bananaLaurent(int ell) {
    if (ell < 1) throw InvalidArgument("banana family needs ell >= 1");
    const int arity = ell + 1;
    RationalExpr one = RationalExpr::constant(arity, Rational(1));
    RationalExpr sumVars = RationalExpr::variable(arity, 1);
    for (int i = 2; i <= ell; ++i)
        sumVars = RationalExpr::add(sumVars, RationalExpr::variable(arity, i));
    sumVars = RationalExpr::add(sumVars, one);
    RationalExpr sumInv = RationalExpr::div(one, RationalExpr::variable(arity, 1));
    for (int i = 2; i <= ell; ++i)
        sumInv = RationalExpr::add(sumInv, RationalExpr::div(one, RationalExpr::variable(arity, i)));
    sumInv = RationalExpr::add(sumInv, one);
    return RationalExpr::mul(sumVars, sumInv);
}

DiagonalRep bananaDiagonalRep(int ell) {
    const int arity = ell + 1;
    RationalExpr one = RationalExpr::constant(arity, Rational(1));
    RationalExpr mono = RationalExpr::variable(arity, 0);
    for (int i = 1; i <= ell; ++i) mono = RationalExpr::mul(mono, RationalExpr::variable(arity, i));
    RationalExpr denom = RationalExpr::sub(one, RationalExpr::mul(mono, bananaLaurent(ell)));
    return makeDiagonalRep(RationalExpr::div(one, denom), ell);
}

std::pair<UniSeries, UniSeries> sectionExamplePair(int order) {
    int source = 2 * order + 1;
    UniSeries geo = UniSeries(source, std::vector<Rational>(static_cast<std::size_t>(source) + 1, Rational(1)));
    UniSeries root = binomialPowerSeries(Rational(-1), Rational(1, 2), source);
    UniSeries f = recompose({section(geo, 0, 2), section(root, 1, 2)});
    UniSeries g = recompose({section(root, 0, 2), section(geo, 1, 2)});
    return {truncate(f, order), truncate(g, order)};
}

namespace {

AlgebraicSpec inverseSqrtFactor(long c) {
    return AlgebraicSpec{BinomialPower{Rational(c), Rational(-1, 2)}};
}

std::vector<CatalogEntry> buildEntries() {
    std::vector<CatalogEntry> entries;

    {
        CatalogEntry e;
        e.name = "apery";
        e.summary = "Apery numbers, their order-3 operator, and the 4-variable diagonal";
        e.series = [](int N) { return aperySeries(N); };
        e.diagonalRep = straubRep();
        e.annihilator = aperyOperator();
        e.expectedNil = 3;
        e.expectedLower = 3;
        e.expectedUpper = 3;
        e.defaultWindow = 8;
        e.guessWindow = 30;
        e.guessMaxOrder = 3;
        e.guessMaxDegree = 4;
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "central-binomial";
        e.summary = "central binomial coefficients as a 2-variable diagonal and (1-4x)^(-1/2)";
        e.series = [](int N) {
            std::vector<Rational> v(static_cast<std::size_t>(N) + 1);
            for (int n = 0; n <= N; ++n)
                v[static_cast<std::size_t>(n)] =
                    Rational(binomial(2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n)));
            return UniSeries(N, std::move(v));
        };
        e.diagonalRep = makeDiagonalRep(parseExpr("1/(1-x0-x1)", 2), 1);
        e.hadamardRep = HadamardRep{{inverseSqrtFactor(-4)}};
        e.expectedNil = 1;
        e.expectedLower = 1;
        e.expectedUpper = 1;
        e.defaultWindow = 20;
        e.guessWindow = 30;
        e.guessMaxOrder = 1;
        e.guessMaxDegree = 2;
        entries.push_back(std::move(e));
    }
    for (int n = 2; n <= 4; ++n) {
        CatalogEntry e;
        e.name = "hyper-half-" + std::to_string(n);
        e.summary = "the n-fold Hadamard power of (1-x)^(-1/2), n = " + std::to_string(n);
        e.series = [n](int N) {
            std::vector<Rational> alpha(static_cast<std::size_t>(n), Rational(1, 2));
            std::vector<Rational> beta(static_cast<std::size_t>(n), Rational(1));
            return hgCoeffs(HypergeomParams(alpha, beta), N);
        };
        HadamardRep rep;
        for (int i = 0; i < n; ++i) rep.factors.push_back(inverseSqrtFactor(-1));
        e.hadamardRep = std::move(rep);
        e.expectedNil = n;
        e.expectedLower = n;
        e.expectedUpper = n;
        e.defaultWindow = 40;
        e.guessWindow = 40;
        e.guessMaxOrder = n;
        e.guessMaxDegree = n + 1;
        entries.push_back(std::move(e));
    }
    for (int ell = 1; ell <= 3; ++ell) {
        CatalogEntry e;
        e.name = "banana-" + std::to_string(ell);
        e.summary = "squared multinomial sums B_" + std::to_string(ell) +
                    " and their " + std::to_string(ell + 1) + "-variable diagonal";
        e.series = [ell](int N) { return bananaTerms(ell, N); };
        e.diagonalRep = bananaDiagonalRep(ell);
        e.expectedNil = ell;
        e.expectedLower = ell;
        e.expectedUpper = ell;
        e.defaultWindow = 8;
        e.guessMaxOrder = ell;
        e.guessMaxDegree = 2 * ell + 2;
        e.guessWindow = std::max(30, (e.guessMaxOrder + 1) * (e.guessMaxDegree + 1) + kGuessGuard);
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "sqrt-one-minus-x";
        e.summary = "sqrt(1-x): the Hadamard product of the mixed-parity section pair";
        e.series = [](int N) { return binomialPowerSeries(Rational(-1), Rational(1, 2), N); };
        e.hadamardRep = HadamardRep{{AlgebraicSpec{BinomialPower{Rational(-1), Rational(1, 2)}}}};
        e.expectedNil = 1;
        e.expectedLower = 1;
        e.expectedUpper = 1;
        e.defaultWindow = 30;
        e.guessWindow = 30;
        e.guessMaxOrder = 1;
        e.guessMaxDegree = 2;
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalogEntries() {
    static const std::vector<CatalogEntry> entries = buildEntries();
    return entries;
}

const CatalogEntry* findCatalogEntry(const std::string& name) {
    for (const auto& e : catalogEntries())
        if (e.name == name) return &e;
    return nullptr;
}

CatalogVerdict runCatalogEntry(const CatalogEntry& entry, std::optional<int> windowOverride,
                               std::uint64_t seed) {
    CatalogVerdict verdict;
    verdict.name = entry.name;
    verdict.window = windowOverride.value_or(entry.defaultWindow);
    verdict.guessWindow = std::max(entry.guessWindow, verdict.window);
    verdict.seed = seed;

    UniSeries series = entry.series(verdict.guessWindow);

    auto check = [&](const std::string& name, bool pass, const std::string& detail) {
        verdict.checks.push_back({name, pass, detail});
    };

    if (entry.annihilator) {
        UniSeries image = applyOp(*entry.annihilator, series);
        bool ok = image.isZeroThrough(image.trunc());
        check("operator-annihilation", ok,
              "operator image vanishes through order " + std::to_string(image.trunc()));
    }
    if (entry.diagonalRep) {
        bool ok = verifyDiagonalRep(*entry.diagonalRep, series, verdict.window);
        check("diagonal-rep", ok, "diagonal matches through order " + std::to_string(verdict.window));
    }
    if (entry.hadamardRep) {
        bool ok = verifyHadamardRep(*entry.hadamardRep, series, verdict.guessWindow);
        check("hadamard-rep", ok,
              "Hadamard product matches through order " + std::to_string(verdict.guessWindow));
    }
    {
        bool ok = false;
        std::string detail;
        try {
            NilOfSeries nil = nilOfSeries(series, entry.guessMaxOrder, entry.guessMaxDegree);
            ok = nil.report.nil == entry.expectedNil;
            detail = "nil = " + std::to_string(nil.report.nil) + ", expected " +
                     std::to_string(entry.expectedNil);
        } catch (const Error& err) {
            detail = err.what();
        }
        check("nil", ok, detail);
    }
    {
        bool ok = false;
        std::string detail;
        try {
            GradeBounds b = gradeBounds(series, entry.diagonalRep, entry.hadamardRep,
                                        entry.guessMaxOrder, entry.guessMaxDegree, verdict.window);
            bool upperOk = b.upper && *b.upper == entry.expectedUpper;
            bool orderOk = !b.upper || b.lower <= *b.upper;
            ok = b.lower == entry.expectedLower && upperOk && orderOk;
            detail = "bounds (" + std::to_string(b.lower) + ", " +
                     (b.upper ? std::to_string(*b.upper) : std::string("unknown")) + ") through order " +
                     std::to_string(verdict.window);
            verdict.bounds = std::move(b);
        } catch (const Error& err) {
            detail = err.what();
        }
        check("grade-bounds", ok, detail);
    }
    if (entry.diagonalRep) {
        // Seeded sample of the section-compatibility property: sections of
        // the diagonal agree with the exponent-filtered diagonal of the
        // same expansion.
        std::mt19937_64 rng(seed);
        std::vector<int> cap(static_cast<std::size_t>(entry.diagonalRep->expr.arity()),
                             verdict.window);
        TruncatedMultiSeries ms = expand(entry.diagonalRep->expr, cap);
        bool ok = true;
        for (int trial = 0; trial < 4; ++trial) {
            int m = static_cast<int>(rng() % 4) + 1;
            int r = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
            UniSeries sec = section(truncate(series, verdict.window), r, m);
            for (int k = 0; k <= sec.trunc(); ++k) {
                TruncatedMultiSeries::Exponents e(
                    static_cast<std::size_t>(entry.diagonalRep->expr.arity()), r + k * m);
                if (ms.coeff(e) != sec.coeff(k)) ok = false;
            }
        }
        check("section-compatibility", ok, "4 seeded (r, m) samples, m <= 4");
    }

    verdict.allPass = std::all_of(verdict.checks.begin(), verdict.checks.end(),
                                  [](const CatalogCheck& c) { return c.pass; });
    return verdict;
}

}  // namespace diaglab
