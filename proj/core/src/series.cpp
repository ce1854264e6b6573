#include <algorithm>
#include <string>

#include "diaglab/errors.hpp"
#include "diaglab/series.hpp"

namespace diaglab {

UniSeries::UniSeries(int trunc, std::vector<Rational> coeffs) : trunc_(trunc), c_(std::move(coeffs)) {
    if (trunc_ < 0) throw InvalidArgument("series truncation order must be >= 0");
    if (c_.size() != static_cast<std::size_t>(trunc_) + 1)
        throw InvalidArgument("coefficient count must be trunc + 1");
}

UniSeries UniSeries::zero(int trunc) {
    return UniSeries(trunc, std::vector<Rational>(static_cast<std::size_t>(trunc) + 1, Rational(0)));
}

UniSeries UniSeries::constant(const Rational& c, int trunc) {
    std::vector<Rational> v(static_cast<std::size_t>(trunc) + 1, Rational(0));
    v[0] = c;
    return UniSeries(trunc, std::move(v));
}

Rational UniSeries::coeff(int i) const {
    if (i < 0) throw InvalidArgument("negative coefficient index");
    if (i > trunc_) throw WindowTooSmall("coefficient " + std::to_string(i) +
                                         " beyond truncation order " + std::to_string(trunc_));
    return c_[static_cast<std::size_t>(i)];
}

bool UniSeries::isZeroThrough(int n) const {
    if (n > trunc_) throw WindowTooSmall("window beyond truncation order");
    for (int i = 0; i <= n; ++i)
        if (!c_[static_cast<std::size_t>(i)].isZero()) return false;
    return true;
}

bool agrees(const UniSeries& a, const UniSeries& b) {
    int n = std::min(a.trunc(), b.trunc());
    for (int i = 0; i <= n; ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

bool agreesThrough(const UniSeries& a, const UniSeries& b, int n) {
    if (a.trunc() < n || b.trunc() < n)
        throw WindowTooSmall("series window shorter than comparison order " + std::to_string(n));
    for (int i = 0; i <= n; ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

UniSeries add(const UniSeries& a, const UniSeries& b) {
    int n = std::min(a.trunc(), b.trunc());
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
    return UniSeries(n, std::move(v));
}

UniSeries sub(const UniSeries& a, const UniSeries& b) {
    int n = std::min(a.trunc(), b.trunc());
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = a.coeff(i) - b.coeff(i);
    return UniSeries(n, std::move(v));
}

UniSeries scale(const UniSeries& a, const Rational& s) {
    std::vector<Rational> v(a.coeffs());
    for (auto& c : v) c *= s;
    return UniSeries(a.trunc(), std::move(v));
}

UniSeries derivative(const UniSeries& a) {
    if (a.trunc() == 0) return UniSeries::zero(0);
    std::vector<Rational> v(static_cast<std::size_t>(a.trunc()));
    for (int i = 1; i <= a.trunc(); ++i)
        v[static_cast<std::size_t>(i - 1)] = a.coeff(i) * Rational(i);
    return UniSeries(a.trunc() - 1, std::move(v));
}

UniSeries shiftUp(const UniSeries& a, int k) {
    if (k < 0) throw InvalidArgument("shiftUp needs k >= 0");
    std::vector<Rational> v(static_cast<std::size_t>(a.trunc() + k) + 1, Rational(0));
    for (int i = 0; i <= a.trunc(); ++i) v[static_cast<std::size_t>(i + k)] = a.coeff(i);
    return UniSeries(a.trunc() + k, std::move(v));
}

UniSeries truncate(const UniSeries& a, int n) {
    if (n > a.trunc()) throw WindowTooSmall("cannot extend a series by truncation");
    std::vector<Rational> v(a.coeffs().begin(), a.coeffs().begin() + n + 1);
    return UniSeries(n, std::move(v));
}

UniSeries diagonal(const TruncatedMultiSeries& ms, int n) {
    if (ms.arity() != n + 1)
        throw ArityMismatch("diagonal index " + std::to_string(n) + " needs arity " +
                            std::to_string(n + 1) + ", series has arity " + std::to_string(ms.arity()));
    for (int l : ms.low())
        if (l != 0) throw InvalidArgument("diagonal requires a series with low = 0");
    int t = *std::min_element(ms.cap().begin(), ms.cap().end());
    std::vector<Rational> v(static_cast<std::size_t>(t) + 1);
    for (int i = 0; i <= t; ++i)
        v[static_cast<std::size_t>(i)] = ms.coeff(TruncatedMultiSeries::Exponents(static_cast<std::size_t>(n) + 1, i));
    return UniSeries(t, std::move(v));
}

UniSeries hadamard(const UniSeries& f, const UniSeries& g) {
    int n = std::min(f.trunc(), g.trunc());
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = f.coeff(i) * g.coeff(i);
    return UniSeries(n, std::move(v));
}

UniSeries section(const UniSeries& f, int r, int m) {
    if (m < 1 || r < 0 || r >= m)
        throw ResidueOutOfRange("section needs 0 <= r < m, got r=" + std::to_string(r) +
                                ", m=" + std::to_string(m));
    int t = (f.trunc() - r) / m;
    if (f.trunc() < r) throw WindowTooSmall("series too short for residue " + std::to_string(r));
    std::vector<Rational> v(static_cast<std::size_t>(t) + 1);
    for (int k = 0; k <= t; ++k) v[static_cast<std::size_t>(k)] = f.coeff(r + k * m);
    return UniSeries(t, std::move(v));
}

UniSeries recompose(const std::vector<UniSeries>& sections) {
    if (sections.empty()) throw EmptyList("recompose needs at least one section");
    int m = static_cast<int>(sections.size());
    int t = sections[0].trunc() * m + 0;
    for (int r = 0; r < m; ++r) t = std::min(t, r + m * sections[static_cast<std::size_t>(r)].trunc());
    std::vector<Rational> v(static_cast<std::size_t>(t) + 1);
    for (int j = 0; j <= t; ++j)
        v[static_cast<std::size_t>(j)] = sections[static_cast<std::size_t>(j % m)].coeff(j / m);
    return UniSeries(t, std::move(v));
}

TruncatedMultiSeries dmap(const TruncatedMultiSeries& ms) {
    if (ms.arity() < 2) throw ArityTooSmall("dmap needs arity >= 2");
    for (int l : ms.low())
        if (l != 0) throw InvalidArgument("dmap requires a series with low = 0");
    const int outArity = ms.arity() - 1;
    const std::size_t last = static_cast<std::size_t>(outArity);
    TruncatedMultiSeries::Exponents cap(ms.cap().begin(), ms.cap().end() - 1);
    TruncatedMultiSeries::TermMap t;
    for (const auto& [e, c] : ms.terms()) {
        long sum = 0;
        for (std::size_t i = 0; i < last; ++i) sum += e[i];
        if (sum != e[last]) continue;
        t.emplace(TruncatedMultiSeries::Exponents(e.begin(), e.end() - 1), c);
    }
    return TruncatedMultiSeries(outArity, TruncatedMultiSeries::Exponents(last, 0), std::move(cap),
                                std::move(t));
}

UniSeries constantTermSeries(const RationalExpr& laurentPoly, int order) {
    if (order < 0) throw InvalidArgument("order must be >= 0");
    TruncatedMultiSeries f = expandLaurent(laurentPoly);
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
    const TruncatedMultiSeries::Exponents origin(static_cast<std::size_t>(f.arity()), 0);
    TruncatedMultiSeries power(f.arity(), origin, origin,
                               {{origin, Rational(1)}});
    v[0] = Rational(1);
    for (int n = 1; n <= order; ++n) {
        power = mulExact(power, f);
        auto it = power.terms().find(origin);
        v[static_cast<std::size_t>(n)] = it == power.terms().end() ? Rational(0) : it->second;
    }
    return UniSeries(order, std::move(v));
}

UniSeries binomialPowerSeries(const Rational& c, const Rational& gamma, int order) {
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
    Rational b(1);
    v[0] = b;
    for (int k = 0; k < order; ++k) {
        b = b * c * (gamma - Rational(k)) / Rational(k + 1);
        v[static_cast<std::size_t>(k) + 1] = b;
    }
    return UniSeries(order, std::move(v));
}

namespace {

// P grouped by y-degree: q[d](x) with P = sum_d q_d(x) y^d.
std::vector<std::vector<Rational>> groupByYDegree(const BivarPoly& p) {
    int maxY = 0, maxX = 0;
    for (const auto& [e, c] : p.terms) {
        if (e.first < 0 || e.second < 0) throw InvalidArgument("annihilator exponents must be >= 0");
        maxX = std::max(maxX, e.first);
        maxY = std::max(maxY, e.second);
    }
    std::vector<std::vector<Rational>> q(static_cast<std::size_t>(maxY) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(maxX) + 1, Rational(0)));
    for (const auto& [e, c] : p.terms)
        q[static_cast<std::size_t>(e.second)][static_cast<std::size_t>(e.first)] = c;
    return q;
}

// P(x, y) truncated at `order`, with y given as a truncated series.
UniSeries evalBivar(const std::vector<std::vector<Rational>>& q, const UniSeries& y, int order) {
    UniSeries acc = UniSeries::zero(order);
    auto mulTrunc = [order](const UniSeries& a, const UniSeries& b) {
        std::vector<Rational> v(static_cast<std::size_t>(order) + 1, Rational(0));
        for (int i = 0; i <= order; ++i) {
            if (a.coeff(i).isZero()) continue;
            for (int j = 0; i + j <= order; ++j)
                v[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
        return UniSeries(order, std::move(v));
    };
    for (std::size_t d = q.size(); d-- > 0;) {
        acc = mulTrunc(acc, y);
        std::vector<Rational> poly(static_cast<std::size_t>(order) + 1, Rational(0));
        for (std::size_t i = 0; i < q[d].size() && i <= static_cast<std::size_t>(order); ++i)
            poly[i] = q[d][i];
        acc = add(acc, UniSeries(order, std::move(poly)));
    }
    return acc;
}

}  // namespace

UniSeries algebraicSeries(const AlgebraicSpec& spec, int order) {
    if (order < 0) throw InvalidArgument("order must be >= 0");
    if (const auto* bp = std::get_if<BinomialPower>(&spec.kind))
        return binomialPowerSeries(bp->c, bp->gamma, order);

    const auto& pr = std::get<PolynomialRoot>(spec.kind);
    if (pr.seed.empty()) throw InvalidArgument("polynomial root needs a nonempty seed");
    auto q = groupByYDegree(pr.annihilator);

    // dP/dy grouped the same way.
    std::vector<std::vector<Rational>> dq;
    for (std::size_t d = 1; d < q.size(); ++d) {
        auto row = q[d];
        for (auto& c : row) c *= Rational(static_cast<long>(d));
        dq.push_back(std::move(row));
    }
    if (dq.empty()) dq.push_back({Rational(0)});

    const int s = static_cast<int>(pr.seed.size());
    std::vector<Rational> y(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int i = 0; i < s && i <= order; ++i) y[static_cast<std::size_t>(i)] = pr.seed[static_cast<std::size_t>(i)];

    {
        UniSeries seedSeries(order, y);
        UniSeries residual = evalBivar(q, seedSeries, order);
        for (int i = 0; i < std::min(s, order + 1); ++i)
            if (!residual.coeff(i).isZero())
                throw SeedInconsistent("seed violates the annihilator at x^" + std::to_string(i));
    }

    Rational c0(0);
    {
        std::vector<Rational> y0(1, y[0]);
        UniSeries y0s(0, y0);
        c0 = evalBivar(dq, y0s, 0).coeff(0);
    }
    for (int j = s; j <= order; ++j) {
        if (c0.isZero())
            throw ContinuationSingular("leading linear coefficient vanishes at step " + std::to_string(j));
        UniSeries partial(order, y);
        Rational rj = evalBivar(q, partial, order).coeff(j);
        y[static_cast<std::size_t>(j)] = -rj / c0;
    }

    UniSeries result(order, std::move(y));
    UniSeries residual = evalBivar(q, result, order);
    for (int i = 0; i <= order; ++i)
        if (!residual.coeff(i).isZero())
            throw ContinuationSingular("continuation failed to annihilate at x^" + std::to_string(i));
    return result;
}

}  // namespace diaglab
