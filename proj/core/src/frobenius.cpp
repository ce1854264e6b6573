#include "diaglab/frobenius.hpp"

#include <algorithm>
#include <map>

#include "diaglab/errors.hpp"

namespace diaglab {

namespace {

std::vector<Integer> divisorsOf(const Integer& n) {
    Integer a = abs(n);
    std::vector<Integer> divs;
    if (a == 0) return divs;
    for (Integer d(1); d * d <= a; ++d) {
        if (a % d == 0) {
            divs.push_back(d);
            Integer q = a / d;
            if (q != d) divs.push_back(q);
        }
    }
    return divs;
}

// Exact division of p by (t - root); remainder must vanish.
Poly deflate(const Poly& p, const Rational& root) {
    std::vector<Rational> q(static_cast<std::size_t>(p.degree()), Rational(0));
    Rational carry(0);
    for (int i = p.degree(); i >= 1; --i) {
        carry = p.coeff(i) + carry * root;
        q[static_cast<std::size_t>(i - 1)] = carry;
    }
    return Poly(std::move(q));
}

// All rational roots with multiplicity, ascending. Factors out the root at
// zero first, then tries the divisor candidates of the primitive integer
// form of the remaining polynomial.
std::vector<std::pair<Rational, int>> rationalRootsOf(const Poly& input) {
    std::vector<std::pair<Rational, int>> roots;
    if (input.isZero() || input.degree() == 0) return roots;
    Poly p = input;

    int zeroMult = p.valuation();
    if (zeroMult > 0) {
        roots.emplace_back(Rational(0), zeroMult);
        p = p.shiftExponent(-zeroMult);
    }
    if (p.degree() == 0) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    Rational content = p.content();
    Poly prim = p.scaled(Rational(1) / content);
    Integer lead = prim.leading().numerator();
    Integer trail = prim.coeff(0).numerator();
    std::vector<Integer> ps = divisorsOf(trail);
    std::vector<Integer> qs = divisorsOf(lead);
    std::map<Rational, int> found;
    for (const Integer& num : ps) {
        for (const Integer& den : qs) {
            for (int sign = 0; sign < 2; ++sign) {
                Rational cand(sign == 0 ? num : -num, den);
                if (found.count(cand)) continue;
                int mult = 0;
                Poly cur = prim;
                while (!cur.isZero() && cur.degree() >= 1 && cur.eval(cand).isZero()) {
                    cur = deflate(cur, cand);
                    ++mult;
                }
                if (mult > 0) found[cand] = mult;
            }
        }
    }
    for (const auto& [r, m] : found) roots.emplace_back(r, m);
    std::sort(roots.begin(), roots.end());
    return roots;
}

struct ThetaData {
    DiffOp theta;                       // cleared theta form
    std::vector<std::vector<Poly>> pDer;  // pDer[d][t] = t-th derivative of P_d
    int maxXDeg = 0;
};

ThetaData prepare(const DiffOp& op, int maxDerivative) {
    ThetaData td;
    td.theta = toThetaForm(op);
    if (td.theta.isZero()) throw InvalidArgument("zero operator");
    int v = td.theta.minXValuation();
    if (v > 0) {
        std::vector<Poly> cleared;
        for (const auto& q : td.theta.coeffs()) cleared.push_back(q.isZero() ? q : q.shiftExponent(-v));
        td.theta = DiffOp(OpForm::Theta, std::move(cleared));
    }
    if (td.theta.leading().coeff(0).isZero())
        throw IrregularSingular("operator is irregular singular at 0 (indicial degree drops)");

    td.maxXDeg = td.theta.maxXDegree();
    td.pDer.resize(static_cast<std::size_t>(td.maxXDeg) + 1);
    for (int d = 0; d <= td.maxXDeg; ++d) {
        // P_d(t) = sum_i p_{i,d} t^i
        std::vector<Rational> coeffs(static_cast<std::size_t>(td.theta.order()) + 1);
        for (int i = 0; i <= td.theta.order(); ++i) coeffs[static_cast<std::size_t>(i)] = td.theta.coeff(i).coeff(d);
        Poly P(std::move(coeffs));
        td.pDer[static_cast<std::size_t>(d)].push_back(P);
        for (int t = 1; t <= maxDerivative; ++t)
            td.pDer[static_cast<std::size_t>(d)].push_back(td.pDer[static_cast<std::size_t>(d)].back().derivative());
    }
    return td;
}

struct Coset {
    Rational base;                      // smallest exponent in the coset
    std::vector<std::pair<int, int>> resonances;  // (offset, multiplicity), ascending
    int totalMultiplicity = 0;
};

std::vector<Coset> groupCosets(const std::vector<std::pair<Rational, int>>& roots) {
    std::map<Rational, Coset> byFrac;
    for (const auto& [r, m] : roots) {
        Rational frac = r.fractionalPart();
        auto it = byFrac.find(frac);
        if (it == byFrac.end()) {
            Coset c;
            c.base = r;
            byFrac.emplace(frac, std::move(c));
        } else if (r < it->second.base) {
            it->second.base = r;
        }
    }
    for (const auto& [r, m] : roots) {
        Coset& c = byFrac.at(r.fractionalPart());
        Rational off = r - c.base;
        if (!off.numerator().fits_sint_p() || off.numerator() > 100000)
            throw InvalidArgument("exponent spread too large for the local solution basis");
        c.resonances.emplace_back(static_cast<int>(off.numerator().get_si()), m);
        c.totalMultiplicity += m;
    }
    std::vector<Coset> out;
    for (auto& [f, c] : byFrac) {
        std::sort(c.resonances.begin(), c.resonances.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Coset& a, const Coset& b) { return a.base < b.base; });
    return out;
}

// Coefficient vectors are coordinates in the free parameters of the coset.
using ParamVec = std::vector<Rational>;

ParamVec zeroVec(int params) { return ParamVec(static_cast<std::size_t>(params), Rational(0)); }

void addScaled(ParamVec& acc, const ParamVec& v, const Rational& s) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i] * s;
}

bool isZeroVec(const ParamVec& v) {
    for (const auto& c : v)
        if (!c.isZero()) return false;
    return true;
}

// Runs the log-ladder recursion for one coset and emits one solution per
// free parameter, truncated at shift <= order relative to the coset base.
std::vector<FormalSolution> solveCoset(const ThetaData& td, const Coset& coset, int order) {
    const int mu = coset.totalMultiplicity;
    const int kmax = mu - 1;
    const int lastRes = coset.resonances.back().first;
    const int jmax = order + lastRes;
    const int params = mu;

    auto multiplicityAt = [&](int J) {
        for (const auto& [off, m] : coset.resonances)
            if (off == J) return m;
        return 0;
    };

    // c[j][k]: coefficient of x^{base+j} log^k as a vector over parameters.
    std::vector<std::vector<ParamVec>> c(
        static_cast<std::size_t>(jmax) + 1,
        std::vector<ParamVec>(static_cast<std::size_t>(kmax) + 1, zeroVec(params)));

    int paramCount = 0;
    const Poly& P0 = td.pDer[0][0];
    for (int J = 0; J <= jmax; ++J) {
        Rational point = coset.base + Rational(J);
        // rhs[K] = sum_{d>=1} sum_{k>=K} c[J-d][k] * C(k, k-K) * P_d^{(k-K)}(base+J-d)
        std::vector<ParamVec> rhs(static_cast<std::size_t>(kmax) + 1, zeroVec(params));
        for (int d = 1; d <= std::min(J, td.maxXDeg); ++d) {
            Rational lower = coset.base + Rational(J - d);
            for (int K = 0; K <= kmax; ++K) {
                for (int k = K; k <= kmax; ++k) {
                    int t = k - K;
                    Rational fac = Rational(binomial(static_cast<unsigned long>(k),
                                                     static_cast<unsigned long>(t))) *
                                   td.pDer[static_cast<std::size_t>(d)][static_cast<std::size_t>(t)].eval(lower);
                    if (fac.isZero()) continue;
                    addScaled(rhs[static_cast<std::size_t>(K)],
                              c[static_cast<std::size_t>(J - d)][static_cast<std::size_t>(k)], fac);
                }
            }
        }

        int mJ = multiplicityAt(J);
        if (mJ == 0) {
            Rational pivot = P0.eval(point);
            for (int K = kmax; K >= 0; --K) {
                ParamVec acc = rhs[static_cast<std::size_t>(K)];
                for (int k = K + 1; k <= kmax; ++k) {
                    Rational fac = Rational(binomial(static_cast<unsigned long>(k),
                                                     static_cast<unsigned long>(k - K))) *
                                   td.pDer[0][static_cast<std::size_t>(k - K)].eval(point);
                    if (fac.isZero()) continue;
                    addScaled(acc, c[static_cast<std::size_t>(J)][static_cast<std::size_t>(k)], fac);
                }
                ParamVec& slot = c[static_cast<std::size_t>(J)][static_cast<std::size_t>(K)];
                slot = zeroVec(params);
                addScaled(slot, acc, Rational(-1) / pivot);
            }
        } else {
            // New free parameters occupy log powers 0..mJ-1.
            for (int k = 0; k < mJ; ++k) {
                ParamVec& slot = c[static_cast<std::size_t>(J)][static_cast<std::size_t>(k)];
                slot = zeroVec(params);
                slot[static_cast<std::size_t>(paramCount)] = Rational(1);
                ++paramCount;
            }
            // Rows K > kmax - mJ have no pivot; they must be identically zero.
            for (int K = kmax - mJ + 1; K <= kmax; ++K) {
                if (!isZeroVec(rhs[static_cast<std::size_t>(K)]))
                    throw Error("internal_error", "log-ladder consistency row failed at shift " +
                                                      std::to_string(J));
            }
            for (int K = kmax - mJ; K >= 0; --K) {
                int kstar = K + mJ;
                ParamVec acc = rhs[static_cast<std::size_t>(K)];
                for (int k = kstar + 1; k <= kmax; ++k) {
                    Rational fac = Rational(binomial(static_cast<unsigned long>(k),
                                                     static_cast<unsigned long>(k - K))) *
                                   td.pDer[0][static_cast<std::size_t>(k - K)].eval(point);
                    if (fac.isZero()) continue;
                    addScaled(acc, c[static_cast<std::size_t>(J)][static_cast<std::size_t>(k)], fac);
                }
                Rational pivot = Rational(binomial(static_cast<unsigned long>(kstar),
                                                   static_cast<unsigned long>(mJ))) *
                                 td.pDer[0][static_cast<std::size_t>(mJ)].eval(point);
                ParamVec& slot = c[static_cast<std::size_t>(J)][static_cast<std::size_t>(kstar)];
                slot = zeroVec(params);
                addScaled(slot, acc, Rational(-1) / pivot);
            }
        }
    }
    if (paramCount != params)
        throw Error("internal_error", "parameter count mismatch in the Frobenius recursion");

    // Row-reduce the parameter basis over positions ordered by (j, k) so
    // the emitted basis is canonical.
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(params));
    std::vector<std::pair<int, int>> positions;
    for (int j = 0; j <= jmax; ++j)
        for (int k = 0; k <= kmax; ++k) positions.emplace_back(j, k);
    for (int p = 0; p < params; ++p) {
        rows[static_cast<std::size_t>(p)].reserve(positions.size());
        for (const auto& [j, k] : positions)
            rows[static_cast<std::size_t>(p)].push_back(
                c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)][static_cast<std::size_t>(p)]);
    }
    std::size_t pivotCol = 0;
    for (int r = 0; r < params && pivotCol < positions.size(); ++r) {
        int sel = -1;
        for (; pivotCol < positions.size(); ++pivotCol) {
            for (int rr = r; rr < params; ++rr) {
                if (!rows[static_cast<std::size_t>(rr)][pivotCol].isZero()) {
                    sel = rr;
                    break;
                }
            }
            if (sel >= 0) break;
        }
        if (sel < 0) break;
        std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(sel)]);
        Rational inv = Rational(1) / rows[static_cast<std::size_t>(r)][pivotCol];
        for (auto& x : rows[static_cast<std::size_t>(r)]) x *= inv;
        for (int rr = 0; rr < params; ++rr) {
            if (rr == r) continue;
            Rational f = rows[static_cast<std::size_t>(rr)][pivotCol];
            if (f.isZero()) continue;
            for (std::size_t cc = 0; cc < positions.size(); ++cc)
                rows[static_cast<std::size_t>(rr)][cc] -= f * rows[static_cast<std::size_t>(r)][cc];
        }
        ++pivotCol;
    }

    std::vector<FormalSolution> out;
    for (int p = 0; p < params; ++p) {
        const auto& row = rows[static_cast<std::size_t>(p)];
        int jmin = -1;
        for (std::size_t cc = 0; cc < positions.size(); ++cc) {
            if (!row[cc].isZero()) {
                jmin = positions[cc].first;
                break;
            }
        }
        if (jmin < 0) throw Error("internal_error", "zero row in the Frobenius basis");
        FormalSolution s;
        s.exponent = coset.base + Rational(jmin);
        s.trunc = order;
        for (std::size_t cc = 0; cc < positions.size(); ++cc) {
            if (row[cc].isZero()) continue;
            int j = positions[cc].first - jmin;
            int k = positions[cc].second;
            if (j > order) continue;
            s.table[{j, k}] = row[cc];
            s.logDegree = std::max(s.logDegree, k);
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

IndicialData indicial(const DiffOp& op) {
    ThetaData td = prepare(op, 0);
    IndicialData data;
    std::vector<Rational> chi(static_cast<std::size_t>(td.theta.order()) + 1);
    for (int i = 0; i <= td.theta.order(); ++i) chi[static_cast<std::size_t>(i)] = td.theta.coeff(i).coeff(0);
    data.chi = Poly(std::move(chi));
    data.roots = rationalRootsOf(data.chi);
    int total = 0;
    for (const auto& [r, m] : data.roots) total += m;
    if (total < data.chi.degree())
        throw IrrationalExponent("indicial polynomial has a non-rational root");
    return data;
}

std::vector<FormalSolution> frobeniusBasis(const DiffOp& op, int order) {
    if (order < 0) throw InvalidArgument("order must be >= 0");
    IndicialData ind = indicial(op);
    if (ind.chi.degree() < 1) return {};
    int mu = 0;
    for (const auto& [r, m] : ind.roots) mu = std::max(mu, m);
    ThetaData td = prepare(op, ind.chi.degree());
    std::vector<FormalSolution> basis;
    for (const auto& coset : groupCosets(ind.roots)) {
        auto sols = solveCoset(td, coset, order);
        for (auto& s : sols) basis.push_back(std::move(s));
    }
    return basis;
}

NilReport nilIndex(const DiffOp& op) {
    IndicialData ind = indicial(op);
    int window = 8;
    for (const auto& coset : groupCosets(ind.roots))
        window = std::max(window, coset.resonances.back().first + 2);
    return nilIndex(op, window);
}

NilReport nilIndex(const DiffOp& op, int basisOrder) {
    NilReport report;
    IndicialData ind = indicial(op);
    report.exponents = ind.roots;
    report.basis = frobeniusBasis(op, basisOrder);
    int maxLog = 0;
    for (const auto& s : report.basis) maxLog = std::max(maxLog, s.logDegree);
    report.nil = 1 + maxLog;
    return report;
}

bool annihilatesFormal(const DiffOp& op, const FormalSolution& s) {
    ThetaData td = prepare(op, 1 + s.logDegree);
    std::map<std::pair<int, int>, Rational> image;
    for (const auto& [jk, coeff] : s.table) {
        const auto& [j, k] = jk;
        Rational point = s.exponent + Rational(j);
        for (int d = 0; d <= td.maxXDeg; ++d) {
            for (int t = 0; t <= k; ++t) {
                Rational fac = Rational(binomial(static_cast<unsigned long>(k),
                                                 static_cast<unsigned long>(t))) *
                               td.pDer[static_cast<std::size_t>(d)][static_cast<std::size_t>(t)].eval(point);
                if (fac.isZero()) continue;
                auto key = std::make_pair(j + d, k - t);
                auto it = image.find(key);
                if (it == image.end()) image.emplace(key, coeff * fac);
                else it->second += coeff * fac;
            }
        }
    }
    for (const auto& [jk, v] : image) {
        if (jk.first > s.trunc) continue;  // contributions beyond the window are incomplete
        if (!v.isZero()) return false;
    }
    return true;
}

}  // namespace diaglab
