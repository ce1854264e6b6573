#include "diaglab/multiseries.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "diaglab/errors.hpp"

namespace diaglab {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;
constexpr std::int64_t kMaxBoxCells = 60'000'000;

int clampAdd(int a, int b) {
    if (a >= kInf || b >= kInf) return kInf;
    long s = static_cast<long>(a) + b;
    if (s >= kInf) return kInf;
    return static_cast<int>(s);
}

using Exponents = TruncatedMultiSeries::Exponents;
using TermMap = TruncatedMultiSeries::TermMap;

Exponents addVec(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = clampAdd(a[i], b[i]);
    return r;
}

Exponents minVec(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

bool leqVec(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Evaluation-time series: terms agree with the exact expansion on
// [lowBound, hi]; lowBound is also a hard valuation bound (the exact
// expansion has no support below it). `exact` means finite complete
// support (hi is the infinity sentinel).
struct EvalSeries {
    TermMap terms;
    Exponents lowBound;
    Exponents hi;
    bool exact = false;
};

void pruneAbove(TermMap& terms, const Exponents& hi) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (!leqVec(it->first, hi)) it = terms.erase(it);
        else ++it;
    }
}

EvalSeries evalAdd(const EvalSeries& a, const EvalSeries& b, bool subtract) {
    EvalSeries r;
    r.exact = a.exact && b.exact;
    r.lowBound = minVec(a.lowBound, b.lowBound);
    r.hi = minVec(a.hi, b.hi);
    r.terms = a.terms;
    for (const auto& [e, c] : b.terms) {
        Rational v = subtract ? -c : c;
        auto it = r.terms.find(e);
        if (it == r.terms.end()) {
            if (!v.isZero()) r.terms.emplace(e, v);
        } else {
            it->second += v;
            if (it->second.isZero()) r.terms.erase(it);
        }
    }
    if (!r.exact) pruneAbove(r.terms, r.hi);
    return r;
}

EvalSeries evalMul(const EvalSeries& a, const EvalSeries& b) {
    EvalSeries r;
    r.exact = a.exact && b.exact;
    r.lowBound = addVec(a.lowBound, b.lowBound);
    r.hi = minVec(addVec(a.hi, b.lowBound), addVec(b.hi, a.lowBound));
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            Exponents e = addVec(ea, eb);
            if (!r.exact && !leqVec(e, r.hi)) continue;
            Rational prod = ca * cb;
            if (prod.isZero()) continue;
            auto it = r.terms.find(e);
            if (it == r.terms.end()) r.terms.emplace(std::move(e), prod);
            else {
                it->second += prod;
                if (it->second.isZero()) r.terms.erase(it);
            }
        }
    }
    return r;
}

// Support minimum of the stored terms, componentwise. Requires nonempty.
Exponents supportMin(const TermMap& terms) {
    Exponents m = terms.begin()->first;
    for (const auto& [e, c] : terms) m = minVec(m, e);
    return m;
}

// 1 / b computed on the box [0, H] after clearing the monomial factor
// x^m from b. The recursion processes exponents in lexicographic order,
// which refines componentwise dominance.
EvalSeries evalInverse(const EvalSeries& b, const Exponents& workingCap, const std::string& what) {
    const std::size_t n = workingCap.size();
    if (b.terms.empty())
        throw DenominatorVanishes("denominator of " + what + " is zero within the expansion window");
    Exponents m = supportMin(b.terms);

    // Cleared series b' = x^-m b, complete on [0, H].
    Exponents H(n);
    for (std::size_t i = 0; i < n; ++i) {
        H[i] = b.exact ? workingCap[i] : std::min(workingCap[i], b.hi[i] - m[i]);
        if (H[i] < 0) H[i] = 0;
    }
    std::vector<std::pair<Exponents, Rational>> supp;
    supp.reserve(b.terms.size());
    Rational c0(0);
    for (const auto& [e, c] : b.terms) {
        Exponents s(n);
        bool within = true;
        bool isZeroExp = true;
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = e[i] - m[i];
            if (s[i] > H[i]) within = false;
            if (s[i] != 0) isZeroExp = false;
        }
        if (isZeroExp) c0 = c;
        else if (within) supp.emplace_back(std::move(s), c);
    }
    if (c0.isZero())
        throw DenominatorVanishes("denominator of " + what +
                                  " has no invertible constant term (no single monomial clears it)");

    std::int64_t cells = 1;
    std::vector<std::int64_t> stride(n, 1);
    for (std::size_t i = n; i-- > 0;) {
        stride[i] = cells;
        cells *= H[i] + 1;
        if (cells > kMaxBoxCells) throw InvalidArgument("expansion box too large");
    }
    std::vector<std::int64_t> suppOffset(supp.size());
    for (std::size_t k = 0; k < supp.size(); ++k) {
        std::int64_t off = 0;
        for (std::size_t i = 0; i < n; ++i) off += static_cast<std::int64_t>(supp[k].first[i]) * stride[i];
        suppOffset[k] = off;
    }

    Rational inv0 = Rational(1) / c0;
    std::vector<Rational> dense(static_cast<std::size_t>(cells), Rational(0));
    Exponents e(n, 0);
    for (std::int64_t idx = 0; idx < cells; ++idx) {
        Rational acc(0);
        for (std::size_t k = 0; k < supp.size(); ++k) {
            bool fits = true;
            for (std::size_t i = 0; i < n; ++i)
                if (supp[k].first[i] > e[i]) { fits = false; break; }
            if (!fits) continue;
            acc += supp[k].second * dense[static_cast<std::size_t>(idx - suppOffset[k])];
        }
        if (idx == 0) dense[0] = inv0;
        else dense[static_cast<std::size_t>(idx)] = -inv0 * acc;
        for (std::size_t i = n; i-- > 0;) {
            if (++e[i] <= H[i]) break;
            e[i] = 0;
        }
    }

    EvalSeries r;
    r.exact = false;
    r.lowBound.resize(n);
    r.hi.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.lowBound[i] = -m[i];
        r.hi[i] = H[i] - m[i];
    }
    Exponents cur(n, 0);
    for (std::int64_t idx = 0; idx < cells; ++idx) {
        if (!dense[static_cast<std::size_t>(idx)].isZero()) {
            Exponents shifted(n);
            for (std::size_t i = 0; i < n; ++i) shifted[i] = cur[i] - m[i];
            r.terms.emplace(std::move(shifted), dense[static_cast<std::size_t>(idx)]);
        }
        for (std::size_t i = n; i-- > 0;) {
            if (++cur[i] <= H[i]) break;
            cur[i] = 0;
        }
    }
    return r;
}

EvalSeries evalConst(std::size_t n, const Rational& c) {
    EvalSeries r;
    r.exact = true;
    r.lowBound.assign(n, 0);
    r.hi.assign(n, kInf);
    if (!c.isZero()) r.terms.emplace(Exponents(n, 0), c);
    return r;
}

EvalSeries evalNode(const ExprPtr& node, std::size_t n, const Exponents& workingCap);

EvalSeries evalPow(const EvalSeries& base, long e, std::size_t n, const Exponents& workingCap,
                   const std::string& what) {
    if (e == 0) return evalConst(n, Rational(1));
    if (e < 0) {
        // x^-k is treated as 1/(x^k).
        EvalSeries p = evalPow(base, -e, n, workingCap, what);
        return evalInverse(p, workingCap, what);
    }
    EvalSeries acc = evalConst(n, Rational(1));
    EvalSeries sq = base;
    long k = e;
    while (true) {
        if (k & 1) acc = evalMul(acc, sq);
        k >>= 1;
        if (k == 0) break;
        sq = evalMul(sq, sq);
    }
    return acc;
}

EvalSeries evalNode(const ExprPtr& node, std::size_t n, const Exponents& workingCap) {
    switch (node->kind) {
        case ExprNode::Kind::Const: return evalConst(n, node->value);
        case ExprNode::Kind::Var: {
            EvalSeries r;
            r.exact = true;
            r.lowBound.assign(n, 0);
            r.hi.assign(n, kInf);
            Exponents e(n, 0);
            e[static_cast<std::size_t>(node->varIndex)] = 1;
            r.lowBound[static_cast<std::size_t>(node->varIndex)] = 1;
            r.terms.emplace(std::move(e), Rational(1));
            return r;
        }
        case ExprNode::Kind::Add:
            return evalAdd(evalNode(node->left, n, workingCap), evalNode(node->right, n, workingCap), false);
        case ExprNode::Kind::Sub:
            return evalAdd(evalNode(node->left, n, workingCap), evalNode(node->right, n, workingCap), true);
        case ExprNode::Kind::Mul:
            return evalMul(evalNode(node->left, n, workingCap), evalNode(node->right, n, workingCap));
        case ExprNode::Kind::Div: {
            EvalSeries denom = evalNode(node->right, n, workingCap);
            EvalSeries inv = evalInverse(denom, workingCap, "a division");
            return evalMul(evalNode(node->left, n, workingCap), inv);
        }
        case ExprNode::Kind::Pow:
            return evalPow(evalNode(node->left, n, workingCap), node->exponent, n, workingCap, "a power");
    }
    throw InvalidArgument("corrupt expression node");
}

}  // namespace

TruncatedMultiSeries::TruncatedMultiSeries(int arity, Exponents low, Exponents cap, TermMap terms)
    : arity_(arity), low_(std::move(low)), cap_(std::move(cap)), terms_(std::move(terms)) {
    if (arity_ < 0) throw InvalidArgument("negative arity");
    if (low_.size() != static_cast<std::size_t>(arity_) || cap_.size() != static_cast<std::size_t>(arity_))
        throw InvalidArgument("low/cap size does not match arity");
    for (int i = 0; i < arity_; ++i) {
        if (low_[static_cast<std::size_t>(i)] > 0) throw InvalidArgument("low must be <= 0");
        if (cap_[static_cast<std::size_t>(i)] < 0) throw CapNegative("cap must be >= 0");
    }
    for (const auto& [e, c] : terms_) {
        if (e.size() != static_cast<std::size_t>(arity_)) throw InvalidArgument("term exponent arity mismatch");
        if (c.isZero()) throw InvalidArgument("zero coefficient stored in term map");
        if (!insideWindow(e)) throw InvalidArgument("term exponent outside [low, cap]");
    }
}

TruncatedMultiSeries TruncatedMultiSeries::zero(int arity, const Exponents& low, const Exponents& cap) {
    return TruncatedMultiSeries(arity, low, cap, {});
}

bool TruncatedMultiSeries::insideWindow(const Exponents& e) const {
    for (int i = 0; i < arity_; ++i) {
        auto k = static_cast<std::size_t>(i);
        if (e[k] < low_[k] || e[k] > cap_[k]) return false;
    }
    return true;
}

Rational TruncatedMultiSeries::coeff(const Exponents& e) const {
    if (e.size() != static_cast<std::size_t>(arity_)) throw ArityMismatch("exponent vector arity mismatch");
    if (!insideWindow(e)) throw WindowTooSmall("coefficient lies outside the sound window");
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

namespace {
TruncatedMultiSeries combine(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b, bool subtract) {
    if (a.arity() != b.arity()) throw ArityMismatch("series arities differ");
    Exponents low(a.low().size()), cap(a.cap().size());
    for (std::size_t i = 0; i < low.size(); ++i) {
        low[i] = std::max(a.low()[i], b.low()[i]);
        cap[i] = std::min(a.cap()[i], b.cap()[i]);
        if (cap[i] < 0) throw WindowTooSmall("empty window in series sum");
    }
    TermMap t;
    auto fold = [&](const TermMap& src, bool negate) {
        for (const auto& [e, c] : src) {
            bool in = true;
            for (std::size_t i = 0; i < low.size(); ++i)
                if (e[i] < low[i] || e[i] > cap[i]) { in = false; break; }
            if (!in) continue;
            Rational v = negate ? -c : c;
            auto it = t.find(e);
            if (it == t.end()) t.emplace(e, v);
            else {
                it->second += v;
                if (it->second.isZero()) t.erase(it);
            }
        }
    };
    fold(a.terms(), false);
    fold(b.terms(), subtract);
    return TruncatedMultiSeries(a.arity(), std::move(low), std::move(cap), std::move(t));
}
}  // namespace

TruncatedMultiSeries add(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
    return combine(a, b, false);
}
TruncatedMultiSeries sub(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
    return combine(a, b, true);
}

TruncatedMultiSeries mul(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("series arities differ");
    Exponents low(a.low().size()), cap(a.cap().size());
    for (std::size_t i = 0; i < low.size(); ++i) {
        low[i] = a.low()[i] + b.low()[i];
        cap[i] = std::min(a.cap()[i] + b.low()[i], b.cap()[i] + a.low()[i]);
        if (cap[i] < 0) throw WindowTooSmall("empty window in series product");
    }
    TermMap t;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            Exponents e(ea.size());
            bool in = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > cap[i]) { in = false; break; }
            }
            if (!in) continue;
            Rational prod = ca * cb;
            if (prod.isZero()) continue;
            auto it = t.find(e);
            if (it == t.end()) t.emplace(std::move(e), prod);
            else {
                it->second += prod;
                if (it->second.isZero()) t.erase(it);
            }
        }
    }
    return TruncatedMultiSeries(a.arity(), std::move(low), std::move(cap), std::move(t));
}

TruncatedMultiSeries mulExact(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("series arities differ");
    const std::size_t n = a.low().size();
    TermMap t;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            Exponents e(n);
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            Rational prod = ca * cb;
            if (prod.isZero()) continue;
            auto it = t.find(e);
            if (it == t.end()) t.emplace(std::move(e), prod);
            else {
                it->second += prod;
                if (it->second.isZero()) t.erase(it);
            }
        }
    }
    Exponents low(n, 0), cap(n, 0);
    for (const auto& [e, c] : t) {
        for (std::size_t i = 0; i < n; ++i) {
            low[i] = std::min(low[i], e[i]);
            cap[i] = std::max(cap[i], e[i]);
        }
    }
    return TruncatedMultiSeries(a.arity(), std::move(low), std::move(cap), std::move(t));
}

bool agrees(const TruncatedMultiSeries& a, const TruncatedMultiSeries& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("series arities differ");
    Exponents low(a.low().size()), cap(a.cap().size());
    for (std::size_t i = 0; i < low.size(); ++i) {
        low[i] = std::max(a.low()[i], b.low()[i]);
        cap[i] = std::min(a.cap()[i], b.cap()[i]);
    }
    auto within = [&](const Exponents& e) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < low[i] || e[i] > cap[i]) return false;
        return true;
    };
    for (const auto& [e, c] : a.terms())
        if (within(e) && b.coeff(e) != c) return false;
    for (const auto& [e, c] : b.terms())
        if (within(e) && a.coeff(e) != c) return false;
    return true;
}

TruncatedMultiSeries expand(const RationalExpr& expr, const std::vector<int>& cap,
                            std::optional<int> lowFloor) {
    const int arity = expr.arity();
    if (cap.size() != static_cast<std::size_t>(arity)) throw InvalidArgument("cap size does not match arity");
    for (int c : cap)
        if (c < 0) throw CapNegative("per-variable cap must be >= 0");
    if (!expr.root()) {
        return TruncatedMultiSeries::zero(arity, Exponents(static_cast<std::size_t>(arity), 0), cap);
    }

    const std::size_t n = static_cast<std::size_t>(arity);
    Exponents working = cap;
    EvalSeries st;
    bool done = false;
    for (int round = 0; round < 8 && !done; ++round) {
        st = evalNode(expr.root(), n, working);
        done = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!st.exact && st.hi[i] < cap[i]) {
                working[i] += cap[i] - st.hi[i];
                done = false;
            }
        }
    }
    if (!done) throw InvalidArgument("expansion window failed to stabilize");

    Exponents low(n, 0);
    for (const auto& [e, c] : st.terms)
        for (std::size_t i = 0; i < n; ++i) low[i] = std::min(low[i], e[i]);
    if (lowFloor) {
        for (std::size_t i = 0; i < n; ++i)
            if (low[i] < *lowFloor)
                throw DenominatorVanishes("expansion needs exponent " + std::to_string(low[i]) +
                                          " of x" + std::to_string(i) + ", below the permitted floor " +
                                          std::to_string(*lowFloor));
    }
    TermMap cropped;
    for (const auto& [e, c] : st.terms) {
        bool in = true;
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] < low[i] || e[i] > cap[i]) { in = false; break; }
        if (in) cropped.emplace(e, c);
    }
    return TruncatedMultiSeries(arity, std::move(low), cap, std::move(cropped));
}

namespace {

TermMap laurentNode(const ExprPtr& node, std::size_t n);

TermMap laurentMul(const TermMap& a, const TermMap& b) {
    TermMap r;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Rational prod = ca * cb;
            if (prod.isZero()) continue;
            auto it = r.find(e);
            if (it == r.end()) r.emplace(std::move(e), prod);
            else {
                it->second += prod;
                if (it->second.isZero()) r.erase(it);
            }
        }
    }
    return r;
}

TermMap laurentPow(const TermMap& base, long e, std::size_t n) {
    TermMap acc;
    acc.emplace(Exponents(n, 0), Rational(1));
    if (e == 0) return acc;
    bool negative = e < 0;
    long k = negative ? -e : e;
    TermMap sq = base;
    while (true) {
        if (k & 1) acc = laurentMul(acc, sq);
        k >>= 1;
        if (k == 0) break;
        sq = laurentMul(sq, sq);
    }
    if (!negative) return acc;
    if (acc.size() != 1)
        throw NotLaurentPolynomial("negative power of a non-monomial");
    const auto& [e0, c0] = *acc.begin();
    TermMap inv;
    Exponents ei(n);
    for (std::size_t i = 0; i < n; ++i) ei[i] = -e0[i];
    inv.emplace(std::move(ei), Rational(1) / c0);
    return inv;
}

TermMap laurentNode(const ExprPtr& node, std::size_t n) {
    switch (node->kind) {
        case ExprNode::Kind::Const: {
            TermMap r;
            if (!node->value.isZero()) r.emplace(Exponents(n, 0), node->value);
            return r;
        }
        case ExprNode::Kind::Var: {
            TermMap r;
            Exponents e(n, 0);
            e[static_cast<std::size_t>(node->varIndex)] = 1;
            r.emplace(std::move(e), Rational(1));
            return r;
        }
        case ExprNode::Kind::Add:
        case ExprNode::Kind::Sub: {
            TermMap r = laurentNode(node->left, n);
            for (const auto& [e, c] : laurentNode(node->right, n)) {
                Rational v = node->kind == ExprNode::Kind::Sub ? -c : c;
                auto it = r.find(e);
                if (it == r.end()) r.emplace(e, v);
                else {
                    it->second += v;
                    if (it->second.isZero()) r.erase(it);
                }
            }
            return r;
        }
        case ExprNode::Kind::Mul:
            return laurentMul(laurentNode(node->left, n), laurentNode(node->right, n));
        case ExprNode::Kind::Div: {
            TermMap denom = laurentNode(node->right, n);
            if (denom.size() != 1)
                throw NotLaurentPolynomial("division by a non-monomial has infinite support");
            const auto& [e0, c0] = *denom.begin();
            TermMap shifted;
            for (const auto& [e, c] : laurentNode(node->left, n)) {
                Exponents d(n);
                for (std::size_t i = 0; i < n; ++i) d[i] = e[i] - e0[i];
                shifted.emplace(std::move(d), c / c0);
            }
            return shifted;
        }
        case ExprNode::Kind::Pow:
            return laurentPow(laurentNode(node->left, n), node->exponent, n);
    }
    throw InvalidArgument("corrupt expression node");
}

}  // namespace

TruncatedMultiSeries expandLaurent(const RationalExpr& expr) {
    const std::size_t n = static_cast<std::size_t>(expr.arity());
    TermMap terms = expr.root() ? laurentNode(expr.root(), n) : TermMap{};
    Exponents low(n, 0), cap(n, 0);
    for (const auto& [e, c] : terms) {
        for (std::size_t i = 0; i < n; ++i) {
            low[i] = std::min(low[i], e[i]);
            cap[i] = std::max(cap[i], e[i]);
        }
    }
    return TruncatedMultiSeries(expr.arity(), std::move(low), std::move(cap), std::move(terms));
}

}  // namespace diaglab
