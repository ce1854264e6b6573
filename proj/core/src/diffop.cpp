#include "diaglab/diffop.hpp"

#include <algorithm>
#include <sstream>

#include "diaglab/errors.hpp"

namespace diaglab {

namespace {

// theta^(i+1) = theta * theta^i via x d/dx; in the Stirling table
// S(i+1, j) = j*S(i, j) + S(i, j-1).
std::vector<std::vector<Integer>> stirlingSecond(int n) {
    std::vector<std::vector<Integer>> s(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        s[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Integer(0));
        if (i == 0) {
            s[0][0] = 1;
            continue;
        }
        for (int j = 1; j <= i; ++j) {
            Integer v = s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (j <= i - 1) v += Integer(j) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        }
    }
    return s;
}

// Falling factorial t(t-1)...(t-i+1) as a polynomial in t.
Poly fallingFactorial(int i) {
    Poly p = Poly::constant(Rational(1));
    for (int k = 0; k < i; ++k) p = p * Poly({Rational(-k), Rational(1)});
    return p;
}

}  // namespace

DiffOp::DiffOp(OpForm form, std::vector<Poly> coeffs) : form_(form), c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

DiffOp DiffOp::theta() { return DiffOp(OpForm::Theta, {Poly(), Poly::constant(Rational(1))}); }
DiffOp DiffOp::dx() { return DiffOp(OpForm::Dx, {Poly(), Poly::constant(Rational(1))}); }
DiffOp DiffOp::thetaShift(const Rational& a) {
    return DiffOp(OpForm::Theta, {Poly::constant(a), Poly::constant(Rational(1))});
}
DiffOp DiffOp::multiplication(OpForm form, Poly p) { return DiffOp(form, {std::move(p)}); }

const Poly& DiffOp::coeff(int i) const {
    static const Poly kZero;
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

int DiffOp::maxXDegree() const {
    int d = -1;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
}

int DiffOp::minXValuation() const {
    int v = -1;
    for (const auto& p : c_) {
        if (p.isZero()) continue;
        int pv = p.valuation();
        v = (v < 0) ? pv : std::min(v, pv);
    }
    return v;
}

std::string DiffOp::str() const {
    if (isZero()) return "0";
    const char* sym = form_ == OpForm::Theta ? "θ" : "D";
    std::ostringstream os;
    bool first = true;
    for (int i = order(); i >= 0; --i) {
        const Poly& p = coeff(i);
        if (p.isZero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << p.str() << ")";
        if (i > 0) {
            os << "*" << sym;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

DiffOp toDxForm(const DiffOp& op) {
    if (op.form() == OpForm::Dx) return op;
    if (op.isZero()) return DiffOp(OpForm::Dx, {});
    int r = op.order();
    auto S = stirlingSecond(r);
    std::vector<Poly> a(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) {
        const Poly& p = op.coeff(i);
        if (p.isZero()) continue;
        for (int j = (i == 0 ? 0 : 1); j <= i; ++j) {
            Integer s = S[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (s == 0) continue;
            a[static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(j)] + p.scaled(Rational(s)).shiftExponent(j);
        }
    }
    return DiffOp(OpForm::Dx, std::move(a));
}

DiffOp toThetaForm(const DiffOp& op) {
    if (op.form() == OpForm::Theta) return op;
    if (op.isZero()) return DiffOp(OpForm::Theta, {});
    int r = op.order();
    std::vector<Poly> p(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) {
        const Poly& a = op.coeff(i);
        if (a.isZero()) continue;
        // x^r a_i(x) D^i = a_i(x) x^{r-i} [theta]_i
        Poly factor = a.shiftExponent(r - i);
        Poly fall = fallingFactorial(i);
        for (int t = 0; t <= fall.degree(); ++t) {
            Rational c = fall.coeff(t);
            if (c.isZero()) continue;
            p[static_cast<std::size_t>(t)] = p[static_cast<std::size_t>(t)] + factor.scaled(c);
        }
    }
    DiffOp theta(OpForm::Theta, std::move(p));
    int v = theta.minXValuation();
    if (v > 0) {
        std::vector<Poly> cleared;
        cleared.reserve(theta.coeffs().size());
        for (const auto& q : theta.coeffs()) cleared.push_back(q.isZero() ? q : q.shiftExponent(-v));
        theta = DiffOp(OpForm::Theta, std::move(cleared));
    }
    return theta;
}

UniSeries applyOp(const DiffOp& op, const UniSeries& f) {
    if (op.isZero()) return UniSeries::zero(f.trunc());
    if (op.form() == OpForm::Theta) {
        int minVal = op.minXValuation();
        int outTrunc = f.trunc() + minVal;
        std::vector<Rational> v(static_cast<std::size_t>(outTrunc) + 1, Rational(0));
        for (int i = 0; i <= op.order(); ++i) {
            const Poly& p = op.coeff(i);
            for (int d = 0; d <= p.degree(); ++d) {
                Rational c = p.coeff(d);
                if (c.isZero()) continue;
                for (int k = d; k <= outTrunc; ++k) {
                    int src = k - d;
                    if (src > f.trunc()) continue;
                    // theta^i contributes src^i at x^src.
                    Rational t = f.coeff(src);
                    if (t.isZero()) continue;
                    v[static_cast<std::size_t>(k)] += c * Rational(src).pow(i) * t;
                }
            }
        }
        return UniSeries(outTrunc, std::move(v));
    }

    // d/dx form
    if (f.trunc() < op.order()) throw WindowTooSmall("series window shorter than operator order");
    int shift = 0;
    bool haveTerm = false;
    for (int i = 0; i <= op.order(); ++i) {
        const Poly& a = op.coeff(i);
        if (a.isZero()) continue;
        int val = a.valuation();
        int s = val - i;
        shift = haveTerm ? std::min(shift, s) : s;
        haveTerm = true;
    }
    int outTrunc = f.trunc() + shift;
    if (outTrunc < 0) throw WindowTooSmall("operator shifts the window below order 0");
    std::vector<Rational> v(static_cast<std::size_t>(outTrunc) + 1, Rational(0));
    for (int i = 0; i <= op.order(); ++i) {
        const Poly& a = op.coeff(i);
        if (a.isZero()) continue;
        for (int d = 0; d <= a.degree(); ++d) {
            Rational c = a.coeff(d);
            if (c.isZero()) continue;
            for (int k = 0; k <= outTrunc; ++k) {
                int m = k - d;
                if (m < 0) continue;
                // (D^i f)_m = (m+1)...(m+i) f_{m+i}
                if (m + i > f.trunc()) continue;
                Rational t = f.coeff(m + i);
                if (t.isZero()) continue;
                Rational fall(1);
                for (int u = 1; u <= i; ++u) fall *= Rational(m + u);
                v[static_cast<std::size_t>(k)] += c * fall * t;
            }
        }
    }
    return UniSeries(outTrunc, std::move(v));
}

namespace {

DiffOp multiplyTheta(const DiffOp& a, const DiffOp& b) {
    std::vector<Poly> out;
    for (int i = 0; i <= a.order(); ++i) {
        const Poly& pa = a.coeff(i);
        if (pa.isZero()) continue;
        for (int j = 0; j <= b.order(); ++j) {
            const Poly& qb = b.coeff(j);
            for (int d = 0; d <= qb.degree(); ++d) {
                Rational q = qb.coeff(d);
                if (q.isZero()) continue;
                // theta^i x^d = x^d (theta + d)^i, expanded over theta powers
                for (int s = 0; s <= i; ++s) {
                    Rational coeff = Rational(binomial(static_cast<unsigned long>(i),
                                                       static_cast<unsigned long>(s))) *
                                     Rational(d).pow(i - s);
                    if (coeff.isZero()) continue;
                    int power = s + j;
                    if (static_cast<int>(out.size()) <= power) out.resize(static_cast<std::size_t>(power) + 1);
                    out[static_cast<std::size_t>(power)] =
                        out[static_cast<std::size_t>(power)] + pa.scaled(q * coeff).shiftExponent(d);
                }
            }
        }
    }
    return DiffOp(OpForm::Theta, std::move(out));
}

DiffOp multiplyDx(const DiffOp& a, const DiffOp& b) {
    std::vector<Poly> out;
    for (int i = 0; i <= a.order(); ++i) {
        const Poly& pa = a.coeff(i);
        if (pa.isZero()) continue;
        for (int j = 0; j <= b.order(); ++j) {
            Poly der = b.coeff(j);
            // D^i (b_j D^j) = sum_s C(i,s) b_j^{(s)} D^{i-s+j}
            for (int s = 0; s <= i; ++s) {
                if (!der.isZero()) {
                    int power = i - s + j;
                    Rational c(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(s)));
                    if (static_cast<int>(out.size()) <= power) out.resize(static_cast<std::size_t>(power) + 1);
                    out[static_cast<std::size_t>(power)] =
                        out[static_cast<std::size_t>(power)] + pa * der.scaled(c);
                }
                der = der.derivative();
            }
        }
    }
    return DiffOp(OpForm::Dx, std::move(out));
}

}  // namespace

DiffOp multiply(const DiffOp& a, const DiffOp& b) {
    if (a.isZero() || b.isZero()) return DiffOp(a.form(), {});
    if (a.form() == OpForm::Theta && b.form() == OpForm::Theta) return multiplyTheta(a, b);
    // Mixed products compose in d/dx form; theta -> d/dx is an exact identity.
    return multiplyDx(toDxForm(a), toDxForm(b));
}

DiffOp addOp(const DiffOp& a, const DiffOp& b) {
    if (a.form() != b.form()) throw InvalidArgument("cannot add operators in different forms");
    std::vector<Poly> out(static_cast<std::size_t>(std::max(a.order(), b.order())) + 1);
    for (int i = 0; i < static_cast<int>(out.size()); ++i)
        out[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
    return DiffOp(a.form(), std::move(out));
}

DiffOp subOp(const DiffOp& a, const DiffOp& b) { return addOp(a, scaleOp(b, Rational(-1))); }

DiffOp scaleOp(const DiffOp& a, const Rational& s) {
    std::vector<Poly> out;
    out.reserve(a.coeffs().size());
    for (const auto& p : a.coeffs()) out.push_back(p.scaled(s));
    return DiffOp(a.form(), std::move(out));
}

DiffOp normalized(const DiffOp& op) {
    if (op.isZero()) return op;
    Integer gnum(0), dlcm(1);
    for (const auto& p : op.coeffs()) {
        for (const auto& c : p.coeffs()) {
            if (c.isZero()) continue;
            Integer g;
            mpz_gcd(g.get_mpz_t(), gnum.get_mpz_t(), c.numerator().get_mpz_t());
            gnum = g;
            Integer l;
            mpz_lcm(l.get_mpz_t(), dlcm.get_mpz_t(), c.denominator().get_mpz_t());
            dlcm = l;
        }
    }
    Rational content(gnum, dlcm);
    if (op.leading().leading().sign() < 0) content = -content;
    return scaleOp(op, Rational(1) / content);
}

bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.form() == b.form() && a.coeffs() == b.coeffs();
}

bool isRegularSingularAtZero(const DiffOp& op) {
    DiffOp d = toDxForm(op);
    if (d.isZero()) throw InvalidArgument("zero operator has no singularity type");
    int r = d.order();
    int leadVal = d.leading().valuation();
    for (int i = 0; i < r; ++i) {
        const Poly& a = d.coeff(i);
        if (a.isZero()) continue;
        if (a.valuation() < leadVal - (r - i)) return false;
    }
    return true;
}

}  // namespace diaglab
