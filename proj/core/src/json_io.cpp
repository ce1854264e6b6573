#include "diaglab/json_io.hpp"

#include "diaglab/errors.hpp"

namespace diaglab {

namespace {

Json polyToJson(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

Poly polyFromJson(const Json& j) {
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(Rational::fromString(e.get<std::string>()));
    return Poly(std::move(c));
}

[[noreturn]] void badField(const std::string& what) {
    throw ParseError("malformed JSON: " + what);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) badField(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json toJson(const Rational& r) { return r.str(); }

Rational rationalFromJson(const Json& j) {
    if (!j.is_string()) badField("rational values are strings like \"p/q\"");
    return Rational::fromString(j.get<std::string>());
}

Json toJson(const UniSeries& s) {
    Json j;
    j["trunc"] = s.trunc();
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
    j["coeffs"] = coeffs;
    return j;
}

UniSeries uniSeriesFromJson(const Json& j) {
    int trunc = field(j, "trunc").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : field(j, "coeffs")) coeffs.push_back(Rational::fromString(c.get<std::string>()));
    return UniSeries(trunc, std::move(coeffs));
}

Json toJson(const TruncatedMultiSeries& s) {
    Json j;
    j["arity"] = s.arity();
    j["low"] = s.low();
    j["cap"] = s.cap();
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) {
        Json t = Json::array();
        t.push_back(e);
        t.push_back(c.str());
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

TruncatedMultiSeries multiSeriesFromJson(const Json& j) {
    int arity = field(j, "arity").get<int>();
    auto low = field(j, "low").get<std::vector<int>>();
    auto cap = field(j, "cap").get<std::vector<int>>();
    TruncatedMultiSeries::TermMap terms;
    for (const auto& t : field(j, "terms")) {
        if (!t.is_array() || t.size() != 2) badField("each term is [[exponents], \"p/q\"]");
        terms.emplace(t.at(0).get<std::vector<int>>(), Rational::fromString(t.at(1).get<std::string>()));
    }
    return TruncatedMultiSeries(arity, std::move(low), std::move(cap), std::move(terms));
}

Json toJson(const DiffOp& op) {
    Json j;
    j["form"] = op.form() == OpForm::Theta ? "theta" : "dx";
    Json coeffs = Json::array();
    for (const auto& p : op.coeffs()) coeffs.push_back(polyToJson(p));
    j["coeffs"] = coeffs;
    return j;
}

DiffOp diffOpFromJson(const Json& j) {
    std::string form = field(j, "form").get<std::string>();
    if (form != "theta" && form != "dx") badField("form must be \"theta\" or \"dx\"");
    std::vector<Poly> coeffs;
    for (const auto& p : field(j, "coeffs")) coeffs.push_back(polyFromJson(p));
    return DiffOp(form == "theta" ? OpForm::Theta : OpForm::Dx, std::move(coeffs));
}

Json toJson(const AlgebraicSpec& spec) {
    Json j;
    if (const auto* bp = std::get_if<BinomialPower>(&spec.kind)) {
        j["kind"] = "binomialPower";
        j["c"] = bp->c.str();
        j["gamma"] = bp->gamma.str();
        return j;
    }
    const auto& pr = std::get<PolynomialRoot>(spec.kind);
    j["kind"] = "polynomialRoot";
    Json ann = Json::array();
    for (const auto& [e, c] : pr.annihilator.terms) {
        Json t = Json::array();
        t.push_back(Json::array({e.first, e.second}));
        t.push_back(c.str());
        ann.push_back(t);
    }
    j["annihilator"] = ann;
    Json seed = Json::array();
    for (const auto& c : pr.seed) seed.push_back(c.str());
    j["seed"] = seed;
    return j;
}

AlgebraicSpec algebraicSpecFromJson(const Json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "binomialPower") {
        BinomialPower bp;
        bp.c = Rational::fromString(field(j, "c").get<std::string>());
        bp.gamma = Rational::fromString(field(j, "gamma").get<std::string>());
        return AlgebraicSpec{bp};
    }
    if (kind != "polynomialRoot") badField("kind must be binomialPower or polynomialRoot");
    PolynomialRoot pr;
    for (const auto& t : field(j, "annihilator")) {
        if (!t.is_array() || t.size() != 2 || !t.at(0).is_array() || t.at(0).size() != 2)
            badField("annihilator terms are [[i, j], \"p/q\"]");
        pr.annihilator.terms[{t.at(0).at(0).get<int>(), t.at(0).at(1).get<int>()}] =
            Rational::fromString(t.at(1).get<std::string>());
    }
    for (const auto& c : field(j, "seed")) pr.seed.push_back(Rational::fromString(c.get<std::string>()));
    return AlgebraicSpec{pr};
}

Json toJson(const DiagonalRep& rep) {
    Json j;
    j["expr"] = rep.expr.str();
    j["arity"] = rep.expr.arity();
    j["claimedGrade"] = rep.claimedGrade;
    return j;
}

DiagonalRep diagonalRepFromJson(const Json& j) {
    int arity = field(j, "arity").get<int>();
    RationalExpr expr = parseExpr(field(j, "expr").get<std::string>(), arity);
    return makeDiagonalRep(std::move(expr), field(j, "claimedGrade").get<int>());
}

Json toJson(const HadamardRep& rep) {
    Json j;
    Json factors = Json::array();
    for (const auto& f : rep.factors) factors.push_back(toJson(f));
    j["factors"] = factors;
    return j;
}

HadamardRep hadamardRepFromJson(const Json& j) {
    HadamardRep rep;
    for (const auto& f : field(j, "factors")) rep.factors.push_back(algebraicSpecFromJson(f));
    if (rep.factors.empty()) badField("Hadamard representation needs at least one factor");
    return rep;
}

Json toJson(const FormalSolution& s) {
    Json j;
    j["exponent"] = s.exponent.str();
    j["logDegree"] = s.logDegree;
    j["trunc"] = s.trunc;
    Json terms = Json::array();
    for (const auto& [jk, c] : s.table) {
        Json t = Json::array();
        t.push_back(Json::array({jk.first, jk.second}));
        t.push_back(c.str());
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

Json toJson(const NilReport& r, bool includeBasis) {
    Json j;
    j["nil"] = r.nil;
    Json exps = Json::array();
    for (const auto& [root, mult] : r.exponents) exps.push_back(Json::array({root.str(), mult}));
    j["exponents"] = exps;
    if (includeBasis) {
        Json basis = Json::array();
        for (const auto& s : r.basis) basis.push_back(toJson(s));
        j["basis"] = basis;
    } else {
        Json degrees = Json::array();
        for (const auto& s : r.basis) degrees.push_back(s.logDegree);
        j["logDegrees"] = degrees;
    }
    return j;
}

Json toJson(const JordanStructure& js) {
    Json blocks = Json::array();
    for (const auto& b : js.blocks) {
        Json e;
        e["rotation"] = b.rotation.value.str();
        e["size"] = b.size;
        blocks.push_back(e);
    }
    Json j;
    j["blocks"] = blocks;
    return j;
}

Json toJson(const Contraction& c) {
    Json j;
    auto list = [](const std::vector<Rational>& v) {
        Json arr = Json::array();
        for (const auto& r : v) arr.push_back(r.str());
        return arr;
    };
    j["alphaReduced"] = list(c.alphaReduced);
    j["betaReduced"] = list(c.betaReduced);
    j["gammas"] = list(c.gammas);
    j["deltas"] = list(c.deltas);
    Json removed = Json::array();
    for (const auto& r : c.removed) {
        Json e;
        e["i"] = r.i;
        e["j"] = r.j;
        e["difference"] = r.difference.get_str();
        removed.push_back(e);
    }
    j["removed"] = removed;
    return j;
}

Json toJson(const GradeBounds& b) {
    Json j;
    j["lower"] = b.lower;
    j["upper"] = b.upper ? Json(*b.upper) : Json(nullptr);
    j["window"] = b.window;
    Json lowerEv;
    if (b.rationalRecognized) {
        lowerEv["rational"] = true;
        lowerEv["numerator"] = b.rationalForm->numerator.str();
        lowerEv["denominator"] = b.rationalForm->denominator.str();
    } else {
        lowerEv["rational"] = false;
        if (b.nil) lowerEv["nil"] = toJson(*b.nil, false);
        if (b.guessedOperator) lowerEv["operator"] = toJson(*b.guessedOperator);
    }
    j["lowerEvidence"] = lowerEv;
    if (b.upperEvidence.empty()) {
        j["upperEvidence"] = Json(nullptr);
    } else {
        Json upperEv;
        upperEv["kind"] = b.upperEvidence;
        j["upperEvidence"] = upperEv;
    }
    return j;
}

Json toJson(const CatalogVerdict& v) {
    Json j;
    j["name"] = v.name;
    j["window"] = v.window;
    j["guessWindow"] = v.guessWindow;
    j["seed"] = v.seed;
    Json checks = Json::array();
    for (const auto& c : v.checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["gradeBounds"] = v.bounds ? toJson(*v.bounds) : Json(nullptr);
    j["allPass"] = v.allPass;
    return j;
}

}  // namespace diaglab
