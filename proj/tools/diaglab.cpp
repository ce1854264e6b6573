// diaglab: exact-arithmetic computations with diagonals of rational
// functions, Hadamard products, hypergeometric operators, and local
// analysis of linear ODEs at the origin. All output is JSON with exact
// rational strings; --pretty switches to indented or human-readable form.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "diaglab/catalog.hpp"
#include "diaglab/errors.hpp"
#include "diaglab/grade.hpp"
#include "diaglab/hypergeom.hpp"
#include "diaglab/json_io.hpp"

namespace {

using diaglab::Json;

bool gPretty = false;

void emit(const Json& j) {
    if (gPretty) std::cout << j.dump(2) << "\n";
    else std::cout << j.dump() << "\n";
}

void emitText(const std::string& text) { std::cout << text << "\n"; }

std::string readInput(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw diaglab::InvalidArgument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json readJson(const std::string& path) {
    try {
        return Json::parse(readInput(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw diaglab::ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

diaglab::UniSeries readSeries(const std::string& path) {
    return diaglab::uniSeriesFromJson(readJson(path));
}

std::vector<int> uniformCap(int arity, int order) {
    return std::vector<int>(static_cast<std::size_t>(arity), order);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact diagonals, Hadamard products, and local ODE analysis"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--pretty", gPretty, "indented / human-readable output");

    std::string exprText, paramsText, at = "0";
    std::string seriesFile, msFile, opFile, fFile, gFile, diagRepFile, hadRepFile;
    int order = 10, nIndex = 1, arity = 1, resR = 0, resM = 1;
    int maxOrder = 3, maxDeg = 4, window = 8, maxM = 6;
    std::uint64_t seed = 1;
    std::optional<int> windowOpt;
    std::string entryName;

    // expand
    auto* cmdExpand = app.add_subcommand("expand", "expand an expression at the origin");
    cmdExpand->add_option("--expr", exprText)->required();
    cmdExpand->add_option("--arity", arity)->required();
    cmdExpand->add_option("--order,-N", order, "per-variable exponent cap");
    cmdExpand->callback([&] {
        auto ms = diaglab::expand(diaglab::parseExpr(exprText, arity), uniformCap(arity, order));
        emit(diaglab::toJson(ms));
    });

    // diag
    auto* cmdDiag = app.add_subcommand("diag", "diagonal of a rational function or series");
    cmdDiag->add_option("--expr", exprText);
    cmdDiag->add_option("--ms-file", msFile, "multivariate series JSON (use - for stdin)");
    cmdDiag->add_option("--n", nIndex, "diagonal index; the expression has n+1 variables")->required();
    cmdDiag->add_option("--order,-N", order);
    cmdDiag->callback([&] {
        if (exprText.empty() == msFile.empty())
            throw diaglab::InvalidArgument("need exactly one of --expr and --ms-file");
        diaglab::TruncatedMultiSeries ms =
            msFile.empty()
                ? diaglab::expand(diaglab::parseExpr(exprText, nIndex + 1), uniformCap(nIndex + 1, order))
                : diaglab::multiSeriesFromJson(readJson(msFile));
        emit(diaglab::toJson(diaglab::diagonal(ms, nIndex)));
    });

    // hadamard
    auto* cmdHad = app.add_subcommand("hadamard", "coefficientwise product of two series");
    cmdHad->add_option("--f-file", fFile)->required();
    cmdHad->add_option("--g-file", gFile)->required();
    cmdHad->callback([&] {
        emit(diaglab::toJson(diaglab::hadamard(readSeries(fFile), readSeries(gFile))));
    });

    // section
    auto* cmdSection = app.add_subcommand("section", "arithmetic-progression subsequence of coefficients");
    cmdSection->add_option("--series-file", seriesFile)->required();
    cmdSection->add_option("--r", resR)->required();
    cmdSection->add_option("--m", resM)->required();
    cmdSection->callback([&] {
        emit(diaglab::toJson(diaglab::section(readSeries(seriesFile), resR, resM)));
    });

    // dmap
    auto* cmdDmap = app.add_subcommand("dmap", "keep terms whose last exponent is the sum of the others");
    cmdDmap->add_option("--ms-file", msFile)->required();
    cmdDmap->callback([&] {
        emit(diaglab::toJson(diaglab::dmap(diaglab::multiSeriesFromJson(readJson(msFile)))));
    });

    // cts
    auto* cmdCts = app.add_subcommand("cts", "constant terms of powers of a Laurent polynomial");
    cmdCts->add_option("--expr", exprText)->required();
    cmdCts->add_option("--arity", arity)->required();
    cmdCts->add_option("--order,-N", order);
    cmdCts->callback([&] {
        emit(diaglab::toJson(
            diaglab::constantTermSeries(diaglab::parseExpr(exprText, arity), order)));
    });

    // hg
    auto* cmdHg = app.add_subcommand("hg", "hypergeometric parameter computations");
    cmdHg->require_subcommand(1);
    auto* hgCoeffsCmd = cmdHg->add_subcommand("coeffs", "series coefficients");
    hgCoeffsCmd->add_option("--params", paramsText)->required();
    hgCoeffsCmd->add_option("--order,-N", order);
    hgCoeffsCmd->callback([&] {
        emit(diaglab::toJson(diaglab::hgCoeffs(diaglab::HypergeomParams::parse(paramsText), order)));
    });
    auto* hgOpCmd = cmdHg->add_subcommand("op", "annihilating operator in theta form");
    hgOpCmd->add_option("--params", paramsText)->required();
    hgOpCmd->callback([&] {
        auto op = diaglab::hgOperator(diaglab::HypergeomParams::parse(paramsText));
        if (gPretty) emitText(op.str());
        else emit(diaglab::toJson(op));
    });
    auto* hgJordanCmd = cmdHg->add_subcommand("jordan", "Jordan structure of the local monodromy");
    hgJordanCmd->add_option("--params", paramsText)->required();
    hgJordanCmd->add_option("--at", at, "0 (from betas) or inf (from alphas)");
    hgJordanCmd->callback([&] {
        auto p = diaglab::HypergeomParams::parse(paramsText);
        if (at != "0" && at != "inf") throw diaglab::InvalidArgument("--at must be 0 or inf");
        auto js = diaglab::leveltJordan(diaglab::rotationsOf(at == "0" ? p.beta() : p.alpha()));
        if (gPretty) {
            for (const auto& b : js.blocks)
                emitText("rot=" + b.rotation.value.str() + ": size " + std::to_string(b.size));
        } else {
            emit(diaglab::toJson(js));
        }
    });
    auto* hgHeightCmd = cmdHg->add_subcommand("height", "integer-beta count minus integer-alpha count");
    hgHeightCmd->add_option("--params", paramsText)->required();
    hgHeightCmd->callback([&] {
        Json j;
        j["height"] = diaglab::height(diaglab::HypergeomParams::parse(paramsText));
        emit(j);
    });
    auto* hgContractCmd = cmdHg->add_subcommand("contract", "remove resonant pairs");
    hgContractCmd->add_option("--params", paramsText)->required();
    hgContractCmd->callback([&] {
        emit(diaglab::toJson(diaglab::contract(diaglab::HypergeomParams::parse(paramsText))));
    });

    // ode
    auto* cmdOde = app.add_subcommand("ode", "local analysis of differential operators at 0");
    cmdOde->require_subcommand(1);
    auto* odeIndicial = cmdOde->add_subcommand("indicial", "indicial polynomial and its rational roots");
    odeIndicial->add_option("--op-file", opFile)->required();
    odeIndicial->callback([&] {
        auto data = diaglab::indicial(diaglab::diffOpFromJson(readJson(opFile)));
        Json j;
        Json chi = Json::array();
        for (const auto& c : data.chi.coeffs()) chi.push_back(c.str());
        j["chi"] = chi;
        Json roots = Json::array();
        for (const auto& [r, m] : data.roots) roots.push_back(Json::array({r.str(), m}));
        j["roots"] = roots;
        emit(j);
    });
    auto* odeFrob = cmdOde->add_subcommand("frobenius", "formal solution basis with logarithms");
    odeFrob->add_option("--op-file", opFile)->required();
    odeFrob->add_option("--order,-N", order);
    odeFrob->callback([&] {
        auto basis = diaglab::frobeniusBasis(diaglab::diffOpFromJson(readJson(opFile)), order);
        Json arr = Json::array();
        for (const auto& s : basis) arr.push_back(diaglab::toJson(s));
        emit(arr);
    });
    auto* odeNil = cmdOde->add_subcommand("nil", "nilpotence index of an operator");
    odeNil->add_option("--op-file", opFile)->required();
    odeNil->callback([&] {
        emit(diaglab::toJson(diaglab::nilIndex(diaglab::diffOpFromJson(readJson(opFile))), true));
    });
    auto* odeGuess = cmdOde->add_subcommand("guess", "minimal annihilating operator from a series");
    odeGuess->add_option("--series-file", seriesFile)->required();
    odeGuess->add_option("--max-order", maxOrder);
    odeGuess->add_option("--max-deg", maxDeg);
    odeGuess->callback([&] {
        auto op = diaglab::guessOperator(readSeries(seriesFile), maxOrder, maxDeg);
        if (!op) emit(Json(nullptr));
        else if (gPretty) emitText(op->str());
        else emit(diaglab::toJson(*op));
    });
    auto* odeApply = cmdOde->add_subcommand("apply", "apply an operator to a series");
    odeApply->add_option("--op-file", opFile)->required();
    odeApply->add_option("--series-file", seriesFile)->required();
    odeApply->callback([&] {
        emit(diaglab::toJson(
            diaglab::applyOp(diaglab::diffOpFromJson(readJson(opFile)), readSeries(seriesFile))));
    });

    // nil (series route)
    auto* cmdNil = app.add_subcommand("nil", "guess the minimal operator of a series and report Nil");
    cmdNil->add_option("--series-file", seriesFile)->required();
    cmdNil->add_option("--max-order", maxOrder);
    cmdNil->add_option("--max-deg", maxDeg);
    cmdNil->callback([&] {
        auto nos = diaglab::nilOfSeries(readSeries(seriesFile), maxOrder, maxDeg);
        Json j = diaglab::toJson(nos.report, false);
        j["operator"] = diaglab::toJson(nos.op);
        emit(j);
    });

    // grade
    auto* cmdGrade = app.add_subcommand("grade", "grade bounds and representation checks");
    cmdGrade->require_subcommand(1);
    auto* gradeBoundsCmd = cmdGrade->add_subcommand("bounds", "lower/upper grade bounds");
    gradeBoundsCmd->add_option("--series-file", seriesFile)->required();
    gradeBoundsCmd->add_option("--diag-rep-file", diagRepFile);
    gradeBoundsCmd->add_option("--had-rep-file", hadRepFile);
    gradeBoundsCmd->add_option("--max-order", maxOrder);
    gradeBoundsCmd->add_option("--max-deg", maxDeg);
    gradeBoundsCmd->add_option("--window", window);
    gradeBoundsCmd->callback([&] {
        std::optional<diaglab::DiagonalRep> diag;
        std::optional<diaglab::HadamardRep> had;
        if (!diagRepFile.empty()) diag = diaglab::diagonalRepFromJson(readJson(diagRepFile));
        if (!hadRepFile.empty()) had = diaglab::hadamardRepFromJson(readJson(hadRepFile));
        emit(diaglab::toJson(
            diaglab::gradeBounds(readSeries(seriesFile), diag, had, maxOrder, maxDeg, window)));
    });
    auto* gradeVd = cmdGrade->add_subcommand("verify-diag", "check a diagonal representation");
    gradeVd->add_option("--diag-rep-file", diagRepFile)->required();
    gradeVd->add_option("--series-file", seriesFile)->required();
    gradeVd->add_option("--window", window);
    gradeVd->callback([&] {
        Json j;
        j["verified"] = diaglab::verifyDiagonalRep(diaglab::diagonalRepFromJson(readJson(diagRepFile)),
                                                   readSeries(seriesFile), window);
        j["window"] = window;
        emit(j);
    });
    auto* gradeVh = cmdGrade->add_subcommand("verify-had", "check a Hadamard representation");
    gradeVh->add_option("--had-rep-file", hadRepFile)->required();
    gradeVh->add_option("--series-file", seriesFile)->required();
    gradeVh->add_option("--window", window);
    gradeVh->callback([&] {
        Json j;
        j["verified"] = diaglab::verifyHadamardRep(diaglab::hadamardRepFromJson(readJson(hadRepFile)),
                                                   readSeries(seriesFile), window);
        j["window"] = window;
        emit(j);
    });
    auto* gradeZd = cmdGrade->add_subcommand("zerodiv", "zero-divisor witness from vanishing sections");
    gradeZd->add_option("--f-file", fFile)->required();
    gradeZd->add_option("--g-file", gFile)->required();
    gradeZd->add_option("--max-m", maxM);
    gradeZd->add_option("--window", window);
    gradeZd->callback([&] {
        auto w = diaglab::zeroDivisorWitness(readSeries(fFile), readSeries(gFile), maxM, window);
        if (!w) {
            emit(Json(nullptr));
            return;
        }
        Json j;
        j["m"] = w->m;
        j["fResidues"] = w->fResidues;
        j["gResidues"] = w->gResidues;
        emit(j);
    });

    // catalog
    auto* cmdCatalog = app.add_subcommand("catalog", "built-in worked examples");
    cmdCatalog->require_subcommand(1);
    auto* catList = cmdCatalog->add_subcommand("list", "list the entries");
    catList->callback([&] {
        Json arr = Json::array();
        for (const auto& e : diaglab::catalogEntries()) {
            Json j;
            j["name"] = e.name;
            j["summary"] = e.summary;
            j["defaultWindow"] = e.defaultWindow;
            arr.push_back(j);
        }
        emit(arr);
    });
    auto* catRun = cmdCatalog->add_subcommand("run", "run every check of one entry");
    catRun->add_option("name", entryName)->required();
    int windowFlag = -1;
    catRun->add_option("--window", windowFlag, "override the expansion window");
    catRun->add_option("--seed", seed, "seed for the randomized compatibility sample");
    catRun->callback([&] {
        const auto* entry = diaglab::findCatalogEntry(entryName);
        if (!entry) throw diaglab::InvalidArgument("no catalog entry named '" + entryName + "'");
        if (windowFlag >= 0) windowOpt = windowFlag;
        emit(diaglab::toJson(diaglab::runCatalogEntry(*entry, windowOpt, seed)));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const diaglab::Error& e) {
        Json j;
        j["error"] = {{"code", e.code()}, {"message", e.what()}};
        emit(j);
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = {{"code", "internal_error"}, {"message", e.what()}};
        emit(j);
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
