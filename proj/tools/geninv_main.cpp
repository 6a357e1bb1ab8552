#include "geninv/equations.hpp"
#include "geninv/errors.hpp"
#include "geninv/geninv.hpp"
#include "geninv/matrix_io.hpp"
#include "geninv/suite.hpp"
#include "geninv/theorems.hpp"
#include "geninv/weighted.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace geninv;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitNotExists = 2;
constexpr int kExitBadInput = 3;

std::vector<std::string> splitList(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

WeightPolicy parsePolicy(const std::string& text) {
    if (text == "require-hermitian") return WeightPolicy::RequireHermitian;
    if (text == "allow-non-hermitian") return WeightPolicy::AllowNonHermitian;
    throw ParseError("unknown weight policy: " + text);
}

void emitMatrix(const std::string& outPath, const Matrix& value) {
    if (outPath.empty())
        std::cout << matrixToJson(value).dump(2) << "\n";
    else
        writeMatrixFile(outPath, value);
}

void emitJson(const std::string& outPath, const nlohmann::ordered_json& value) {
    if (outPath.empty()) {
        std::cout << value.dump(2) << "\n";
    } else {
        std::ofstream out(outPath);
        if (!out) throw Error("cannot write " + outPath);
        out << value.dump(2) << "\n";
    }
}

struct ComputeArgs {
    std::string kind;
    std::string matrixPath;
    std::string weightM;
    std::string weightN;
    std::string weightW;
    std::string outPath;
    std::string policy = "require-hermitian";
};

int runCompute(const ComputeArgs& args) {
    Matrix a = readMatrixFile(args.matrixPath);
    std::optional<Matrix> m, n, w;
    if (!args.weightM.empty()) m = readMatrixFile(args.weightM);
    if (!args.weightN.empty()) n = readMatrixFile(args.weightN);
    if (!args.weightW.empty()) w = readMatrixFile(args.weightW);
    WeightPolicy policy = parsePolicy(args.policy);

    auto notExists = [&](NotExistsReason reason) {
        nlohmann::ordered_json j;
        j["exists"] = false;
        j["reason"] = notExistsReasonName(reason);
        emitJson(args.outPath, j);
        return kExitNotExists;
    };
    auto fromOutcome = [&](const ExistenceOutcome& outcome) {
        if (!outcome.exists()) return notExists(*outcome.reason);
        emitMatrix(args.outPath, *outcome.witness);
        return kExitOk;
    };

    const std::string& kind = args.kind;
    if (kind == "mp") {
        emitMatrix(args.outPath, mpInverse(a));
        return kExitOk;
    }
    if (kind == "one" || kind == "1") {
        emitMatrix(args.outPath, oneInverse(a));
        return kExitOk;
    }
    if (kind == "group") {
        auto g = groupInverse(a);
        if (!g) return notExists(NotExistsReason::IndexTooHigh);
        emitMatrix(args.outPath, *g);
        return kExitOk;
    }
    if (kind == "drazin") {
        emitMatrix(args.outPath, drazinInverse(a));
        return kExitOk;
    }
    if (kind == "core") {
        auto c = coreInverse(a);
        if (!c) return notExists(NotExistsReason::IndexTooHigh);
        emitMatrix(args.outPath, *c);
        return kExitOk;
    }
    if (kind == "core-ep") {
        emitMatrix(args.outPath, coreEpInverse(a));
        return kExitOk;
    }
    if (kind == "w-core-ep") {
        if (!w) throw MissingContext("kind w-core-ep requires --weight-w");
        emitMatrix(args.outPath, wWeightedCoreEp(a, *w));
        return kExitOk;
    }
    if (kind == "core-M") {
        if (!m) throw MissingContext("kind core-M requires --weight-m");
        return fromOutcome(mWeightedCore(WeightedProblem::make(a, m, std::nullopt, policy)));
    }
    if (kind == "dual-core-N") {
        if (!n) throw MissingContext("kind dual-core-N requires --weight-n");
        return fromOutcome(nWeightedDualCore(WeightedProblem::make(a, std::nullopt, n, policy)));
    }
    if (kind == "weighted-mp") {
        if (!m || !n) throw MissingContext("kind weighted-mp requires --weight-m and --weight-n");
        return fromOutcome(weightedMp(WeightedProblem::make(a, m, n, policy)));
    }
    if (kind == "one-3M" || kind == "1-3M") {
        if (!m) throw MissingContext("kind one-3M requires --weight-m");
        AffineSolution sol = solveLinearPenrose(a, {EquationTag::P1, EquationTag::P3M}, m);
        if (!sol.feasible) return notExists(NotExistsReason::FeasibilityEmpty);
        emitMatrix(args.outPath, *sol.particular);
        return kExitOk;
    }
    if (kind == "one-4N" || kind == "1-4N") {
        if (!n) throw MissingContext("kind one-4N requires --weight-n");
        AffineSolution sol =
            solveLinearPenrose(a, {EquationTag::P1, EquationTag::P4N}, std::nullopt, n);
        if (!sol.feasible) return notExists(NotExistsReason::FeasibilityEmpty);
        emitMatrix(args.outPath, *sol.particular);
        return kExitOk;
    }
    throw ParseError("unknown inverse kind: " + kind);
}

struct VerifyArgs {
    std::string matrixPath;
    std::string candidatePath;
    std::string tags;
    std::string weightM;
    std::string weightN;
    std::string mode = "exact";
    int k = -1;
    double tolerance = -1.0;
};

int runVerify(const VerifyArgs& args) {
    Matrix a = readMatrixFile(args.matrixPath);
    Matrix x = readMatrixFile(args.candidatePath);
    EquationContext ctx;
    if (!args.weightM.empty()) ctx.m = readMatrixFile(args.weightM);
    if (!args.weightN.empty()) ctx.n = readMatrixFile(args.weightN);
    if (args.k >= 0) ctx.k = static_cast<std::size_t>(args.k);

    CheckMode mode;
    if (args.mode == "exact")
        mode = CheckMode::Exact;
    else if (args.mode == "float")
        mode = CheckMode::Float;
    else
        throw ParseError("mode must be exact or float");
    if (args.tolerance >= 0 && mode != CheckMode::Float)
        throw ParseError("--tolerance is valid only with --mode float");
    std::optional<double> tol;
    if (args.tolerance >= 0) tol = args.tolerance;

    std::vector<EquationTag> tags;
    for (const std::string& t : splitList(args.tags)) {
        auto tag = parseTag(t);
        if (!tag) throw ParseError("unknown equation tag: " + t);
        tags.push_back(*tag);
    }
    if (tags.empty()) throw ParseError("no equation tags given");

    bool allOk = true;
    for (EquationTag tag : tags) {
        EquationCheck check = checkEquation(tag, a, x, ctx, mode, tol);
        allOk = allOk && check.ok;
        std::cout << "tag " << tagName(tag) << ": " << (check.ok ? "pass" : "FAIL");
        if (mode == CheckMode::Float)
            std::cout << " (max residual " << check.residualMax << ")";
        else if (!check.ok)
            std::cout << " (residual " << canonicalMatrixString(check.residual) << ")";
        std::cout << "\n";
    }
    return allOk ? kExitOk : kExitCheckFailed;
}

struct TheoremArgs {
    std::string id;
    std::string matrixPath;
    std::string matrixBPath;
    std::string weightM;
    std::string weightN;
    std::string outPath;
};

nlohmann::ordered_json reportJson(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["theorem"] = theoremName(report.theorem);
    j["digest"] = report.instanceDigest;
    j["verdict"] = verdictName(report.verdict);
    nlohmann::ordered_json clauses = nlohmann::ordered_json::array();
    for (const auto& c : report.clauses) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.note.empty()) cj["note"] = c.note;
        if (c.witness && !c.witness->isZero())
            cj["witness"] = canonicalMatrixString(*c.witness);
        clauses.push_back(std::move(cj));
    }
    j["clauses"] = std::move(clauses);
    j["notes"] = report.notes;
    return j;
}

int runTheorem(const TheoremArgs& args) {
    auto id = parseTheoremId(args.id);
    if (!id) throw ParseError("unknown theorem id: " + args.id);
    TheoremInputs inputs;
    inputs.a = readMatrixFile(args.matrixPath);
    if (!args.matrixBPath.empty()) inputs.b = readMatrixFile(args.matrixBPath);
    if (!args.weightM.empty()) inputs.m = readMatrixFile(args.weightM);
    if (!args.weightN.empty()) inputs.n = readMatrixFile(args.weightN);
    VerificationReport report = verifyTheorem(*id, inputs);
    emitJson(args.outPath, reportJson(report));
    return report.verdict == Verdict::Fail ? kExitCheckFailed : kExitOk;
}

struct SuiteArgs {
    std::string theorems;
    std::string configPath;
    std::string reportPath;
    std::string policy = "require-hermitian";
    std::string mode = "exact";
    int sizeMin = 2;
    int sizeMax = 4;
    int samples = 25;
    std::uint64_t seed = 1;
    int jobs = 1;
    long entryBound = 3;
    double tolerance = -1.0;
};

int runSuiteCmd(const SuiteArgs& args) {
    SuiteConfig config;
    if (!args.configPath.empty()) {
        std::ifstream in(args.configPath);
        if (!in) throw ParseError("cannot open config: " + args.configPath);
        nlohmann::json j;
        in >> j;
        if (j.contains("theorems"))
            for (const auto& name : j.at("theorems")) {
                auto id = parseTheoremId(name.get<std::string>());
                if (!id) throw ParseError("unknown theorem id in config");
                config.theorems.push_back(*id);
            }
        if (j.contains("sizeMin")) config.sizeMin = j.at("sizeMin").get<int>();
        if (j.contains("sizeMax")) config.sizeMax = j.at("sizeMax").get<int>();
        if (j.contains("samplesPerSize")) config.samplesPerSize = j.at("samplesPerSize").get<int>();
        if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("entryBound")) config.entryBound = j.at("entryBound").get<long>();
        if (j.contains("weightPolicy"))
            config.weightPolicy = parsePolicy(j.at("weightPolicy").get<std::string>());
        if (j.contains("mode") && j.at("mode").get<std::string>() != "exact")
            throw InvalidSpec("theorem suites run in exact mode only");
        if (j.contains("reportPath")) config.reportPath = j.at("reportPath").get<std::string>();
    } else {
        config.sizeMin = args.sizeMin;
        config.sizeMax = args.sizeMax;
        config.samplesPerSize = args.samples;
        config.seed = args.seed;
        config.entryBound = args.entryBound;
        config.weightPolicy = parsePolicy(args.policy);
        if (args.mode != "exact")
            throw InvalidSpec("theorem suites run in exact mode only; float mode lives in `verify`");
        for (const std::string& name : splitList(args.theorems)) {
            if (name == "all") {
                config.theorems = allTheoremIds();
                break;
            }
            auto id = parseTheoremId(name);
            if (!id) throw ParseError("unknown theorem id: " + name);
            config.theorems.push_back(*id);
        }
    }
    if (args.tolerance >= 0) throw InvalidSpec("--tolerance is valid only with float mode");
    if (!args.reportPath.empty()) config.reportPath = args.reportPath;
    config.jobs = args.jobs;

    if (const char* envSeed = std::getenv("GENINV_SEED")) {
        config.seed = std::strtoull(envSeed, nullptr, 10);
    }

    SuiteOutcome outcome = runSuite(config);
    if (config.reportPath.empty()) std::cout << outcome.report.dump(2) << "\n";
    std::cerr << "suite: " << outcome.failCount << " failing instance(s)\n";
    return outcome.failCount == 0 ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation and verification of weighted core-type generalized inverses"};
    app.require_subcommand(1);

    ComputeArgs computeArgs;
    CLI::App* compute = app.add_subcommand("compute", "compute a generalized inverse");
    compute->add_option("--kind", computeArgs.kind,
                        "mp | one | group | drazin | core | core-ep | w-core-ep | core-M | "
                        "dual-core-N | weighted-mp | one-3M | one-4N")
        ->required();
    compute->add_option("--matrix", computeArgs.matrixPath, "input matrix file")->required();
    compute->add_option("--weight-m", computeArgs.weightM, "left weight M");
    compute->add_option("--weight-n", computeArgs.weightN, "right weight N");
    compute->add_option("--weight-w", computeArgs.weightW, "rectangular weight W");
    compute->add_option("--out", computeArgs.outPath, "output file (stdout when omitted)");
    compute->add_option("--weight-policy", computeArgs.policy,
                        "require-hermitian | allow-non-hermitian");

    VerifyArgs verifyArgs;
    CLI::App* verify = app.add_subcommand("verify", "check defining equations for a candidate");
    verify->add_option("--matrix", verifyArgs.matrixPath)->required();
    verify->add_option("--candidate", verifyArgs.candidatePath)->required();
    verify->add_option("--tags", verifyArgs.tags, "comma list, e.g. 1,2,3M,4N")->required();
    verify->add_option("--weight-m", verifyArgs.weightM);
    verify->add_option("--weight-n", verifyArgs.weightN);
    verify->add_option("--k", verifyArgs.k, "index override for tags 1k/6k");
    verify->add_option("--mode", verifyArgs.mode, "exact | float");
    verify->add_option("--tolerance", verifyArgs.tolerance, "max-norm tolerance (float mode)");

    TheoremArgs theoremArgs;
    CLI::App* theorem = app.add_subcommand("theorem", "verify one result on explicit inputs");
    theorem->add_option("--id", theoremArgs.id, "e.g. T3_7, T3_14, ROL4_4")->required();
    theorem->add_option("--matrix", theoremArgs.matrixPath)->required();
    theorem->add_option("--matrix-b", theoremArgs.matrixBPath);
    theorem->add_option("--weight-m", theoremArgs.weightM);
    theorem->add_option("--weight-n", theoremArgs.weightN);
    theorem->add_option("--out", theoremArgs.outPath, "report file (stdout when omitted)");

    SuiteArgs suiteArgs;
    CLI::App* suite = app.add_subcommand("suite", "randomized theorem suite with JSON report");
    suite->add_option("--theorems", suiteArgs.theorems, "comma list of ids, or `all`");
    suite->add_option("--config", suiteArgs.configPath, "JSON config file");
    suite->add_option("--size-min", suiteArgs.sizeMin);
    suite->add_option("--size-max", suiteArgs.sizeMax);
    suite->add_option("--samples-per-size", suiteArgs.samples);
    suite->add_option("--seed", suiteArgs.seed, "overridden by GENINV_SEED when set");
    suite->add_option("--jobs", suiteArgs.jobs, "worker threads");
    suite->add_option("--entry-bound", suiteArgs.entryBound);
    suite->add_option("--weight-policy", suiteArgs.policy);
    suite->add_option("--mode", suiteArgs.mode, "exact (float is rejected for suites)");
    suite->add_option("--report", suiteArgs.reportPath, "report file (stdout when omitted)");
    suite->add_option("--tolerance", suiteArgs.tolerance);

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return runCompute(computeArgs);
        if (verify->parsed()) return runVerify(verifyArgs);
        if (theorem->parsed()) return runTheorem(theoremArgs);
        if (suite->parsed()) return runSuiteCmd(suiteArgs);
        return kExitBadInput;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitBadInput;
    } catch (const InternalCheckFailure& e) {
        std::cerr << "internal check failure: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
