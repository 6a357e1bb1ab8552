// End-to-end checks of the command-line tool: every subcommand, the exit-code
// contract, and the suite determinism guarantee across worker counts.

#include "geninv/matrix_io.hpp"
#include "test_support.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using namespace geninv;
using geninv::testsupport::mat;

namespace {

int failures = 0;

void expect(bool ok, const std::string& label) {
    if (ok) {
        std::printf("ok   %s\n", label.c_str());
    } else {
        std::printf("FAIL %s\n", label.c_str());
        ++failures;
    }
}

int runCli(const std::string& args) {
    std::string cmd = std::string(GENINV_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main() {
    fs::path dir = fs::temp_directory_path() / "geninv_cli_tests";
    fs::create_directories(dir);

    Matrix a3 = mat({{"1", "0", "1"}, {"0", "1", "0"}, {"0", "0", "0"}});
    Matrix w3 = Matrix::diagonal({Scalar(1), Scalar(2), Scalar(1)});
    Matrix nilpotent = mat({{"0", "1"}, {"0", "0"}});
    writeMatrixFile((dir / "a3.json").string(), a3);
    writeMatrixFile((dir / "w3.json").string(), w3);
    writeMatrixFile((dir / "nilpotent.json").string(), nilpotent);
    writeMatrixFile((dir / "id3.json").string(), Matrix::identity(3));

    std::string a3Path = (dir / "a3.json").string();
    std::string w3Path = (dir / "w3.json").string();

    // compute: weighted core inverse of the fixture
    std::string outPath = (dir / "core.json").string();
    int rc = runCli("compute --kind core-M --matrix " + a3Path + " --weight-m " + w3Path +
                    " --out " + outPath);
    expect(rc == 0, "compute core-M exit 0");
    expect(readMatrixFile(outPath) == Matrix::diagonal({Scalar(1), Scalar(1), Scalar(0)}),
           "compute core-M witness value");

    // compute: group inverse of a nilpotent matrix does not exist -> exit 2
    std::string reasonPath = (dir / "reason.json").string();
    rc = runCli("compute --kind group --matrix " + (dir / "nilpotent.json").string() + " --out " +
                reasonPath);
    expect(rc == 2, "compute group on index-2 input exit 2");
    expect(slurp(reasonPath).find("IndexTooHigh") != std::string::npos,
           "nonexistence reason recorded");

    // compute: mp of identity
    std::string mpPath = (dir / "mp.json").string();
    rc = runCli("compute --kind mp --matrix " + (dir / "id3.json").string() + " --out " + mpPath);
    expect(rc == 0 && readMatrixFile(mpPath) == Matrix::identity(3), "compute mp identity");

    // compute: weighted core-EP with identity weight equals the core inverse
    std::string wcepPath = (dir / "wcep.json").string();
    rc = runCli("compute --kind w-core-ep --matrix " + a3Path + " --weight-w " +
                (dir / "id3.json").string() + " --out " + wcepPath);
    expect(rc == 0 && readMatrixFile(wcepPath) ==
                          Matrix::diagonal({Scalar(1), Scalar(1), Scalar(0)}),
           "compute w-core-ep with identity weight");

    // compute: parse error -> exit 3
    rc = runCli("compute --kind mp --matrix " + (dir / "missing.json").string());
    expect(rc == 3, "compute on missing file exit 3");
    rc = runCli("compute --kind bogus --matrix " + a3Path);
    expect(rc == 3, "unknown kind exit 3");

    // verify: fixture membership passes
    rc = runCli("verify --matrix " + a3Path + " --candidate " + outPath + " --tags 3M,6,7" +
                " --weight-m " + w3Path);
    expect(rc == 0, "verify weighted core tags exit 0");

    // verify: wrong candidate fails with exit 1
    rc = runCli("verify --matrix " + a3Path + " --candidate " + a3Path + " --tags 3M,6,7" +
                " --weight-m " + w3Path);
    expect(rc == 1, "verify wrong candidate exit 1");

    // verify: the historically printed weighted MP value fails equation (2)
    Matrix printed = mat({{"1/2", "0", "1"}, {"0", "1", "0"}, {"1/2", "0", "0"}});
    writeMatrixFile((dir / "printed.json").string(), printed);
    rc = runCli("verify --matrix " + a3Path + " --candidate " + (dir / "printed.json").string() +
                " --tags 1,2,3M,4N --weight-m " + w3Path + " --weight-n " + w3Path);
    expect(rc == 1, "printed weighted MP value fails verification");

    // verify in float mode: a dyadic perturbation passes at the default
    // tolerance but fails exact mode
    Matrix perturbed = readMatrixFile(outPath);
    perturbed(0, 0) = Scalar(Rational(1) + Rational(mpz_class(1), mpz_class(1) << 42));
    writeMatrixFile((dir / "perturbed.json").string(), perturbed);
    std::string perturbedArgs = "verify --matrix " + a3Path + " --candidate " +
                                (dir / "perturbed.json").string() + " --tags 3M,6,7 --weight-m " +
                                w3Path;
    rc = runCli(perturbedArgs);
    expect(rc == 1, "perturbed candidate fails exact verification");
    rc = runCli(perturbedArgs + " --mode float");
    expect(rc == 0, "perturbed candidate passes float verification");
    rc = runCli(perturbedArgs + " --mode float --tolerance 1e-18");
    expect(rc == 1, "tight float tolerance rejects the perturbation");

    // verify: unknown tag -> exit 3; tolerance without float mode -> exit 3
    rc = runCli("verify --matrix " + a3Path + " --candidate " + outPath + " --tags 42");
    expect(rc == 3, "unknown tag exit 3");
    rc = runCli("verify --matrix " + a3Path + " --candidate " + outPath +
                " --tags 1 --tolerance 0.1");
    expect(rc == 3, "tolerance without float mode exit 3");

    // theorem: fixture instance passes
    rc = runCli("theorem --id T3_14 --matrix " + a3Path + " --weight-m " + w3Path);
    expect(rc == 0, "theorem T3_14 on fixture exit 0");
    rc = runCli("theorem --id BOGUS --matrix " + a3Path);
    expect(rc == 3, "unknown theorem id exit 3");

    // suite: empty theorem list -> exit 3
    rc = runCli("suite --theorems '' --samples-per-size 1");
    expect(rc == 3, "empty theorem list exit 3");

    // suite: float mode rejected
    rc = runCli("suite --theorems T3_14 --mode float --samples-per-size 1");
    expect(rc == 3, "suite float mode rejected");

    // suite determinism: same seed, different worker counts -> identical bytes
    std::string r1 = (dir / "report1.json").string();
    std::string r2 = (dir / "report2.json").string();
    std::string base = "suite --theorems T3_14,ROL4_4,L3_8 --size-min 2 --size-max 3 "
                       "--samples-per-size 4 ";
    rc = runCli(base + "--seed 20240607 --jobs 1 --report " + r1);
    expect(rc == 0, "suite run jobs=1 exit 0");
    rc = runCli(base + "--seed 20240607 --jobs 4 --report " + r2);
    expect(rc == 0, "suite run jobs=4 exit 0");
    expect(slurp(r1) == slurp(r2) && !slurp(r1).empty(),
           "reports byte-identical across worker counts");

    // suite: GENINV_SEED overrides the flag
    std::string r3 = (dir / "report3.json").string();
    std::string cmd = std::string("GENINV_SEED=20240607 ") + GENINV_CLI_PATH + " " + base +
                      "--seed 1 --jobs 2 --report " + r3 + " >/dev/null 2>&1";
    rc = WEXITSTATUS(std::system(cmd.c_str()));
    expect(rc == 0 && slurp(r3) == slurp(r1), "GENINV_SEED override reproduces the report");

    // suite via config file
    std::string r4 = (dir / "report4.json").string();
    {
        std::ofstream cfg(dir / "config.json");
        cfg << R"({"theorems":["T3_14","ROL4_4","L3_8"],"sizeMin":2,"sizeMax":3,)"
            << R"("samplesPerSize":4,"seed":20240607})";
    }
    rc = runCli("suite --config " + (dir / "config.json").string() + " --report " + r4);
    expect(rc == 0 && slurp(r4) == slurp(r1), "config-file suite reproduces the report");

    std::printf("%s: %d failure(s)\n", failures == 0 ? "PASSED" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
