#include "doctest.h"

#include "geninv/matrix_io.hpp"
#include "geninv/sampler.hpp"
#include "geninv/suite.hpp"
#include "test_support.hpp"

#include <cstdio>
#include <filesystem>

using namespace geninv;
using geninv::testsupport::mat;

TEST_CASE("matrix json round trip is bitwise for normalized rationals") {
    SplitMix64 rng(1212);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t rows = 1 + rng.below(4);
        std::size_t cols = 1 + rng.below(4);
        Matrix a = randomMatrix(rng, rows, cols, 5);
        Matrix back = matrixFromJson(nlohmann::json::parse(matrixToJson(a).dump()));
        CHECK(back == a);
        CHECK(canonicalMatrixString(back) == canonicalMatrixString(a));
    }
}

TEST_CASE("decimal strings parse to exact rationals") {
    nlohmann::json j = nlohmann::json::parse(
        R"({"rows":1,"cols":2,"entries":[[["0.5",0],["-0.3","1/7"]]]})");
    Matrix a = matrixFromJson(j);
    CHECK(a(0, 0) == Scalar(Rational(1, 2)));
    CHECK(a(0, 1) == Scalar(Rational(-3, 10), Rational(1, 7)));
}

TEST_CASE("malformed matrix json is rejected") {
    CHECK_THROWS_AS(matrixFromJson(nlohmann::json::parse("{}")), ParseError);
    CHECK_THROWS_AS(
        matrixFromJson(nlohmann::json::parse(
            R"({"rows":1,"cols":1,"entries":[[0.5]]})")),
        ParseError); // entry is not a [re, im] pair
    CHECK_THROWS_AS(
        matrixFromJson(nlohmann::json::parse(
            R"({"rows":1,"cols":1,"entries":[[[0.5,0]]]})")),
        ParseError); // binary float
    CHECK_THROWS_AS(
        matrixFromJson(nlohmann::json::parse(
            R"({"rows":2,"cols":1,"entries":[[["1","0"]]]})")),
        ParseError); // row count mismatch
    CHECK_THROWS_AS(
        matrixFromJson(nlohmann::json::parse(
            R"({"rows":1,"cols":1,"entries":[[["1/0","0"]]]})")),
        ParseError); // zero denominator
}

TEST_CASE("file round trip") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "geninv_io_test.json";
    Matrix a = mat({{"1", "-2/3"}, {"0.25", "7"}});
    writeMatrixFile(path.string(), a);
    CHECK(readMatrixFile(path.string()) == a);
    fs::remove(path);
    CHECK_THROWS_AS(readMatrixFile(path.string()), ParseError);
}

TEST_CASE("suite report schema round-trips and carries the coverage counter") {
    SuiteConfig config;
    config.theorems = {TheoremId::L3_8, TheoremId::C2_7};
    config.sizeMin = 2;
    config.sizeMax = 3;
    config.samplesPerSize = 3;
    config.seed = 10101;
    SuiteOutcome outcome = runSuite(config);

    std::string text = outcome.report.dump(2);
    nlohmann::ordered_json reparsed = nlohmann::ordered_json::parse(text);
    CHECK(reparsed == outcome.report);
    CHECK(reparsed.dump(2) == text);

    CHECK(reparsed.at("schemaVersion") == 1);
    CHECK(reparsed.at("mode") == "exact");
    CHECK(reparsed.at("sampler").contains("rankCoverage"));
    CHECK(reparsed.at("fixtures").size() == 6);
    CHECK_THROWS_AS(runSuite(SuiteConfig{}), InvalidSpec); // empty theorem list
}

TEST_CASE("digest is reproducible and input-sensitive") {
    Matrix a = mat({{"1", "0"}, {"0", "1"}});
    Matrix b = mat({{"1", "0"}, {"0", "2"}});
    std::string d1 = instanceDigest("check", {&a, nullptr});
    std::string d2 = instanceDigest("check", {&a, nullptr});
    std::string d3 = instanceDigest("check", {&b, nullptr});
    CHECK(d1 == d2);
    CHECK(d1 != d3);
    CHECK(d1.size() == 16);
}
