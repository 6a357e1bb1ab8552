#pragma once

#include "geninv/theorems.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace geninv {

enum class SuiteMode { Exact, Float };

struct SuiteConfig {
    std::vector<TheoremId> theorems;
    int sizeMin = 2;
    int sizeMax = 4;
    int samplesPerSize = 25;
    std::uint64_t seed = 1;
    SuiteMode mode = SuiteMode::Exact;
    WeightPolicy weightPolicy = WeightPolicy::RequireHermitian;
    std::string reportPath; // empty: report is not written to disk
    int jobs = 1;
    long entryBound = 3;
};

struct SuiteOutcome {
    nlohmann::ordered_json report;
    int failCount = 0;
};

// Runs samplesPerSize instances per (theorem, size). Instance seeds derive
// from the config seed alone, results are assembled in task order, and the
// worker count never appears in the report, so reports are byte-identical
// across --jobs settings. Throws InvalidSpec on bad configuration; theorem
// acceptance is exact-only, so mode Float is rejected here.
SuiteOutcome runSuite(const SuiteConfig& config);

// Fixture regression block embedded in every suite report, including
// the quarantined printed value that fails its own defining equations.
nlohmann::ordered_json fixtureChecks(int& failCount);

} // namespace geninv
