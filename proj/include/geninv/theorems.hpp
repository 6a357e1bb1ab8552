#pragma once

#include "geninv/matrix.hpp"
#include "geninv/weighted.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geninv {

// Identifier for every result the conformance checker can exercise.
enum class TheoremId {
    L2_6,
    C2_7,
    P3_2,
    P3_5,
    P3_11,
    P3_12,
    L3_8,
    T3_7,
    T3_9,
    T3_13,
    T3_14,
    T3_15,
    T3_16cor,
    T3_17,
    T3_18,
    T3_19,
    ROL4_1,
    ROL4_2,
    ROL4_3,
    ROL4_4,
    ROL4_5,
    ROL4_6,
    ROL4_7,
};

const char* theoremName(TheoremId id);
std::optional<TheoremId> parseTheoremId(std::string_view text);
std::vector<TheoremId> allTheoremIds();
bool isReverseOrderLaw(TheoremId id);

struct TheoremSignature {
    bool needsB = false;
    bool needsM = false;
    bool needsN = false;
};

TheoremSignature theoremSignature(TheoremId id);

struct TheoremInputs {
    Matrix a;
    std::optional<Matrix> b;
    std::optional<Matrix> m;
    std::optional<Matrix> n;
};

enum class Verdict { Pass, Fail, HypothesisNotMet, InterpretationNote };

const char* verdictName(Verdict verdict);

struct ClauseResult {
    std::string name;
    bool pass = false;
    std::string note;
    std::optional<Matrix> witness; // nonzero residual or mismatch, when one exists
};

struct VerificationReport {
    TheoremId theorem = TheoremId::L2_6;
    std::string instanceDigest;
    std::vector<ClauseResult> clauses;
    Verdict verdict = Verdict::HypothesisNotMet;
    std::vector<std::string> notes;
};

// Instance-wise conformance check: hypotheses first, then every clause of
// the statement, all in exact arithmetic. Equivalence statements check that
// the clauses share one truth value; identity statements check the stated
// matrix equalities. A Fail report carries a counterexample witness.
VerificationReport verifyTheorem(TheoremId id, const TheoremInputs& inputs);

VerificationReport verifyReverseOrderLaw(TheoremId id, const Matrix& a, const Matrix& b,
                                         const Matrix& weight);

// Hypothesis clauses only; used by the samplers to validate candidates
// against exactly the predicates the checker applies.
bool rolHypothesisHolds(TheoremId id, const Matrix& a, const Matrix& b, const Matrix& weight);

} // namespace geninv
