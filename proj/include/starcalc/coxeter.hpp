// coxeter.hpp — reflection functors S and T on weighted pairs, orbit
// replay, the four periodicity identities, and the reduction engine.
//
// S reflects each branch about its top weight and sends lambda to
// (sum of top weights) - lambda; T replaces each branch by
// (lambda - alpha_k, ..., lambda - alpha_1) keeping lambda. Both are
// involutions. Composites follow composition order: "ST" applies T
// first, then S; a word like "STST" is read rightmost-first.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starcalc/character.hpp"
#include "starcalc/graph.hpp"
#include "starcalc/rational.hpp"

namespace starcalc {

inline constexpr long kDefaultMaxSteps = 10000;

namespace detail {

// The functor formulas are field-generic; Rat gives the exact public API,
// double backs the numeric invariance check for hyperbolic functionals.
template <class Num>
struct BasicPair {
    std::vector<std::vector<Num>> branches;
    Num lambda;
};

template <class Num>
BasicPair<Num> reflect_s(const BasicPair<Num>& p) {
    BasicPair<Num> out;
    out.branches.reserve(p.branches.size());
    Num top_sum(0);
    for (const auto& b : p.branches) {
        const int k = static_cast<int>(b.size());
        const Num top = b[k - 1];
        top_sum += top;
        std::vector<Num> nb(k);
        for (int j = 0; j < k; ++j) {
            const int idx = k - 2 - j;  // idx == -1 stands for alpha_0 = 0
            nb[j] = idx >= 0 ? Num(top - b[idx]) : top;
        }
        out.branches.push_back(std::move(nb));
    }
    out.lambda = top_sum - p.lambda;
    return out;
}

template <class Num>
BasicPair<Num> reflect_t(const BasicPair<Num>& p) {
    BasicPair<Num> out;
    out.branches.reserve(p.branches.size());
    for (const auto& b : p.branches) {
        const int k = static_cast<int>(b.size());
        std::vector<Num> nb(k);
        for (int j = 0; j < k; ++j) nb[j] = p.lambda - b[k - 1 - j];
        out.branches.push_back(std::move(nb));
    }
    out.lambda = p.lambda;
    return out;
}

}  // namespace detail

WeightedPair apply_S(const WeightedPair& p);
WeightedPair apply_T(const WeightedPair& p);
WeightedPair apply_ST(const WeightedPair& p);  // T, then S
WeightedPair apply_TS(const WeightedPair& p);  // S, then T

enum class FunctorOp { S, T };

struct OrbitStep {
    int index = 0;
    WeightedPair pair;
    std::optional<FunctorOp> op;  // empty at step 0
};

struct OrbitResult {
    std::vector<OrbitStep> steps;
    bool truncated = false;  // step limit reached before the word ended
};

// Replays `word` (letters S/T, rightmost applied first), recording every
// intermediate pair. Throws std::invalid_argument on other letters.
OrbitResult orbit(const WeightedPair& start, const std::string& word, long max_steps = kDefaultMaxSteps);

// Period m and decrement coefficients (c, d) of the identity
// (ST)^{m k}(chi, lambda) = (chi - c k gamma chi_Gamma, lambda - d k gamma).
struct PeriodicityConstants {
    int m;
    int c;
    int d;
};
PeriodicityConstants periodicity_constants(GraphClass cls);

struct PeriodicityReport {
    bool ok = false;
    double char_residual = 0.0;
    double lambda_residual = 0.0;
};

// Exact check of the periodicity identity for a normalized character
// (omega(chi) = omega_Gamma required; callers normalize via decompose).
PeriodicityReport verify_periodicity(const StarGraph& g, const GenCharacter& chi, const Rat& lambda,
                                     int k);

enum class TerminalKind {
    CoefficientExceedsLambda,
    CoefficientEqualsLambda,
    NonpositiveCoefficient,
    SpecialPoint,
    StepLimit,
};

std::string terminal_name(TerminalKind kind);

struct ReductionOutcome {
    TerminalKind kind;
    // 1-based branch/position of the triggering coefficient; 0 for the
    // SpecialPoint and StepLimit terminals.
    int branch = 0;
    int position = 0;
    long steps = 0;  // number of ST blocks applied
    std::vector<OrbitStep> trace;
};

// Theorem-3 reduction loop on an extended Dynkin graph. chi must be a
// strict character and lambda > 0. lambda = omega(chi) returns
// SpecialPoint immediately; lambda > omega(chi) applies S once and then
// runs the descent loop; the loop stops at the first coefficient that
// exceeds, equals, or drops to/below zero relative to the current lambda
// (checked in that order, branches scanned in storage order).
ReductionOutcome reduce(const StarGraph& g, const GenCharacter& chi, const Rat& lambda,
                        long max_steps = kDefaultMaxSteps);

}  // namespace starcalc
