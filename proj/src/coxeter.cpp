#include "starcalc/coxeter.hpp"

#include <stdexcept>

#include "starcalc/functionals.hpp"

namespace starcalc {

namespace {

detail::BasicPair<Rat> to_basic(const WeightedPair& p) { return {p.character.branches(), p.lambda}; }

WeightedPair from_basic(detail::BasicPair<Rat> p) {
    return {GenCharacter(std::move(p.branches)), std::move(p.lambda)};
}

void require_nonempty_shape(const WeightedPair& p) {
    if (p.character.branch_count() == 0)
        throw std::invalid_argument("weighted pair needs at least one branch");
    for (const auto& b : p.character.branches())
        if (b.empty()) throw std::invalid_argument("empty branch in character");
}

}  // namespace

WeightedPair apply_S(const WeightedPair& p) {
    require_nonempty_shape(p);
    return from_basic(detail::reflect_s(to_basic(p)));
}

WeightedPair apply_T(const WeightedPair& p) {
    require_nonempty_shape(p);
    return from_basic(detail::reflect_t(to_basic(p)));
}

WeightedPair apply_ST(const WeightedPair& p) { return apply_S(apply_T(p)); }

WeightedPair apply_TS(const WeightedPair& p) { return apply_T(apply_S(p)); }

OrbitResult orbit(const WeightedPair& start, const std::string& word, long max_steps) {
    require_nonempty_shape(start);
    for (char c : word)
        if (c != 'S' && c != 'T') throw std::invalid_argument("orbit word may contain only S and T");

    OrbitResult result;
    result.steps.push_back({0, start, std::nullopt});
    WeightedPair current = start;
    int index = 0;
    // Rightmost letter acts first.
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (index >= max_steps) {
            result.truncated = true;
            break;
        }
        const FunctorOp op = (*it == 'S') ? FunctorOp::S : FunctorOp::T;
        current = (op == FunctorOp::S) ? apply_S(current) : apply_T(current);
        result.steps.push_back({++index, current, op});
    }
    return result;
}

PeriodicityConstants periodicity_constants(GraphClass cls) {
    switch (cls) {
        case GraphClass::ExtendedD4: return {2, 2, 4};
        case GraphClass::ExtendedE6: return {6, 3, 9};
        case GraphClass::ExtendedE7: return {12, 4, 16};
        case GraphClass::ExtendedE8: return {30, 6, 36};
        default:
            throw std::invalid_argument("periodicity constants exist only for extended Dynkin graphs");
    }
}

PeriodicityReport verify_periodicity(const StarGraph& g, const GenCharacter& chi, const Rat& lambda,
                                     int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const GraphClass cls = classify_structural(g);
    const PeriodicityConstants pc = periodicity_constants(cls);
    require_shape(chi, g);

    const ExactFunctional omega = exact_functional(g);
    const Rat omega_gamma = special_omega(g);
    if (omega.evaluate(chi) != omega_gamma)
        throw std::invalid_argument("character is not normalized: omega(chi) != omega_Gamma");

    const Rat gamma = omega_gamma - lambda;
    WeightedPair current{chi, lambda};
    for (long i = 0; i < static_cast<long>(pc.m) * k; ++i) current = apply_ST(current);

    const Rat shift = Rat(pc.c) * k * gamma;
    const GenCharacter expected_chi = subtract(chi, scale(shift, special_character(g)));
    const Rat expected_lambda = lambda - Rat(pc.d) * k * gamma;

    PeriodicityReport report;
    report.ok = current.character == expected_chi && current.lambda == expected_lambda;
    report.lambda_residual = to_double(rat_abs(current.lambda - expected_lambda));
    Rat worst(0);
    const GenCharacter diff = subtract(current.character, expected_chi);
    for (const auto& b : diff.branches())
        for (const Rat& a : b) worst = std::max(worst, rat_abs(a));
    report.char_residual = to_double(worst);
    return report;
}

std::string terminal_name(TerminalKind kind) {
    switch (kind) {
        case TerminalKind::CoefficientExceedsLambda: return "coefficient-exceeds-lambda";
        case TerminalKind::CoefficientEqualsLambda: return "coefficient-equals-lambda";
        case TerminalKind::NonpositiveCoefficient: return "nonpositive-coefficient";
        case TerminalKind::SpecialPoint: return "special-point";
        case TerminalKind::StepLimit: return "step-limit";
    }
    throw std::logic_error("unreachable terminal kind");
}

namespace {

struct CoefficientHit {
    TerminalKind kind;
    int branch;    // 1-based
    int position;  // 1-based
};

// Scan order is fixed: all coefficients for > lambda, then = lambda, then
// <= 0; branches and positions in storage order. The first hit is reported.
std::optional<CoefficientHit> scan_terminal(const WeightedPair& p) {
    const auto& branches = p.character.branches();
    for (int pass = 0; pass < 3; ++pass) {
        for (size_t l = 0; l < branches.size(); ++l) {
            for (size_t j = 0; j < branches[l].size(); ++j) {
                const Rat& a = branches[l][j];
                const bool hit = pass == 0   ? a > p.lambda
                                 : pass == 1 ? a == p.lambda
                                             : a <= 0;
                if (hit) {
                    const TerminalKind kind = pass == 0 ? TerminalKind::CoefficientExceedsLambda
                                              : pass == 1 ? TerminalKind::CoefficientEqualsLambda
                                                          : TerminalKind::NonpositiveCoefficient;
                    return CoefficientHit{kind, static_cast<int>(l) + 1, static_cast<int>(j) + 1};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

ReductionOutcome reduce(const StarGraph& g, const GenCharacter& chi, const Rat& lambda,
                        long max_steps) {
    require_shape(chi, g, /*require_strict=*/true);
    if (lambda <= 0) throw std::invalid_argument("reduce requires lambda > 0");
    const ExactFunctional omega = exact_functional(g);  // rejects non-extended graphs

    ReductionOutcome out;
    out.kind = TerminalKind::StepLimit;
    WeightedPair current{chi, lambda};
    int index = 0;
    out.trace.push_back({index, current, std::nullopt});

    const Rat omega_chi = omega.evaluate(chi);
    if (lambda == omega_chi) {
        out.kind = TerminalKind::SpecialPoint;
        return out;
    }
    if (lambda > omega_chi) {
        current = apply_S(current);
        out.trace.push_back({++index, current, FunctorOp::S});
        // Now lambda' < omega(chi'): S flips the gap about the special point.
    }

    while (true) {
        if (auto hit = scan_terminal(current)) {
            out.kind = hit->kind;
            out.branch = hit->branch;
            out.position = hit->position;
            return out;
        }
        if (out.steps >= max_steps) {
            out.kind = TerminalKind::StepLimit;
            return out;
        }
        current = apply_T(current);
        out.trace.push_back({++index, current, FunctorOp::T});
        current = apply_S(current);
        out.trace.push_back({++index, current, FunctorOp::S});
        ++out.steps;
    }
}

}  // namespace starcalc
