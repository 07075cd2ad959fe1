// functionals.hpp — TS-invariant linear functionals omega on characters.
//
// Coefficients come from the root s of the spectral equation:
//   a_j^(l) = (s-1)^j / (1 + (s-1) + ... + (s-1)^{k_l})
// Extended Dynkin graphs have the single exact functional at s = 2
// (all a_j^(l) = 1/(k_l+1)); hyperbolic graphs have two numeric ones;
// Dynkin graphs none.
#pragma once

#include <variant>
#include <vector>

#include "starcalc/character.hpp"
#include "starcalc/graph.hpp"
#include "starcalc/rational.hpp"
#include "starcalc/spectral.hpp"

namespace starcalc {

struct ExactFunctional {
    StarGraph graph;
    Rat s;  // always 2
    std::vector<std::vector<Rat>> coeffs;

    Rat evaluate(const GenCharacter& chi) const;
};

struct NumericFunctional {
    StarGraph graph;
    double s;
    std::vector<std::vector<double>> coeffs;

    double evaluate(const GenCharacter& chi) const;
};

using InvariantFunctional = std::variant<ExactFunctional, NumericFunctional>;

// The unique exact functional of an extended Dynkin graph. The computed
// coefficients are cross-checked against the four closed forms at
// construction time. Throws std::invalid_argument for other graphs.
ExactFunctional exact_functional(const StarGraph& g);

// One functional per root of the spectral equation: none for Dynkin, the
// exact one for extended Dynkin, two numeric ones for hyperbolic graphs.
std::vector<InvariantFunctional> build_functionals(const StarGraph& g, double tol = kExactSideTol);

struct InvarianceReport {
    bool ok = false;
    double residual = 0.0;
};

// Checks TS(chi, omega(chi)) = (chi~, omega(chi~)) for a strict character:
// exact equality for exact functionals (tol ignored), |residual| < tol for
// numeric ones.
InvarianceReport verify_invariance(const ExactFunctional& omega, const GenCharacter& chi,
                                   double tol = kExactSideTol);
InvarianceReport verify_invariance(const NumericFunctional& omega, const GenCharacter& chi,
                                   double tol = kExactSideTol);
InvarianceReport verify_invariance(const InvariantFunctional& omega, const GenCharacter& chi,
                                   double tol = kExactSideTol);

}  // namespace starcalc
