// spectral.hpp — the scalar equation distinguishing graph types:
//
//   f(s) = n - s - sum_l 1/(1 + (s-1) + ... + (s-1)^{k_l})
//
// f is strictly concave for s > 1 with f(1) = -1. No root on [1, inf)
// means Dynkin; a unique (tangent) root, always s = 2, means extended
// Dynkin; otherwise there are exactly two roots 1 < s1 < 2 < s2 < n.
#pragma once

#include <utility>
#include <vector>

#include "starcalc/graph.hpp"
#include "starcalc/rational.hpp"

namespace starcalc {

inline constexpr double kExactSideTol = 1e-12;

struct RootRecord {
    double value = 0.0;
    double residual = 0.0;  // |f(value)| in double arithmetic
    bool exact = false;     // true only for the extended-Dynkin root s = 2
};

struct SpectralResult {
    GraphFamily family = GraphFamily::Dynkin;
    std::vector<RootRecord> roots;  // 0, 1, or 2 records
};

// Exact value of f at a rational point. Throws std::domain_error when a
// geometric denominator vanishes (possible only for s < 1).
Rat eval_f(const StarGraph& g, const Rat& s);

// Exact derivative, from the closed form of d/ds of each branch term.
Rat eval_f_prime(const StarGraph& g, const Rat& s);

// Double-precision f, for root residuals.
double eval_f_double(const StarGraph& g, double s);

// Exact trichotomy decision. Extended Dynkin is decided by the exact
// tests f(2) = 0 and f'(2) = 0; Dynkin vs hyperbolic by locating the
// concave maximum with rational bisection on the sign of f'.
GraphFamily classify_family(const StarGraph& g);

// classify_family plus root records: the exact root 2 for extended
// graphs, or the two hyperbolic roots refined until |f(s_i)| < tol.
SpectralResult classify_analytic(const StarGraph& g, double tol = kExactSideTol);

// The two roots of a hyperbolic graph, ordered s1 < 2 < s2. Throws
// std::invalid_argument for non-hyperbolic graphs.
std::pair<double, double> hyperbolic_roots(const StarGraph& g, double tol = kExactSideTol);

}  // namespace starcalc
