#include "starcalc/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace starcalc {

namespace {

// 1 + x + ... + x^k by Horner.
Rat geometric_sum(const Rat& x, int k) {
    Rat acc(1);
    for (int i = 0; i < k; ++i) acc = acc * x + 1;
    return acc;
}

// d/dx (1 + x + ... + x^k) = 1 + 2x + ... + k x^{k-1}.
Rat geometric_sum_prime(const Rat& x, int k) {
    Rat acc(0);
    for (int i = k; i >= 1; --i) acc = acc * x + i;
    return acc;
}

struct Decision {
    GraphFamily family;
    // For hyperbolic graphs: a rational point with f > 0 strictly
    // (separates the two roots) and one with f < 0 to its right.
    Rat positive_point;
    Rat right_end;
};

// Exact classification; also produces the hyperbolic bracket pivots.
Decision decide(const StarGraph& g) {
    const int n = g.branch_count();
    if (n == 1) return {GraphFamily::Dynkin, {}, {}};  // f'(1) = 0 and f'' < 0: max is f(1) = -1

    const Rat f2 = eval_f(g, 2);
    const Rat fp2 = eval_f_prime(g, 2);

    auto right_end_from = [&](Rat start) {
        Rat h = start;
        while (eval_f(g, h) >= 0) h *= 2;  // f -> -inf, loop is finite
        return h;
    };

    if (f2 == 0 && fp2 == 0) return {GraphFamily::ExtendedDynkin, {}, {}};
    if (f2 > 0) return {GraphFamily::Hyperbolic, Rat(2), right_end_from(Rat(n))};
    if (f2 == 0) {
        // Transversal root at 2: the maximum is positive. Nudge the pivot
        // toward the concave max so it lies strictly between the roots.
        Rat pivot = fp2 > 0 ? Rat(5, 2) : Rat(3, 2);
        while (eval_f(g, pivot) <= 0) pivot = (pivot + 2) / 2;
        return {GraphFamily::Hyperbolic, pivot, right_end_from(Rat(n))};
    }

    // f(2) < 0: decide the sign of the concave maximum. Bracket the
    // maximizer with f'(lo) > 0 > f'(hi); f'(1) = n - 1 > 0 for n >= 2.
    Rat lo, hi;
    if (fp2 < 0) {
        lo = 1;
        hi = 2;
    } else if (fp2 > 0) {
        lo = 2;
        hi = Rat(n);
        while (true) {
            const Rat d = eval_f_prime(g, hi);
            if (d < 0) break;
            if (d == 0) {
                // Exact maximizer.
                const Rat m = eval_f(g, hi);
                if (m < 0) return {GraphFamily::Dynkin, {}, {}};
                if (m > 0) return {GraphFamily::Hyperbolic, hi, right_end_from(hi * 2)};
                throw std::logic_error("tangency away from s = 2");
            }
            hi *= 2;
        }
    } else {
        return {GraphFamily::Dynkin, {}, {}};  // maximizer is exactly 2, f(2) < 0
    }

    while (true) {
        const Rat flo = eval_f(g, lo);
        if (flo > 0) return {GraphFamily::Hyperbolic, lo, right_end_from(hi)};
        const Rat fhi = eval_f(g, hi);
        if (fhi > 0) return {GraphFamily::Hyperbolic, hi, right_end_from(hi * 2)};

        // Tangent-line upper bounds for max f over [lo, hi].
        const Rat width = hi - lo;
        const Rat bound_lo = flo + eval_f_prime(g, lo) * width;
        const Rat bound_hi = fhi - eval_f_prime(g, hi) * width;
        if (bound_lo < 0 || bound_hi < 0) return {GraphFamily::Dynkin, {}, {}};

        const Rat mid = (lo + hi) / 2;
        const Rat d = eval_f_prime(g, mid);
        if (d > 0)
            lo = mid;
        else if (d < 0)
            hi = mid;
        else {
            const Rat m = eval_f(g, mid);
            if (m < 0) return {GraphFamily::Dynkin, {}, {}};
            if (m > 0) return {GraphFamily::Hyperbolic, mid, right_end_from(hi)};
            throw std::logic_error("tangency away from s = 2");
        }
    }
}

// Bisection with exact sign tests, refined until the interval width is at
// double resolution. lo and hi must satisfy f(lo) < 0 < f(hi) or vice versa.
double refine_root(const StarGraph& g, Rat lo, Rat hi) {
    const bool rising = eval_f(g, lo) < 0;
    for (int it = 0; it < 200; ++it) {
        const Rat mid = (lo + hi) / 2;
        const double width = to_double(hi - lo);
        if (width <= std::ldexp(std::max(1.0, to_double(hi)), -53)) break;
        const Rat fm = eval_f(g, mid);
        if (fm == 0) return to_double(mid);
        if ((fm > 0) == rising)
            hi = mid;
        else
            lo = mid;
    }
    return to_double((lo + hi) / 2);
}

}  // namespace

Rat eval_f(const StarGraph& g, const Rat& s) {
    const Rat x = s - 1;
    Rat acc = Rat(g.branch_count()) - s;
    for (int k : g.branch_lengths()) {
        const Rat denom = geometric_sum(x, k);
        if (denom == 0) throw std::domain_error("geometric denominator vanishes (s < 1)");
        acc -= 1 / denom;
    }
    return acc;
}

Rat eval_f_prime(const StarGraph& g, const Rat& s) {
    const Rat x = s - 1;
    Rat acc(-1);
    for (int k : g.branch_lengths()) {
        const Rat denom = geometric_sum(x, k);
        if (denom == 0) throw std::domain_error("geometric denominator vanishes (s < 1)");
        acc += geometric_sum_prime(x, k) / (denom * denom);
    }
    return acc;
}

double eval_f_double(const StarGraph& g, double s) {
    const double x = s - 1;
    double acc = g.branch_count() - s;
    for (int k : g.branch_lengths()) {
        double denom = 1.0;
        for (int i = 0; i < k; ++i) denom = denom * x + 1.0;
        acc -= 1.0 / denom;
    }
    return acc;
}

GraphFamily classify_family(const StarGraph& g) { return decide(g).family; }

SpectralResult classify_analytic(const StarGraph& g, double tol) {
    if (tol <= 0) throw std::invalid_argument("tol must be positive");
    const Decision d = decide(g);
    SpectralResult result;
    result.family = d.family;
    switch (d.family) {
        case GraphFamily::Dynkin:
            break;
        case GraphFamily::ExtendedDynkin:
            result.roots.push_back({2.0, 0.0, true});
            break;
        case GraphFamily::Hyperbolic: {
            const double s1 = refine_root(g, Rat(1), d.positive_point);
            const double s2 = refine_root(g, d.positive_point, d.right_end);
            result.roots.push_back({s1, std::fabs(eval_f_double(g, s1)), false});
            result.roots.push_back({s2, std::fabs(eval_f_double(g, s2)), false});
            break;
        }
    }
    return result;
}

std::pair<double, double> hyperbolic_roots(const StarGraph& g, double tol) {
    const SpectralResult r = classify_analytic(g, tol);
    if (r.family != GraphFamily::Hyperbolic)
        throw std::invalid_argument("graph is not hyperbolic");
    return {r.roots[0].value, r.roots[1].value};
}

}  // namespace starcalc
