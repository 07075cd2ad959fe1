#include "starcalc/functionals.hpp"

#include <cmath>
#include <stdexcept>

#include "starcalc/coxeter.hpp"

namespace starcalc {

namespace {

void require_functional_shape(const std::vector<std::vector<Rat>>& chi,
                              const StarGraph& g) {
    if (static_cast<int>(chi.size()) != g.branch_count())
        throw std::invalid_argument("character shape does not match functional");
    for (int l = 0; l < g.branch_count(); ++l)
        if (static_cast<int>(chi[l].size()) != g.branch_lengths()[l])
            throw std::invalid_argument("character shape does not match functional");
}

// Closed-form coefficient for an extended graph arm of length k: every
// a_j^(l) equals 1/(k+1) at s = 2. Kept separate from the generic formula
// so the two paper routes cross-check each other at construction.
std::vector<Rat> closed_form_arm(GraphClass cls, int len) {
    switch (cls) {
        case GraphClass::ExtendedD4:
            return {Rat(1, 2)};
        case GraphClass::ExtendedE6:
            return {Rat(1, 3), Rat(1, 3)};
        case GraphClass::ExtendedE7:
            return len == 3 ? std::vector<Rat>{Rat(1, 4), Rat(1, 4), Rat(1, 4)}
                            : std::vector<Rat>{Rat(1, 2)};
        case GraphClass::ExtendedE8:
            if (len == 5) return {Rat(1, 6), Rat(1, 6), Rat(1, 6), Rat(1, 6), Rat(1, 6)};
            if (len == 2) return {Rat(1, 3), Rat(1, 3)};
            return {Rat(1, 2)};
        default:
            throw std::invalid_argument("no closed form for this graph");
    }
}

std::vector<std::vector<double>> to_double_branches(const GenCharacter& chi) {
    std::vector<std::vector<double>> out;
    out.reserve(chi.branches().size());
    for (const auto& b : chi.branches()) {
        std::vector<double> db;
        db.reserve(b.size());
        for (const Rat& a : b) db.push_back(to_double(a));
        out.push_back(std::move(db));
    }
    return out;
}

}  // namespace

Rat ExactFunctional::evaluate(const GenCharacter& chi) const {
    require_functional_shape(chi.branches(), graph);
    Rat acc(0);
    for (size_t l = 0; l < coeffs.size(); ++l)
        for (size_t j = 0; j < coeffs[l].size(); ++j) acc += coeffs[l][j] * chi.branches()[l][j];
    return acc;
}

double NumericFunctional::evaluate(const GenCharacter& chi) const {
    require_functional_shape(chi.branches(), graph);
    double acc = 0.0;
    for (size_t l = 0; l < coeffs.size(); ++l)
        for (size_t j = 0; j < coeffs[l].size(); ++j)
            acc += coeffs[l][j] * to_double(chi.branches()[l][j]);
    return acc;
}

ExactFunctional exact_functional(const StarGraph& g) {
    const GraphClass cls = classify_structural(g);
    if (family_of(cls) != GraphFamily::ExtendedDynkin)
        throw std::invalid_argument("exact functional exists only for extended Dynkin graphs");

    ExactFunctional omega{g, Rat(2), {}};
    const Rat x = omega.s - 1;  // = 1
    for (int k : g.branch_lengths()) {
        Rat denom(0);
        for (int i = 0; i <= k; ++i) denom += pow_rat(x, static_cast<unsigned>(i));
        std::vector<Rat> arm;
        arm.reserve(k);
        for (int j = 1; j <= k; ++j) arm.push_back(pow_rat(x, static_cast<unsigned>(j)) / denom);
        if (arm != closed_form_arm(cls, k))
            throw std::logic_error("coefficient formula disagrees with the closed form");
        omega.coeffs.push_back(std::move(arm));
    }
    return omega;
}

std::vector<InvariantFunctional> build_functionals(const StarGraph& g, double tol) {
    const SpectralResult spectral = classify_analytic(g, tol);
    std::vector<InvariantFunctional> out;
    switch (spectral.family) {
        case GraphFamily::Dynkin:
            break;
        case GraphFamily::ExtendedDynkin:
            out.emplace_back(exact_functional(g));
            break;
        case GraphFamily::Hyperbolic:
            for (const RootRecord& root : spectral.roots) {
                NumericFunctional omega{g, root.value, {}};
                const double x = root.value - 1.0;
                for (int k : g.branch_lengths()) {
                    double denom = 0.0, power = 1.0;
                    for (int i = 0; i <= k; ++i, power *= x) denom += power;
                    std::vector<double> arm;
                    arm.reserve(k);
                    double numer = x;
                    for (int j = 1; j <= k; ++j, numer *= x) {
                        const double a = numer / denom;
                        if (!(a >= 0))
                            throw std::logic_error("negative functional coefficient: root < 1");
                        arm.push_back(a);
                    }
                    omega.coeffs.push_back(std::move(arm));
                }
                out.emplace_back(std::move(omega));
            }
            break;
    }
    return out;
}

InvarianceReport verify_invariance(const ExactFunctional& omega, const GenCharacter& chi,
                                   double /*tol*/) {
    require_shape(chi, omega.graph, /*require_strict=*/true);
    const Rat lambda = omega.evaluate(chi);
    const WeightedPair image = apply_TS({chi, lambda});
    const Rat diff = omega.evaluate(image.character) - image.lambda;
    return {diff == 0, to_double(rat_abs(diff))};
}

InvarianceReport verify_invariance(const NumericFunctional& omega, const GenCharacter& chi,
                                   double tol) {
    require_shape(chi, omega.graph, /*require_strict=*/true);
    detail::BasicPair<double> pair{to_double_branches(chi), 0.0};
    pair.lambda = 0.0;
    {
        double acc = 0.0;
        for (size_t l = 0; l < omega.coeffs.size(); ++l)
            for (size_t j = 0; j < omega.coeffs[l].size(); ++j)
                acc += omega.coeffs[l][j] * pair.branches[l][j];
        pair.lambda = acc;
    }
    const auto image = detail::reflect_t(detail::reflect_s(pair));
    double value = 0.0;
    for (size_t l = 0; l < omega.coeffs.size(); ++l)
        for (size_t j = 0; j < omega.coeffs[l].size(); ++j)
            value += omega.coeffs[l][j] * image.branches[l][j];
    const double residual = std::fabs(value - image.lambda);
    return {residual < tol, residual};
}

InvarianceReport verify_invariance(const InvariantFunctional& omega, const GenCharacter& chi,
                                   double tol) {
    return std::visit([&](const auto& w) { return verify_invariance(w, chi, tol); }, omega);
}

}  // namespace starcalc
