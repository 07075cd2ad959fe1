#include "starcalc/character.hpp"

#include <stdexcept>

#include "starcalc/functionals.hpp"

namespace starcalc {

bool GenCharacter::shape_matches(const StarGraph& g) const {
    if (branch_count() != g.branch_count()) return false;
    for (int l = 0; l < branch_count(); ++l)
        if (static_cast<int>(branches_[l].size()) != g.branch_lengths()[l]) return false;
    return true;
}

bool GenCharacter::is_strict() const {
    for (const auto& branch : branches_) {
        Rat prev(0);  // implicit alpha_0 = 0
        for (const Rat& a : branch) {
            if (a <= prev) return false;
            prev = a;
        }
    }
    return true;
}

bool GenCharacter::is_zero() const {
    for (const auto& branch : branches_)
        for (const Rat& a : branch)
            if (a != 0) return false;
    return true;
}

void require_shape(const GenCharacter& chi, const StarGraph& g, bool require_strict) {
    if (!chi.shape_matches(g)) throw std::invalid_argument("character shape does not match graph");
    if (require_strict && !chi.is_strict())
        throw std::invalid_argument("character must be strictly increasing and positive per branch");
}

GenCharacter zero_character(const StarGraph& g) {
    std::vector<std::vector<Rat>> branches;
    branches.reserve(g.branch_count());
    for (int k : g.branch_lengths()) branches.emplace_back(k, Rat(0));
    return GenCharacter(std::move(branches));
}

GenCharacter scale(const Rat& c, const GenCharacter& chi) {
    auto branches = chi.branches();
    for (auto& branch : branches)
        for (auto& a : branch) a *= c;
    return GenCharacter(std::move(branches));
}

GenCharacter add(const GenCharacter& a, const GenCharacter& b) {
    if (a.branches().size() != b.branches().size())
        throw std::invalid_argument("character shape mismatch");
    auto branches = a.branches();
    for (size_t l = 0; l < branches.size(); ++l) {
        if (branches[l].size() != b.branches()[l].size())
            throw std::invalid_argument("character shape mismatch");
        for (size_t j = 0; j < branches[l].size(); ++j) branches[l][j] += b.branches()[l][j];
    }
    return GenCharacter(std::move(branches));
}

GenCharacter subtract(const GenCharacter& a, const GenCharacter& b) {
    return add(a, scale(Rat(-1), b));
}

GenCharacter special_character(const StarGraph& g) {
    const GraphClass cls = classify_structural(g);
    std::vector<std::vector<Rat>> branches;
    branches.reserve(g.branch_count());

    auto arm = [&](int len) -> std::vector<Rat> {
        switch (cls) {
            case GraphClass::ExtendedD4:
                return {Rat(1)};
            case GraphClass::ExtendedE6:
                return {Rat(1), Rat(2)};
            case GraphClass::ExtendedE7:
                return len == 3 ? std::vector<Rat>{Rat(1), Rat(2), Rat(3)} : std::vector<Rat>{Rat(2)};
            case GraphClass::ExtendedE8:
                if (len == 5) return {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)};
                if (len == 2) return {Rat(2), Rat(4)};
                return {Rat(3)};
            default:
                throw std::invalid_argument("special character is defined only for extended Dynkin graphs");
        }
    };

    for (int k : g.branch_lengths()) branches.push_back(arm(k));
    return GenCharacter(std::move(branches));
}

Rat special_omega(const StarGraph& g) {
    switch (classify_structural(g)) {
        case GraphClass::ExtendedD4: return Rat(2);
        case GraphClass::ExtendedE6: return Rat(3);
        case GraphClass::ExtendedE7: return Rat(4);
        case GraphClass::ExtendedE8: return Rat(6);
        default:
            throw std::invalid_argument("omega_Gamma is defined only for extended Dynkin graphs");
    }
}

Decomposition decompose(const StarGraph& g, const GenCharacter& chi, const Rat& lambda) {
    require_shape(chi, g, /*require_strict=*/true);
    const ExactFunctional omega = exact_functional(g);
    const Rat omega_gamma = special_omega(g);

    const Rat value = omega.evaluate(chi);  // > 0 by strict positivity
    Decomposition d;
    d.scale = omega_gamma / value;
    d.chi_tilde = subtract(scale(d.scale, chi), special_character(g));
    d.gamma = omega_gamma - d.scale * lambda;
    return d;
}

}  // namespace starcalc
