// character.hpp — characters (weight functions on the non-root vertices of
// a star graph), weighted pairs, special characters, and the exact
// decomposition chi = scale * (chi_Gamma + chi_tilde) on extended graphs.
#pragma once

#include <vector>

#include "starcalc/graph.hpp"
#include "starcalc/rational.hpp"

namespace starcalc {

// Per-branch weight lists (alpha_1^(l), ..., alpha_{k_l}^(l)); alpha_0 = 0
// is implicit and never stored. Entries are arbitrary rationals — functor
// orbits produce nonpositive values. A *strict* character additionally
// satisfies 0 < alpha_1 < ... < alpha_{k_l} on every branch.
class GenCharacter {
  public:
    GenCharacter() = default;
    explicit GenCharacter(std::vector<std::vector<Rat>> branches) : branches_(std::move(branches)) {}

    const std::vector<std::vector<Rat>>& branches() const { return branches_; }
    std::vector<std::vector<Rat>>& branches() { return branches_; }

    int branch_count() const { return static_cast<int>(branches_.size()); }
    bool shape_matches(const StarGraph& g) const;
    bool is_strict() const;
    bool is_zero() const;

    bool operator==(const GenCharacter&) const = default;

  private:
    std::vector<std::vector<Rat>> branches_;
};

// Throws std::invalid_argument unless chi is shape-compatible with g
// (and, when require_strict, a strict character).
void require_shape(const GenCharacter& chi, const StarGraph& g, bool require_strict = false);

GenCharacter zero_character(const StarGraph& g);
GenCharacter scale(const Rat& c, const GenCharacter& chi);
GenCharacter add(const GenCharacter& a, const GenCharacter& b);
GenCharacter subtract(const GenCharacter& a, const GenCharacter& b);

// (chi, lambda): the object the reflection functors act on.
struct WeightedPair {
    GenCharacter character;
    Rat lambda;

    bool operator==(const WeightedPair&) const = default;
};

// Canonical character chi_Gamma of an extended Dynkin star, assigned per
// branch by arm length:
//   D4~: (1)          E6~: (1,2)            E7~: (1,2,3) / arm 1 -> (2)
//   E8~: (1,2,3,4,5) / arm 2 -> (2,4) / arm 1 -> (3)
// Throws std::invalid_argument for non-extended graphs.
GenCharacter special_character(const StarGraph& g);

// omega(chi_Gamma): 2, 3, 4, 6 for D4~, E6~, E7~, E8~.
Rat special_omega(const StarGraph& g);

struct Decomposition {
    Rat scale;           // normalizes omega(chi) to omega_Gamma
    GenCharacter chi_tilde;  // scale*chi - chi_Gamma, omega(chi_tilde) = 0
    Rat gamma;           // omega_Gamma - scale*lambda
};

// Exact decomposition of a strict character on an extended Dynkin graph.
Decomposition decompose(const StarGraph& g, const GenCharacter& chi, const Rat& lambda);

}  // namespace starcalc
