// graph.hpp — star-shaped graphs, their named classes, and the
// pattern-based (structural) classifier.
//
// A star graph is n paths ("branches") of lengths k_1..k_n joined at a
// single root; the root itself is not counted in any branch.
#pragma once

#include <string>
#include <vector>

namespace starcalc {

// Trichotomy distinguished by the scalar equation (see spectral.hpp).
enum class GraphFamily { Dynkin, ExtendedDynkin, Hyperbolic };

// Named class: Dynkin A/D/E6/E7/E8, the four extended star diagrams
// D4~/E6~/E7~/E8~, or hyperbolic (everything else).
enum class GraphClass {
    DynkinA,
    DynkinD,
    DynkinE6,
    DynkinE7,
    DynkinE8,
    ExtendedD4,
    ExtendedE6,
    ExtendedE7,
    ExtendedE8,
    Hyperbolic,
};

GraphFamily family_of(GraphClass c);
// "A", "D", "E6", ..., "D4~", "E6~", ...; empty for Hyperbolic.
std::string class_name(GraphClass c);
std::string family_name(GraphFamily f);

class StarGraph {
  public:
    // Branch order is preserved as given; it is significant for characters,
    // classification ignores it. Throws std::invalid_argument on an empty
    // list or a nonpositive length.
    explicit StarGraph(std::vector<int> branch_lengths);

    const std::vector<int>& branch_lengths() const { return lengths_; }
    int branch_count() const { return static_cast<int>(lengths_.size()); }
    long vertex_count() const;  // 1 + sum of branch lengths

    bool operator==(const StarGraph&) const = default;

  private:
    std::vector<int> lengths_;
};

inline StarGraph make_graph(std::vector<int> branch_lengths) {
    return StarGraph(std::move(branch_lengths));
}

// Pattern match on the multiset of branch lengths. Invariant under branch
// permutation; n <= 2 is Dynkin A (a path is a star with at most two arms).
GraphClass classify_structural(const StarGraph& g);

}  // namespace starcalc
