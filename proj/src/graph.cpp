#include "starcalc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace starcalc {

GraphFamily family_of(GraphClass c) {
    switch (c) {
        case GraphClass::DynkinA:
        case GraphClass::DynkinD:
        case GraphClass::DynkinE6:
        case GraphClass::DynkinE7:
        case GraphClass::DynkinE8:
            return GraphFamily::Dynkin;
        case GraphClass::ExtendedD4:
        case GraphClass::ExtendedE6:
        case GraphClass::ExtendedE7:
        case GraphClass::ExtendedE8:
            return GraphFamily::ExtendedDynkin;
        case GraphClass::Hyperbolic:
            return GraphFamily::Hyperbolic;
    }
    throw std::logic_error("unreachable graph class");
}

std::string class_name(GraphClass c) {
    switch (c) {
        case GraphClass::DynkinA: return "A";
        case GraphClass::DynkinD: return "D";
        case GraphClass::DynkinE6: return "E6";
        case GraphClass::DynkinE7: return "E7";
        case GraphClass::DynkinE8: return "E8";
        case GraphClass::ExtendedD4: return "D4~";
        case GraphClass::ExtendedE6: return "E6~";
        case GraphClass::ExtendedE7: return "E7~";
        case GraphClass::ExtendedE8: return "E8~";
        case GraphClass::Hyperbolic: return "";
    }
    throw std::logic_error("unreachable graph class");
}

std::string family_name(GraphFamily f) {
    switch (f) {
        case GraphFamily::Dynkin: return "dynkin";
        case GraphFamily::ExtendedDynkin: return "extended";
        case GraphFamily::Hyperbolic: return "hyperbolic";
    }
    throw std::logic_error("unreachable graph family");
}

StarGraph::StarGraph(std::vector<int> branch_lengths) : lengths_(std::move(branch_lengths)) {
    if (lengths_.empty()) throw std::invalid_argument("star graph needs at least one branch");
    for (int k : lengths_)
        if (k < 1) throw std::invalid_argument("branch length must be >= 1");
}

long StarGraph::vertex_count() const {
    return 1 + std::accumulate(lengths_.begin(), lengths_.end(), 0L);
}

GraphClass classify_structural(const StarGraph& g) {
    if (g.branch_count() <= 2) return GraphClass::DynkinA;

    std::vector<int> k = g.branch_lengths();
    std::sort(k.begin(), k.end());

    if (k.size() == 3) {
        if (k[0] == 1 && k[1] == 1) return GraphClass::DynkinD;  // covers D4 = {1,1,1}
        if (k == std::vector<int>{1, 2, 2}) return GraphClass::DynkinE6;
        if (k == std::vector<int>{1, 2, 3}) return GraphClass::DynkinE7;
        if (k == std::vector<int>{1, 2, 4}) return GraphClass::DynkinE8;
        if (k == std::vector<int>{2, 2, 2}) return GraphClass::ExtendedE6;
        if (k == std::vector<int>{1, 3, 3}) return GraphClass::ExtendedE7;
        if (k == std::vector<int>{1, 2, 5}) return GraphClass::ExtendedE8;
    } else if (k.size() == 4) {
        if (k == std::vector<int>{1, 1, 1, 1}) return GraphClass::ExtendedD4;
    }
    return GraphClass::Hyperbolic;
}

}  // namespace starcalc
