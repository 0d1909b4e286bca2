#pragma once

#include "tdc/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tdc {

enum class Family {
    Path,
    Cycle,
    Star,
    DoubleStar,
    Wheel,
    Complete,
    Friendship,
    TreeExhaustive,
    TreeRandom,
};

std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family f);

struct FamilySpec {
    Family family;
    int n = 0;
    std::optional<std::uint64_t> seed; // TreeRandom only
};

// Throws if n is outside the family's validity range. Vertex conventions:
// star/wheel/friendship/double-star center or hub is vertex 0; paths and
// cycles run 0..n-1 in order. Wheel W_n has order n: hub plus an
// (n-1)-cycle rim.
Graph generate(const FamilySpec& spec);

void validate_spec(const FamilySpec& spec);

// [lo,hi]; lo==hi for families with an exact closed form
struct ClosedFormPrediction {
    int lo = 0;
    int hi = 0;
    std::string source;
    bool exact() const { return lo == hi; }
};

// Closed form for the total dominator chromatic number of M(G); nullopt
// for families without one (trees).
std::optional<ClosedFormPrediction> predict_tdc_of_middle(const FamilySpec& spec);

// One representative per isomorphism class of trees on n vertices, 2<=n<=10.
std::vector<Graph> enumerate_trees(int n);

// Uniform random labeled tree from a seeded Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

std::vector<int> leaves(const Graph& g);

} // namespace tdc
