#pragma once

#include "arbor/exact_prob.hpp"
#include "arbor/numeric.hpp"
#include "arbor/tree.hpp"

#include <string>
#include <utility>
#include <vector>

namespace arbor {

// An ordered pair of plane trees with the same number of leaves, read as an
// element of the group of dyadic PL homeomorphisms of [0,1]: the first tree
// carves the domain, the second the range.  The pair's size is the common
// number of internal nodes.
class TreePair {
public:
    TreePair();  // pair of single leaves: the identity
    TreePair(PlaneTree domain, PlaneTree range);

    // The rvalue overloads return by value so chaining off a temporary
    // never dangles.
    const PlaneTree& domain_tree() const& { return domain_; }
    PlaneTree domain_tree() && { return std::move(domain_); }
    const PlaneTree& range_tree() const& { return range_; }
    PlaneTree range_tree() && { return std::move(range_); }

    int leaf_count() const { return domain_.leaf_count(); }
    int size() const { return domain_.internal_count(); }

    friend bool operator==(const TreePair& a, const TreePair& b) {
        return a.domain_ == b.domain_ && a.range_ == b.range_;
    }

private:
    PlaneTree domain_;
    PlaneTree range_;
};

// Piecewise-linear homeomorphism of [0,1] with dyadic rational breakpoints
// and slopes that are powers of two: fixes 0 and 1, strictly increasing.
// Stored in canonical form (no breakpoint where the slope does not change).
class PLMap {
public:
    PLMap();  // identity
    explicit PLMap(std::vector<std::pair<Rational, Rational>> breakpoints);

    // Canonical breakpoints (x, f(x)), including (0,0) and (1,1).
    const std::vector<std::pair<Rational, Rational>>& breakpoints() const& { return points_; }
    std::vector<std::pair<Rational, Rational>> breakpoints() && { return std::move(points_); }

    // Slope on each of the breakpoints()-defined segments, left to right.
    std::vector<Rational> slopes() const;

    bool is_identity() const { return points_.size() == 2; }

    // Evaluate at x in [0,1]; throws DomainError outside.
    Rational evaluate(const Rational& x) const;

    // "(0,0) (1/4,1/2) (1,1)"
    std::string str() const;

    friend bool operator==(const PLMap& a, const PLMap& b) { return a.points_ == b.points_; }

private:
    std::vector<std::pair<Rational, Rational>> points_;
};

// The PL map of a tree pair: the i-th endpoint of the domain tree's dyadic
// partition is sent to the i-th endpoint of the range tree's, linearly in
// between.
PLMap pl_map(const TreePair& pair);

// Sampling weights attached to a tree pair by putting independent identical
// tree distributions on the two coordinates: uniform puts 1/C_n on each
// n-internal-node plane tree, yule puts B(t)/n! on each.
struct PairWeights {
    ExactProb uniform_weight;
    ExactProb yule_weight;
};

PairWeights pair_weights(const TreePair& pair);

}  // namespace arbor
