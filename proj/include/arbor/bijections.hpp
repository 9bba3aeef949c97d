#pragma once

#include "arbor/numeric.hpp"
#include "arbor/partition.hpp"
#include "arbor/permutation.hpp"
#include "arbor/tree.hpp"

#include <vector>

namespace arbor {

// Word -> ranked plane tree: the root of the tree for sigma = sigma_L ·
// min(sigma) · sigma_R carries rank min(sigma), with the two factors lifted
// recursively; the empty word gives the single-node tree.
RankedPlaneTree lift(const Permutation& sigma);

// Ranks of the internal nodes in symmetric (in-fix) order; exact inverse of
// lift.
Permutation read_infix(const RankedPlaneTree& tree);

// The representative word of the tree's ranked-tree class: recursively swap
// the two factors whenever min(sigma_L) > min(sigma_R) or sigma_L is empty
// (a cherry, with both factors empty, needs no reordering), then read
// in-fix. Idempotent.
Permutation canonical_ranked_word(const Permutation& sigma);

bool is_canonical(const Permutation& sigma);

// Grow a binary search tree by inserting the letters of the word as keys in
// order; the node created at step i carries rank i. The keys themselves are
// forgotten: the result lives in the same class as the splitting
// construction.
RankedPlaneTree bst_insert_all(const Permutation& keys);

// Replay of a tree's splitting history on [0,1]: each split bisects the
// interval of the split leaf at its midpoint.
struct PartitionHistory {
    // X_0 = 0, X_1 = 1, then one midpoint per split in rank order.
    std::vector<Rational> sequence;
    // The same endpoints sorted: X_(0) < ... < X_(k).
    Partition partition;
};

PartitionHistory tree_to_partition(const RankedPlaneTree& tree);

}  // namespace arbor
