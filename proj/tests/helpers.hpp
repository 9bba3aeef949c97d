#pragma once

#include "arbor/bijections.hpp"
#include "arbor/permutation.hpp"
#include "arbor/tree.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace arbor::testing {

// Left comb: every internal node's right child is a leaf ("(((··)·)·)").
inline PlaneTree left_comb(int leaves) {
    PlaneTree t = PlaneTree::leaf();
    for (int i = 1; i < leaves; ++i) {
        t = PlaneTree::join(t, PlaneTree::leaf());
    }
    return t;
}

inline PlaneTree right_comb(int leaves) {
    PlaneTree t = PlaneTree::leaf();
    for (int i = 1; i < leaves; ++i) {
        t = PlaneTree::join(PlaneTree::leaf(), t);
    }
    return t;
}

// Perfectly balanced tree with 2^depth leaves.
inline PlaneTree perfect_tree(int depth) {
    PlaneTree t = PlaneTree::leaf();
    for (int d = 0; d < depth; ++d) {
        t = PlaneTree::join(t, t);
    }
    return t;
}

// All words of the symmetric group S_m in lexicographic order.
inline std::vector<Permutation> symmetric_group(int m) {
    std::vector<int> word(static_cast<std::size_t>(m));
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

}  // namespace arbor::testing
