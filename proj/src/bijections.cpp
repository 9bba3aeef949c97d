#include "arbor/bijections.hpp"

#include "arbor/error.hpp"

#include <algorithm>
#include <memory>

namespace arbor {

using detail::TreeNode;

namespace {

TreeNode::Ptr lift_range(const std::vector<int>& word, int lo, int hi) {
    if (lo >= hi) return detail::make_leaf();
    int min_index = lo;
    for (int i = lo + 1; i < hi; ++i) {
        if (word[i] < word[min_index]) min_index = i;
    }
    return detail::make_node(lift_range(word, lo, min_index),
                             lift_range(word, min_index + 1, hi),
                             word[min_index]);
}

}  // namespace

RankedPlaneTree lift(const Permutation& sigma) {
    const std::vector<int>& word = sigma.word();
    return RankedPlaneTree::from_root(
        lift_range(word, 0, static_cast<int>(word.size())));
}

namespace {

void infix_ranks(const TreeNode::Ptr& node, std::vector<int>& out) {
    if (node->is_leaf()) return;
    infix_ranks(node->left, out);
    out.push_back(node->rank);
    infix_ranks(node->right, out);
}

}  // namespace

Permutation read_infix(const RankedPlaneTree& tree) {
    std::vector<int> word;
    infix_ranks(tree.root(), word);
    return Permutation(std::move(word));
}

Permutation canonical_ranked_word(const Permutation& sigma) {
    return read_infix(to_ranked(lift(sigma)).embedding());
}

bool is_canonical(const Permutation& sigma) {
    return canonical_ranked_word(sigma) == sigma;
}

namespace {

struct BstNode {
    int key;
    int rank;
    std::unique_ptr<BstNode> left;
    std::unique_ptr<BstNode> right;
};

TreeNode::Ptr freeze_bst(const BstNode* node) {
    if (node == nullptr) return detail::make_leaf();
    return detail::make_node(freeze_bst(node->left.get()),
                             freeze_bst(node->right.get()), node->rank);
}

}  // namespace

RankedPlaneTree bst_insert_all(const Permutation& keys) {
    std::unique_ptr<BstNode> root;
    int step = 0;
    for (int key : keys.word()) {
        ++step;
        std::unique_ptr<BstNode>* slot = &root;
        while (*slot != nullptr)
            slot = key < (*slot)->key ? &(*slot)->left : &(*slot)->right;
        *slot = std::make_unique<BstNode>(BstNode{key, step, nullptr, nullptr});
    }
    return RankedPlaneTree::from_root(freeze_bst(root.get()));
}

namespace {

struct RankedInterval {
    Rational lo;
    Rational hi;
};

void collect_rank_intervals(const TreeNode::Ptr& node, const Rational& lo,
                            const Rational& hi,
                            std::vector<RankedInterval>& by_rank) {
    if (node->is_leaf()) return;
    by_rank[node->rank - 1] = {lo, hi};
    const Rational mid = (lo + hi) / 2;
    collect_rank_intervals(node->left, lo, mid, by_rank);
    collect_rank_intervals(node->right, mid, hi, by_rank);
}

}  // namespace

PartitionHistory tree_to_partition(const RankedPlaneTree& tree) {
    const int splits = tree.internal_count();
    std::vector<RankedInterval> by_rank(splits);
    collect_rank_intervals(tree.root(), Rational(0), Rational(1), by_rank);
    PartitionHistory history;
    history.sequence.reserve(splits + 2);
    history.sequence.push_back(Rational(0));
    history.sequence.push_back(Rational(1));
    for (const RankedInterval& interval : by_rank)
        history.sequence.push_back((interval.lo + interval.hi) / 2);
    std::vector<Rational> sorted = history.sequence;
    std::sort(sorted.begin(), sorted.end());
    history.partition = Partition(std::move(sorted));
    return history;
}

}  // namespace arbor
