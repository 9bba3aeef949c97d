#pragma once

#include "arbor/address.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arbor {

namespace detail {

// Shared immutable node. Both children are null (leaf) or both non-null
// (internal). rank == 0 means "no rank"; ranked trees use ranks >= 1.
struct TreeNode {
    using Ptr = std::shared_ptr<const TreeNode>;
    Ptr left;
    Ptr right;
    int rank = 0;
    bool is_leaf() const { return left == nullptr; }
};

TreeNode::Ptr make_leaf();
TreeNode::Ptr make_node(TreeNode::Ptr left, TreeNode::Ptr right, int rank);

int count_leaves(const TreeNode::Ptr& node);
bool same_structure(const TreeNode::Ptr& a, const TreeNode::Ptr& b);  // ranks ignored
bool same_ranked(const TreeNode::Ptr& a, const TreeNode::Ptr& b);     // ranks compared
TreeNode::Ptr node_at(const TreeNode::Ptr& root, const NodeAddress& address);

// Balanced-parenthesis encodings used for printing and as set keys.
std::string encode_plane(const TreeNode::Ptr& node);   // leaf = "·"
std::string encode_ranked(const TreeNode::Ptr& node);  // internal nodes show ranks

}  // namespace detail

class RankedPlaneTree;
class TreeShape;
class RankedTree;

// Rooted binary tree embedded in the plane (left and right children are
// distinguished), without ranks. Immutable value type.
class PlaneTree {
public:
    PlaneTree();  // single leaf
    static PlaneTree leaf();
    static PlaneTree join(const PlaneTree& left, const PlaneTree& right);
    static PlaneTree from_root(detail::TreeNode::Ptr root);

    // Balanced-parenthesis literal: leaf = "·" (or ASCII "."), internal =
    // "(" left right ")".
    static PlaneTree parse(std::string_view text);
    std::string to_parens() const;

    bool is_leaf() const { return root_->is_leaf(); }
    PlaneTree left() const;
    PlaneTree right() const;
    int leaf_count() const;
    int internal_count() const { return leaf_count() - 1; }

    const detail::TreeNode::Ptr& root() const { return root_; }

    friend bool operator==(const PlaneTree& a, const PlaneTree& b) {
        return detail::same_structure(a.root_, b.root_);
    }

private:
    detail::TreeNode::Ptr root_;
};

// Rooted binary plane tree whose n-1 internal nodes carry the ranks 1..n-1
// recording the order in which leaves were split; ranks strictly increase
// away from the root. The finest of the four tree classes.
class RankedPlaneTree {
public:
    RankedPlaneTree();  // single leaf, no internal nodes
    static RankedPlaneTree single();

    // Validates the ranking condition (ranks are exactly {1..n-1}, increasing
    // along every root-to-leaf path).
    static RankedPlaneTree from_root(detail::TreeNode::Ptr root);

    // Replace the addressed leaf by an internal node carrying the next rank,
    // with two fresh leaves below it.
    RankedPlaneTree split_leaf(const NodeAddress& leaf) const;

    bool is_leaf() const { return root_->is_leaf(); }
    int leaf_count() const;
    int internal_count() const { return leaf_count() - 1; }

    std::vector<NodeAddress> leaf_addresses() const;  // left-to-right order
    // index r-1 holds the address of the internal node with rank r
    std::vector<NodeAddress> internal_addresses_by_rank() const;

    PlaneTree plane() const { return PlaneTree::from_root(root_); }
    const detail::TreeNode::Ptr& root() const { return root_; }

    friend bool operator==(const RankedPlaneTree& a, const RankedPlaneTree& b) {
        return detail::same_ranked(a.root_, b.root_);
    }

private:
    detail::TreeNode::Ptr root_;
};

// Plane tree with the embedding forgotten: represented by the canonical
// plane tree in which every node's two subtrees are ordered by
// (leaf count, parenthesis string).
class TreeShape {
public:
    TreeShape();  // single leaf
    static TreeShape leaf();
    explicit TreeShape(const PlaneTree& tree);

    // The rvalue overload returns by value so chaining off a temporary
    // never dangles.
    const PlaneTree& representative() const& { return representative_; }
    PlaneTree representative() && { return std::move(representative_); }
    std::string to_parens() const { return representative_.to_parens(); }
    bool is_leaf() const { return representative_.is_leaf(); }
    int leaf_count() const { return representative_.leaf_count(); }
    int internal_count() const { return representative_.internal_count(); }

    friend bool operator==(const TreeShape& a, const TreeShape& b) {
        return a.representative_ == b.representative_;
    }

private:
    PlaneTree representative_;
};

// Ranked tree with planarity forgotten: represented by the canonical ranked
// plane tree in standard form (at every internal node, a leaf child sits on
// the right, and two internal children are ordered by rank).
class RankedTree {
public:
    RankedTree();  // single leaf
    explicit RankedTree(const RankedPlaneTree& tree);

    const RankedPlaneTree& embedding() const& { return embedding_; }
    RankedPlaneTree embedding() && { return std::move(embedding_); }
    bool is_leaf() const { return embedding_.is_leaf(); }
    int leaf_count() const { return embedding_.leaf_count(); }
    int internal_count() const { return embedding_.internal_count(); }

    friend bool operator==(const RankedTree& a, const RankedTree& b) {
        return a.embedding_ == b.embedding_;
    }

private:
    RankedPlaneTree embedding_;
};

// Mutable construction helper for samplers and other incremental builders;
// freeze() produces the immutable value types.
class TreeBuilder {
public:
    TreeBuilder();  // single leaf with id 0

    int root() const { return root_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    bool is_leaf(int id) const;

    // Turn the addressed leaf into an internal node with the given rank and
    // two fresh leaves; returns the ids of the (left, right) leaves.
    std::pair<int, int> split(int leaf_id, int rank);

    // Insert a new internal node where node_id currently sits; its children
    // are a fresh leaf and node_id (leaf side chosen by the flag). Returns
    // (new internal id, new leaf id).
    std::pair<int, int> graft_above(int node_id, bool new_leaf_on_left);

    PlaneTree freeze_plane() const;
    RankedPlaneTree freeze_ranked() const;

private:
    struct Node {
        int left = -1;
        int right = -1;
        int parent = -1;
        int rank = 0;
    };
    std::vector<Node> nodes_;
    int root_ = 0;

    detail::TreeNode::Ptr freeze(int id) const;
};

// Structural statistics -------------------------------------------------

// Number of internal nodes whose children are both leaves.
int cherries(const PlaneTree& tree);
int cherries(const RankedPlaneTree& tree);
int cherries(const TreeShape& tree);
int cherries(const RankedTree& tree);

// Number of internal nodes whose left and right subtrees have the same
// shape. A shape statistic: equal for all plane trees of one shape.
int symmetry_nodes(const PlaneTree& tree);
int symmetry_nodes(const TreeShape& tree);

// For each internal node u, the number of internal nodes of the subtree
// rooted at u (the node itself included).
std::map<NodeAddress, int> subtree_internal_sizes(const PlaneTree& tree);

// Same values without addresses, computed iteratively; safe for very deep
// trees and cheaper in sampling loops.
std::vector<int> internal_size_list(const PlaneTree& tree);

// Mirror image: swap the children of every internal node.
PlaneTree reflect(const PlaneTree& tree);

// Projections between the four classes ----------------------------------

PlaneTree to_plane(const RankedPlaneTree& tree);
RankedTree to_ranked(const RankedPlaneTree& tree);
TreeShape to_shape(const RankedPlaneTree& tree);
TreeShape to_shape(const PlaneTree& tree);

// A ranking of the given plane tree in breadth-first order: a convenient
// preimage under the rank-forgetting projection.
RankedPlaneTree bfs_ranking(const PlaneTree& tree);

}  // namespace arbor
