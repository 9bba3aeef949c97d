#include "arbor/tree.hpp"

#include "arbor/error.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace arbor {

namespace detail {

TreeNode::Ptr make_leaf() {
    static const TreeNode::Ptr shared_leaf = std::make_shared<const TreeNode>();
    return shared_leaf;
}

TreeNode::Ptr make_node(TreeNode::Ptr left, TreeNode::Ptr right, int rank) {
    if ((left == nullptr) != (right == nullptr))
        throw Error("internal node must have exactly two children");
    auto node = std::make_shared<TreeNode>();
    node->left = std::move(left);
    node->right = std::move(right);
    node->rank = rank;
    return node;
}

int count_leaves(const TreeNode::Ptr& node) {
    if (node->is_leaf()) return 1;
    return count_leaves(node->left) + count_leaves(node->right);
}

bool same_structure(const TreeNode::Ptr& a, const TreeNode::Ptr& b) {
    if (a.get() == b.get()) return true;
    if (a->is_leaf() || b->is_leaf()) return a->is_leaf() && b->is_leaf();
    return same_structure(a->left, b->left) && same_structure(a->right, b->right);
}

bool same_ranked(const TreeNode::Ptr& a, const TreeNode::Ptr& b) {
    if (a.get() == b.get()) return true;
    if (a->is_leaf() || b->is_leaf()) return a->is_leaf() && b->is_leaf();
    return a->rank == b->rank && same_ranked(a->left, b->left) &&
           same_ranked(a->right, b->right);
}

TreeNode::Ptr node_at(const TreeNode::Ptr& root, const NodeAddress& address) {
    TreeNode::Ptr node = root;
    for (char step : address.path()) {
        if (node == nullptr || node->is_leaf()) return nullptr;
        node = step == 'L' ? node->left : node->right;
    }
    return node;
}

namespace {

void append_plane(const TreeNode::Ptr& node, std::string& out) {
    if (node->is_leaf()) {
        out += "·";
        return;
    }
    out += '(';
    append_plane(node->left, out);
    append_plane(node->right, out);
    out += ')';
}

void append_ranked(const TreeNode::Ptr& node, std::string& out) {
    if (node->is_leaf()) {
        out += "·";
        return;
    }
    out += '(';
    append_ranked(node->left, out);
    out += std::to_string(node->rank);
    append_ranked(node->right, out);
    out += ')';
}

}  // namespace

std::string encode_plane(const TreeNode::Ptr& node) {
    std::string out;
    append_plane(node, out);
    return out;
}

std::string encode_ranked(const TreeNode::Ptr& node) {
    std::string out;
    append_ranked(node, out);
    return out;
}

}  // namespace detail

using detail::TreeNode;

// PlaneTree --------------------------------------------------------------

PlaneTree::PlaneTree() : root_(detail::make_leaf()) {}

PlaneTree PlaneTree::leaf() { return PlaneTree(); }

PlaneTree PlaneTree::join(const PlaneTree& left, const PlaneTree& right) {
    return from_root(detail::make_node(left.root_, right.root_, 0));
}

PlaneTree PlaneTree::from_root(TreeNode::Ptr root) {
    if (root == nullptr) throw Error("tree root must not be null");
    PlaneTree tree;
    tree.root_ = std::move(root);
    return tree;
}

namespace {

TreeNode::Ptr parse_plane_node(std::string_view text, std::size_t& pos) {
    if (pos >= text.size()) throw ParseError("unexpected end of tree literal");
    const char c = text[pos];
    if (c == '.') {
        ++pos;
        return detail::make_leaf();
    }
    // "·" is U+00B7, encoded as the two bytes 0xC2 0xB7.
    if (static_cast<unsigned char>(c) == 0xc2 && pos + 1 < text.size() &&
        static_cast<unsigned char>(text[pos + 1]) == 0xb7) {
        pos += 2;
        return detail::make_leaf();
    }
    if (c == '(') {
        ++pos;
        TreeNode::Ptr left = parse_plane_node(text, pos);
        TreeNode::Ptr right = parse_plane_node(text, pos);
        if (pos >= text.size() || text[pos] != ')')
            throw ParseError("missing ')' in tree literal");
        ++pos;
        return detail::make_node(std::move(left), std::move(right), 0);
    }
    throw ParseError("unexpected character in tree literal: \"" + std::string(1, c) + "\"");
}

}  // namespace

PlaneTree PlaneTree::parse(std::string_view text) {
    std::size_t pos = 0;
    TreeNode::Ptr root = parse_plane_node(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters in tree literal");
    return from_root(std::move(root));
}

std::string PlaneTree::to_parens() const { return detail::encode_plane(root_); }

PlaneTree PlaneTree::left() const {
    if (is_leaf()) throw Error("a leaf has no left subtree");
    return from_root(root_->left);
}

PlaneTree PlaneTree::right() const {
    if (is_leaf()) throw Error("a leaf has no right subtree");
    return from_root(root_->right);
}

int PlaneTree::leaf_count() const { return detail::count_leaves(root_); }

// RankedPlaneTree --------------------------------------------------------

RankedPlaneTree::RankedPlaneTree() : root_(detail::make_leaf()) {}

RankedPlaneTree RankedPlaneTree::single() { return RankedPlaneTree(); }

RankedPlaneTree RankedPlaneTree::from_root(TreeNode::Ptr root) {
    if (root == nullptr) throw Error("tree root must not be null");
    // Validate the ranking condition without recursion so arbitrarily deep
    // sampled trees are accepted.
    int internal = 0;
    {
        std::vector<const TreeNode*> stack{root.get()};
        while (!stack.empty()) {
            const TreeNode* node = stack.back();
            stack.pop_back();
            if (node->is_leaf()) continue;
            ++internal;
            stack.push_back(node->left.get());
            stack.push_back(node->right.get());
        }
    }
    std::vector<char> seen(internal + 1, 0);
    std::vector<std::pair<const TreeNode*, int>> stack;  // (node, parent rank)
    stack.emplace_back(root.get(), 0);
    while (!stack.empty()) {
        auto [node, parent_rank] = stack.back();
        stack.pop_back();
        if (node->is_leaf()) continue;
        const int rank = node->rank;
        if (rank < 1 || rank > internal)
            throw Error("ranks must be exactly 1..n-1");
        if (rank <= parent_rank)
            throw Error("ranks must increase away from the root");
        if (seen[rank]) throw Error("duplicate rank " + std::to_string(rank));
        seen[rank] = 1;
        stack.emplace_back(node->left.get(), rank);
        stack.emplace_back(node->right.get(), rank);
    }
    RankedPlaneTree tree;
    tree.root_ = std::move(root);
    return tree;
}

namespace {

TreeNode::Ptr split_at_path(const TreeNode::Ptr& node, const std::string& path,
                            std::size_t pos, int new_rank) {
    if (pos == path.size()) {
        if (!node->is_leaf())
            throw InvalidSplitError("address names an internal node, not a leaf");
        return detail::make_node(detail::make_leaf(), detail::make_leaf(), new_rank);
    }
    if (node->is_leaf())
        throw InvalidSplitError("address not present in the tree");
    if (path[pos] == 'L')
        return detail::make_node(split_at_path(node->left, path, pos + 1, new_rank),
                                 node->right, node->rank);
    return detail::make_node(node->left,
                             split_at_path(node->right, path, pos + 1, new_rank),
                             node->rank);
}

}  // namespace

RankedPlaneTree RankedPlaneTree::split_leaf(const NodeAddress& leaf) const {
    const int new_rank = internal_count() + 1;  // = previous leaf count
    RankedPlaneTree tree;
    tree.root_ = split_at_path(root_, leaf.path(), 0, new_rank);
    return tree;
}

int RankedPlaneTree::leaf_count() const { return detail::count_leaves(root_); }

namespace {

void collect_leaves(const TreeNode::Ptr& node, std::string& path,
                    std::vector<NodeAddress>& out) {
    if (node->is_leaf()) {
        out.emplace_back(path);
        return;
    }
    path.push_back('L');
    collect_leaves(node->left, path, out);
    path.back() = 'R';
    collect_leaves(node->right, path, out);
    path.pop_back();
}

void collect_ranked(const TreeNode::Ptr& node, std::string& path,
                    std::vector<std::pair<int, NodeAddress>>& out) {
    if (node->is_leaf()) return;
    out.emplace_back(node->rank, NodeAddress(path));
    path.push_back('L');
    collect_ranked(node->left, path, out);
    path.back() = 'R';
    collect_ranked(node->right, path, out);
    path.pop_back();
}

}  // namespace

std::vector<NodeAddress> RankedPlaneTree::leaf_addresses() const {
    std::vector<NodeAddress> out;
    std::string path;
    collect_leaves(root_, path, out);
    return out;
}

std::vector<NodeAddress> RankedPlaneTree::internal_addresses_by_rank() const {
    std::vector<std::pair<int, NodeAddress>> pairs;
    std::string path;
    collect_ranked(root_, path, pairs);
    std::vector<NodeAddress> out(pairs.size());
    for (auto& [rank, address] : pairs) out[rank - 1] = std::move(address);
    return out;
}

// TreeShape --------------------------------------------------------------

namespace {

struct CanonicalShape {
    TreeNode::Ptr node;
    int leaves = 1;
    std::string enc;
    int symmetry = 0;
};

CanonicalShape canonical_shape(const TreeNode::Ptr& node) {
    if (node->is_leaf()) return {detail::make_leaf(), 1, "·", 0};
    CanonicalShape a = canonical_shape(node->left);
    CanonicalShape b = canonical_shape(node->right);
    // Subtree order: fewer leaves first, ties broken by encoding.
    if (std::tie(b.leaves, b.enc) < std::tie(a.leaves, a.enc)) std::swap(a, b);
    CanonicalShape out;
    out.node = detail::make_node(a.node, b.node, 0);
    out.leaves = a.leaves + b.leaves;
    out.enc = "(" + a.enc + b.enc + ")";
    out.symmetry = a.symmetry + b.symmetry + (a.enc == b.enc ? 1 : 0);
    return out;
}

}  // namespace

TreeShape::TreeShape() : representative_(PlaneTree::leaf()) {}

TreeShape TreeShape::leaf() { return TreeShape(); }

TreeShape::TreeShape(const PlaneTree& tree) : representative_(PlaneTree::leaf()) {
    representative_ = PlaneTree::from_root(canonical_shape(tree.root()).node);
}

// RankedTree -------------------------------------------------------------

namespace {

// Standard form: a leaf child sits on the right of an internal child, and
// two internal children are ordered with the smaller rank on the left
// (ranks increase away from the root, so a subtree's smallest rank is the
// rank of its root).
TreeNode::Ptr canonical_ranked(const TreeNode::Ptr& node) {
    if (node->is_leaf()) return detail::make_leaf();
    TreeNode::Ptr a = canonical_ranked(node->left);
    TreeNode::Ptr b = canonical_ranked(node->right);
    const bool swap_children =
        (a->is_leaf() && !b->is_leaf()) ||
        (!a->is_leaf() && !b->is_leaf() && a->rank > b->rank);
    if (swap_children) std::swap(a, b);
    return detail::make_node(std::move(a), std::move(b), node->rank);
}

}  // namespace

RankedTree::RankedTree() : embedding_(RankedPlaneTree::single()) {}

RankedTree::RankedTree(const RankedPlaneTree& tree)
    : embedding_(RankedPlaneTree::from_root(canonical_ranked(tree.root()))) {}

// TreeBuilder ------------------------------------------------------------

TreeBuilder::TreeBuilder() { nodes_.push_back({}); }

bool TreeBuilder::is_leaf(int id) const { return nodes_[id].left < 0; }

std::pair<int, int> TreeBuilder::split(int leaf_id, int rank) {
    if (leaf_id < 0 || leaf_id >= node_count() || !is_leaf(leaf_id))
        throw InvalidSplitError("builder split requires a leaf id");
    const int left_id = node_count();
    const int right_id = left_id + 1;
    nodes_.push_back({-1, -1, leaf_id, 0});
    nodes_.push_back({-1, -1, leaf_id, 0});
    nodes_[leaf_id].left = left_id;
    nodes_[leaf_id].right = right_id;
    nodes_[leaf_id].rank = rank;
    return {left_id, right_id};
}

std::pair<int, int> TreeBuilder::graft_above(int node_id, bool new_leaf_on_left) {
    if (node_id < 0 || node_id >= node_count())
        throw Error("builder graft requires a valid node id");
    const int internal_id = node_count();
    const int leaf_id = internal_id + 1;
    const int parent = nodes_[node_id].parent;
    nodes_.push_back({new_leaf_on_left ? leaf_id : node_id,
                      new_leaf_on_left ? node_id : leaf_id, parent, 0});
    nodes_.push_back({-1, -1, internal_id, 0});
    nodes_[node_id].parent = internal_id;
    if (parent < 0) {
        root_ = internal_id;
    } else if (nodes_[parent].left == node_id) {
        nodes_[parent].left = internal_id;
    } else {
        nodes_[parent].right = internal_id;
    }
    return {internal_id, leaf_id};
}

TreeNode::Ptr TreeBuilder::freeze(int id) const {
    // Iterative post-order build; sampled trees can be deep.
    std::vector<TreeNode::Ptr> built(nodes_.size());
    std::vector<std::pair<int, bool>> stack;
    stack.emplace_back(id, false);
    while (!stack.empty()) {
        auto [current, expanded] = stack.back();
        stack.pop_back();
        const Node& node = nodes_[current];
        if (node.left < 0) {
            built[current] = detail::make_leaf();
            continue;
        }
        if (!expanded) {
            stack.emplace_back(current, true);
            stack.emplace_back(node.left, false);
            stack.emplace_back(node.right, false);
        } else {
            built[current] =
                detail::make_node(built[node.left], built[node.right], node.rank);
        }
    }
    return built[id];
}

PlaneTree TreeBuilder::freeze_plane() const {
    return PlaneTree::from_root(freeze(root_));
}

RankedPlaneTree TreeBuilder::freeze_ranked() const {
    return RankedPlaneTree::from_root(freeze(root_));
}

// Statistics -------------------------------------------------------------

namespace {

int count_cherries(const TreeNode::Ptr& node) {
    if (node->is_leaf()) return 0;
    if (node->left->is_leaf() && node->right->is_leaf()) return 1;
    return count_cherries(node->left) + count_cherries(node->right);
}

}  // namespace

int cherries(const PlaneTree& tree) { return count_cherries(tree.root()); }
int cherries(const RankedPlaneTree& tree) { return count_cherries(tree.root()); }
int cherries(const TreeShape& tree) { return count_cherries(tree.representative().root()); }
int cherries(const RankedTree& tree) { return count_cherries(tree.embedding().root()); }

int symmetry_nodes(const PlaneTree& tree) {
    return canonical_shape(tree.root()).symmetry;
}

int symmetry_nodes(const TreeShape& tree) {
    return canonical_shape(tree.representative().root()).symmetry;
}

namespace {

// Returns the number of internal nodes below (and including) node.
int collect_internal_sizes(const TreeNode::Ptr& node, std::string& path,
                           std::map<NodeAddress, int>& out) {
    if (node->is_leaf()) return 0;
    path.push_back('L');
    const int left = collect_internal_sizes(node->left, path, out);
    path.back() = 'R';
    const int right = collect_internal_sizes(node->right, path, out);
    path.pop_back();
    const int size = left + right + 1;
    out.emplace(NodeAddress(path), size);
    return size;
}

}  // namespace

std::map<NodeAddress, int> subtree_internal_sizes(const PlaneTree& tree) {
    std::map<NodeAddress, int> out;
    std::string path;
    collect_internal_sizes(tree.root(), path, out);
    return out;
}

std::vector<int> internal_size_list(const PlaneTree& tree) {
    std::vector<int> sizes;
    std::vector<std::pair<const TreeNode*, bool>> stack;
    std::vector<int> values;  // post-order value stack
    stack.emplace_back(tree.root().get(), false);
    while (!stack.empty()) {
        auto [node, expanded] = stack.back();
        stack.pop_back();
        if (node->is_leaf()) {
            values.push_back(0);
            continue;
        }
        if (!expanded) {
            stack.emplace_back(node, true);
            stack.emplace_back(node->left.get(), false);
            stack.emplace_back(node->right.get(), false);
        } else {
            const int one_child = values.back();
            values.pop_back();
            const int other_child = values.back();
            values.pop_back();
            const int size = one_child + other_child + 1;
            sizes.push_back(size);
            values.push_back(size);
        }
    }
    return sizes;
}

namespace {

TreeNode::Ptr reflect_node(const TreeNode::Ptr& node) {
    if (node->is_leaf()) return detail::make_leaf();
    return detail::make_node(reflect_node(node->right), reflect_node(node->left),
                             node->rank);
}

}  // namespace

PlaneTree reflect(const PlaneTree& tree) {
    return PlaneTree::from_root(reflect_node(tree.root()));
}

// Projections ------------------------------------------------------------

PlaneTree to_plane(const RankedPlaneTree& tree) { return tree.plane(); }

RankedTree to_ranked(const RankedPlaneTree& tree) { return RankedTree(tree); }

TreeShape to_shape(const RankedPlaneTree& tree) { return TreeShape(tree.plane()); }

TreeShape to_shape(const PlaneTree& tree) { return TreeShape(tree); }

namespace {

TreeNode::Ptr rebuild_with_ranks(const TreeNode::Ptr& node, std::string& path,
                                 const std::map<std::string, int>& ranks) {
    if (node->is_leaf()) return detail::make_leaf();
    const int rank = ranks.at(path);
    path.push_back('L');
    TreeNode::Ptr left = rebuild_with_ranks(node->left, path, ranks);
    path.back() = 'R';
    TreeNode::Ptr right = rebuild_with_ranks(node->right, path, ranks);
    path.pop_back();
    return detail::make_node(std::move(left), std::move(right), rank);
}

}  // namespace

RankedPlaneTree bfs_ranking(const PlaneTree& tree) {
    std::map<std::string, int> ranks;
    std::deque<std::pair<TreeNode::Ptr, std::string>> queue;
    queue.emplace_back(tree.root(), "");
    int next_rank = 1;
    while (!queue.empty()) {
        auto [node, path] = queue.front();
        queue.pop_front();
        if (node->is_leaf()) continue;
        ranks[path] = next_rank++;
        queue.emplace_back(node->left, path + "L");
        queue.emplace_back(node->right, path + "R");
    }
    std::string path;
    return RankedPlaneTree::from_root(rebuild_with_ranks(tree.root(), path, ranks));
}

}  // namespace arbor
