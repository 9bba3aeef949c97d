#include "arbor/io.hpp"

#include <cstdint>
#include <limits>

namespace arbor {

namespace {

Json tree_node_to_json(const detail::TreeNode::Ptr& node, bool with_ranks) {
    if (node->is_leaf()) {
        return nullptr;
    }
    Json j;
    if (with_ranks) {
        j["rank"] = node->rank;
    } else {
        j["rank"] = nullptr;
    }
    j["left"] = tree_node_to_json(node->left, with_ranks);
    j["right"] = tree_node_to_json(node->right, with_ranks);
    return j;
}

// Arbitrary-precision integers ride as JSON numbers while they fit in 64
// bits and as decimal strings beyond that.
Json bigint_to_json(const BigInt& v) {
    static const BigInt kMin = BigInt(std::numeric_limits<std::int64_t>::min());
    static const BigInt kMax = BigInt(std::numeric_limits<std::int64_t>::max());
    if (v >= kMin && v <= kMax) {
        return v.convert_to<std::int64_t>();
    }
    return decimal_string(v);
}

}  // namespace

Json rational_to_json(const Rational& r) {
    return fraction_string(r);
}

Json to_json(const PlaneTree& tree) {
    return tree_node_to_json(tree.root(), false);
}

Json to_json(const RankedPlaneTree& tree) {
    return tree_node_to_json(tree.root(), true);
}

Json to_json(const TreeShape& shape) {
    return to_json(shape.representative());
}

Json to_json(const RankedTree& tree) {
    return to_json(tree.embedding());
}

Json to_json(const Partition& partition) {
    Json j = Json::array();
    for (const Rational& x : partition.endpoints()) {
        j.push_back(Json{{"num", bigint_to_json(numerator(x))}, {"den", bigint_to_json(denominator(x))}});
    }
    return j;
}

Json to_json(const DepthVector& depths) {
    Json j = Json::array();
    for (int y : depths.values()) {
        j.push_back(y);
    }
    return j;
}

Json to_json(const Permutation& permutation) {
    Json j = Json::array();
    for (int letter : permutation.word()) {
        j.push_back(letter);
    }
    return j;
}

Json to_json(const ExactProb& prob) {
    Json j;
    j["exact"] = prob.exact;
    j["approx"] = prob.approx;
    if (prob.exact) {
        j["value"] = rational_to_json(prob.value);
    } else {
        j["error_bound"] = prob.error_bound;
    }
    return j;
}

Json to_json(const PLMap& map) {
    Json breakpoints = Json::array();
    for (const auto& [x, y] : map.breakpoints()) {
        breakpoints.push_back(Json::array({rational_to_json(x), rational_to_json(y)}));
    }
    Json slopes = Json::array();
    for (const Rational& s : map.slopes()) {
        slopes.push_back(rational_to_json(s));
    }
    return Json{{"breakpoints", breakpoints}, {"slopes", slopes}};
}

}  // namespace arbor
