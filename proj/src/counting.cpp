#include "arbor/counting.hpp"

#include "arbor/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <utility>

namespace arbor {

std::string family_name(TreeFamily family) {
    switch (family) {
        case TreeFamily::ranked_plane: return "ranked_plane";
        case TreeFamily::plane: return "plane";
        case TreeFamily::ranked: return "ranked";
        case TreeFamily::shape: return "shape";
    }
    throw Error("unknown tree family");
}

TreeFamily parse_family(std::string_view name) {
    if (name == "ranked_plane") return TreeFamily::ranked_plane;
    if (name == "plane") return TreeFamily::plane;
    if (name == "ranked") return TreeFamily::ranked;
    if (name == "shape") return TreeFamily::shape;
    throw ParseError("unknown tree family: \"" + std::string(name) +
                     "\" (expected ranked_plane, plane, ranked, or shape)");
}

int guard_limit(TreeFamily family) {
    if (const char* env = std::getenv("ARBOR_GUARD_N")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || value < 1)
            throw InvalidParameterError(
                "ARBOR_GUARD_N must be a positive integer, got \"" +
                std::string(env) + "\"");
        return static_cast<int>(value);
    }
    return family == TreeFamily::ranked_plane ? 9 : 12;
}

namespace {

void check_guard(TreeFamily family, int n) {
    if (n < 1) throw UndefinedInputError("leaf count must be positive");
    const int limit = guard_limit(family);
    if (n > limit)
        throw ResourceGuardError(
            "enumerating " + family_name(family) + " trees with n=" +
            std::to_string(n) + " exceeds the guard limit " +
            std::to_string(limit) + "; set ARBOR_GUARD_N to override");
}

// Mutex-protected monotone sequence cache: the fill is idempotent, so
// concurrent callers either wait or read completed prefixes.
class SequenceCache {
public:
    template <typename Extend>
    BigInt get(int n, Extend&& extend) {
        std::scoped_lock lock(mutex_);
        while (static_cast<int>(values_.size()) <= n)
            values_.push_back(extend(values_));
        return values_[n];
    }

private:
    std::mutex mutex_;
    std::vector<BigInt> values_;
};

}  // namespace

BigInt catalan(int n) {
    if (n < 0) throw UndefinedInputError("Catalan numbers start at n=0");
    static SequenceCache cache;
    return cache.get(n, [](const std::vector<BigInt>& values) {
        const int k = static_cast<int>(values.size());
        if (k == 0) return BigInt(1);
        // C_k = C_(k-1) * 2(2k-1)/(k+1), exact at every step.
        return BigInt(values[k - 1] * 2 * (2 * k - 1) / (k + 1));
    });
}

namespace {

BigInt internal_size_product(const PlaneTree& tree) {
    BigInt product = 1;
    for (int size : internal_size_list(tree)) product *= size;
    return product;
}

}  // namespace

BigInt catalan_coefficient(const PlaneTree& tree) {
    return factorial(tree.leaf_count() - 1) / internal_size_product(tree);
}

BigInt catalan_coefficient(const TreeShape& shape) {
    return catalan_coefficient(shape.representative());
}

BigInt shape_coefficient(const TreeShape& shape) {
    return pow2(shape.leaf_count() - 1 - symmetry_nodes(shape));
}

BigInt rpt_per_ranked_tree(const RankedTree& tree) {
    return pow2(tree.leaf_count() - 1 - cherries(tree));
}

BigInt rpt_per_shape(const TreeShape& shape) {
    return catalan_coefficient(shape) *
           pow2(shape.leaf_count() - 1 - symmetry_nodes(shape));
}

BigInt ranked_per_shape(const TreeShape& shape) {
    // B(t) * 2^(cherries - s); the exponent can be negative (a symmetric
    // node above cherry level), but the product is always a whole number.
    const int exponent = cherries(shape) - symmetry_nodes(shape);
    const BigInt b = catalan_coefficient(shape);
    if (exponent >= 0) return b * pow2(exponent);
    const BigInt denom = pow2(-exponent);
    if (b % denom != 0)
        throw Error("ranked-per-shape count failed to come out whole");
    return b / denom;
}

BigInt euler_zigzag(int n) {
    if (n < 0) throw UndefinedInputError("Euler zigzag numbers start at n=0");
    static SequenceCache cache;
    return cache.get(n, [](const std::vector<BigInt>& values) {
        const int k = static_cast<int>(values.size());
        if (k <= 1) return BigInt(1);
        BigInt sum = 0;
        for (int j = 0; j < k; ++j)
            sum += binomial(k - 1, j) * values[j] * values[k - 1 - j];
        return BigInt(sum / 2);
    });
}

BigInt wedderburn_etherington(int n) {
    if (n < 1)
        throw UndefinedInputError("Wedderburn-Etherington numbers start at n=1");
    static SequenceCache cache;
    return cache.get(n, [](const std::vector<BigInt>& values) {
        const int k = static_cast<int>(values.size());
        if (k <= 2) return BigInt(k == 0 ? 0 : 1);  // index 0 unused; w(1)=w(2)=1
        // Split k leaves into an unordered pair of nonempty shapes.
        BigInt sum = 0;
        for (int i = 1; i < k - i; ++i) sum += values[i] * values[k - i];
        if (k % 2 == 0) {
            const BigInt& half = values[k / 2];
            sum += half * (half + 1) / 2;
        }
        return sum;
    });
}

std::vector<RankedPlaneTree> enumerate_ranked_plane(int n) {
    check_guard(TreeFamily::ranked_plane, n);
    std::vector<RankedPlaneTree> trees{RankedPlaneTree::single()};
    for (int leaves = 1; leaves < n; ++leaves) {
        std::vector<RankedPlaneTree> next;
        next.reserve(trees.size() * leaves);
        for (const RankedPlaneTree& tree : trees) {
            for (const NodeAddress& leaf : tree.leaf_addresses())
                next.push_back(tree.split_leaf(leaf));
        }
        trees = std::move(next);
    }
    return trees;
}

namespace {

std::vector<std::vector<PlaneTree>> plane_tables(int n) {
    std::vector<std::vector<PlaneTree>> table(n + 1);
    table[1] = {PlaneTree::leaf()};
    for (int leaves = 2; leaves <= n; ++leaves) {
        for (int left = 1; left < leaves; ++left) {
            for (const PlaneTree& a : table[left]) {
                for (const PlaneTree& b : table[leaves - left])
                    table[leaves].push_back(PlaneTree::join(a, b));
            }
        }
    }
    return table;
}

}  // namespace

std::vector<PlaneTree> enumerate_plane(int n) {
    check_guard(TreeFamily::plane, n);
    return plane_tables(n)[n];
}

std::vector<RankedTree> enumerate_ranked(int n) {
    check_guard(TreeFamily::ranked, n);
    std::vector<RankedTree> level{RankedTree()};
    for (int leaves = 1; leaves < n; ++leaves) {
        std::map<std::string, RankedTree> next;
        for (const RankedTree& tree : level) {
            for (const NodeAddress& leaf : tree.embedding().leaf_addresses()) {
                RankedTree candidate(tree.embedding().split_leaf(leaf));
                next.emplace(detail::encode_ranked(candidate.embedding().root()),
                             candidate);
            }
        }
        level.clear();
        level.reserve(next.size());
        for (auto& [key, tree] : next) level.push_back(std::move(tree));
    }
    return level;
}

std::vector<TreeShape> enumerate_shapes(int n) {
    check_guard(TreeFamily::shape, n);
    std::vector<std::vector<PlaneTree>> table(n + 1);
    table[1] = {PlaneTree::leaf()};
    for (int leaves = 2; leaves <= n; ++leaves) {
        for (int small = 1; small <= leaves / 2; ++small) {
            const int large = leaves - small;
            for (const PlaneTree& a : table[small]) {
                for (const PlaneTree& b : table[large]) {
                    // Canonical order: fewer leaves on the left; for equal
                    // halves only keep encoding-ordered pairs.
                    if (small == large && b.to_parens() < a.to_parens()) continue;
                    table[leaves].push_back(PlaneTree::join(a, b));
                }
            }
        }
    }
    std::vector<TreeShape> shapes;
    shapes.reserve(table[n].size());
    for (const PlaneTree& tree : table[n]) shapes.push_back(TreeShape(tree));
    return shapes;
}

BigInt max_catalan_coefficient(int n) {
    BigInt best = 0;
    for (const TreeShape& shape : enumerate_shapes(n))
        best = std::max(best, catalan_coefficient(shape));
    return best;
}

BigInt count_unit_B_plane_trees(int n) {
    BigInt count = 0;
    for (const PlaneTree& tree : enumerate_plane(n)) {
        if (catalan_coefficient(tree) == 1) ++count;
    }
    return count;
}

Rational balance_q(const PlaneTree& tree) {
    // B/(n-1)! cancels to the reciprocal of the subtree-size product.
    return Rational(BigInt(1), internal_size_product(tree));
}

}  // namespace arbor
