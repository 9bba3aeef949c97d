#pragma once

#include "arbor/numeric.hpp"
#include "arbor/tree.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace arbor {

// The four nested classes of finite rooted binary trees, finest first.
enum class TreeFamily { ranked_plane, plane, ranked, shape };

std::string family_name(TreeFamily family);
TreeFamily parse_family(std::string_view name);

// Largest n admitted by the exhaustive enumerators: 9 for ranked_plane, 12
// for the other families; the ARBOR_GUARD_N environment variable (a
// positive integer) overrides the limit for all families.
int guard_limit(TreeFamily family);

// n-th Catalan number.
BigInt catalan(int n);

// B(t) = (n-1)! / prod of internal subtree sizes: the number of ranked
// plane trees projecting to the plane tree t. Equal across all plane trees
// of one shape.
BigInt catalan_coefficient(const PlaneTree& tree);
BigInt catalan_coefficient(const TreeShape& shape);

// C(t) = 2^(n-1-s(t)): the number of plane trees of shape t.
BigInt shape_coefficient(const TreeShape& shape);

// 2^(n-1-cherries): ranked plane trees per ranked tree.
BigInt rpt_per_ranked_tree(const RankedTree& tree);

// B(t) * C(t): ranked plane trees per shape.
BigInt rpt_per_shape(const TreeShape& shape);

// B(t) * 2^(cherries - s): ranked trees per shape.
BigInt ranked_per_shape(const TreeShape& shape);

// e(n): 1, 1, 1, 2, 5, 16, 61, 272, ... counts ranked trees with n+1
// leaves, via e(n) = (1/2) * sum of binomial(n-1,k) e(k) e(n-1-k).
BigInt euler_zigzag(int n);

// Wedderburn-Etherington numbers: 1, 1, 1, 2, 3, 6, 11, 23, ... count tree
// shapes with n leaves.
BigInt wedderburn_etherington(int n);

// Exhaustive duplicate-free enumerations; cardinalities are (n-1)!,
// C_(n-1), e(n-1), and the Wedderburn-Etherington numbers respectively.
// Throw ResourceGuardError beyond guard_limit.
std::vector<RankedPlaneTree> enumerate_ranked_plane(int n);
std::vector<PlaneTree> enumerate_plane(int n);
std::vector<RankedTree> enumerate_ranked(int n);
std::vector<TreeShape> enumerate_shapes(int n);

// Maximum of catalan_coefficient over n-leaf shapes (the heap-count
// sequence 1, 1, 1, 2, 3, 8, 20, 80, 210, 896, ...).
BigInt max_catalan_coefficient(int n);

// Number of n-leaf plane trees with B = 1; equals 2^(n-2).
BigInt count_unit_B_plane_trees(int n);

// Q(t) = B(t)/(n-1)!, an exact rational balance measure in (0, 1].
Rational balance_q(const PlaneTree& tree);

}  // namespace arbor
