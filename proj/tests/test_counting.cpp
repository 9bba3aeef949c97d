#include "arbor/counting.hpp"
#include "arbor/error.hpp"
#include "arbor/numeric.hpp"
#include "arbor/tree.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace arbor;
using namespace arbor::testing;

TEST_CASE("number sequences") {
    const std::vector<long long> catalan_seq = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (std::size_t i = 0; i < catalan_seq.size(); ++i) {
        CHECK(catalan(static_cast<int>(i)) == BigInt(catalan_seq[i]));
    }

    const std::vector<long long> zigzag = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
    for (std::size_t i = 0; i < zigzag.size(); ++i) {
        CHECK(euler_zigzag(static_cast<int>(i)) == BigInt(zigzag[i]));
    }

    const std::vector<long long> wedderburn = {1,    1,    1,    2,     3,     6,
                                               11,   23,   46,   98,    207,   451,
                                               983,  2179, 4850, 10905, 24631, 56011};
    for (std::size_t i = 0; i < wedderburn.size(); ++i) {
        CHECK(wedderburn_etherington(static_cast<int>(i + 1)) == BigInt(wedderburn[i]));
    }

    CHECK_THROWS_AS(catalan(-1), UndefinedInputError);
    CHECK_THROWS_AS(euler_zigzag(-1), UndefinedInputError);
    CHECK_THROWS_AS(wedderburn_etherington(0), UndefinedInputError);
}

TEST_CASE("enumerations match the closed forms") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(BigInt(enumerate_ranked_plane(n).size()) == factorial(n - 1));
        CHECK(BigInt(enumerate_plane(n).size()) == catalan(n - 1));
        CHECK(BigInt(enumerate_ranked(n).size()) == euler_zigzag(n - 1));
        CHECK(BigInt(enumerate_shapes(n).size()) == wedderburn_etherington(n));
    }
    // The coarser families stay cheap for a couple more steps.
    CHECK(BigInt(enumerate_plane(10).size()) == catalan(9));
    CHECK(BigInt(enumerate_shapes(10).size()) == wedderburn_etherington(10));

    // Enumerations are duplicate-free.
    std::set<std::string> seen;
    for (const RankedPlaneTree& tree : enumerate_ranked_plane(6)) {
        CHECK(seen.insert(detail::encode_ranked(tree.root())).second);
    }
}

TEST_CASE("catalan coefficient worked values") {
    // Perfect tree on 8 leaves: internal subtree sizes 7,3,3,1,1,1,1 and
    // 7!/(7*3*3*1*1*1*1) = 5040/63 = 80.
    CHECK(catalan_coefficient(perfect_tree(3)) == BigInt(80));

    // Six-leaf example: sizes 5,2,2,1,1 give 5!/20 = 6.
    CHECK(catalan_coefficient(PlaneTree::parse("(((··)·)(·(··)))")) == BigInt(6));

    // Combs have B = 1, single leaf and cherry too.
    CHECK(catalan_coefficient(PlaneTree::leaf()) == BigInt(1));
    CHECK(catalan_coefficient(left_comb(7)) == BigInt(1));
    CHECK(catalan_coefficient(right_comb(7)) == BigInt(1));

    // B is a shape invariant.
    CHECK(catalan_coefficient(TreeShape(perfect_tree(3))) == BigInt(80));
    CHECK(catalan_coefficient(PlaneTree::parse("((··)·)")) ==
          catalan_coefficient(PlaneTree::parse("(·(··))")));
}

TEST_CASE("counting identities") {
    for (int n = 1; n <= 8; ++n) {
        // Sum of B over plane trees = number of ranked plane trees.
        BigInt sum_b = 0;
        for (const PlaneTree& tree : enumerate_plane(n)) {
            sum_b += catalan_coefficient(tree);
        }
        CHECK(sum_b == factorial(n - 1));

        // Sum of C over shapes = number of plane trees.
        BigInt sum_c = 0;
        for (const TreeShape& shape : enumerate_shapes(n)) {
            sum_c += shape_coefficient(shape);
        }
        CHECK(sum_c == catalan(n - 1));

        // Per-shape fiber counts multiply and add up.
        BigInt sum_rpt = 0;
        BigInt sum_ranked = 0;
        for (const TreeShape& shape : enumerate_shapes(n)) {
            CHECK(rpt_per_shape(shape) ==
                  catalan_coefficient(shape) * shape_coefficient(shape));
            sum_rpt += rpt_per_shape(shape);
            sum_ranked += ranked_per_shape(shape);
        }
        CHECK(sum_rpt == factorial(n - 1));
        CHECK(sum_ranked == euler_zigzag(n - 1));

        // Ranked-tree fibers partition the ranked plane trees.
        if (n <= 7) {
            BigInt sum_fibers = 0;
            for (const RankedTree& tree : enumerate_ranked(n)) {
                sum_fibers += rpt_per_ranked_tree(tree);
            }
            CHECK(sum_fibers == factorial(n - 1));
        }
    }
}

TEST_CASE("fiber sizes against direct projection counts") {
    for (int n = 1; n <= 6; ++n) {
        std::map<std::string, BigInt> per_plane;
        std::map<std::string, BigInt> per_ranked;
        std::map<std::string, BigInt> per_shape;
        std::map<std::string, std::set<std::string>> ranked_by_shape;
        for (const RankedPlaneTree& tree : enumerate_ranked_plane(n)) {
            per_plane[tree.plane().to_parens()] += 1;
            per_ranked[detail::encode_ranked(RankedTree(tree).embedding().root())] += 1;
            per_shape[TreeShape(tree.plane()).to_parens()] += 1;
            ranked_by_shape[TreeShape(tree.plane()).to_parens()].insert(
                detail::encode_ranked(RankedTree(tree).embedding().root()));
        }
        for (const PlaneTree& tree : enumerate_plane(n)) {
            CHECK(per_plane.at(tree.to_parens()) == catalan_coefficient(tree));
        }
        for (const RankedTree& tree : enumerate_ranked(n)) {
            CHECK(per_ranked.at(detail::encode_ranked(tree.embedding().root())) ==
                  rpt_per_ranked_tree(tree));
        }
        for (const TreeShape& shape : enumerate_shapes(n)) {
            CHECK(per_shape.at(shape.to_parens()) == rpt_per_shape(shape));
            CHECK(BigInt(ranked_by_shape.at(shape.to_parens()).size()) ==
                  ranked_per_shape(shape));
        }
    }
}

TEST_CASE("extremes of the catalan coefficient") {
    const std::vector<long long> heap_counts = {1, 1, 1, 2, 3, 8, 20, 80, 210, 896};
    for (std::size_t i = 0; i < heap_counts.size(); ++i) {
        CHECK(max_catalan_coefficient(static_cast<int>(i + 1)) == BigInt(heap_counts[i]));
    }

    for (int n = 2; n <= 9; ++n) {
        CHECK(count_unit_B_plane_trees(n) == pow2(n - 2));
        // Direct count agrees.
        if (n <= 8) {
            BigInt direct = 0;
            for (const PlaneTree& tree : enumerate_plane(n)) {
                if (catalan_coefficient(tree) == 1) {
                    direct += 1;
                }
            }
            CHECK(direct == pow2(n - 2));
        }
    }
    CHECK(count_unit_B_plane_trees(1) == BigInt(1));
}

TEST_CASE("balance measure") {
    CHECK(balance_q(perfect_tree(3)) == Rational(BigInt(80), factorial(7)));
    CHECK(balance_q(left_comb(6)) == Rational(BigInt(1), factorial(5)));
    CHECK(balance_q(PlaneTree::leaf()) == Rational(1));
    for (const PlaneTree& tree : enumerate_plane(6)) {
        Rational q = balance_q(tree);
        CHECK(q > 0);
        CHECK(q <= 1);
        CHECK(q == Rational(catalan_coefficient(tree), factorial(5)));
    }
}

TEST_CASE("resource guards") {
    CHECK(guard_limit(TreeFamily::ranked_plane) == 9);
    CHECK(guard_limit(TreeFamily::plane) == 12);
    CHECK(guard_limit(TreeFamily::ranked) == 12);
    CHECK(guard_limit(TreeFamily::shape) == 12);

    CHECK_THROWS_AS(enumerate_ranked_plane(10), ResourceGuardError);
    CHECK_THROWS_AS(enumerate_plane(13), ResourceGuardError);
    CHECK_THROWS_AS(enumerate_ranked(13), ResourceGuardError);
    CHECK_THROWS_AS(enumerate_shapes(13), ResourceGuardError);
    CHECK_THROWS_AS(enumerate_plane(0), UndefinedInputError);

    setenv("ARBOR_GUARD_N", "10", 1);
    CHECK(guard_limit(TreeFamily::ranked_plane) == 10);
    CHECK(enumerate_ranked_plane(10).size() == 362880);
    setenv("ARBOR_GUARD_N", "junk", 1);
    CHECK_THROWS_AS(guard_limit(TreeFamily::plane), InvalidParameterError);
    setenv("ARBOR_GUARD_N", "-3", 1);
    CHECK_THROWS_AS(guard_limit(TreeFamily::plane), InvalidParameterError);
    unsetenv("ARBOR_GUARD_N");
    CHECK(guard_limit(TreeFamily::ranked_plane) == 9);
}

TEST_CASE("family names") {
    for (TreeFamily family : {TreeFamily::ranked_plane, TreeFamily::plane, TreeFamily::ranked,
                              TreeFamily::shape}) {
        CHECK(parse_family(family_name(family)) == family);
    }
    CHECK(family_name(TreeFamily::ranked_plane) == "ranked_plane");
    CHECK(parse_family("shape") == TreeFamily::shape);
    CHECK_THROWS_AS(parse_family("binary"), ParseError);
}
