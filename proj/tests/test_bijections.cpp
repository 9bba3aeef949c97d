#include "arbor/bijections.hpp"
#include "arbor/counting.hpp"
#include "arbor/error.hpp"
#include "arbor/partition.hpp"
#include "arbor/permutation.hpp"
#include "arbor/tree.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace arbor;
using namespace arbor::testing;

TEST_CASE("permutation words") {
    CHECK(Permutation().str() == "e");
    CHECK(Permutation::parse("213").word() == std::vector<int>{2, 1, 3});
    CHECK(Permutation::parse("2,13,1,3,4,5,6,7,8,9,10,11,12").size() == 13);
    CHECK(Permutation::identity(4) == Permutation::parse("1234"));
    CHECK(Permutation::parse("213").str() == "213");
    CHECK_THROWS_AS(Permutation::parse("22"), InvalidPermutationError);
    CHECK_THROWS_AS(Permutation::parse("13"), InvalidPermutationError);  // missing 2
    CHECK_THROWS_AS(Permutation::parse("103"), InvalidPermutationError);  // contains 0
    CHECK_THROWS_AS(Permutation::parse("2x1"), ParseError);
}

TEST_CASE("lift worked examples") {
    CHECK(lift(Permutation()) == RankedPlaneTree::single());

    // 213 = (2) · 1 · (3): rank-1 root, rank-2 left child, rank-3 right child.
    RankedPlaneTree balanced = lift(Permutation::parse("213"));
    CHECK(balanced.plane().to_parens() == "((··)(··))");
    CHECK(balanced.root()->rank == 1);
    CHECK(balanced.root()->left->rank == 2);
    CHECK(balanced.root()->right->rank == 3);

    // 321: every prefix minimum is at the end, so ranks 1,2,3 run down the
    // left spine.
    RankedPlaneTree caterpillar = lift(Permutation::parse("321"));
    CHECK(caterpillar.plane() == left_comb(4));
    CHECK(caterpillar.root()->rank == 1);
    CHECK(caterpillar.root()->left->rank == 2);
    CHECK(caterpillar.root()->left->left->rank == 3);

    // Single letter.
    CHECK(lift(Permutation::parse("1")).plane().to_parens() == "(··)");
}

TEST_CASE("lift and read_infix are mutually inverse") {
    for (int m = 0; m <= 7; ++m) {
        for (const Permutation& sigma : symmetric_group(m)) {
            CHECK(read_infix(lift(sigma)) == sigma);
        }
    }
    for (int n = 1; n <= 8; ++n) {
        for (const RankedPlaneTree& tree : enumerate_ranked_plane(n)) {
            CHECK(lift(read_infix(tree)) == tree);
        }
    }
}

TEST_CASE("canonical ranked words") {
    CHECK(canonical_ranked_word(Permutation::parse("312")) == Permutation::parse("213"));
    CHECK(canonical_ranked_word(Permutation::parse("231")) == Permutation::parse("321"));
    CHECK(canonical_ranked_word(Permutation::parse("213")) == Permutation::parse("213"));
    CHECK(canonical_ranked_word(Permutation()) == Permutation());

    // m = 3: exactly two canonical words.
    std::set<std::string> canon3;
    for (const Permutation& sigma : symmetric_group(3)) {
        if (is_canonical(sigma)) {
            canon3.insert(sigma.str());
        }
    }
    CHECK(canon3 == std::set<std::string>{"213", "321"});

    // Idempotence and fiber correctness: two words get the same canonical
    // form exactly when their lifts define the same ranked (non-plane) tree.
    for (int m = 0; m <= 6; ++m) {
        for (const Permutation& sigma : symmetric_group(m)) {
            Permutation canon = canonical_ranked_word(sigma);
            CHECK(is_canonical(canon));
            CHECK(canonical_ranked_word(canon) == canon);
            CHECK(RankedTree(lift(sigma)) == RankedTree(lift(canon)));
            CHECK(lift(canon) == RankedTree(lift(sigma)).embedding());
        }
    }

    // Canonical-word counts follow the zigzag numbers.
    for (int m = 0; m <= 9; ++m) {
        long long count = 0;
        for (const Permutation& sigma : symmetric_group(m)) {
            if (is_canonical(sigma)) {
                ++count;
            }
        }
        CHECK(BigInt(count) == euler_zigzag(m));
    }
}

TEST_CASE("binary search tree insertion") {
    CHECK(bst_insert_all(Permutation()) == RankedPlaneTree::single());
    CHECK(bst_insert_all(Permutation::parse("213")) == lift(Permutation::parse("213")));

    // Decreasing keys chain to the left; node ranks follow insertion order.
    RankedPlaneTree chain = bst_insert_all(Permutation::parse("321"));
    CHECK(chain.plane() == left_comb(4));
    CHECK(read_infix(chain) == Permutation::parse("321"));

    // 4,1,2,3: 4 at the root (rank 1), then 1 goes left (rank 2), 2 right of
    // 1 (rank 3), 3 right of 2 (rank 4). In-fix ranks: 2,3,4,1.
    CHECK(read_infix(bst_insert_all(Permutation::parse("4123"))) == Permutation::parse("2341"));

    // The BST of a word and the lift of the same word agree as ranked trees
    // exactly when they agree as ranked plane trees here; in general the two
    // constructions give different maps with the same distributional role.
    for (const Permutation& sigma : symmetric_group(4)) {
        CHECK(bst_insert_all(sigma).leaf_count() == 5);
    }
}

TEST_CASE("tree to partition history") {
    PartitionHistory single = tree_to_partition(RankedPlaneTree::single());
    CHECK(single.sequence == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(single.partition == Partition::trivial());

    PartitionHistory one_split = tree_to_partition(lift(Permutation::parse("1")));
    CHECK(one_split.sequence ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(1, 2)});
    CHECK(one_split.partition == Partition::parse("0,1/2,1"));

    // Root split, then split the left leaf: midpoints 1/2 then 1/4.
    PartitionHistory two_left = tree_to_partition(lift(Permutation::parse("21")));
    CHECK(two_left.sequence == std::vector<Rational>{Rational(0), Rational(1), Rational(1, 2),
                                                     Rational(1, 4)});
    CHECK(two_left.partition == Partition::parse("0,1/4,1/2,1"));
    CHECK(two_left.partition.depths() == DepthVector({2, 2, 1}));

    PartitionHistory balanced = tree_to_partition(lift(Permutation::parse("213")));
    CHECK(balanced.sequence == std::vector<Rational>{Rational(0), Rational(1), Rational(1, 2),
                                                     Rational(1, 4), Rational(3, 4)});
    CHECK(balanced.partition == Partition::parse("0,1/4,1/2,3/4,1"));
}

TEST_CASE("partition history properties") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::vector<Rational>> sequences;
        for (const RankedPlaneTree& tree : enumerate_ranked_plane(n)) {
            PartitionHistory history = tree_to_partition(tree);
            // The sequence determines the tree (injectivity).
            CHECK(sequences.insert(history.sequence).second);
            // n leaves -> n intervals; endpoints are the sorted sequence.
            CHECK(history.partition.interval_count() == n);
            std::vector<Rational> sorted = history.sequence;
            std::sort(sorted.begin(), sorted.end());
            CHECK(history.partition.endpoints() == sorted);
            // The partition depends only on the plane projection and matches
            // the recursive bisection of the plane tree.
            CHECK(history.partition == dyadic_partition_of(tree.plane()));
        }
    }
}
