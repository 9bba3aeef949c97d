#include "arbor/error.hpp"
#include "arbor/partition.hpp"
#include "arbor/tree.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <set>
#include <string>
#include <vector>

using namespace arbor;
using namespace arbor::testing;

TEST_CASE("partition construction and text form") {
    Partition trivial;
    CHECK(trivial.interval_count() == 1);
    CHECK(trivial.str() == "0,1");
    CHECK(trivial == Partition::trivial());

    Partition p = Partition::parse("0,1/4,1/2,1");
    CHECK(p.interval_count() == 3);
    CHECK(p.str() == "0,1/4,1/2,1");
    CHECK(p.widths() == std::vector<Rational>{Rational(1, 4), Rational(1, 4), Rational(1, 2)});
    CHECK(p.width(2) == Rational(1, 2));

    CHECK_THROWS_AS(Partition::parse("0,1/2"), InvalidPartitionError);      // last must be 1
    CHECK_THROWS_AS(Partition::parse("1/4,1"), InvalidPartitionError);      // first must be 0
    CHECK_THROWS_AS(Partition::parse("0,1/2,1/3,1"), InvalidPartitionError);  // not increasing
    CHECK_THROWS_AS(Partition::parse("0,1/2,1/2,1"), InvalidPartitionError);  // not strict
    CHECK_THROWS_AS(Partition::parse(""), ParseError);
    CHECK_THROWS_AS(Partition::parse("0,x,1"), ParseError);
}

TEST_CASE("midpoint splits") {
    Partition p;
    Partition p1 = p.split_midpoint(0);
    CHECK(p1 == Partition::parse("0,1/2,1"));
    CHECK(p1.split_midpoint(0) == Partition::parse("0,1/4,1/2,1"));
    CHECK(p1.split_midpoint(1) == Partition::parse("0,1/2,3/4,1"));
    CHECK_THROWS_AS(p1.split_midpoint(2), Error);
    CHECK_THROWS_AS(p1.split_midpoint(-1), Error);
}

TEST_CASE("general splits") {
    Partition p;
    CHECK(p.split_at(0, Rational(1, 2)) == p.split_midpoint(0));
    // Split at b1, then the left interval at relative position b2.
    Rational b1(1, 3), b2(1, 2);
    Partition q = p.split_at(0, b1).split_at(0, b1 * b2);
    CHECK(q == Partition({Rational(0), Rational(1, 6), Rational(1, 3), Rational(1)}));
    CHECK_THROWS_AS(p.split_at(0, Rational(0)), Error);   // endpoint
    CHECK_THROWS_AS(p.split_at(0, Rational(1)), Error);   // endpoint
    CHECK_THROWS_AS(p.split_at(0, Rational(3, 2)), Error);  // outside
}

TEST_CASE("dyadicity is power-of-two widths") {
    CHECK(Partition::trivial().is_dyadic());
    CHECK(Partition::parse("0,1/4,1/2,1").is_dyadic());
    CHECK_FALSE(Partition::parse("0,1/3,1").is_dyadic());
    // All endpoints dyadic, but a width of 3/8 is not a power of two.
    CHECK_FALSE(Partition::parse("0,3/8,1").is_dyadic());
    CHECK_THROWS_AS(Partition::parse("0,3/8,1").depths(), NotDyadicError);
    CHECK_THROWS_AS(Partition::parse("0,1/3,1").depths(), NotDyadicError);
}

TEST_CASE("depth vectors") {
    CHECK(Partition::trivial().depths() == DepthVector::trivial());
    CHECK(DepthVector::trivial().str() == "(0)");
    CHECK(Partition::parse("0,1/4,1/2,1").depths() == DepthVector({2, 2, 1}));

    CHECK_THROWS_AS(DepthVector({1, 1, 1}), Error);  // Kraft sum 3/2
    CHECK_THROWS_AS(DepthVector({-1}), Error);
    CHECK_THROWS_AS(DepthVector({}), Error);

    DepthVector y = DepthVector::trivial();
    DepthVector y1 = y.split(1);
    CHECK(y1 == DepthVector({1, 1}));
    CHECK(y1.split(1) == DepthVector({2, 2, 1}));
    CHECK(DepthVector({2, 2, 1}).split(3) == DepthVector({2, 2, 2, 2}));
    CHECK_THROWS_AS(y1.split(0), Error);  // 1-based
    CHECK_THROWS_AS(y1.split(3), Error);

    CHECK(DepthVector({2, 2, 1}).to_partition() == Partition::parse("0,1/4,1/2,1"));
    CHECK(y.to_partition() == Partition::trivial());
}

TEST_CASE("depths commute with midpoint splits") {
    // depths(split_midpoint(p, i)) == split_depths(depths(p), i+1), explored
    // over every split sequence reaching 5 intervals.
    struct Walker {
        void visit(const Partition& p, int remaining) {
            for (int i = 0; i < p.interval_count(); ++i) {
                Partition next = p.split_midpoint(i);
                CHECK(next.depths() == p.depths().split(i + 1));
                if (remaining > 1) {
                    visit(next, remaining - 1);
                }
            }
        }
    };
    Walker().visit(Partition::trivial(), 4);
}

TEST_CASE("reachable dyadic partitions are counted by Catalan numbers") {
    // k-interval states: (k-1)! split sequences, C_{k-1} distinct partitions.
    const std::vector<long long> catalan = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int k = 2; k <= 8; ++k) {
        long long sequences = 0;
        std::set<std::string> distinct;
        struct Walker {
            long long* sequences;
            std::set<std::string>* distinct;
            int target;
            void visit(const Partition& p) {
                if (p.interval_count() == target) {
                    ++*sequences;
                    distinct->insert(p.str());
                    return;
                }
                for (int i = 0; i < p.interval_count(); ++i) {
                    visit(p.split_midpoint(i));
                }
            }
        };
        Walker{&sequences, &distinct, k}.visit(Partition::trivial());
        long long factorial = 1;
        for (int i = 2; i < k; ++i) {
            factorial *= i;
        }
        CHECK(sequences == factorial);
        CHECK(static_cast<long long>(distinct.size()) == catalan[static_cast<std::size_t>(k - 1)]);
    }
}

TEST_CASE("kraft equality survives any split chain") {
    Partition p;
    std::vector<int> picks = {0, 1, 0, 3, 2, 0, 5, 1};
    for (int i : picks) {
        p = p.split_midpoint(i % p.interval_count());
        DepthVector depth_vector = p.depths();
        Rational kraft(0);
        for (int d : depth_vector.values()) {
            kraft += Rational(BigInt(1), pow2(d));
        }
        CHECK(kraft == 1);
    }
}

TEST_CASE("dyadic partition of a plane tree") {
    CHECK(dyadic_partition_of(PlaneTree::leaf()) == Partition::trivial());
    CHECK(dyadic_partition_of(PlaneTree::parse("(··)")) == Partition::parse("0,1/2,1"));
    CHECK(dyadic_partition_of(PlaneTree::parse("((··)·)")) == Partition::parse("0,1/4,1/2,1"));
    CHECK(dyadic_partition_of(PlaneTree::parse("(·(··))")) == Partition::parse("0,1/2,3/4,1"));
    CHECK(dyadic_partition_of(perfect_tree(3)) ==
          Partition::parse("0,1/8,1/4,3/8,1/2,5/8,3/4,7/8,1"));
    // Widths are 2^-depth of each leaf.
    Partition p = dyadic_partition_of(PlaneTree::parse("(((··)·)(·(··)))"));
    CHECK(p.depths() == DepthVector({3, 3, 2, 2, 3, 3}));
}
