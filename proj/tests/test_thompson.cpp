#include "arbor/counting.hpp"
#include "arbor/error.hpp"
#include "arbor/exact_prob.hpp"
#include "arbor/numeric.hpp"
#include "arbor/thompson.hpp"
#include "arbor/tree.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <utility>
#include <vector>

using namespace arbor;
using namespace arbor::testing;

namespace {

using Point = std::pair<Rational, Rational>;

}  // namespace

TEST_CASE("tree pairs") {
    TreePair identity;
    CHECK(identity.leaf_count() == 1);
    CHECK(identity.size() == 0);

    TreePair pair{PlaneTree::parse("((··)·)"), PlaneTree::parse("(·(··))")};
    CHECK(pair.leaf_count() == 3);
    CHECK(pair.size() == 2);
    CHECK(pair.domain_tree() == PlaneTree::parse("((··)·)"));
    CHECK(pair.range_tree() == PlaneTree::parse("(·(··))"));

    CHECK_THROWS_AS(TreePair(PlaneTree::parse("(··)"), PlaneTree::parse("((··)·)")),
                    InvalidPairError);
}

TEST_CASE("pl map construction and canonical form") {
    PLMap identity;
    CHECK(identity.is_identity());
    CHECK(identity.breakpoints() == std::vector<Point>{{Rational(0), Rational(0)},
                                                       {Rational(1), Rational(1)}});
    CHECK(identity.slopes() == std::vector<Rational>{Rational(1)});

    // Collinear interior points are elided.
    PLMap still_identity{{{Rational(0), Rational(0)},
                          {Rational(1, 2), Rational(1, 2)},
                          {Rational(1), Rational(1)}}};
    CHECK(still_identity.is_identity());
    CHECK(still_identity == identity);

    PLMap basic{{{Rational(0), Rational(0)},
                 {Rational(1, 4), Rational(1, 2)},
                 {Rational(1, 2), Rational(3, 4)},
                 {Rational(1), Rational(1)}}};
    CHECK_FALSE(basic.is_identity());
    CHECK(basic.slopes() ==
          std::vector<Rational>{Rational(2), Rational(1), Rational(1, 2)});
    CHECK(basic.str() == "(0,0) (1/4,1/2) (1/2,3/4) (1,1)");

    using Points = std::vector<Point>;
    CHECK_THROWS_AS(PLMap(Points{{Rational(0), Rational(0)}}), InvalidParameterError);
    // Must fix the endpoints.
    CHECK_THROWS_AS(PLMap(Points{{Rational(0), Rational(0)}, {Rational(1), Rational(1, 2)}}),
                    InvalidParameterError);
    CHECK_THROWS_AS(PLMap(Points{{Rational(1, 4), Rational(0)}, {Rational(1), Rational(1)}}),
                    InvalidParameterError);
    // Strictly increasing in both coordinates.
    CHECK_THROWS_AS(PLMap(Points{{Rational(0), Rational(0)},
                                 {Rational(1, 2), Rational(3, 4)},
                                 {Rational(1, 2), Rational(7, 8)},
                                 {Rational(1), Rational(1)}}),
                    InvalidParameterError);
    CHECK_THROWS_AS(PLMap(Points{{Rational(0), Rational(0)},
                                 {Rational(1, 2), Rational(3, 4)},
                                 {Rational(3, 4), Rational(1, 2)},
                                 {Rational(1), Rational(1)}}),
                    InvalidParameterError);
    // Breakpoints must be dyadic in both coordinates.
    CHECK_THROWS_AS(PLMap(Points{{Rational(0), Rational(0)},
                                 {Rational(1, 3), Rational(1, 2)},
                                 {Rational(1), Rational(1)}}),
                    InvalidParameterError);
    // Slopes must be powers of two: (0,0) -> (1/4,3/4) has slope 3.
    CHECK_THROWS_AS(PLMap(Points{{Rational(0), Rational(0)},
                                 {Rational(1, 4), Rational(3, 4)},
                                 {Rational(1), Rational(1)}}),
                    InvalidParameterError);
}

TEST_CASE("pl map evaluation") {
    PLMap map{{{Rational(0), Rational(0)},
               {Rational(1, 4), Rational(1, 2)},
               {Rational(1, 2), Rational(3, 4)},
               {Rational(1), Rational(1)}}};
    CHECK(map.evaluate(Rational(0)) == Rational(0));
    CHECK(map.evaluate(Rational(1)) == Rational(1));
    CHECK(map.evaluate(Rational(1, 4)) == Rational(1, 2));
    CHECK(map.evaluate(Rational(1, 8)) == Rational(1, 4));
    CHECK(map.evaluate(Rational(3, 8)) == Rational(5, 8));
    CHECK(map.evaluate(Rational(3, 4)) == Rational(7, 8));
    // Evaluation is exact on non-dyadic arguments too.
    CHECK(map.evaluate(Rational(1, 3)) == Rational(1, 2) + Rational(1, 12));
    CHECK_THROWS_AS(map.evaluate(Rational(-1, 8)), DomainError);
    CHECK_THROWS_AS(map.evaluate(Rational(9, 8)), DomainError);
}

TEST_CASE("the standard generator pair") {
    TreePair pair{PlaneTree::parse("((··)·)"), PlaneTree::parse("(·(··))")};
    PLMap map = pl_map(pair);
    CHECK(map.breakpoints() == std::vector<Point>{{Rational(0), Rational(0)},
                                                  {Rational(1, 4), Rational(1, 2)},
                                                  {Rational(1, 2), Rational(3, 4)},
                                                  {Rational(1), Rational(1)}});
    CHECK(map.slopes() == std::vector<Rational>{Rational(2), Rational(1), Rational(1, 2)});
    CHECK(map.evaluate(Rational(3, 8)) == Rational(5, 8));

    // A pair of equal trees is the identity, whatever the tree.
    TreePair same{perfect_tree(3), perfect_tree(3)};
    CHECK(pl_map(same).is_identity());

    PairWeights weights = pair_weights(pair);
    // Size 2: uniform = (1/C_2)^2 = 1/4; yule = (B/2!) * (B/2!) with B = 1.
    CHECK(weights.uniform_weight.value == Rational(1, 4));
    CHECK(weights.yule_weight.value == Rational(1, 4));
}

TEST_CASE("pl maps of all small pairs") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<PlaneTree> trees = enumerate_plane(n);
        ExactProb uniform_total = ExactProb::from_rational(Rational(0));
        ExactProb yule_total = ExactProb::from_rational(Rational(0));
        for (const PlaneTree& domain : trees) {
            Partition domain_partition = dyadic_partition_of(domain);
            for (const PlaneTree& range : trees) {
                TreePair pair{domain, range};
                PLMap map = pl_map(pair);

                // Canonical invariants.
                const std::vector<Point>& points = map.breakpoints();
                REQUIRE(points.size() >= 2);
                CHECK(points.front() == Point{Rational(0), Rational(0)});
                CHECK(points.back() == Point{Rational(1), Rational(1)});
                std::vector<Rational> slopes = map.slopes();
                REQUIRE(slopes.size() + 1 == points.size());
                for (std::size_t i = 0; i < slopes.size(); ++i) {
                    CHECK(slopes[i] > 0);
                    // Power of two (possibly negative exponent).
                    BigInt num = boost::multiprecision::numerator(slopes[i]);
                    BigInt den = boost::multiprecision::denominator(slopes[i]);
                    CHECK((num == 1 || den == 1));
                    CHECK(is_power_of_two(num * den));
                    if (i > 0) {
                        CHECK(slopes[i] != slopes[i - 1]);  // true breakpoints only
                    }
                }
                for (std::size_t i = 1; i < points.size(); ++i) {
                    CHECK(points[i].first > points[i - 1].first);
                    CHECK(points[i].second > points[i - 1].second);
                    CHECK(is_dyadic_rational(points[i].first));
                    CHECK(is_dyadic_rational(points[i].second));
                }

                // The map matches endpoint-to-endpoint interpolation.
                Partition range_partition = dyadic_partition_of(range);
                for (int i = 0; i <= n; ++i) {
                    CHECK(map.evaluate(domain_partition.endpoints()[static_cast<std::size_t>(i)]) ==
                          range_partition.endpoints()[static_cast<std::size_t>(i)]);
                }

                PairWeights weights = pair_weights(pair);
                uniform_total = uniform_total.plus(weights.uniform_weight);
                yule_total = yule_total.plus(weights.yule_weight);
            }
        }
        // Both weighting schemes are probability distributions over the
        // ordered pairs of each size.
        CHECK(uniform_total.value == 1);
        CHECK(yule_total.value == 1);
    }
}
