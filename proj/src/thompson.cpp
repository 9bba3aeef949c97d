#include "arbor/thompson.hpp"

#include "arbor/counting.hpp"
#include "arbor/error.hpp"
#include "arbor/partition.hpp"

#include <string>
#include <utility>

namespace arbor {

TreePair::TreePair() : domain_(PlaneTree::leaf()), range_(PlaneTree::leaf()) {}

TreePair::TreePair(PlaneTree domain, PlaneTree range)
    : domain_(std::move(domain)), range_(std::move(range)) {
    if (domain_.leaf_count() != range_.leaf_count()) {
        throw InvalidPairError("tree pair needs equal leaf counts, got " +
                               std::to_string(domain_.leaf_count()) + " and " +
                               std::to_string(range_.leaf_count()));
    }
}

PLMap::PLMap() : points_{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}} {}

PLMap::PLMap(std::vector<std::pair<Rational, Rational>> breakpoints) {
    if (breakpoints.size() < 2) {
        throw InvalidParameterError("a PL map needs at least the two endpoint breakpoints");
    }
    if (breakpoints.front() != std::make_pair(Rational(0), Rational(0)) ||
        breakpoints.back() != std::make_pair(Rational(1), Rational(1))) {
        throw InvalidParameterError("a PL map must fix 0 and 1");
    }
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        const auto& [x, y] = breakpoints[i];
        if (!is_dyadic_rational(x) || !is_dyadic_rational(y)) {
            throw InvalidParameterError("PL map breakpoint (" + fraction_string(x) + "," +
                                        fraction_string(y) + ") is not dyadic");
        }
        if (i > 0 && (x <= breakpoints[i - 1].first || y <= breakpoints[i - 1].second)) {
            throw InvalidParameterError("PL map breakpoints must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        Rational slope = (breakpoints[i + 1].second - breakpoints[i].second) /
                         (breakpoints[i + 1].first - breakpoints[i].first);
        if (!dyadic_exponent(slope)) {
            throw InvalidParameterError("PL map slope " + fraction_string(slope) +
                                        " is not a power of two");
        }
    }
    // Canonical form: drop every interior breakpoint where the slope does
    // not change.
    points_.push_back(breakpoints.front());
    for (std::size_t i = 1; i + 1 < breakpoints.size(); ++i) {
        const auto& prev = points_.back();
        const auto& cur = breakpoints[i];
        const auto& next = breakpoints[i + 1];
        Rational incoming = (cur.second - prev.second) / (cur.first - prev.first);
        Rational outgoing = (next.second - cur.second) / (next.first - cur.first);
        if (incoming != outgoing) {
            points_.push_back(cur);
        }
    }
    points_.push_back(breakpoints.back());
}

std::vector<Rational> PLMap::slopes() const {
    std::vector<Rational> s;
    s.reserve(points_.size() - 1);
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        s.push_back((points_[i + 1].second - points_[i].second) /
                    (points_[i + 1].first - points_[i].first));
    }
    return s;
}

Rational PLMap::evaluate(const Rational& x) const {
    if (x < 0 || x > 1) {
        throw DomainError("PL map argument " + fraction_string(x) + " lies outside [0,1]");
    }
    std::size_t i = 0;
    while (i + 2 < points_.size() && points_[i + 1].first <= x) {
        ++i;
    }
    Rational slope = (points_[i + 1].second - points_[i].second) /
                     (points_[i + 1].first - points_[i].first);
    return points_[i].second + slope * (x - points_[i].first);
}

std::string PLMap::str() const {
    std::string out;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += '(' + fraction_string(points_[i].first) + ',' + fraction_string(points_[i].second) + ')';
    }
    return out;
}

PLMap pl_map(const TreePair& pair) {
    Partition domain = dyadic_partition_of(pair.domain_tree());
    Partition range = dyadic_partition_of(pair.range_tree());
    const std::vector<Rational>& from = domain.endpoints();
    const std::vector<Rational>& to = range.endpoints();
    std::vector<std::pair<Rational, Rational>> breakpoints;
    breakpoints.reserve(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        breakpoints.emplace_back(from[i], to[i]);
    }
    return PLMap(std::move(breakpoints));
}

PairWeights pair_weights(const TreePair& pair) {
    int n = pair.size();
    BigInt c = catalan(n);
    BigInt f = factorial(n);
    PairWeights w;
    w.uniform_weight = ExactProb::from_rational(Rational(BigInt(1), c * c));
    w.yule_weight = ExactProb::from_rational(
        Rational(catalan_coefficient(pair.domain_tree()) * catalan_coefficient(pair.range_tree()),
                 f * f));
    return w;
}

}  // namespace arbor
