#pragma once

#include "arbor/numeric.hpp"
#include "arbor/tree.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace arbor {

class DepthVector;

// Partition of [0,1] given by strictly increasing exact rational endpoints
// 0 = X_(0) < X_(1) < ... < X_(k) = 1. Immutable value type.
class Partition {
public:
    Partition();  // the trivial partition (0, 1)
    explicit Partition(std::vector<Rational> endpoints);
    static Partition trivial();

    // "0,1/4,1/2,1"
    static Partition parse(std::string_view text);
    std::string str() const;

    // The rvalue overload returns by value so iterating a temporary's
    // endpoints never dangles.
    const std::vector<Rational>& endpoints() const& { return endpoints_; }
    std::vector<Rational> endpoints() && { return std::move(endpoints_); }
    int interval_count() const { return static_cast<int>(endpoints_.size()) - 1; }

    Rational width(int interval) const;  // 0-based interval index
    std::vector<Rational> widths() const;

    // Insert the midpoint of interval i (0-based).
    Partition split_midpoint(int interval) const;

    // Insert s, which must lie strictly inside interval i.
    Partition split_at(int interval, const Rational& s) const;

    // True iff every interval width is an exact power of two — exactly the
    // partitions reachable from (0,1) by midpoint splits, and exactly those
    // with a well-defined integer depth vector.
    bool is_dyadic() const;

    // Y_i = -log2(W_i); throws NotDyadicError unless is_dyadic().
    DepthVector depths() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.endpoints_ == b.endpoints_;
    }

private:
    std::vector<Rational> endpoints_;
};

// Depth encoding of a dyadic partition: nonnegative integers Y_1..Y_k with
// sum of 2^(-Y_i) equal to 1 (Kraft equality).
class DepthVector {
public:
    explicit DepthVector(std::vector<int> depths);
    static DepthVector trivial();  // (0)

    const std::vector<int>& values() const& { return depths_; }
    std::vector<int> values() && { return std::move(depths_); }
    int size() const { return static_cast<int>(depths_.size()); }

    // Replace entry i (1-based, following the depth-sequence convention) by
    // two consecutive entries one deeper.
    DepthVector split(int index) const;

    Partition to_partition() const;
    std::string str() const;  // "(2,2,1)"

    friend bool operator==(const DepthVector& a, const DepthVector& b) {
        return a.depths_ == b.depths_;
    }

private:
    std::vector<int> depths_;
};

// The dyadic partition obtained by recursively bisecting [0,1] along the
// tree: each internal node splits its interval at the midpoint, and the
// leaves' intervals, read left to right, give the partition. Depends only
// on the plane structure.
Partition dyadic_partition_of(const PlaneTree& tree);

}  // namespace arbor
