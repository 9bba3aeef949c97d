#include "arbor/partition.hpp"

#include "arbor/error.hpp"

namespace arbor {

namespace {

void validate_endpoints(const std::vector<Rational>& endpoints) {
    if (endpoints.size() < 2)
        throw InvalidPartitionError("a partition needs at least two endpoints");
    if (endpoints.front() != 0)
        throw InvalidPartitionError("first endpoint must be 0");
    if (endpoints.back() != 1)
        throw InvalidPartitionError("last endpoint must be 1");
    for (std::size_t i = 1; i < endpoints.size(); ++i) {
        if (endpoints[i - 1] >= endpoints[i])
            throw InvalidPartitionError("endpoints must be strictly increasing");
    }
}

}  // namespace

Partition::Partition() : endpoints_{Rational(0), Rational(1)} {}

Partition::Partition(std::vector<Rational> endpoints)
    : endpoints_(std::move(endpoints)) {
    validate_endpoints(endpoints_);
}

Partition Partition::trivial() { return Partition(); }

Partition Partition::parse(std::string_view text) {
    std::vector<Rational> endpoints;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        endpoints.push_back(parse_fraction(text.substr(pos, comma - pos)));
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return Partition(std::move(endpoints));
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < endpoints_.size(); ++i) {
        if (i > 0) out += ',';
        out += fraction_string(endpoints_[i]);
    }
    return out;
}

Rational Partition::width(int interval) const {
    if (interval < 0 || interval >= interval_count())
        throw Error("interval index out of range");
    return endpoints_[interval + 1] - endpoints_[interval];
}

std::vector<Rational> Partition::widths() const {
    std::vector<Rational> out;
    out.reserve(interval_count());
    for (int i = 0; i < interval_count(); ++i) out.push_back(width(i));
    return out;
}

Partition Partition::split_midpoint(int interval) const {
    if (interval < 0 || interval >= interval_count())
        throw Error("interval index out of range");
    const Rational mid = (endpoints_[interval] + endpoints_[interval + 1]) / 2;
    return split_at(interval, mid);
}

Partition Partition::split_at(int interval, const Rational& s) const {
    if (interval < 0 || interval >= interval_count())
        throw Error("interval index out of range");
    if (s <= endpoints_[interval] || s >= endpoints_[interval + 1])
        throw Error("split point must lie strictly inside the interval");
    std::vector<Rational> endpoints = endpoints_;
    endpoints.insert(endpoints.begin() + interval + 1, s);
    Partition out;
    out.endpoints_ = std::move(endpoints);
    return out;
}

bool Partition::is_dyadic() const {
    for (int i = 0; i < interval_count(); ++i) {
        if (!dyadic_exponent(width(i))) return false;
    }
    return true;
}

DepthVector Partition::depths() const {
    std::vector<int> depths;
    depths.reserve(interval_count());
    for (int i = 0; i < interval_count(); ++i) {
        int exponent = 0;
        if (!dyadic_exponent(width(i), &exponent))
            throw NotDyadicError("partition " + str() + " is not dyadic");
        depths.push_back(-exponent);
    }
    return DepthVector(std::move(depths));
}

// DepthVector ------------------------------------------------------------

DepthVector::DepthVector(std::vector<int> depths) : depths_(std::move(depths)) {
    if (depths_.empty()) throw Error("depth vector must be nonempty");
    int max_depth = 0;
    for (int y : depths_) {
        if (y < 0) throw Error("depths must be nonnegative");
        max_depth = std::max(max_depth, y);
    }
    // Kraft equality over the common denominator 2^max_depth.
    BigInt sum = 0;
    for (int y : depths_) sum += pow2(max_depth - y);
    if (sum != pow2(max_depth))
        throw Error("depth vector " + str() + " violates the Kraft equality");
}

DepthVector DepthVector::trivial() { return DepthVector({0}); }

DepthVector DepthVector::split(int index) const {
    if (index < 1 || index > size())
        throw Error("depth index out of range (1-based)");
    std::vector<int> out;
    out.reserve(depths_.size() + 1);
    for (int i = 0; i < size(); ++i) {
        if (i == index - 1) {
            out.push_back(depths_[i] + 1);
            out.push_back(depths_[i] + 1);
        } else {
            out.push_back(depths_[i]);
        }
    }
    return DepthVector(std::move(out));
}

Partition DepthVector::to_partition() const {
    std::vector<Rational> endpoints{Rational(0)};
    Rational position = 0;
    for (int y : depths_) {
        position += Rational(BigInt(1), pow2(y));
        endpoints.push_back(position);
    }
    return Partition(std::move(endpoints));
}

std::string DepthVector::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < depths_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(depths_[i]);
    }
    out += ')';
    return out;
}

// Tree to partition ------------------------------------------------------

namespace {

void collect_interval_endpoints(const detail::TreeNode::Ptr& node,
                                const Rational& lo, const Rational& hi,
                                std::vector<Rational>& out) {
    if (node->is_leaf()) {
        out.push_back(hi);
        return;
    }
    const Rational mid = (lo + hi) / 2;
    collect_interval_endpoints(node->left, lo, mid, out);
    collect_interval_endpoints(node->right, mid, hi, out);
}

}  // namespace

Partition dyadic_partition_of(const PlaneTree& tree) {
    std::vector<Rational> endpoints{Rational(0)};
    collect_interval_endpoints(tree.root(), Rational(0), Rational(1), endpoints);
    return Partition(std::move(endpoints));
}

}  // namespace arbor
