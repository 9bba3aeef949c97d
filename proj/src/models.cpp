#include "arbor/models.hpp"

#include "arbor/counting.hpp"
#include "arbor/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

namespace arbor {

namespace {

// (left leaf count, right leaf count) for every internal node, collected
// iteratively so very deep trees are safe.
std::vector<std::pair<int, int>> split_leaf_counts(const detail::TreeNode::Ptr& root) {
    std::vector<std::pair<int, int>> out;
    struct Frame {
        const detail::TreeNode* node;
        bool expanded;
    };
    std::vector<Frame> stack{{root.get(), false}};
    std::vector<int> values;
    while (!stack.empty()) {
        Frame frame = stack.back();
        stack.pop_back();
        if (frame.node->is_leaf()) {
            values.push_back(1);
            continue;
        }
        if (!frame.expanded) {
            stack.push_back({frame.node, true});
            stack.push_back({frame.node->right.get(), false});
            stack.push_back({frame.node->left.get(), false});
        } else {
            int right = values.back();
            values.pop_back();
            int left = values.back();
            values.pop_back();
            out.emplace_back(left, right);
            values.push_back(left + right);
        }
    }
    return out;
}

void require_leaves(int n) {
    if (n < 1) {
        throw InvalidParameterError("leaf count must be at least 1");
    }
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

// SplittingModel defaults -------------------------------------------------

std::vector<Rational> SplittingModel::leaf_distribution(const PlaneTree& state) const {
    return leaf_distribution(dyadic_partition_of(state));
}

Rational history_replay_probability(const SplittingModel& model, const RankedPlaneTree& tree) {
    struct Entry {
        NodeAddress addr;
        Rational lo, hi;
    };
    std::vector<Entry> leaves = {{NodeAddress::root(), Rational(0), Rational(1)}};
    Rational prob(1);
    for (const NodeAddress& target : tree.internal_addresses_by_rank()) {
        std::vector<Rational> points;
        points.reserve(leaves.size() + 1);
        for (const Entry& e : leaves) {
            points.push_back(e.lo);
        }
        points.push_back(Rational(1));
        std::vector<Rational> dist = model.leaf_distribution(Partition(std::move(points)));
        std::size_t idx = 0;
        while (idx < leaves.size() && !(leaves[idx].addr == target)) {
            ++idx;
        }
        if (idx == leaves.size()) {
            throw Error("internal error: split target not found during history replay");
        }
        prob *= dist[idx];
        Rational mid = (leaves[idx].lo + leaves[idx].hi) / 2;
        Entry right{target.right(), mid, leaves[idx].hi};
        leaves[idx] = Entry{target.left(), leaves[idx].lo, mid};
        leaves.insert(leaves.begin() + static_cast<std::ptrdiff_t>(idx) + 1, right);
    }
    return prob;
}

ExactProb SplittingModel::rpt_probability(const RankedPlaneTree& tree) const {
    return ExactProb::from_rational(history_replay_probability(*this, tree));
}

SampleResult SplittingModel::sample(int n, RandomSource& rng) const {
    require_leaves(n);
    TreeBuilder builder;
    std::vector<int> leaf_ids = {builder.root()};
    Partition state = Partition::trivial();
    for (int step = 1; step < n; ++step) {
        std::vector<Rational> dist = leaf_distribution(state);
        double u = rng.uniform01();
        int pick = static_cast<int>(dist.size()) - 1;
        double cum = 0.0;
        for (std::size_t i = 0; i < dist.size(); ++i) {
            cum += to_double(dist[i]);
            if (u < cum) {
                pick = static_cast<int>(i);
                break;
            }
        }
        auto [left_id, right_id] = builder.split(leaf_ids[pick], step);
        leaf_ids[pick] = left_id;
        leaf_ids.insert(leaf_ids.begin() + pick + 1, right_id);
        state = state.split_midpoint(pick);
    }
    return {builder.freeze_ranked(), {}};
}

// Yule --------------------------------------------------------------------

std::vector<Rational> YuleModel::leaf_distribution(const Partition& state) const {
    int k = state.interval_count();
    return std::vector<Rational>(static_cast<std::size_t>(k), Rational(1, k));
}

ExactProb YuleModel::rpt_probability(const RankedPlaneTree& tree) const {
    return ExactProb::from_rational(Rational(BigInt(1), factorial(tree.leaf_count() - 1)));
}

SampleResult YuleModel::sample(int n, RandomSource& rng) const {
    require_leaves(n);
    TreeBuilder builder;
    std::vector<int> leaves = {builder.root()};
    for (int step = 1; step < n; ++step) {
        int i = rng.uniform_int(static_cast<int>(leaves.size()));
        auto [left_id, right_id] = builder.split(leaves[i], step);
        leaves[i] = left_id;
        leaves.push_back(right_id);
    }
    return {builder.freeze_ranked(), {}};
}

// SEB ---------------------------------------------------------------------

SebCdf SebCdf::uniform() {
    return {"uniform", [](const Rational& x) { return x; }};
}

SebCdf SebCdf::power(int degree) {
    if (degree < 1) {
        throw InvalidParameterError("cdf power degree must be at least 1");
    }
    return {"x^" + std::to_string(degree), [degree](const Rational& x) {
                Rational r(1);
                for (int i = 0; i < degree; ++i) {
                    r *= x;
                }
                return r;
            }};
}

SebModel::SebModel(SebCdf cdf) : cdf_(std::move(cdf)) {
    if (!cdf_.eval) {
        throw InvalidParameterError("seb cdf has no evaluator");
    }
    if (cdf_.eval(Rational(0)) != 0 || cdf_.eval(Rational(1)) != 1) {
        throw InvalidParameterError("seb cdf must satisfy F(0) = 0 and F(1) = 1");
    }
}

std::map<std::string, std::string> SebModel::params() const {
    return {{"cdf", cdf_.label}};
}

std::vector<Rational> SebModel::leaf_distribution(const Partition& state) const {
    const std::vector<Rational>& x = state.endpoints();
    std::vector<Rational> dist;
    dist.reserve(x.size() - 1);
    Rational prev = cdf_.eval(x[0]);
    for (std::size_t i = 1; i < x.size(); ++i) {
        Rational cur = cdf_.eval(x[i]);
        Rational w = cur - prev;
        if (w < 0) {
            throw InvalidParameterError("seb cdf decreases between " + fraction_string(x[i - 1]) +
                                        " and " + fraction_string(x[i]));
        }
        dist.push_back(w);
        prev = cur;
    }
    return dist;
}

// Depth-proportional ------------------------------------------------------

std::vector<Rational> DepthProportionalModel::leaf_distribution(const Partition& state) const {
    DepthVector depth_vector = state.depths();
    const std::vector<int>& y = depth_vector.values();
    long long total = 0;
    for (int v : y) {
        total += v;
    }
    if (total == 0) {
        // Only the trivial one-interval state has all depths zero; the single
        // interval is picked with certainty.
        return std::vector<Rational>(y.size(), Rational(1));
    }
    std::vector<Rational> dist;
    dist.reserve(y.size());
    for (int v : y) {
        dist.emplace_back(v, total);
    }
    return dist;
}

// Beta-splitting ----------------------------------------------------------

BetaSplittingModel::BetaSplittingModel(const Rational& alpha, const Rational& beta) {
    if (alpha <= -1 || beta <= -1) {
        throw InvalidParameterError("beta-splitting requires alpha > -1 and beta > -1");
    }
    exact_ = true;
    alpha_rat_ = alpha;
    beta_rat_ = beta;
    alpha_dbl_ = to_double(alpha);
    beta_dbl_ = to_double(beta);
}

BetaSplittingModel BetaSplittingModel::from_doubles(double alpha, double beta) {
    if (!(alpha > -1.0) || !(beta > -1.0)) {
        throw InvalidParameterError("beta-splitting requires alpha > -1 and beta > -1");
    }
    BetaSplittingModel m;
    m.exact_ = false;
    m.alpha_dbl_ = alpha;
    m.beta_dbl_ = beta;
    return m;
}

std::map<std::string, std::string> BetaSplittingModel::params() const {
    if (exact_) {
        return {{"alpha", fraction_string(alpha_rat_)}, {"beta", fraction_string(beta_rat_)}};
    }
    return {{"alpha", format_double(alpha_dbl_)}, {"beta", format_double(beta_dbl_)}};
}

bool BetaSplittingModel::declared_plane_invariant() const {
    return exact_ ? alpha_rat_ == beta_rat_ : alpha_dbl_ == beta_dbl_;
}

std::vector<Rational> BetaSplittingModel::leaf_distribution(const Partition& state) const {
    return state.widths();
}

ExactProb BetaSplittingModel::split_factor(int left_leaves, int right_leaves) const {
    // Per-node factor of the product form of rpt_probability: the
    // (left_leaves - 1)-th/(right_leaves - 1)-th joint moment
    // E[V^p (1-V)^q] of V ~ Beta(alpha+1, beta+1).
    int p = left_leaves - 1;
    int q = right_leaves - 1;
    if (p < 0 || q < 0) {
        throw InvalidParameterError("split factor needs at least one leaf on each side");
    }
    if (exact_) {
        Rational a = alpha_rat_ + 1;
        Rational b = beta_rat_ + 1;
        Rational num(1);
        for (int i = 0; i < p; ++i) {
            num *= a + i;
        }
        for (int j = 0; j < q; ++j) {
            num *= b + j;
        }
        Rational den(1);
        for (int t = 0; t < p + q; ++t) {
            den *= a + b + t;
        }
        return ExactProb::from_rational(num / den);
    }
    double a = alpha_dbl_ + 1.0;
    double b = beta_dbl_ + 1.0;
    double lg = std::lgamma(a + p) - std::lgamma(a) + std::lgamma(b + q) - std::lgamma(b) +
                std::lgamma(a + b) - std::lgamma(a + b + p + q);
    double value = std::exp(lg);
    double rel = 2e-15 * (6.0 + (p + q) * std::log(static_cast<double>(p + q) + 2.0));
    return ExactProb::from_double(value, value * rel);
}

ExactProb BetaSplittingModel::rpt_probability(const RankedPlaneTree& tree) const {
    // The leaf picked at each step has probability equal to its width, and
    // integrating the Beta-distributed split fractions out of the width
    // products leaves one moment factor per internal node.  Ranks never
    // enter, which is exactly split-exchangeability.
    ExactProb p = ExactProb::from_rational(Rational(1));
    for (auto [left, right] : split_leaf_counts(tree.root())) {
        p = p.times(split_factor(left, right));
    }
    return p;
}

SampleResult BetaSplittingModel::sample(int n, RandomSource& rng) const {
    require_leaves(n);
    TreeBuilder builder;
    struct Interval {
        int id;
        double lo, hi;
    };
    std::vector<Interval> intervals = {{builder.root(), 0.0, 1.0}};
    double a = alpha_dbl_ + 1.0;
    double b = beta_dbl_ + 1.0;
    for (int step = 1; step < n; ++step) {
        double total = 0.0;
        for (const Interval& iv : intervals) {
            total += iv.hi - iv.lo;
        }
        double u = rng.uniform01() * total;
        int pick = static_cast<int>(intervals.size()) - 1;
        double cum = 0.0;
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            cum += intervals[i].hi - intervals[i].lo;
            if (u < cum) {
                pick = static_cast<int>(i);
                break;
            }
        }
        double lo = intervals[pick].lo;
        double hi = intervals[pick].hi;
        double s = lo + (hi - lo) * rng.beta(a, b);
        if (!(s > lo && s < hi)) {
            s = lo + (hi - lo) * 0.5;  // rounding pushed the split onto an endpoint
        }
        auto [left_id, right_id] = builder.split(intervals[pick].id, step);
        intervals[pick] = {left_id, lo, s};
        intervals.insert(intervals.begin() + pick + 1, {right_id, s, hi});
    }
    SampleResult result{builder.freeze_ranked(), {}};
    result.leaf_intervals.reserve(intervals.size());
    for (const Interval& iv : intervals) {
        result.leaf_intervals.emplace_back(iv.lo, iv.hi);
    }
    return result;
}

// Property checks ---------------------------------------------------------

SplitExchangeReport check_split_exchangeable(const SplittingModel& model, int max_leaves) {
    for (int n = 2; n <= max_leaves; ++n) {
        std::map<std::string, std::pair<RankedPlaneTree, ExactProb>> by_plane;
        for (const RankedPlaneTree& t : enumerate_ranked_plane(n)) {
            ExactProb p = model.rpt_probability(t);
            std::string key = t.plane().to_parens();
            auto it = by_plane.find(key);
            if (it == by_plane.end()) {
                by_plane.emplace(key, std::make_pair(t, p));
            } else if (!consistent(it->second.second, p)) {
                return {false, std::make_pair(it->second.first, t)};
            }
        }
    }
    return {true, std::nullopt};
}

PlaneInvarianceReport check_plane_invariant(const SplittingModel& model, int max_leaves) {
    for (int n = 2; n <= max_leaves; ++n) {
        std::map<std::string, ExactProb> plane_prob;
        for (const RankedPlaneTree& t : enumerate_ranked_plane(n)) {
            ExactProb& slot = plane_prob[t.plane().to_parens()];
            slot = slot.plus(model.rpt_probability(t));
        }
        std::map<std::string, std::pair<PlaneTree, ExactProb>> by_shape;
        for (const auto& [parens, prob] : plane_prob) {
            PlaneTree plane = PlaneTree::parse(parens);
            std::string key = to_shape(plane).to_parens();
            auto it = by_shape.find(key);
            if (it == by_shape.end()) {
                by_shape.emplace(key, std::make_pair(plane, prob));
            } else if (!consistent(it->second.second, prob)) {
                return {false, std::make_pair(it->second.first, plane)};
            }
        }
    }
    return {true, std::nullopt};
}

// Lifting theorems --------------------------------------------------------

namespace {

bool has_split_exchange(const SplittingModel& model, int leaves, PropertyPolicy policy) {
    if (model.declared_split_exchangeable()) {
        return true;
    }
    if (policy == PropertyPolicy::declared_or_checked) {
        return check_split_exchangeable(model, leaves).holds;
    }
    return false;
}

bool has_plane_invariance(const SplittingModel& model, int leaves, PropertyPolicy policy) {
    if (model.declared_plane_invariant()) {
        return true;
    }
    if (policy == PropertyPolicy::declared_or_checked) {
        return check_plane_invariant(model, leaves).holds;
    }
    return false;
}

}  // namespace

ExactProb lift_to_plane(const SplittingModel& model, const PlaneTree& tree, PropertyPolicy policy) {
    if (!has_split_exchange(model, tree.leaf_count(), policy)) {
        throw TheoremInapplicableError("model '" + model.name() +
                                       "' is not split-exchangeable; ranked-tree probabilities "
                                       "cannot be lifted to plane trees");
    }
    ExactProb per_ranking = model.rpt_probability(bfs_ranking(tree));
    return per_ranking.scaled(catalan_coefficient(tree));
}

ExactProb lift_to_shape(const SplittingModel& model, const TreeShape& shape, PropertyPolicy policy) {
    int n = shape.leaf_count();
    if (!has_split_exchange(model, n, policy)) {
        throw TheoremInapplicableError("model '" + model.name() +
                                       "' is not split-exchangeable; ranked-tree probabilities "
                                       "cannot be lifted to shapes");
    }
    if (!has_plane_invariance(model, n, policy)) {
        throw TheoremInapplicableError("model '" + model.name() +
                                       "' is not plane-invariant; plane-tree probabilities "
                                       "cannot be lifted to shapes");
    }
    ExactProb per_ranking = model.rpt_probability(bfs_ranking(shape.representative()));
    return per_ranking.scaled(rpt_per_shape(shape));
}

// Uniform plane sampling and the fill constant ----------------------------

PlaneTree sample_uniform_plane_tree(int n, RandomSource& rng) {
    require_leaves(n);
    TreeBuilder builder;
    std::vector<int> nodes = {builder.root()};
    for (int k = 1; k < n; ++k) {
        int target = nodes[static_cast<std::size_t>(rng.uniform_int(static_cast<int>(nodes.size())))];
        bool leaf_on_left = rng.uniform_int(2) == 0;
        auto [internal_id, leaf_id] = builder.graft_above(target, leaf_on_left);
        nodes.push_back(internal_id);
        nodes.push_back(leaf_id);
    }
    return builder.freeze_plane();
}

FillEstimate estimate_fill_limit(FillSource source, int leaves, int draws, RandomSource& rng) {
    require_leaves(leaves);
    if (draws < 1) {
        throw InvalidParameterError("draw count must be at least 1");
    }
    YuleModel yule;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int d = 0; d < draws; ++d) {
        PlaneTree tree = source == FillSource::uniform_plane
                             ? sample_uniform_plane_tree(leaves, rng)
                             : yule.sample(leaves, rng).tree.plane();
        double neg_log_q = 0.0;
        for (int size : internal_size_list(tree)) {
            neg_log_q += std::log(static_cast<double>(size));
        }
        double x = neg_log_q / leaves;
        sum += x;
        sum_sq += x * x;
    }
    FillEstimate est;
    est.mean = sum / draws;
    double variance = 0.0;
    if (draws > 1) {
        variance = std::max(0.0, (sum_sq - draws * est.mean * est.mean) / (draws - 1));
    }
    est.standard_error = std::sqrt(variance / draws);
    est.leaves = leaves;
    est.draws = draws;
    return est;
}

}  // namespace arbor
