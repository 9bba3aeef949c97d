#pragma once

#include "arbor/exact_prob.hpp"
#include "arbor/numeric.hpp"
#include "arbor/partition.hpp"
#include "arbor/rng.hpp"
#include "arbor/tree.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arbor {

// Result of drawing one tree from a model.  leaf_intervals is populated only
// by models that track real-valued intervals during growth (beta-splitting);
// it then lists, left to right, the final interval attached to each leaf.
struct SampleResult {
    RankedPlaneTree tree;
    std::vector<std::pair<double, double>> leaf_intervals;
};

// A Markov splitting model: a growth process that starts from the trivial
// partition of [0,1] and at every step picks one current interval at random
// (the "leaf distribution" given the current state) and splits it at its
// midpoint.  Running n-1 steps yields a ranked plane tree with n leaves.
class SplittingModel {
public:
    virtual ~SplittingModel() = default;

    virtual std::string name() const = 0;
    virtual std::map<std::string, std::string> params() const { return {}; }

    // Properties the model claims by construction (used by the lifting
    // theorems; see PropertyPolicy).
    virtual bool declared_split_exchangeable() const = 0;
    virtual bool declared_plane_invariant() const = 0;

    // Probability of picking each current interval, left to right.  The
    // state is a partition of [0,1]; entries are exact and sum to 1.
    virtual std::vector<Rational> leaf_distribution(const Partition& state) const = 0;
    // Same, with the state given as the plane tree whose dyadic partition is
    // the current state.
    std::vector<Rational> leaf_distribution(const PlaneTree& state) const;

    // Probability that the growth process produces exactly this ranked plane
    // tree.  The default replays the tree's split history step by step; it is
    // valid for any model whose splits are at interval midpoints.  Models
    // with a closed form override this.
    virtual ExactProb rpt_probability(const RankedPlaneTree& tree) const;

    // Draw a tree with n leaves.  The default grows the exact midpoint
    // process using leaf_distribution at every step.
    virtual SampleResult sample(int n, RandomSource& rng) const;
};

// Step-by-step replay of the tree's split history through leaf_distribution.
// This is the generic route to rpt_probability and the independent check for
// models that override it with a closed form.  Valid only for models whose
// split point is the interval midpoint (all models here except
// beta-splitting, whose real-valued split locations are integrated out in
// its closed form instead).
Rational history_replay_probability(const SplittingModel& model, const RankedPlaneTree& tree);

// Uniform pick among current leaves: P(interval) = 1/k.  Every ranked plane
// tree with n leaves has probability 1/(n-1)!.
class YuleModel final : public SplittingModel {
public:
    std::string name() const override { return "yule"; }
    bool declared_split_exchangeable() const override { return true; }
    bool declared_plane_invariant() const override { return true; }
    using SplittingModel::leaf_distribution;
    std::vector<Rational> leaf_distribution(const Partition& state) const override;
    ExactProb rpt_probability(const RankedPlaneTree& tree) const override;
    SampleResult sample(int n, RandomSource& rng) const override;
};

// A cumulative distribution function on [0,1] used by SebModel, evaluated
// exactly on rationals.  Must satisfy F(0) = 0 and F(1) = 1 and be
// nondecreasing on the points where it is evaluated.
struct SebCdf {
    std::string label;
    std::function<Rational(const Rational&)> eval;

    static SebCdf uniform();          // F(x) = x
    static SebCdf power(int degree);  // F(x) = x^degree
};

// Sampling-from-F: P(interval (a,b)) = F(b) - F(a).
class SebModel final : public SplittingModel {
public:
    explicit SebModel(SebCdf cdf);
    const SebCdf& cdf() const { return cdf_; }
    std::string name() const override { return "seb"; }
    std::map<std::string, std::string> params() const override;
    bool declared_split_exchangeable() const override { return true; }
    bool declared_plane_invariant() const override { return false; }
    using SplittingModel::leaf_distribution;
    std::vector<Rational> leaf_distribution(const Partition& state) const override;

private:
    SebCdf cdf_;
};

// P(interval) proportional to its depth in the dyadic hierarchy (the number
// of past splits it took to carve it out).  At the very first step every
// depth is 0 and the single interval is picked with probability 1.
class DepthProportionalModel final : public SplittingModel {
public:
    std::string name() const override { return "depth"; }
    bool declared_split_exchangeable() const override { return false; }
    bool declared_plane_invariant() const override { return false; }
    using SplittingModel::leaf_distribution;
    std::vector<Rational> leaf_distribution(const Partition& state) const override;
};

// Beta-splitting: intervals are picked proportionally to width, and the
// split point inside the chosen interval is drawn from a rescaled
// Beta(alpha+1, beta+1) instead of the midpoint.  The split locations are
// real-valued, so sampling tracks them in doubles; the probability of a
// ranked plane tree integrates them out and has an exact product form.
// Parameters must satisfy alpha > -1 and beta > -1.  alpha = beta = 0 is
// the uniform split; its tree distribution coincides with Yule's.
class BetaSplittingModel final : public SplittingModel {
public:
    BetaSplittingModel(const Rational& alpha, const Rational& beta);
    static BetaSplittingModel from_doubles(double alpha, double beta);

    bool exact_params() const { return exact_; }
    std::string name() const override { return "beta"; }
    std::map<std::string, std::string> params() const override;
    bool declared_split_exchangeable() const override { return true; }
    bool declared_plane_invariant() const override;
    using SplittingModel::leaf_distribution;
    std::vector<Rational> leaf_distribution(const Partition& state) const override;
    ExactProb rpt_probability(const RankedPlaneTree& tree) const override;
    SampleResult sample(int n, RandomSource& rng) const override;

    // Probability of one internal node's split resolving into p leaves on the
    // left and q on the right, i.e. the integrated-out per-node factor.
    ExactProb split_factor(int left_leaves, int right_leaves) const;

private:
    BetaSplittingModel() = default;

    bool exact_ = true;
    Rational alpha_rat_, beta_rat_;
    double alpha_dbl_ = 0.0, beta_dbl_ = 0.0;
};

// How the lifting theorems decide whether the model has the property they
// require: trust only the model's declaration, or fall back to brute-force
// verification at the relevant size when the declaration is absent.
enum class PropertyPolicy {
    declared_only,
    declared_or_checked,
};

struct SplitExchangeReport {
    bool holds = true;
    // Two ranked plane trees with the same plane tree but different
    // probabilities, when the property fails.
    std::optional<std::pair<RankedPlaneTree, RankedPlaneTree>> counterexample;
};

struct PlaneInvarianceReport {
    bool holds = true;
    // Two plane trees with the same shape but different induced
    // probabilities, when the property fails.
    std::optional<std::pair<PlaneTree, PlaneTree>> counterexample;
};

// Brute-force property checks: enumerate all ranked plane trees with
// 2..max_leaves leaves and compare probabilities across the relevant fibers.
SplitExchangeReport check_split_exchangeable(const SplittingModel& model, int max_leaves);
PlaneInvarianceReport check_plane_invariant(const SplittingModel& model, int max_leaves);

// P(plane tree) = B(t) * P(any one ranked version), valid exactly when the
// model is split-exchangeable; throws TheoremInapplicableError otherwise.
ExactProb lift_to_plane(const SplittingModel& model, const PlaneTree& tree,
                        PropertyPolicy policy = PropertyPolicy::declared_or_checked);

// P(shape) = (ranked plane trees per shape) * P(any one ranked version),
// valid exactly when the model is split-exchangeable and plane-invariant;
// throws TheoremInapplicableError otherwise.
ExactProb lift_to_shape(const SplittingModel& model, const TreeShape& shape,
                        PropertyPolicy policy = PropertyPolicy::declared_or_checked);

// Uniform distribution over plane trees with n leaves (probability 1/C_{n-1}
// each), sampled in O(n) by growing a uniform leaf-labelled tree and
// forgetting the labels.
PlaneTree sample_uniform_plane_tree(int n, RandomSource& rng);

// Monte Carlo estimate of E[-ln(Q)/n] where Q is the balance index of a tree
// with n leaves drawn either uniformly over plane trees or from the Yule
// model.  As n grows the mean approaches a model-specific constant.
enum class FillSource {
    uniform_plane,
    yule,
};

struct FillEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    int leaves = 0;
    int draws = 0;
};

FillEstimate estimate_fill_limit(FillSource source, int leaves, int draws, RandomSource& rng);

}  // namespace arbor
