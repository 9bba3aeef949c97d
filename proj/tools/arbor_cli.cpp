#include "arbor/bijections.hpp"
#include "arbor/counting.hpp"
#include "arbor/error.hpp"
#include "arbor/io.hpp"
#include "arbor/models.hpp"
#include "arbor/numeric.hpp"
#include "arbor/partition.hpp"
#include "arbor/permutation.hpp"
#include "arbor/rng.hpp"
#include "arbor/thompson.hpp"
#include "arbor/tree.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using namespace arbor;

const char* error_label(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "parse";
    if (dynamic_cast<const InvalidSplitError*>(&e)) return "invalid split";
    if (dynamic_cast<const InvalidPermutationError*>(&e)) return "invalid permutation";
    if (dynamic_cast<const InvalidPartitionError*>(&e)) return "invalid partition";
    if (dynamic_cast<const NotDyadicError*>(&e)) return "not dyadic";
    if (dynamic_cast<const UndefinedInputError*>(&e)) return "undefined input";
    if (dynamic_cast<const InvalidParameterError*>(&e)) return "invalid parameter";
    if (dynamic_cast<const ResourceGuardError*>(&e)) return "resource guard";
    if (dynamic_cast<const TheoremInapplicableError*>(&e)) return "theorem inapplicable";
    if (dynamic_cast<const InvalidPairError*>(&e)) return "invalid pair";
    if (dynamic_cast<const DomainError*>(&e)) return "domain";
    return "error";
}

// Flags shared by the model-driven subcommands.
struct ModelFlags {
    std::string model;
    std::string alpha = "0";
    std::string beta = "0";
    std::string cdf = "uniform";

    void attach(CLI::App* cmd) {
        cmd->add_option("--model", model, "splitting model")
            ->required()
            ->check(CLI::IsMember({"yule", "seb", "depth", "beta"}));
        cmd->add_option("--alpha", alpha, "beta-splitting alpha (exact fraction or decimal)");
        cmd->add_option("--beta", beta, "beta-splitting beta (exact fraction or decimal)");
        cmd->add_option("--cdf", cdf, "seb splitting cdf")
            ->check(CLI::IsMember({"uniform", "square"}));
    }

    std::unique_ptr<SplittingModel> build() const {
        if (model == "yule") {
            return std::make_unique<YuleModel>();
        }
        if (model == "seb") {
            return std::make_unique<SebModel>(cdf == "square" ? SebCdf::power(2)
                                                              : SebCdf::uniform());
        }
        if (model == "depth") {
            return std::make_unique<DepthProportionalModel>();
        }
        return std::make_unique<BetaSplittingModel>(parse_fraction(alpha), parse_fraction(beta));
    }
};

Json params_json(const SplittingModel& model) {
    Json j = Json::object();
    for (const auto& [key, value] : model.params()) {
        j[key] = value;
    }
    return j;
}

PropertyPolicy parse_policy(const std::string& text) {
    return text == "declared-only" ? PropertyPolicy::declared_only
                                   : PropertyPolicy::declared_or_checked;
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw Error("cannot open output file '" + out_path + "'");
    }
    out << payload << '\n';
}

// ---- subcommand payload builders ---------------------------------------

std::string run_count(TreeFamily family, int n, const std::string& format) {
    BigInt count;
    switch (family) {
        case TreeFamily::ranked_plane: count = factorial(n - 1); break;
        case TreeFamily::plane: count = catalan(n - 1); break;
        case TreeFamily::ranked: count = euler_zigzag(n - 1); break;
        case TreeFamily::shape: count = wedderburn_etherington(n); break;
    }
    if (format == "text") {
        return decimal_string(count);
    }
    Json j{{"n", n}, {"family", family_name(family)}, {"count", decimal_string(count)}};
    return j.dump();
}

std::string run_enumerate(TreeFamily family, int n, const std::string& format) {
    std::vector<std::string> items;
    switch (family) {
        case TreeFamily::ranked_plane:
            for (const auto& t : enumerate_ranked_plane(n)) {
                items.push_back(read_infix(t).str());
            }
            break;
        case TreeFamily::plane:
            for (const auto& t : enumerate_plane(n)) {
                items.push_back(t.to_parens());
            }
            break;
        case TreeFamily::ranked:
            for (const auto& t : enumerate_ranked(n)) {
                items.push_back(read_infix(t.embedding()).str());
            }
            break;
        case TreeFamily::shape:
            for (const auto& t : enumerate_shapes(n)) {
                items.push_back(t.to_parens());
            }
            break;
    }
    if (format == "text") {
        std::string out;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i > 0) {
                out += '\n';
            }
            out += items[i];
        }
        return out;
    }
    Json j{{"n", n},
           {"family", family_name(family)},
           {"count", std::to_string(items.size())},
           {"items", items}};
    return j.dump();
}

std::string run_prob(const ModelFlags& flags, const std::string& word, const std::string& level,
                     PropertyPolicy policy, const std::string& format) {
    std::unique_ptr<SplittingModel> model = flags.build();
    RankedPlaneTree t = lift(Permutation::parse(word));
    ExactProb p;
    if (level == "rpt") {
        p = model->rpt_probability(t);
    } else if (level == "plane") {
        p = lift_to_plane(*model, t.plane(), policy);
    } else {
        p = lift_to_shape(*model, to_shape(t), policy);
    }
    if (format == "text") {
        return p.str();
    }
    Json j{{"model", model->name()},
           {"params", params_json(*model)},
           {"tree", word},
           {"level", level},
           {"probability", to_json(p)}};
    return j.dump();
}

std::string run_sample(const ModelFlags& flags, int n, std::uint64_t seed, int draws,
                       const std::string& format) {
    if (draws < 1) {
        throw InvalidParameterError("--draws must be at least 1");
    }
    std::unique_ptr<SplittingModel> model = flags.build();
    RandomSource rng(seed);
    std::vector<SampleResult> results;
    results.reserve(static_cast<std::size_t>(draws));
    for (int d = 0; d < draws; ++d) {
        results.push_back(model->sample(n, rng));
    }
    if (format == "json") {
        Json trees = Json::array();
        for (const SampleResult& r : results) {
            Json entry{{"tree", to_json(r.tree)}, {"infix", read_infix(r.tree).str()}};
            if (!r.leaf_intervals.empty()) {
                Json intervals = Json::array();
                for (const auto& [lo, hi] : r.leaf_intervals) {
                    intervals.push_back(Json::array({lo, hi}));
                }
                entry["leaf_intervals"] = intervals;
            }
            trees.push_back(entry);
        }
        Json j{{"model", model->name()}, {"params", params_json(*model)}, {"n", n},
               {"seed", seed},           {"draws", draws},                {"trees", trees}};
        return j.dump();
    }
    std::string out;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (i > 0) {
            out += '\n';
        }
        out += format == "parens" ? detail::encode_ranked(results[i].tree.root())
                                  : read_infix(results[i].tree).str();
    }
    return out;
}

std::string run_lift(const ModelFlags& flags, const std::string& parens, const std::string& level,
                     PropertyPolicy policy, const std::string& format) {
    std::unique_ptr<SplittingModel> model = flags.build();
    PlaneTree plane = PlaneTree::parse(parens);
    ExactProb p = level == "plane" ? lift_to_plane(*model, plane, policy)
                                   : lift_to_shape(*model, to_shape(plane), policy);
    if (format == "text") {
        return p.str();
    }
    Json j{{"model", model->name()},
           {"params", params_json(*model)},
           {"tree", level == "plane" ? plane.to_parens() : to_shape(plane).to_parens()},
           {"level", level},
           {"probability", to_json(p)}};
    return j.dump();
}

// Returns the process exit code (0 holds, 1 fails).
int run_check(const ModelFlags& flags, int n, const std::string& property,
              const std::string& format, const std::string& out_path) {
    std::unique_ptr<SplittingModel> model = flags.build();
    bool holds = true;
    Json counterexample;
    std::string text_detail;
    if (property == "split-exchangeable") {
        SplitExchangeReport report = check_split_exchangeable(*model, n);
        holds = report.holds;
        if (!holds) {
            const auto& [a, b] = *report.counterexample;
            counterexample = Json{{"kind", "ranked_plane"},
                                  {"first", read_infix(a).str()},
                                  {"second", read_infix(b).str()}};
            text_detail = read_infix(a).str() + " vs " + read_infix(b).str();
        }
    } else {
        PlaneInvarianceReport report = check_plane_invariant(*model, n);
        holds = report.holds;
        if (!holds) {
            const auto& [a, b] = *report.counterexample;
            counterexample = Json{{"kind", "plane"},
                                  {"first", a.to_parens()},
                                  {"second", b.to_parens()}};
            text_detail = a.to_parens() + " vs " + b.to_parens();
        }
    }
    std::string payload;
    if (format == "text") {
        payload = holds ? "holds" : ("fails: " + text_detail);
    } else {
        Json j{{"model", model->name()}, {"params", params_json(*model)},
               {"n", n},                 {"property", property},
               {"holds", holds},         {"counterexample", holds ? Json() : counterexample}};
        payload = j.dump();
    }
    emit(out_path, payload);
    return holds ? 0 : 1;
}

std::string run_thompson(const std::string& domain, const std::string& range,
                         const std::string& eval_at, const std::string& format) {
    TreePair pair(PlaneTree::parse(domain), PlaneTree::parse(range));
    PLMap map = pl_map(pair);
    PairWeights weights = pair_weights(pair);
    if (format == "text") {
        std::string out = "breakpoints: " + map.str();
        out += "\nslopes:";
        for (const Rational& s : map.slopes()) {
            out += ' ' + fraction_string(s);
        }
        out += "\nuniform_weight: " + weights.uniform_weight.str();
        out += "\nyule_weight: " + weights.yule_weight.str();
        if (!eval_at.empty()) {
            Rational x = parse_fraction(eval_at);
            out += "\nvalue: " + fraction_string(map.evaluate(x));
        }
        return out;
    }
    Json j{{"domain", pair.domain_tree().to_parens()},
           {"range", pair.range_tree().to_parens()},
           {"size", pair.size()},
           {"map", to_json(map)},
           {"uniform_weight", to_json(weights.uniform_weight)},
           {"yule_weight", to_json(weights.yule_weight)}};
    if (!eval_at.empty()) {
        Rational x = parse_fraction(eval_at);
        j["eval"] = Json{{"x", rational_to_json(x)}, {"value", rational_to_json(map.evaluate(x))}};
    }
    return j.dump();
}

std::string run_fill(const std::string& source, int n, int draws, std::uint64_t seed,
                     const std::string& format) {
    RandomSource rng(seed);
    FillSource src = source == "yule" ? FillSource::yule : FillSource::uniform_plane;
    FillEstimate est = estimate_fill_limit(src, n, draws, rng);
    if (format == "text") {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%.6f (stderr %.6f)", est.mean, est.standard_error);
        return buf;
    }
    Json j{{"source", source}, {"n", n},          {"draws", draws},
           {"seed", seed},     {"mean", est.mean}, {"stderr", est.standard_error}};
    return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for random binary trees: four tree families, bijections, "
                 "counting, splitting models, and tree-pair PL maps"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "output file (default stdout)");

    // count / enumerate
    std::string family_text;
    int n = 1;
    CLI::App* count_cmd = app.add_subcommand("count", "closed-form family cardinality");
    count_cmd->add_option("--family", family_text, "tree family")->required()
        ->check(CLI::IsMember({"ranked_plane", "plane", "ranked", "shape"}));
    count_cmd->add_option("--n", n, "number of leaves")->required()->check(CLI::PositiveNumber);

    CLI::App* enum_cmd = app.add_subcommand("enumerate", "exhaustive family enumeration");
    enum_cmd->add_option("--family", family_text, "tree family")->required()
        ->check(CLI::IsMember({"ranked_plane", "plane", "ranked", "shape"}));
    enum_cmd->add_option("--n", n, "number of leaves")->required()->check(CLI::PositiveNumber);

    // prob
    ModelFlags prob_flags;
    std::string tree_word;
    std::string level = "rpt";
    std::string policy_text = "declared-or-checked";
    CLI::App* prob_cmd = app.add_subcommand("prob", "exact model probability of one tree");
    prob_flags.attach(prob_cmd);
    prob_cmd->add_option("--tree", tree_word, "tree as its in-fix permutation word")->required();
    prob_cmd->add_option("--level", level, "probability level")
        ->check(CLI::IsMember({"rpt", "plane", "shape"}));
    prob_cmd->add_option("--policy", policy_text, "lifting-theorem property policy")
        ->check(CLI::IsMember({"declared-only", "declared-or-checked"}));

    // sample
    ModelFlags sample_flags;
    std::uint64_t seed = 0;
    int draws = 1;
    std::string sample_format = "infix";
    CLI::App* sample_cmd = app.add_subcommand("sample", "draw trees from a splitting model");
    sample_flags.attach(sample_cmd);
    sample_cmd->add_option("--n", n, "number of leaves")->required()->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", seed, "random seed");
    sample_cmd->add_option("--draws", draws, "number of draws");
    sample_cmd->add_option("--format", sample_format, "per-draw encoding")
        ->check(CLI::IsMember({"infix", "parens", "json"}));

    // lift
    ModelFlags lift_flags;
    std::string lift_tree;
    std::string lift_level = "plane";
    CLI::App* lift_cmd = app.add_subcommand("lift", "lifted probability of a plane tree or shape");
    lift_flags.attach(lift_cmd);
    lift_cmd->add_option("--tree", lift_tree, "tree as a parenthesis literal")->required();
    lift_cmd->add_option("--level", lift_level, "target family")
        ->check(CLI::IsMember({"plane", "shape"}));
    lift_cmd->add_option("--policy", policy_text, "lifting-theorem property policy")
        ->check(CLI::IsMember({"declared-only", "declared-or-checked"}));

    // check
    ModelFlags check_flags;
    std::string property = "split-exchangeable";
    CLI::App* check_cmd = app.add_subcommand("check", "brute-force property check");
    check_flags.attach(check_cmd);
    check_cmd->add_option("--n", n, "maximum number of leaves")->required()
        ->check(CLI::PositiveNumber);
    check_cmd->add_option("--property", property, "property to verify")
        ->check(CLI::IsMember({"split-exchangeable", "plane-invariant"}));

    // thompson
    std::string domain_text, range_text, eval_text;
    CLI::App* thompson_cmd =
        app.add_subcommand("thompson", "PL map and weights of a tree pair");
    thompson_cmd->add_option("--domain", domain_text, "domain tree (parenthesis literal)")
        ->required();
    thompson_cmd->add_option("--range", range_text, "range tree (parenthesis literal)")
        ->required();
    thompson_cmd->add_option("--eval", eval_text, "evaluate the map at this point");

    // fill
    std::string fill_source = "uniform-plane";
    CLI::App* fill_cmd =
        app.add_subcommand("fill", "Monte Carlo estimate of the balance-functional limit");
    fill_cmd->add_option("--source", fill_source, "tree distribution")
        ->check(CLI::IsMember({"uniform-plane", "yule"}));
    fill_cmd->add_option("--n", n, "number of leaves")->required()->check(CLI::PositiveNumber);
    fill_cmd->add_option("--draws", draws, "number of draws")->required()
        ->check(CLI::PositiveNumber);
    fill_cmd->add_option("--seed", seed, "random seed");

    // Let the shared --format/--out flags appear after the subcommand name.
    for (CLI::App* sub : {count_cmd, enum_cmd, prob_cmd, sample_cmd, lift_cmd, check_cmd,
                          thompson_cmd, fill_cmd}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count_cmd->parsed()) {
            emit(out_path, run_count(parse_family(family_text), n, format));
        } else if (enum_cmd->parsed()) {
            emit(out_path, run_enumerate(parse_family(family_text), n, format));
        } else if (prob_cmd->parsed()) {
            emit(out_path, run_prob(prob_flags, tree_word, level, parse_policy(policy_text),
                                    app.count("--format") ? format : "text"));
        } else if (sample_cmd->parsed()) {
            emit(out_path, run_sample(sample_flags, n, seed, draws, sample_format));
        } else if (lift_cmd->parsed()) {
            emit(out_path, run_lift(lift_flags, lift_tree, lift_level, parse_policy(policy_text),
                                    app.count("--format") ? format : "text"));
        } else if (check_cmd->parsed()) {
            return run_check(check_flags, n, property, format, out_path);
        } else if (thompson_cmd->parsed()) {
            emit(out_path, run_thompson(domain_text, range_text, eval_text, format));
        } else if (fill_cmd->parsed()) {
            emit(out_path, run_fill(fill_source, n, draws, seed, format));
        }
    } catch (const Error& e) {
        std::cerr << "error (" << error_label(e) << "): " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
