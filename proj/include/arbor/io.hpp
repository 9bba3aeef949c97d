#pragma once

#include "arbor/exact_prob.hpp"
#include "arbor/numeric.hpp"
#include "arbor/partition.hpp"
#include "arbor/permutation.hpp"
#include "arbor/thompson.hpp"
#include "arbor/tree.hpp"

#include "json.hpp"

namespace arbor {

using Json = nlohmann::json;

// JSON conventions: every rational is a string "p/q" (or "p" for integers),
// exact at any size; a leaf is JSON null; an internal node is an object with
// "left" and "right" (plus "rank" in ranked encodings).

Json rational_to_json(const Rational& r);

Json to_json(const PlaneTree& tree);
Json to_json(const RankedPlaneTree& tree);
Json to_json(const TreeShape& shape);       // canonical representative
Json to_json(const RankedTree& tree);       // standard-form embedding
Json to_json(const Partition& partition);   // array of rationals
Json to_json(const DepthVector& depths);    // array of integers
Json to_json(const Permutation& permutation);
Json to_json(const ExactProb& prob);
Json to_json(const PLMap& map);

}  // namespace arbor
