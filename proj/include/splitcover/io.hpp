#pragma once

#include <nlohmann/json.hpp>

#include "splitcover/constructive.hpp"
#include "splitcover/dominance.hpp"
#include "splitcover/families.hpp"
#include "splitcover/split_set.hpp"

namespace splitcover {

using json = nlohmann::json;

/// Integers serialize as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that; both forms parse back.
json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);

/// Splits are {"n": int, "pi": [int, ...], "eta": int}; families add
/// {"k": int, "splits": [...]}. Rationals travel as "p/q" strings in lowest
/// terms with a positive denominator.
json to_json(const SplitSet& s);
SplitSet split_from_json(const json& j);

json to_json(const SplitFamily& f);
SplitFamily family_from_json(const json& j);

json to_json(const CubePoint& p);
CubePoint cube_point_from_json(const json& j);

json to_json(const DominanceReport& r);
json to_json(const CoverResult& r);
json to_json(const ConstructiveCover& c);

/// Experiment records; timing is emitted only on request so equal inputs
/// print identical bytes.
json to_json(const ExperimentReport& r, bool with_details = false, bool with_timing = false);

}  // namespace splitcover
