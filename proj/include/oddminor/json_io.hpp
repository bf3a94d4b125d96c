#pragma once

#include <string>

#include <json.hpp>

#include "oddminor/construct.hpp"
#include "oddminor/model.hpp"

namespace oddminor {

nlohmann::json pattern_to_json(const Pattern& p);
Pattern pattern_from_json(const nlohmann::json& j);

// {pattern, branch_sets:[{side, vertices, tree_edges}], colors:{"v":1|2}}
// plus an optional "trace" field.
nlohmann::json model_to_json(const OddModel& m, const ConstructionTrace* trace = nullptr);
OddModel model_from_json(const nlohmann::json& j);

nlohmann::json violations_to_json(const std::vector<Violation>& vs);

}  // namespace oddminor
