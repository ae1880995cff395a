#pragma once

#include "json.hpp"

#include "affgr/bruhat.hpp"
#include "affgr/core.hpp"
#include "affgr/loci.hpp"
#include "affgr/patterns.hpp"
#include "affgr/reflections.hpp"
#include "affgr/tangent.hpp"

namespace affgr {

using json = nlohmann::json;

json to_json(const Context& ctx);
json to_json(const Point& p);
Point point_from_json(const json& j);

json to_json(const Reflection& r);
json to_json(const std::vector<Reflection>& rs);

json to_json(const IntervalIndex& idx);
IntervalIndex interval_from_json(const json& j);

json to_json(const TangentReport& rep);
json to_json(const Pattern& p);
json to_json(const SingularWitness& w);
json to_json(const Classification& c);

}  // namespace affgr
