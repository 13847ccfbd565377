#pragma once

#include <json.hpp>

#include "ridgegap/closed_form.hpp"
#include "ridgegap/domain.hpp"
#include "ridgegap/extremal.hpp"
#include "ridgegap/network.hpp"
#include "ridgegap/paths.hpp"
#include "ridgegap/ridge.hpp"

namespace ridgegap {

using json = nlohmann::json;

/// {"pts": [...], "firstEdge": "A" | "B"}
json to_json(const ClosedPath& cp);
json to_json(const Path& p);
ClosedPath closed_path_from_json(const json& j);

/// {"value": ..., "witness": {...} | null, "method": "exact-mean-cycle" | "enumeration"}
json to_json(const SupResult& r);

/// Error, gauge-fixed tables keyed by level id, and the level-id -> projection
/// dictionaries needed to read them.
json to_json(const BestApprox& b, const SampledDomain& domain);

json to_json(const ClosedFormReport& r);

/// {"sigma": "sigmoid", "terms": [{"c": ..., "w": "A" | "B", "theta": ...}, ...]}
json to_json(const ShallowNetwork& net);
ShallowNetwork network_from_json(const json& j);

json to_json(const ExtremalPaths& paths);

}  // namespace ridgegap
