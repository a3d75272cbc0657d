#pragma once

#include <string>

#include <json.hpp>

#include "ttp/bounds.hpp"
#include "ttp/construction.hpp"
#include "ttp/labeling.hpp"
#include "ttp/schedule.hpp"
#include "ttp/tour.hpp"

namespace ttp {

using nlohmann::json;

// Rationals serialize as plain JSON integers when integral, otherwise as a
// "p/q" string; *_exact twins carry the string form wherever a double
// convenience field is also emitted.
json rat_to_json(const Rat& r);

// {"order": [1-based vertices], "length": ...}
json tour_to_json(const Tour& t);

// {"hub": 1-based team, "order": [teams by label 1..n-1]}
json labeling_to_json(const Labeling& lab);
Labeling labeling_from_json(const json& j);

// {"n": n, "k": k, "days": [[{"away": a, "home": h}, ...], ...]}, 1-based
json schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const json& j);

json validation_to_json(const ValidationReport& rep);

json bounds_to_json(const BoundsReport& rep);

json layout_to_json(const BlockLayout& lay);

// schedule plus provenance {labeling, l, layout, flags}
json solve_result_to_json(const SolveResult& res);

// "team,day,venue" rows, 1-based teams/venues, day 0 and 2n-1 at home
std::string itineraries_to_csv(const Schedule& s, const DistanceMatrix& m);

}  // namespace ttp
