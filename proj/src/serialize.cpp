#include "ttp/serialize.hpp"

#include <sstream>

#include "ttp/errors.hpp"

namespace ttp {

json rat_to_json(const Rat& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

json tour_to_json(const Tour& t) {
  json order = json::array();
  for (int v : t.order) order.push_back(v + 1);
  return {{"order", order}, {"length", rat_to_json(t.length)}};
}

json labeling_to_json(const Labeling& lab) {
  json order = json::array();
  for (int t : lab.order) order.push_back(t + 1);
  return {{"hub", lab.hub + 1}, {"order", order}};
}

Labeling labeling_from_json(const json& j) {
  Labeling lab;
  lab.hub = j.at("hub").get<int>() - 1;
  for (const auto& t : j.at("order")) lab.order.push_back(t.get<int>() - 1);
  return lab;
}

json schedule_to_json(const Schedule& s) {
  json days = json::array();
  for (const auto& day : s.days) {
    json games = json::array();
    for (const Game& g : day)
      games.push_back({{"away", g.away + 1}, {"home", g.home + 1}});
    days.push_back(games);
  }
  return {{"n", s.n}, {"k", s.k}, {"days", days}};
}

Schedule schedule_from_json(const json& j) {
  Schedule s;
  s.n = j.at("n").get<int>();
  s.k = j.value("k", 0);
  for (const auto& day : j.at("days")) {
    std::vector<Game> games;
    for (const auto& g : day)
      games.push_back(
          {g.at("away").get<int>() - 1, g.at("home").get<int>() - 1});
    s.days.push_back(std::move(games));
  }
  return s;
}

json validation_to_json(const ValidationReport& rep) {
  json violations = json::array();
  for (const Violation& v : rep.violations) {
    json entry = {{"day", v.day + 1},
                  {"team", v.team_a + 1},
                  {"detail", v.detail}};
    switch (v.kind) {
      case Violation::Kind::double_round_robin:
        entry["kind"] = "double-round-robin";
        entry["opponent"] = v.team_b + 1;
        entry.erase("day");
        break;
      case Violation::Kind::no_repeat:
        entry["kind"] = "no-repeat";
        entry["opponent"] = v.team_b + 1;
        break;
      case Violation::Kind::streak:
        entry["kind"] = "bounded-by-k";
        break;
    }
    violations.push_back(entry);
  }
  return {{"double_round_robin", rep.double_round_robin_ok},
          {"no_repeat", rep.no_repeat_ok},
          {"bounded_by_k", rep.bounded_by_k_ok},
          {"feasible", rep.ok()},
          {"violations", violations}};
}

json bounds_to_json(const BoundsReport& rep) {
  json j = {{"lb_tour", rat_to_json(rep.lb_tour)},
            {"lb_delta_k", rat_to_json(rep.lb_delta_k)},
            {"lb_delta_n", rat_to_json(rep.lb_delta_n)},
            {"lb", rat_to_json(rep.lb)},
            {"tour_exactness", rep.tour_exact ? "exact" : "surrogate"},
            {"ub_analyzed", rat_to_json(rep.ub_analyzed)},
            {"ratio_cap", rat_to_json(rep.ratio_cap)}};
  if (rep.realized_cost) {
    j["realized_cost"] = rat_to_json(*rep.realized_cost);
    j["ub_holds"] = rep.ub_holds;
    j["ratio_holds"] = rep.ratio_holds;
  }
  if (rep.certified_ratio) {
    j["certified_ratio"] = rep.certified_ratio->to_double();
    j["certified_ratio_exact"] = rep.certified_ratio->str();
    j["certification"] = rep.tour_exact ? "exact" : "surrogate-certified";
  }
  return j;
}

json layout_to_json(const BlockLayout& lay) {
  return {{"m", lay.m},
          {"k", lay.k},
          {"l", lay.l},
          {"b", lay.b},
          {"widths", lay.widths},
          {"rule1_reversal", lay.rule1_reversal}};
}

json solve_result_to_json(const SolveResult& res) {
  DirectionPlan plan = direction_plan(res.schedule.n, res.schedule.k,
                                      res.layout);
  json j = {{"schedule", schedule_to_json(res.schedule)},
            {"cost", rat_to_json(res.cost)},
            {"provenance",
             {{"labeling", labeling_to_json(res.labeling)},
              {"labeling_index", res.labeling_index},
              {"l", res.l},
              {"layout", layout_to_json(res.layout)},
              {"flags",
               {{"rule1_reversal", res.layout.rule1_reversal},
                {"rule2_day1_reversal", plan.rule2_day1_reversal},
                {"r", plan.r}}},
              {"tour", tour_to_json(res.tour)},
              {"hub", res.hub + 1}}}};
  if (!res.candidates.empty()) {
    json cands = json::array();
    for (const CandidateResult& c : res.candidates)
      cands.push_back({{"labeling_index", c.labeling_index},
                       {"l", c.l},
                       {"cost", rat_to_json(c.cost)}});
    j["candidates"] = cands;
  }
  return j;
}

std::string itineraries_to_csv(const Schedule& s, const DistanceMatrix& m) {
  std::ostringstream out;
  out << "team,day,venue\n";
  for (const Itinerary& it : itineraries(s, m))
    for (size_t day = 0; day < it.venues.size(); ++day)
      out << it.team + 1 << "," << day << "," << it.venues[day] + 1 << "\n";
  return out.str();
}

}  // namespace ttp
