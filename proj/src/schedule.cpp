#include "ttp/schedule.hpp"

#include <algorithm>

#include "ttp/errors.hpp"

namespace ttp {
namespace {

void check_structure(const Schedule& s) {
  if (s.n < 4 || s.n % 2 != 0)
    throw StructuralError("schedule team count must be even and >= 4");
  if (static_cast<int>(s.days.size()) != s.day_count())
    throw StructuralError("schedule must have 2(n-1) days, got " +
                          std::to_string(s.days.size()));
  int m = s.games_per_day();
  for (int j = 0; j < static_cast<int>(s.days.size()); ++j) {
    const auto& day = s.days[j];
    if (static_cast<int>(day.size()) != m)
      throw StructuralError("day " + std::to_string(j + 1) + " has " +
                            std::to_string(day.size()) + " games, expected " +
                            std::to_string(m));
    std::vector<bool> seen(s.n, false);
    for (const Game& g : day) {
      if (g.away < 0 || g.away >= s.n || g.home < 0 || g.home >= s.n)
        throw StructuralError("day " + std::to_string(j + 1) +
                              " references a team out of range");
      if (g.away == g.home)
        throw StructuralError("day " + std::to_string(j + 1) +
                              " pairs a team with itself");
      if (seen[g.away] || seen[g.home])
        throw StructuralError("day " + std::to_string(j + 1) +
                              " is not a perfect matching");
      seen[g.away] = seen[g.home] = true;
    }
  }
}

}  // namespace

ValidationReport validate(const Schedule& s, int k) {
  check_structure(s);
  ValidationReport rep;
  int n = s.n;

  // (a) double round-robin: every ordered pair exactly once
  std::vector<int> count(static_cast<size_t>(n) * n, 0);
  for (const auto& day : s.days)
    for (const Game& g : day) ++count[g.away * n + g.home];
  for (int a = 0; a < n; ++a)
    for (int h = 0; h < n; ++h) {
      if (a == h) continue;
      if (count[a * n + h] != 1) {
        rep.double_round_robin_ok = false;
        rep.violations.push_back(
            {Violation::Kind::double_round_robin, -1, a, h,
             "ordered pair (" + std::to_string(a + 1) + " at " +
                 std::to_string(h + 1) + ") appears " +
                 std::to_string(count[a * n + h]) + " times"});
      }
    }

  // (b) no-repeat: a pair never meets on consecutive days
  std::vector<int> prev_opp(n, -1), cur_opp(n, -1);
  for (int j = 0; j < static_cast<int>(s.days.size()); ++j) {
    std::fill(cur_opp.begin(), cur_opp.end(), -1);
    for (const Game& g : s.days[j]) {
      cur_opp[g.away] = g.home;
      cur_opp[g.home] = g.away;
    }
    if (j > 0)
      for (int t = 0; t < n; ++t)
        if (cur_opp[t] == prev_opp[t] && t < cur_opp[t]) {
          rep.no_repeat_ok = false;
          rep.violations.push_back(
              {Violation::Kind::no_repeat, j, t, cur_opp[t],
               "teams " + std::to_string(t + 1) + " and " +
                   std::to_string(cur_opp[t] + 1) + " meet on days " +
                   std::to_string(j) + " and " + std::to_string(j + 1)});
        }
    std::swap(prev_opp, cur_opp);
  }

  // (c) bounded-by-k: no run of more than k consecutive home or away games
  for (int t = 0; t < n; ++t) {
    int run = 0;
    bool run_home = false;
    for (int j = 0; j < static_cast<int>(s.days.size()); ++j) {
      bool home = false;
      for (const Game& g : s.days[j]) {
        if (g.home == t) home = true;
        if (g.away == t) home = false;
      }
      if (j > 0 && home == run_home) {
        ++run;
      } else {
        run = 1;
        run_home = home;
      }
      if (run == k + 1) {  // report once per run, at the day it first exceeds k
        rep.bounded_by_k_ok = false;
        rep.violations.push_back(
            {Violation::Kind::streak, j, t, -1,
             "team " + std::to_string(t + 1) + " plays more than " +
                 std::to_string(k) + " consecutive " +
                 (home ? "home" : "away") + " games ending day " +
                 std::to_string(j + 1)});
      }
    }
  }
  return rep;
}

std::vector<Itinerary> itineraries(const Schedule& s, const DistanceMatrix& m) {
  check_structure(s);
  if (m.size() != s.n)
    throw DomainError("schedule and distance matrix disagree on team count");
  std::vector<Itinerary> out(s.n);
  for (int t = 0; t < s.n; ++t) {
    out[t].team = t;
    out[t].venues.reserve(s.day_count() + 2);
    out[t].venues.push_back(t);
  }
  for (const auto& day : s.days)
    for (const Game& g : day) {
      out[g.away].venues.push_back(g.home);
      out[g.home].venues.push_back(g.home);
    }
  for (int t = 0; t < s.n; ++t) out[t].venues.push_back(t);
  return out;
}

Rat itinerary_cost(const Itinerary& it, const DistanceMatrix& m) {
  Rat cost(0);
  for (size_t i = 0; i + 1 < it.venues.size(); ++i)
    cost += m(it.venues[i], it.venues[i + 1]);
  return cost;
}

Rat total_cost(const Schedule& s, const DistanceMatrix& m) {
  Rat cost(0);
  for (const Itinerary& it : itineraries(s, m)) cost += itinerary_cost(it, m);
  return cost;
}

Rat position_sum(const Schedule& s, const DistanceMatrix& m, int position) {
  check_structure(s);
  if (position < 1 || position > s.games_per_day())
    throw DomainError("position must be in 1.." +
                      std::to_string(s.games_per_day()));
  Rat sum(0);
  for (const auto& day : s.days) {
    const Game& g = day[position - 1];
    sum += m(g.away, g.home);
  }
  return sum;
}

}  // namespace ttp
