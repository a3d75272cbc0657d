#pragma once

#include <string>
#include <vector>

#include "ttp/instance.hpp"
#include "ttp/rational.hpp"

namespace ttp {

// One game; the away team travels to the home team's venue.
struct Game {
  int away;
  int home;
  friend bool operator==(const Game&, const Game&) = default;
};

// 2(n-1) days of n/2 games each. Position i within a day mirrors the
// rotation scheme's i-th edge: for constructed schedules position 0 always
// involves the hub team. Team ids are 0-based internally, 1-based on the
// wire.
struct Schedule {
  int n = 0;
  int k = 0;
  std::vector<std::vector<Game>> days;

  int games_per_day() const { return n / 2; }
  int day_count() const { return 2 * (n - 1); }
};

struct Violation {
  enum class Kind { double_round_robin, no_repeat, streak };
  Kind kind;
  int day;     // 0-based day where the violation is observed
  int team_a;  // offending team (streak) or pair (others)
  int team_b;  // -1 for streak violations
  std::string detail;
};

struct ValidationReport {
  bool double_round_robin_ok = true;
  bool no_repeat_ok = true;
  bool bounded_by_k_ok = true;
  std::vector<Violation> violations;
  bool ok() const {
    return double_round_robin_ok && no_repeat_ok && bounded_by_k_ok;
  }
};

// Checks the three TTP constraints and reports every violation with day and
// team coordinates. Throws StructuralError if the schedule is not even a
// sequence of perfect matchings of the right shape.
ValidationReport validate(const Schedule& s, int k);

// Venue sequence of one team: home on day 0 and after the last game, the
// hosting team's venue in between.
struct Itinerary {
  int team;
  std::vector<int> venues;  // length 2n
};

std::vector<Itinerary> itineraries(const Schedule& s, const DistanceMatrix& m);

Rat itinerary_cost(const Itinerary& it, const DistanceMatrix& m);

// Total travel distance over all teams.
Rat total_cost(const Schedule& s, const DistanceMatrix& m);

// Sum over all days of the distance between the two teams at the given
// 1-based position.
Rat position_sum(const Schedule& s, const DistanceMatrix& m, int position);

}  // namespace ttp
