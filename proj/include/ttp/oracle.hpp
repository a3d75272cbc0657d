#pragma once

#include <optional>

#include "ttp/instance.hpp"
#include "ttp/schedule.hpp"

namespace ttp {

// Exhaustive day-by-day search over feasible double round-robins. Desk
// scale only (n = 4 or 6); the search is deterministic: days are filled
// chronologically, matchings tried in lexicographic order, and branches are
// pruned once their cost bound reaches the incumbent.
struct OracleResult {
  enum class Status { optimal, infeasible, timeout };
  Status status;
  std::optional<Schedule> schedule;  // best found (valid incumbent also on timeout)
  Rat best_cost;                     // meaningful unless infeasible
  Rat lower_bound;                   // valid lower bound on OPT, always
};

// `budget_ms` <= 0 disables the time limit. `seed` optionally provides a
// feasible schedule whose cost primes the incumbent; the returned optimum
// value is unaffected (the seed is validated first).
OracleResult exact_ttp(const DistanceMatrix& m, int k, long long budget_ms,
                       const Schedule* seed = nullptr);

// Number of feasible double round-robin schedules; n = 4 only.
long long exhaustive_schedule_count(int n, int k);

}  // namespace ttp
