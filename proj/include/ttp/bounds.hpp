#pragma once

#include <optional>

#include "ttp/construction.hpp"
#include "ttp/instance.hpp"
#include "ttp/rational.hpp"
#include "ttp/tour.hpp"

namespace ttp {

// Lower bounds, the analyzed upper bound, and the certified ratio for one
// instance. lb_tour is n*d(T*) when the exact tour fits under the limit,
// otherwise the sound surrogate n*(2/3)*d(T_christofides).
struct BoundsReport {
  Rat lb_tour;
  Rat lb_delta_k;  // 2*delta/k
  Rat lb_delta_n;  // 4*delta/n
  Rat lb;          // max of the three
  bool tour_exact = false;
  Rat ub_analyzed;
  std::optional<Rat> realized_cost;
  std::optional<Rat> certified_ratio;  // realized_cost / lb when lb > 0
  bool ub_holds = true;     // realized_cost <= ub_analyzed
  bool ratio_holds = true;  // ratio <= 5 (or <= 4 when k >= n/2)
  Rat ratio_cap;            // 5 or 4, the certified guarantee
};

// Lower-bound fragment only (no solver run).
BoundsReport lower_bounds(const DistanceMatrix& m, int k,
                          int exact_limit = kDefaultExactTourLimit);

// (10/n)delta + (2/k)delta + (1-1/k)*n*d(T) for k < n/2;
// (10/n)delta + (1-1/k)*n*d(T) for k >= n/2.
Rat analyzed_upper_bound(const DistanceMatrix& m, int k, const Tour& tour);

// Full report for a solver output on the same instance and k. Throws
// DomainError on a cross-instance mismatch. ub_holds and ratio_holds record
// the two assertions; callers decide how hard to fail.
BoundsReport certify(const DistanceMatrix& m, int k, const SolveResult& sol,
                     int exact_limit = kDefaultExactTourLimit);

}  // namespace ttp
