#include "ttp/bounds.hpp"

#include <algorithm>

#include "ttp/errors.hpp"

namespace ttp {

BoundsReport lower_bounds(const DistanceMatrix& m, int k, int exact_limit) {
  int n = m.size();
  if (k < 2 || k >= n) throw DomainError("streak cap k must satisfy 2 <= k < n");
  BoundsReport rep;
  InstanceStats st = instance_stats(m);
  if (n <= exact_limit) {
    Tour t = exact_tour(m, exact_limit);
    rep.lb_tour = Rat(n) * t.length;
    rep.tour_exact = true;
  } else {
    // d(T*) >= (2/3) d(T) for the Christofides tour
    Tour t = christofides(m);
    rep.lb_tour = Rat(n) * t.length * Rat(2, 3);
    rep.tour_exact = false;
  }
  rep.lb_delta_k = Rat(2) * st.delta / Rat(k);
  rep.lb_delta_n = Rat(4) * st.delta / Rat(n);
  rep.lb = std::max({rep.lb_tour, rep.lb_delta_k, rep.lb_delta_n});
  rep.ratio_cap = k >= n / 2 ? Rat(4) : Rat(5);
  return rep;
}

Rat analyzed_upper_bound(const DistanceMatrix& m, int k, const Tour& tour) {
  int n = m.size();
  if (static_cast<int>(tour.order.size()) != n)
    throw DomainError("tour does not span the instance");
  InstanceStats st = instance_stats(m);
  Rat bound = Rat(10, n) * st.delta +
              (Rat(1) - Rat(1, k)) * Rat(n) * tour.length;
  if (k < n / 2) bound += Rat(2, k) * st.delta;
  return bound;
}

BoundsReport certify(const DistanceMatrix& m, int k, const SolveResult& sol,
                     int exact_limit) {
  int n = m.size();
  if (sol.schedule.n != n)
    throw DomainError("solver output does not match the instance");
  if (sol.schedule.k != k)
    throw DomainError("solver output was computed for a different k");
  Rat recomputed = total_cost(sol.schedule, m);
  if (recomputed != sol.cost)
    throw DomainError("solver output cost does not match this instance");

  BoundsReport rep = lower_bounds(m, k, exact_limit);
  rep.ub_analyzed = analyzed_upper_bound(m, k, sol.tour);
  rep.realized_cost = sol.cost;
  rep.ub_holds = sol.cost <= rep.ub_analyzed;
  if (rep.lb > Rat(0)) {
    rep.certified_ratio = sol.cost / rep.lb;
    rep.ratio_holds = *rep.certified_ratio <= rep.ratio_cap;
  } else {
    // degenerate all-zero metric: cost must be zero as well
    rep.ratio_holds = sol.cost == Rat(0);
  }
  return rep;
}

}  // namespace ttp
