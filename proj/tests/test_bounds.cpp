#include <doctest.h>

#include <numeric>
#include <sstream>
#include <tuple>

#include "ttp/bounds.hpp"
#include "ttp/errors.hpp"

using namespace ttp;

namespace {

Labeling identity_labeling(int n) {
  Labeling lab;
  lab.hub = n - 1;
  lab.order.resize(n - 1);
  std::iota(lab.order.begin(), lab.order.end(), 0);
  return lab;
}

}  // namespace

TEST_CASE("analyzed upper bound on the unit n=20 instance") {
  DistanceMatrix m = generate_instance(InstanceKind::unit, 20, 0);
  Tour t = christofides(m);
  REQUIRE(t.length == Rat(20));
  // (10/20)*380 + (2/4)*380 + (3/4)*20*20 = 190 + 190 + 300
  CHECK(analyzed_upper_bound(m, 4, t) == Rat(680));
}

TEST_CASE("upper bound switches branch exactly at k = n/2") {
  DistanceMatrix m = generate_instance(InstanceKind::unit, 8, 0);
  Tour t = christofides(m);
  // k = 3 < n/2: includes the (2/k)delta term
  CHECK(analyzed_upper_bound(m, 3, t) ==
        Rat(10, 8) * Rat(56) + Rat(2, 3) * Rat(56) + Rat(2, 3) * Rat(64));
  // k = 4 = n/2: second branch
  CHECK(analyzed_upper_bound(m, 4, t) ==
        Rat(10, 8) * Rat(56) + Rat(3, 4) * Rat(64));
}

TEST_CASE("upper bound on the all-zero metric is zero") {
  DistanceMatrix m =
      DistanceMatrix::from_entries(6, std::vector<Rat>(36, Rat(0)));
  CHECK(analyzed_upper_bound(m, 3, christofides(m)) == Rat(0));
}

TEST_CASE("lower bounds on unit n=20 with the exact tour") {
  DistanceMatrix m = generate_instance(InstanceKind::unit, 20, 0);
  BoundsReport rep = lower_bounds(m, 4, 20);  // raise the limit: d(T*) = 20
  CHECK(rep.lb_tour == Rat(400));
  CHECK(rep.lb_delta_k == Rat(190));
  CHECK(rep.lb_delta_n == Rat(76));
  CHECK(rep.lb == Rat(400));
  CHECK(rep.tour_exact);
}

TEST_CASE("lower bounds fall back to the 2/3 surrogate above the limit") {
  DistanceMatrix m = generate_instance(InstanceKind::unit, 20, 0);
  BoundsReport rep = lower_bounds(m, 4, 16);
  CHECK_FALSE(rep.tour_exact);
  CHECK(rep.lb_tour == Rat(2, 3) * Rat(20) * Rat(20));
  // the surrogate stays a valid lower bound on n*d(T*) = 400
  CHECK(rep.lb_tour <= Rat(400));
}

TEST_CASE("exact tour lower bound dominates the surrogate") {
  DistanceMatrix m = generate_instance(InstanceKind::euclidean_random, 12, 1);
  BoundsReport exact = lower_bounds(m, 3, 16);
  Tour heur = christofides(m);
  Rat surrogate = Rat(12) * heur.length * Rat(2, 3);
  CHECK(exact.tour_exact);
  CHECK(exact.lb_tour >= surrogate);
}

TEST_CASE("all-zero metric yields all-zero bounds") {
  DistanceMatrix m =
      DistanceMatrix::from_entries(6, std::vector<Rat>(36, Rat(0)));
  BoundsReport rep = lower_bounds(m, 3);
  CHECK(rep.lb_tour == Rat(0));
  CHECK(rep.lb_delta_k == Rat(0));
  CHECK(rep.lb_delta_n == Rat(0));
  CHECK(rep.lb == Rat(0));
}

TEST_CASE("certify asserts the bound and the ratio cap") {
  DistanceMatrix m = generate_instance(InstanceKind::unit, 8, 0);
  SolveResult sol = solve(m, 3);
  BoundsReport rep = certify(m, 3, sol);
  CHECK(rep.ub_holds);
  CHECK(rep.ratio_holds);
  CHECK(rep.ratio_cap == Rat(5));
  REQUIRE(rep.certified_ratio.has_value());
  CHECK(*rep.certified_ratio <= Rat(5));

  SolveResult sol2 = solve(m, 4);  // k = n/2: cap tightens to 4
  BoundsReport rep2 = certify(m, 4, sol2);
  CHECK(rep2.ratio_cap == Rat(4));
  CHECK(rep2.ratio_holds);
}

TEST_CASE("certify rejects cross-instance mismatches") {
  DistanceMatrix a = generate_instance(InstanceKind::unit, 8, 0);
  DistanceMatrix b = generate_instance(InstanceKind::euclidean_random, 8, 1);
  DistanceMatrix c = generate_instance(InstanceKind::unit, 10, 0);
  SolveResult sol = solve(a, 3);
  CHECK_THROWS_AS(certify(b, 3, sol), DomainError);
  CHECK_THROWS_AS(certify(c, 3, sol), DomainError);
  CHECK_THROWS_AS(certify(a, 4, sol), DomainError);
}

TEST_CASE("certify on the all-zero metric") {
  DistanceMatrix m =
      DistanceMatrix::from_entries(6, std::vector<Rat>(36, Rat(0)));
  SolveResult sol = solve(m, 3);
  BoundsReport rep = certify(m, 3, sol);
  CHECK(rep.ub_holds);
  CHECK(rep.ratio_holds);
  CHECK_FALSE(rep.certified_ratio.has_value());
}

// Expectation identities over the n-1 enumerated labelings with l fixed:
// exact rational arithmetic throughout.
TEST_CASE("labeling-average identities hold exactly") {
  for (auto [kind, n, seed] :
       {std::tuple{InstanceKind::circle, 10, 0ULL},
        std::tuple{InstanceKind::euclidean_random, 8, 2ULL},
        std::tuple{InstanceKind::euclidean_random, 12, 7ULL}}) {
    DistanceMatrix m = generate_instance(kind, n, seed);
    InstanceStats st = instance_stats(m);
    Tour t = christofides(m);
    int hub = select_hub(m, t);
    auto labelings = enumerate_labelings(shortcut_tour(t, hub), hub);
    REQUIRE(static_cast<int>(labelings.size()) == n - 1);
    int k = 3, l = candidate_ls(n, k).front();
    Rat dTprime = reduced_cycle_length(m, labelings[0]);

    std::vector<Schedule> schedules;
    for (const Labeling& lab : labelings) schedules.push_back(cons(m, lab, k, l));

    int days = 2 * (n - 1);
    for (int day = 0; day < days; ++day) {
      Rat day_sum(0), d1_sum(0), d2_sum(0);
      for (const Schedule& s : schedules) {
        for (const Game& g : s.days[day]) day_sum += m(g.away, g.home);
        const Game& g1 = s.days[day][0];
        d1_sum += m(g1.away, g1.home);
        const Game& g2 = s.days[day][1];
        d2_sum += m(g2.away, g2.home);
      }
      // mean day sum = delta / (2(n-1))  <=>  sum over n-1 labelings = delta/2
      CHECK(day_sum == st.delta / Rat(2));
      // mean d_2 = d(T') / (n-1)
      CHECK(d2_sum == dTprime);
      // mean d_1 <= delta / (n(n-1))
      CHECK(d1_sum <= st.delta / Rat(n));
      // mean d_i <= 2 mean d_1 for every position
      for (int pos = 0; pos < n / 2; ++pos) {
        Rat di_sum(0);
        for (const Schedule& s : schedules) {
          const Game& g = s.days[day][pos];
          di_sum += m(g.away, g.home);
        }
        CHECK(di_sum <= Rat(2) * d1_sum);
      }
    }
  }
}
