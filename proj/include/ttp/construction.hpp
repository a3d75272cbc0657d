#pragma once

#include <vector>

#include "ttp/instance.hpp"
#include "ttp/labeling.hpp"
#include "ttp/schedule.hpp"
#include "ttp/tour.hpp"

namespace ttp {

// Partition of the m per-day edges into direction blocks: widths
// (1, w_2, k, ..., k, l). The two-block degenerate case (m-l-1 = 0) has
// widths (1, m-1). The leftmost edge of block 2 is reversed all season
// exactly when the second block is k wide.
struct BlockLayout {
  int m = 0;
  int k = 0;
  int l = 0;
  int b = 0;
  std::vector<int> widths;
  bool rule1_reversal = false;

  // 1-based block index of a 1-based position
  int block_of_position(int pos) const;
  // first and last 1-based positions of a 1-based block
  int block_first(int block) const;
  int block_last(int block) const;
};

BlockLayout block_layout(int m, int k, int l);

// Day pairing of the rotation scheme, in label space. phi(x) = x*m mod
// (n-1), mapped into 1..n-1: position 1 pairs label n with phi(j), position
// i >= 2 pairs upper phi(j+i-1) with lower phi(j-i+1). Labels at position i
// differ by i-1 modulo n-1.
struct DaySlot {
  int upper;  // for position 1: label n (the hub)
  int lower;  // for position 1: the hub's opponent
};
std::vector<DaySlot> day_pairing(int n, int day);

// Season-1 venue orientations. Position 1 alternates hub-away/hub-home in
// maximal runs of k days, with day 1 additionally flipped when
// r = (n-1) mod 2k satisfies r <= k < n-1. Positions inside one block share
// their orientation on every day, except the leftmost edge of block 2 when
// rule1_reversal holds.
struct DirectionPlan {
  int n = 0;
  int k = 0;
  int r = 0;
  bool rule2_day1_reversal = false;
  BlockLayout layout;

  bool hub_away_baseline(int day) const {
    return ((day - 1) / k) % 2 == 0;
  }
  bool hub_away(int day) const {
    bool away = hub_away_baseline(day);
    if (day == 1 && rule2_day1_reversal) away = !away;
    return away;
  }
  // orientation of positions >= 2; true means the upper team travels
  bool upper_away(int pos) const {
    bool away = layout.block_of_position(pos) % 2 == 0;
    if (layout.rule1_reversal && pos == 2) away = !away;
    return away;
  }
};

DirectionPlan direction_plan(int n, int k, const BlockLayout& layout);

// CONS(sigma, l): rotation-scheme season 1 with the direction rules above;
// season 2 replays the matchings with venues swapped in day order
// n-2, n-1, 1, 2, ..., n-3. Re-validates its own output and throws
// ConstructionDefect if the feasibility theorem were ever violated.
Schedule cons(const DistanceMatrix& m, const Labeling& lab, int k, int l);

// The prior construction: identical except the day-1 special-case reversal
// of the hub edge is never applied. May violate bounded-by-k; no internal
// feasibility assertion.
Schedule flawed_cons(const DistanceMatrix& m, const Labeling& lab, int k,
                     int l);

// Travel-cost accounting under the two analysis assumptions: a home day
// between the seasons, the hub returning home after every game, and each
// hub opponent leaving from home. The augmented total dominates the real
// schedule cost and is what the analyzed upper bound counts.
struct MoveDecomposition {
  struct Totals {
    long long away_moves = 0;
    long long home_moves = 0;
    Rat away_cost;
    Rat home_cost;
    Rat cost() const { return away_cost + home_cost; }
  };
  Totals season1, season2;
  // transition t sits between consecutive anchors of the augmented season
  // (start home, game days, mid home day, final home); 2n transitions
  std::vector<Totals> transitions;
  Rat total() const { return season1.cost() + season2.cost(); }
};

MoveDecomposition move_decomposition(const Schedule& s,
                                     const DistanceMatrix& m,
                                     const Labeling& lab,
                                     const BlockLayout& layout);

struct CandidateResult {
  int labeling_index;
  int l;
  Rat cost;
};

struct SolveResult {
  Schedule schedule;
  Labeling labeling;
  int labeling_index = 0;
  int l = 0;
  BlockLayout layout;
  Rat cost;
  Tour tour;
  int hub = 0;
  std::vector<CandidateResult> candidates;  // filled on request
};

struct SolveOptions {
  bool collect_candidates = false;
  MatchingMode matching = MatchingMode::exact;
};

// Derandomized solver: builds the Christofides tour, enumerates all n-1
// labelings x candidate l values, constructs every schedule and returns the
// cheapest. Ties break on (labeling index, l). The candidate loop fans out
// with OpenMP; solve_serial is the plain-loop reference used by tests and
// the benchmark.
SolveResult solve(const DistanceMatrix& m, int k, const SolveOptions& = {});
SolveResult solve_serial(const DistanceMatrix& m, int k,
                         const SolveOptions& = {});

}  // namespace ttp
