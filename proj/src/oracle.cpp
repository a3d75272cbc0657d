#include "ttp/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

#include "ttp/errors.hpp"

namespace ttp {
namespace {

constexpr long long kCostInf = std::numeric_limits<long long>::max() / 4;

// Chronological day-by-day DFS. Within a day, the lowest unpaired team is
// paired first, partners ascend, and for a pair (a,b) with a < b the
// orientation "a away at b" is tried before "b away at a" — matchings are
// generated in lexicographic order. Streak and no-repeat constraints prune
// during assembly; completed days are pruned against the incumbent via a
// per-team travel lower bound.
class Search {
 public:
  Search(const DistanceMatrix& m, int k, long long budget_ms, bool count_mode)
      : n_(m.size()),
        k_(k),
        days_(2 * (n_ - 1)),
        count_mode_(count_mode),
        budget_ms_(budget_ms),
        start_(std::chrono::steady_clock::now()) {
    w_ = scale_to_integers(m, scale_);
    min_edge_ = kCostInf;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j) min_edge_ = std::min(min_edge_, w_[i * n_ + j]);
    remaining_.assign(static_cast<size_t>(n_) * n_, 1);
    for (int i = 0; i < n_; ++i) remaining_[i * n_ + i] = 0;
    away_mask_.assign(n_, 0);
    for (int t = 0; t < n_; ++t)
      for (int v = 0; v < n_; ++v)
        if (v != t) away_mask_[t] |= 1u << v;
    build_path_table();
    venue_.resize(n_);
    std::iota(venue_.begin(), venue_.end(), 0);
    streak_home_.assign(n_, 0);
    streak_len_.assign(n_, 0);
    prev_opp_.assign(n_, -1);
    away_left_.assign(n_, n_ - 1);
    day_games_.assign(days_, {});
    day_opp_.assign(n_, -1);
    day_home_.assign(n_, 0);
  }

  void set_incumbent(long long cost, const Schedule& s) {
    incumbent_cost_ = cost;
    incumbent_ = s;
    has_incumbent_ = true;
  }

  void run() { search_day(0, 0); }

  long long incumbent_cost() const { return incumbent_cost_; }
  bool has_incumbent() const { return has_incumbent_; }
  const Schedule& incumbent() const { return incumbent_; }
  long long leaves() const { return leaves_; }
  bool timed_out() const { return timed_out_; }
  long long abandoned_min() const { return abandoned_min_; }
  long long scale() const { return scale_; }

 private:
  bool out_of_time() {
    if (budget_ms_ <= 0 || timed_out_) return timed_out_;
    if (++clock_probe_ % 8192 != 0) return false;
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start_)
                       .count();
    if (elapsed >= budget_ms_) timed_out_ = true;
    return timed_out_;
  }

  // Shortest path from cur through every venue of mask, ending at the
  // team's home, ignoring the streak structure. By the triangle inequality
  // any feasible continuation is at least this long.
  void build_path_table() {
    size_t masks = size_t{1} << n_;
    path_bound_.assign(static_cast<size_t>(n_) * n_ * masks, 0);
    auto at = [&](int t, int cur, size_t mask) -> long long& {
      return path_bound_[(static_cast<size_t>(t) * n_ + cur) * masks + mask];
    };
    for (int t = 0; t < n_; ++t)
      for (size_t mask = 0; mask < masks; ++mask) {
        if (mask & (size_t{1} << t)) continue;
        for (int cur = 0; cur < n_; ++cur) {
          if (mask == 0) {
            at(t, cur, mask) = w_[cur * n_ + t];
            continue;
          }
          long long best = kCostInf;
          for (int v = 0; v < n_; ++v)
            if (mask & (size_t{1} << v))
              best = std::min(best, w_[cur * n_ + v] +
                                        at(t, v, mask & ~(size_t{1} << v)));
          at(t, cur, mask) = best;
        }
      }
  }

  // Remaining-travel lower bound for one team. Every remaining away venue
  // needs an arrival whose predecessor is a venue the team can actually
  // occupy (its home, its current venue, or another remaining venue); each
  // away trip ends with a home arrival, and the streak cap k limits a trip
  // to k venues.
  long long team_bound(int t) const {
    int cur = venue_[t];
    bool at_home = cur == t;
    int r = away_left_[t];
    if (r == 0) return at_home ? 0 : w_[cur * n_ + t];
    size_t masks = size_t{1} << n_;
    long long path =
        path_bound_[(static_cast<size_t>(t) * n_ + cur) * masks +
                    away_mask_[t]];

    int cap = n_ - 1;
    int targets[8];
    int count = 0;
    for (int v = 0; v < n_ && count < cap; ++v)
      if (remaining_[t * n_ + v]) targets[count++] = v;

    long long arrivals = 0;
    long long min_home_in = kCostInf;
    for (int a = 0; a < count; ++a) {
      int v = targets[a];
      long long best = w_[t * n_ + v];  // from home
      if (!at_home) best = std::min(best, w_[cur * n_ + v]);
      for (int b = 0; b < count; ++b)
        if (b != a) best = std::min(best, w_[targets[b] * n_ + v]);
      arrivals += best;
      min_home_in = std::min(min_home_in, w_[v * n_ + t]);
    }
    if (!at_home) min_home_in = std::min(min_home_in, w_[cur * n_ + t]);

    long long trips;
    if (at_home) {
      trips = (r + k_ - 1) / k_;
    } else {
      int rest = r - (k_ - streak_len_[t]);  // capacity left in this trip
      trips = 1 + (rest > 0 ? (rest + k_ - 1) / k_ : 0);
    }

    long long bound = arrivals + trips * min_home_in;
    bound = std::max(bound, path);
    return bound;
  }

  long long lower_bound_remaining() const {
    long long lb = 0;
    for (int t = 0; t < n_; ++t) lb += team_bound(t);
    return lb;
  }

  void search_day(int day, long long cost) {
    if (day == days_) {
      ++leaves_;
      if (count_mode_) return;
      long long final_cost = cost;
      for (int t = 0; t < n_; ++t) final_cost += w_[venue_[t] * n_ + t];
      if (final_cost < incumbent_cost_) {
        incumbent_cost_ = final_cost;
        has_incumbent_ = true;
        incumbent_.n = n_;
        incumbent_.k = k_;
        incumbent_.days = day_games_;
      }
      return;
    }
    long long node_bound = 0;
    if (!count_mode_) {
      node_bound = cost + lower_bound_remaining();
      if (node_bound >= incumbent_cost_) return;
    }
    if (out_of_time()) {
      if (count_mode_)
        throw CapabilityError("enumeration exceeded its time budget");
      abandoned_min_ = std::min(abandoned_min_, node_bound);
      return;
    }
    extend_day(day, cost, 0, 0);
    if (timed_out_ && !count_mode_)
      abandoned_min_ = std::min(abandoned_min_, node_bound);
  }

  void assign(int away, int home) {
    remaining_[away * n_ + home] = 0;
    --away_left_[away];
    away_mask_[away] &= ~(1u << home);
    day_opp_[away] = home;
    day_opp_[home] = away;
    day_home_[away] = 0;
    day_home_[home] = 1;
  }

  void unassign(int away, int home) {
    remaining_[away * n_ + home] = 1;
    ++away_left_[away];
    away_mask_[away] |= 1u << home;
    day_opp_[away] = -1;
    day_opp_[home] = -1;
  }

  bool streak_ok(int t, bool home) const {
    return streak_len_[t] < k_ || (streak_home_[t] != 0) != home;
  }

  void try_pair(int day, long long cost, long long day_partial, int a, int b,
                bool a_home) {
    int away = a_home ? b : a;
    int home = a_home ? a : b;
    if (!remaining_[away * n_ + home]) return;
    if (prev_opp_[a] == b) return;  // no-repeat
    if (!streak_ok(away, false) || !streak_ok(home, true)) return;
    long long pair_cost =
        w_[venue_[away] * n_ + home] + w_[venue_[home] * n_ + home];
    if (!count_mode_ && cost + day_partial + pair_cost >= incumbent_cost_)
      return;
    assign(away, home);
    extend_day(day, cost, day_partial + pair_cost, a + 1);
    unassign(away, home);
  }

  void extend_day(int day, long long cost, long long day_partial, int from) {
    if (timed_out_) return;
    int a = from;
    while (a < n_ && day_opp_[a] != -1) ++a;
    if (a == n_) {
      commit_day(day, cost, day_partial);
      return;
    }
    for (int b = a + 1; b < n_; ++b) {
      if (day_opp_[b] != -1) continue;
      try_pair(day, cost, day_partial, a, b, false);  // game (a at b)
      if (timed_out_ && !count_mode_) return;
      try_pair(day, cost, day_partial, a, b, true);  // game (b at a)
      if (timed_out_ && !count_mode_) return;
    }
  }

  void commit_day(int day, long long cost, long long day_cost) {
    auto& games = day_games_[day];
    games.clear();
    for (int t = 0; t < n_; ++t)
      if (day_home_[t]) games.push_back({day_opp_[t], t});
    std::sort(games.begin(), games.end(), [](const Game& x, const Game& y) {
      return std::min(x.away, x.home) < std::min(y.away, y.home);
    });

    auto saved_venue = venue_;
    auto saved_streak_home = streak_home_;
    auto saved_streak_len = streak_len_;
    auto saved_prev = prev_opp_;
    for (int t = 0; t < n_; ++t) {
      bool home = day_home_[t] != 0;
      venue_[t] = home ? t : day_opp_[t];
      if (streak_len_[t] > 0 && (streak_home_[t] != 0) == home)
        ++streak_len_[t];
      else {
        streak_home_[t] = home ? 1 : 0;
        streak_len_[t] = 1;
      }
      prev_opp_[t] = day_opp_[t];
    }
    auto saved_day_opp = day_opp_;
    auto saved_day_home = day_home_;
    std::fill(day_opp_.begin(), day_opp_.end(), -1);

    search_day(day + 1, cost + day_cost);

    day_opp_ = saved_day_opp;
    day_home_ = saved_day_home;
    venue_ = saved_venue;
    streak_home_ = saved_streak_home;
    streak_len_ = saved_streak_len;
    prev_opp_ = saved_prev;
  }

  int n_, k_, days_;
  bool count_mode_;
  long long budget_ms_;
  std::chrono::steady_clock::time_point start_;
  long long scale_ = 1;
  std::vector<long long> w_;
  long long min_edge_;
  std::vector<char> remaining_;
  std::vector<unsigned> away_mask_;
  std::vector<long long> path_bound_;  // [t][cur][mask]
  std::vector<int> venue_;
  std::vector<char> streak_home_;
  std::vector<int> streak_len_;
  std::vector<int> prev_opp_;
  std::vector<int> away_left_;
  std::vector<std::vector<Game>> day_games_;
  std::vector<int> day_opp_;
  std::vector<char> day_home_;
  long long incumbent_cost_ = kCostInf;
  Schedule incumbent_;
  bool has_incumbent_ = false;
  long long leaves_ = 0;
  bool timed_out_ = false;
  long long abandoned_min_ = kCostInf;
  long long clock_probe_ = 0;
};

long long scaled_schedule_cost(const Schedule& s, const DistanceMatrix& m,
                               const std::vector<long long>& w) {
  int n = m.size();
  long long cost = 0;
  for (const Itinerary& it : itineraries(s, m))
    for (size_t i = 0; i + 1 < it.venues.size(); ++i)
      cost += w[it.venues[i] * n + it.venues[i + 1]];
  return cost;
}

}  // namespace

OracleResult exact_ttp(const DistanceMatrix& m, int k, long long budget_ms,
                       const Schedule* seed) {
  int n = m.size();
  if (n != 4 && n != 6)
    throw CapabilityError("exact TTP search supports n = 4 or 6 only");
  if (k < 1 || k >= n)
    throw DomainError("streak cap k must satisfy 1 <= k < n");

  Search search(m, k, budget_ms, false);
  if (seed != nullptr) {
    if (seed->n != n || !validate(*seed, k).ok())
      throw DomainError("incumbent seed is not a feasible schedule");
    long long scale = 1;
    auto w = scale_to_integers(m, scale);
    search.set_incumbent(scaled_schedule_cost(*seed, m, w), *seed);
  }
  search.run();

  OracleResult res;
  Rat scale(search.scale());
  if (search.timed_out()) {
    res.status = OracleResult::Status::timeout;
    long long lb = std::min(search.abandoned_min(), search.incumbent_cost());
    res.lower_bound = Rat(lb) / scale;
    if (search.has_incumbent()) {
      res.schedule = search.incumbent();
      res.best_cost = Rat(search.incumbent_cost()) / scale;
    }
    return res;
  }
  if (!search.has_incumbent()) {
    res.status = OracleResult::Status::infeasible;
    res.best_cost = Rat(0);
    res.lower_bound = Rat(0);
    return res;
  }
  res.status = OracleResult::Status::optimal;
  res.schedule = search.incumbent();
  res.best_cost = Rat(search.incumbent_cost()) / scale;
  res.lower_bound = res.best_cost;
  return res;
}

long long exhaustive_schedule_count(int n, int k) {
  if (n != 4)
    throw CapabilityError("exhaustive schedule counting supports n = 4 only");
  if (k < 1 || k >= n)
    throw DomainError("streak cap k must satisfy 1 <= k < n");
  DistanceMatrix m = generate_instance(InstanceKind::unit, n, 0);
  Search search(m, k, 0, true);
  search.run();
  return search.leaves();
}

}  // namespace ttp
