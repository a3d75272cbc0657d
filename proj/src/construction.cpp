#include "ttp/construction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "ttp/errors.hpp"

namespace ttp {
namespace {

// label at rotation offset x, mapped into 1..n-1
int phi(int n, long long x) {
  int mod = n - 1;
  long long v = ((x * (n / 2)) % mod + mod) % mod;
  return v == 0 ? mod : static_cast<int>(v);
}

Schedule build(const DistanceMatrix& m, const Labeling& lab, int k, int l,
               bool apply_day1_special) {
  int n = m.size();
  if (lab.n() != n)
    throw DomainError("labeling does not match the instance size");
  if (k < 2 || k >= n) throw DomainError("streak cap k must satisfy 2 <= k < n");
  BlockLayout layout = block_layout(n / 2, k, l);
  DirectionPlan plan = direction_plan(n, k, layout);
  if (!apply_day1_special) plan.rule2_day1_reversal = false;

  Schedule s;
  s.n = n;
  s.k = k;
  s.days.resize(2 * (n - 1));
  for (int day = 1; day <= n - 1; ++day) {
    auto slots = day_pairing(n, day);
    auto& games = s.days[day - 1];
    games.reserve(n / 2);
    for (int pos = 1; pos <= n / 2; ++pos) {
      int a = lab.team_of_label(slots[pos - 1].upper);
      int b = lab.team_of_label(slots[pos - 1].lower);
      bool first_away =
          pos == 1 ? plan.hub_away(day) : plan.upper_away(pos);
      games.push_back(first_away ? Game{a, b} : Game{b, a});
    }
  }
  // second season: venues swapped, day order n-2, n-1, 1, 2, ..., n-3
  for (int t = 1; t <= n - 1; ++t) {
    int src = t == 1 ? n - 2 : (t == 2 ? n - 1 : t - 2);
    auto& games = s.days[n - 2 + t];
    games.reserve(n / 2);
    for (const Game& g : s.days[src - 1]) games.push_back({g.home, g.away});
  }
  return s;
}

}  // namespace

int BlockLayout::block_of_position(int pos) const {
  int acc = 0;
  for (int i = 0; i < b; ++i) {
    acc += widths[i];
    if (pos <= acc) return i + 1;
  }
  throw DomainError("position out of range");
}

int BlockLayout::block_first(int block) const {
  int acc = 0;
  for (int i = 0; i < block - 1; ++i) acc += widths[i];
  return acc + 1;
}

int BlockLayout::block_last(int block) const {
  return block_first(block) + widths[block - 1] - 1;
}

BlockLayout block_layout(int m, int k, int l) {
  if (k < 2) throw DomainError("streak cap k must be at least 2");
  if (l < 1 || l > std::min(k, m - 1))
    throw DomainError("last-block width l must satisfy 1 <= l <= min(k, m-1)");
  BlockLayout lay;
  lay.m = m;
  lay.k = k;
  lay.l = l;
  if (m - l - 1 == 0) {
    lay.b = 2;
    lay.widths = {1, m - 1};
  } else {
    lay.b = (m - l - 1 + k - 1) / k + 2;
    int w2 = m - 1 - (lay.b - 3) * k - l;
    lay.widths.push_back(1);
    lay.widths.push_back(w2);
    for (int i = 3; i <= lay.b - 1; ++i) lay.widths.push_back(k);
    lay.widths.push_back(l);
  }
  lay.rule1_reversal = lay.widths[1] == k;
  int sum = std::accumulate(lay.widths.begin(), lay.widths.end(), 0);
  if (sum != m) throw ConstructionDefect("block widths do not cover the day");
  return lay;
}

std::vector<DaySlot> day_pairing(int n, int day) {
  if (day < 1 || day > n - 1)
    throw DomainError("day must be in 1.." + std::to_string(n - 1));
  int m = n / 2;
  std::vector<DaySlot> slots;
  slots.reserve(m);
  slots.push_back({n, phi(n, day)});
  for (int i = 2; i <= m; ++i)
    slots.push_back({phi(n, day + i - 1), phi(n, day - i + 1)});
  return slots;
}

DirectionPlan direction_plan(int n, int k, const BlockLayout& layout) {
  if (k < 2 || k >= n) throw DomainError("streak cap k must satisfy 2 <= k < n");
  DirectionPlan plan;
  plan.n = n;
  plan.k = k;
  plan.r = (n - 1) % (2 * k);
  plan.rule2_day1_reversal = plan.r <= k && k < n - 1;
  plan.layout = layout;
  return plan;
}

Schedule cons(const DistanceMatrix& m, const Labeling& lab, int k, int l) {
  Schedule s = build(m, lab, k, l, true);
  ValidationReport rep = validate(s, k);
  if (!rep.ok()) {
    std::ostringstream msg;
    msg << "construction produced an infeasible schedule (n=" << s.n
        << ", k=" << k << ", l=" << l << "):";
    for (const auto& v : rep.violations) msg << " " << v.detail << ";";
    throw ConstructionDefect(msg.str());
  }
  return s;
}

Schedule flawed_cons(const DistanceMatrix& m, const Labeling& lab, int k,
                     int l) {
  return build(m, lab, k, l, false);
}

MoveDecomposition move_decomposition(const Schedule& s,
                                     const DistanceMatrix& m,
                                     const Labeling& lab,
                                     const BlockLayout& layout) {
  int n = s.n;
  if (lab.n() != n || m.size() != n || layout.m != n / 2)
    throw DomainError("schedule, labeling and layout sizes disagree");
  // the schedule must carry the rotation-scheme pairings of this labeling
  for (int day = 1; day <= n - 1; ++day) {
    auto slots = day_pairing(n, day);
    for (int pos = 1; pos <= n / 2; ++pos) {
      int a = lab.team_of_label(slots[pos - 1].upper);
      int b = lab.team_of_label(slots[pos - 1].lower);
      const Game& g = s.days[day - 1][pos - 1];
      if (!((g.away == a && g.home == b) || (g.away == b && g.home == a)))
        throw DomainError(
            "schedule was not produced by the construction for this "
            "labeling");
    }
  }

  int days = s.day_count();
  int transitions = days + 2;  // start->g1, between games, around the home
                               // day, last game->end
  MoveDecomposition dec;
  dec.transitions.assign(transitions, {});

  // anchor index of game day j (1-based) in the augmented sequence; anchor 0
  // is the start home, anchor n is the inserted home day
  auto anchor_of_day = [&](int j) { return j <= n - 1 ? j : j + 1; };
  auto hub_opponent_day = [&](int t) {
    std::vector<int> ds;
    for (int j = 1; j <= days; ++j)
      for (const Game& g : s.days[j - 1])
        if ((g.away == lab.hub && g.home == t) ||
            (g.home == lab.hub && g.away == t))
          ds.push_back(j);
    return ds;
  };

  auto its = itineraries(s, m);
  for (int t = 0; t < n; ++t) {
    // anchor venues: start home, games of season 1, home day, games of
    // season 2, final home
    std::vector<int> anchors;
    anchors.reserve(days + 3);
    anchors.push_back(t);
    for (int j = 1; j <= n - 1; ++j) anchors.push_back(its[t].venues[j]);
    anchors.push_back(t);
    for (int j = n; j <= days; ++j) anchors.push_back(its[t].venues[j]);
    anchors.push_back(t);

    // home insertions from the hub assumption: the hub returns home after
    // every game; its opponent is forced home both before and after their
    // meeting
    std::vector<std::vector<int>> inserted(transitions);
    if (t == lab.hub) {
      for (int j = 1; j <= days; ++j) inserted[anchor_of_day(j)].push_back(t);
    } else {
      for (int j : hub_opponent_day(t)) {
        inserted[anchor_of_day(j) - 1].push_back(t);
        inserted[anchor_of_day(j)].push_back(t);
      }
    }

    for (int tr = 0; tr < transitions; ++tr) {
      std::vector<int> pts;
      pts.push_back(anchors[tr]);
      for (int v : inserted[tr]) pts.push_back(v);
      pts.push_back(anchors[tr + 1]);
      auto& bucket = dec.transitions[tr];
      auto& season = tr < n ? dec.season1 : dec.season2;
      for (size_t i = 0; i + 1 < pts.size(); ++i) {
        int u = pts[i], v = pts[i + 1];
        if (u == v) continue;
        Rat c = m(u, v);
        if (u == t || v == t) {
          ++bucket.home_moves;
          bucket.home_cost += c;
          ++season.home_moves;
          season.home_cost += c;
        } else {
          ++bucket.away_moves;
          bucket.away_cost += c;
          ++season.away_moves;
          season.away_cost += c;
        }
      }
    }
  }
  return dec;
}

namespace {

struct Candidate {
  int labeling_index;
  int l;
};

SolveResult solve_impl(const DistanceMatrix& m, int k, const SolveOptions& opt,
                       bool parallel) {
  int n = m.size();
  if (k < 2 || k >= n) throw DomainError("streak cap k must satisfy 2 <= k < n");
  SolveResult res;
  res.tour = christofides(m, opt.matching);
  res.hub = select_hub(m, res.tour);
  auto reduced = shortcut_tour(res.tour, res.hub);
  auto labelings = enumerate_labelings(reduced, res.hub);
  auto ls = candidate_ls(n, k);

  std::vector<Candidate> cands;
  cands.reserve(labelings.size() * ls.size());
  for (int a = 0; a < static_cast<int>(labelings.size()); ++a)
    for (int l : ls) cands.push_back({a, l});

  std::vector<Rat> costs(cands.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
    try {
      Schedule s = cons(m, labelings[cands[i].labeling_index], k, cands[i].l);
      costs[i] = total_cost(s, m);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  // deterministic reduction: cheapest cost, then lowest labeling start
  // index, then lowest l
  int best = 0;
  for (int i = 1; i < static_cast<int>(cands.size()); ++i) {
    if (costs[i] < costs[best] ||
        (costs[i] == costs[best] &&
         std::tie(cands[i].labeling_index, cands[i].l) <
             std::tie(cands[best].labeling_index, cands[best].l)))
      best = i;
  }
  res.labeling_index = cands[best].labeling_index;
  res.labeling = labelings[res.labeling_index];
  res.l = cands[best].l;
  res.layout = block_layout(n / 2, k, res.l);
  res.schedule = cons(m, res.labeling, k, res.l);
  res.cost = costs[best];
  if (opt.collect_candidates) {
    res.candidates.reserve(cands.size());
    for (size_t i = 0; i < cands.size(); ++i)
      res.candidates.push_back(
          {cands[i].labeling_index, cands[i].l, costs[i]});
  }
  return res;
}

}  // namespace

SolveResult solve(const DistanceMatrix& m, int k, const SolveOptions& opt) {
  return solve_impl(m, k, opt, true);
}

SolveResult solve_serial(const DistanceMatrix& m, int k,
                         const SolveOptions& opt) {
  return solve_impl(m, k, opt, false);
}

}  // namespace ttp
