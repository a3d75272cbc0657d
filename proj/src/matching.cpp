#include "ttp/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <tuple>

#include "ttp/errors.hpp"

namespace ttp {
namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Primal-dual (Edmonds) maximum-weight matching with blossom shrinking,
// O(n^3). Indices 1..n are real vertices, n+1..2n blossoms. Duals are kept
// in doubled scale so every adjustment stays integral for even edge
// weights; the driver below scales inputs accordingly.
class Blossom {
 public:
  explicit Blossom(int n) : n_(n), n_x_(n) {
    int cap = 2 * n + 1;
    g_.assign(cap, std::vector<E>(cap));
    for (int u = 0; u < cap; ++u)
      for (int v = 0; v < cap; ++v) g_[u][v] = {u, v, 0};
    lab_.assign(cap, 0);
    match_.assign(cap, 0);
    slack_.assign(cap, 0);
    st_.assign(cap, 0);
    pa_.assign(cap, 0);
    s_.assign(cap, -1);
    vis_.assign(cap, 0);
    flower_.assign(cap, {});
    flower_from_.assign(cap, std::vector<int>(n + 1, 0));
  }

  void set_weight(int u, int v, long long w) {
    g_[u][v].w = w;
    g_[v][u].w = w;
  }

  // Runs augmentation phases until no augmenting path improves the weight.
  // With weights that make perfect matchings dominate, the result is a
  // maximum-weight perfect matching.
  std::vector<int> run() {
    std::iota(st_.begin(), st_.begin() + n_ + 1, 0);
    long long w_max = 0;
    for (int u = 1; u <= n_; ++u) {
      flower_from_[u][u] = u;
      for (int v = 1; v <= n_; ++v) w_max = std::max(w_max, g_[u][v].w);
    }
    for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
    while (matching()) {
    }
    return match_;
  }

 private:
  struct E {
    int u, v;
    long long w;
  };

  long long e_delta(const E& e) const {
    return lab_[e.u] + lab_[e.v] - g_[e.u][e.v].w * 2;
  }

  void update_slack(int u, int x) {
    if (!slack_[x] || e_delta(g_[u][x]) < e_delta(g_[slack_[x]][x]))
      slack_[x] = u;
  }

  void set_slack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; ++u)
      if (g_[u][x].w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
  }

  void q_push(int x) {
    if (x <= n_) {
      q_.push_back(x);
    } else {
      for (int i : flower_[x]) q_push(i);
    }
  }

  void set_st(int x, int b) {
    st_[x] = b;
    if (x > n_)
      for (int i : flower_[x]) set_st(i, b);
  }

  // Position of sub-blossom xr inside b, normalized to an even index by
  // reversing the cycle (legal because flower_[b][0] stays the base).
  int get_pr(int b, int xr) {
    int pr = static_cast<int>(std::find(flower_[b].begin(), flower_[b].end(),
                                        xr) -
                              flower_[b].begin());
    if (pr % 2 == 1) {
      std::reverse(flower_[b].begin() + 1, flower_[b].end());
      return static_cast<int>(flower_[b].size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    match_[u] = g_[u][v].v;
    if (u <= n_) return;
    E e = g_[u][v];
    int xr = flower_from_[u][e.u];
    int pr = get_pr(u, xr);
    for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
    set_match(xr, v);
    std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
  }

  void augment(int u, int v) {
    while (true) {
      int xnv = st_[match_[u]];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st_[pa_[xnv]]);
      u = st_[pa_[xnv]];
      v = xnv;
    }
  }

  int get_lca(int u, int v) {
    for (++t_; u || v; std::swap(u, v)) {
      if (u == 0) continue;
      if (vis_[u] == t_) return u;
      vis_[u] = t_;
      u = st_[match_[u]];
      if (u) u = st_[pa_[u]];
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[b]) ++b;
    if (b > n_x_) ++n_x_;
    lab_[b] = 0;
    s_[b] = 0;
    match_[b] = match_[lca];
    flower_[b].clear();
    flower_[b].push_back(lca);
    for (int x = u, y; x != lca; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      flower_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    std::reverse(flower_[b].begin() + 1, flower_[b].end());
    for (int x = v, y; x != lca; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      flower_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) g_[b][x].w = g_[x][b].w = 0;
    for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
    for (int xs : flower_[b]) {
      for (int x = 1; x <= n_x_; ++x)
        if (g_[b][x].w == 0 || e_delta(g_[xs][x]) < e_delta(g_[b][x])) {
          g_[b][x] = g_[xs][x];
          g_[x][b] = g_[x][xs];
        }
      for (int x = 1; x <= n_; ++x)
        if (flower_from_[xs][x]) flower_from_[b][x] = xs;
    }
    set_slack(b);
  }

  // Expands an inner blossom whose dual reached zero. The tree enters at
  // sub-blossom xr (even cycle position); the path xr -> base alternates
  // inner/outer, everything past xr becomes free.
  void expand_blossom(int b) {
    for (int i : flower_[b]) set_st(i, i);
    int xr = flower_from_[b][g_[b][pa_[b]].u];
    int pr = get_pr(b, xr);
    s_[xr] = 1;
    pa_[xr] = pa_[b];
    slack_[xr] = 0;
    for (int j = pr - 1; j >= 1; j -= 2) {
      int outer_node = flower_[b][j];
      int inner_node = flower_[b][j - 1];
      s_[outer_node] = 0;
      slack_[outer_node] = 0;
      q_push(outer_node);
      s_[inner_node] = 1;
      slack_[inner_node] = 0;
      pa_[inner_node] = g_[outer_node][inner_node].u;
    }
    for (int j = pr + 1; j < static_cast<int>(flower_[b].size()); ++j) {
      s_[flower_[b][j]] = -1;
      set_slack(flower_[b][j]);
    }
    st_[b] = 0;
  }

  bool on_found_edge(const E& e) {
    int u = st_[e.u], v = st_[e.v];
    if (s_[v] == -1) {
      pa_[v] = e.u;
      s_[v] = 1;
      int nu = st_[match_[v]];
      slack_[v] = slack_[nu] = 0;
      s_[nu] = 0;
      q_push(nu);
    } else if (s_[v] == 0) {
      int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  bool matching() {
    std::fill(s_.begin(), s_.begin() + n_x_ + 1, -1);
    std::fill(slack_.begin(), slack_.begin() + n_x_ + 1, 0);
    q_.clear();
    for (int x = 1; x <= n_x_; ++x)
      if (st_[x] == x && !match_[x]) {
        pa_[x] = 0;
        s_[x] = 0;
        q_push(x);
      }
    if (q_.empty()) return false;
    long long rounds = 0;
    while (true) {
      while (!q_.empty()) {
        int u = q_.front();
        q_.pop_front();
        if (s_[st_[u]] == 1) continue;
        for (int v = 1; v <= n_; ++v)
          if (g_[u][v].w > 0 && st_[u] != st_[v]) {
            if (e_delta(g_[u][v]) == 0) {
              if (on_found_edge(g_[u][v])) return true;
            } else {
              update_slack(u, st_[v]);
            }
          }
      }
      long long d = kInf;
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x]) {
          if (s_[x] == -1)
            d = std::min(d, e_delta(g_[slack_[x]][x]));
          else if (s_[x] == 0)
            d = std::min(d, e_delta(g_[slack_[x]][x]) / 2);
        }
      // d == 0 is a null adjustment that only triggers pending blossom
      // expansions; genuine stalls would show as a negative or unbounded d.
      if (d < 0 || d >= kInf || ++rounds > 64 * n_ * n_ + 256)
        throw Error("blossom matching: dual adjustment stalled");
      for (int u = 1; u <= n_; ++u) {
        if (s_[st_[u]] == 0) {
          if (lab_[u] <= d) return false;
          lab_[u] -= d;
        } else if (s_[st_[u]] == 1) {
          lab_[u] += d;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b) {
          if (s_[b] == 0)
            lab_[b] += d * 2;
          else if (s_[b] == 1)
            lab_[b] -= d * 2;
        }
      q_.clear();
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
            e_delta(g_[slack_[x]][x]) == 0)
          if (on_found_edge(g_[slack_[x]][x])) return true;
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
    }
  }

  int n_;
  int n_x_;
  std::vector<std::vector<E>> g_;
  std::vector<long long> lab_;
  std::vector<int> match_, slack_, st_, pa_, s_, vis_;
  std::vector<std::vector<int>> flower_;
  std::vector<std::vector<int>> flower_from_;
  std::deque<int> q_;
  int t_ = 0;
};

}  // namespace

std::vector<int> min_weight_perfect_matching(
    int n, const std::vector<long long>& weights) {
  if (n <= 0 || n % 2 != 0)
    throw DomainError("perfect matching needs a positive even vertex count");
  if (n > 512)
    throw CapabilityError("exact matching limited to 512 vertices");
  if (weights.size() != static_cast<size_t>(n) * n)
    throw DomainError("weight matrix must be n*n");
  long long w_max = 0;
  for (long long w : weights) {
    if (w < 0) throw DomainError("matching weights must be nonnegative");
    w_max = std::max(w_max, w);
  }
  if (w_max > (1LL << 44))
    throw DomainError("matching weights too large for exact arithmetic");

  // Minimize by maximizing BIG - w; BIG large enough that matchings with
  // more edges always dominate, so the maximum-weight matching is perfect.
  // The factor 2 keeps all algorithm weights even (integral duals).
  long long big = w_max * (n / 2) + 1;
  Blossom bl(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      bl.set_weight(u + 1, v + 1, 2 * (big - weights[u * n + v]));

  std::vector<int> match = bl.run();
  std::vector<int> mate(n, -1);
  for (int u = 1; u <= n; ++u) {
    if (match[u] < 1 || match[u] > n)
      throw Error("blossom matching failed to produce a perfect matching");
    mate[u - 1] = match[u] - 1;
  }
  for (int u = 0; u < n; ++u)
    if (mate[u] == u || mate[mate[u]] != u)
      throw Error("blossom matching produced an inconsistent pairing");
  return mate;
}

std::vector<int> greedy_perfect_matching(
    int n, const std::vector<long long>& weights) {
  if (n <= 0 || n % 2 != 0)
    throw DomainError("perfect matching needs a positive even vertex count");
  struct Cand {
    long long w;
    int u, v;
  };
  std::vector<Cand> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({weights[u * n + v], u, v});
  std::sort(edges.begin(), edges.end(), [](const Cand& a, const Cand& b) {
    return std::tie(a.w, a.u, a.v) < std::tie(b.w, b.u, b.v);
  });
  std::vector<int> mate(n, -1);
  for (const Cand& e : edges)
    if (mate[e.u] == -1 && mate[e.v] == -1) {
      mate[e.u] = e.v;
      mate[e.v] = e.u;
    }
  return mate;
}

}  // namespace ttp
