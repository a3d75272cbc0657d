#include "ttp/tour.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "ttp/errors.hpp"
#include "ttp/matching.hpp"

namespace ttp {
namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::vector<std::pair<int, int>> kruskal_mst(const DistanceMatrix& m) {
  int n = m.size();
  struct Cand {
    Rat w;
    int u, v;
  };
  std::vector<Cand> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({m(u, v), u, v});
  std::sort(edges.begin(), edges.end(), [](const Cand& a, const Cand& b) {
    if (a.w != b.w) return a.w < b.w;
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  Dsu dsu(n);
  std::vector<std::pair<int, int>> tree;
  tree.reserve(n - 1);
  for (const Cand& e : edges)
    if (dsu.unite(e.u, e.v)) {
      tree.emplace_back(e.u, e.v);
      if (static_cast<int>(tree.size()) == n - 1) break;
    }
  return tree;
}

// Hierholzer circuit over an undirected multigraph, starting at vertex 0 and
// always consuming the lowest-indexed available neighbor.
std::vector<int> euler_circuit(int n, const std::vector<std::pair<int, int>>& edges) {
  struct Arc {
    int to, edge_id;
  };
  std::vector<std::vector<Arc>> adj(n);
  for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
    auto [u, v] = edges[id];
    adj[u].push_back({v, id});
    adj[v].push_back({u, id});
  }
  for (auto& a : adj)
    std::sort(a.begin(), a.end(), [](const Arc& x, const Arc& y) {
      return std::tie(x.to, x.edge_id) < std::tie(y.to, y.edge_id);
    });
  std::vector<bool> used(edges.size(), false);
  std::vector<size_t> next(n, 0);
  std::vector<int> stack = {0}, circuit;
  while (!stack.empty()) {
    int u = stack.back();
    while (next[u] < adj[u].size() && used[adj[u][next[u]].edge_id]) ++next[u];
    if (next[u] == adj[u].size()) {
      circuit.push_back(u);
      stack.pop_back();
    } else {
      const Arc& a = adj[u][next[u]];
      used[a.edge_id] = true;
      stack.push_back(a.to);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

}  // namespace

Rat tour_length(const DistanceMatrix& m, const std::vector<int>& order) {
  int n = m.size();
  if (static_cast<int>(order.size()) != n)
    throw DomainError("tour must visit all " + std::to_string(n) + " vertices");
  std::vector<bool> seen(n, false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v])
      throw DomainError("tour order is not a permutation of the vertices");
    seen[v] = true;
  }
  Rat len(0);
  for (int i = 0; i < n; ++i) len += m(order[i], order[(i + 1) % n]);
  return len;
}

Tour christofides(const DistanceMatrix& m, MatchingMode mode) {
  int n = m.size();
  auto tree = kruskal_mst(m);

  std::vector<int> degree(n, 0);
  for (auto [u, v] : tree) {
    ++degree[u];
    ++degree[v];
  }
  std::vector<int> odd;
  for (int v = 0; v < n; ++v)
    if (degree[v] % 2 == 1) odd.push_back(v);

  std::vector<std::pair<int, int>> multigraph = tree;
  if (!odd.empty()) {
    int k = static_cast<int>(odd.size());
    long long scale = 1;
    auto scaled = scale_to_integers(m, scale);
    std::vector<long long> sub(static_cast<size_t>(k) * k, 0);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        sub[a * k + b] = scaled[odd[a] * n + odd[b]];
    std::vector<int> mate = mode == MatchingMode::exact
                                ? min_weight_perfect_matching(k, sub)
                                : greedy_perfect_matching(k, sub);
    for (int a = 0; a < k; ++a)
      if (mate[a] > a) multigraph.emplace_back(odd[a], odd[mate[a]]);
  }

  auto circuit = euler_circuit(n, multigraph);
  std::vector<int> order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  for (int v : circuit)
    if (!seen[v]) {
      seen[v] = true;
      order.push_back(v);
    }
  return {order, tour_length(m, order)};
}

Rat mst_weight(const DistanceMatrix& m) {
  Rat total(0);
  for (auto [u, v] : kruskal_mst(m)) total += m(u, v);
  return total;
}

Tour exact_tour(const DistanceMatrix& m, int limit) {
  int n = m.size();
  if (n > limit)
    throw CapabilityError("exact tour limited to n <= " + std::to_string(limit) +
                          "; use christofides for larger instances");
  long long scale = 1;
  auto w = scale_to_integers(m, scale);
  int k = n - 1;  // vertices 1..n-1 relative to the fixed start 0
  size_t masks = size_t{1} << k;
  constexpr long long unset = -1;
  std::vector<long long> dp(masks * k, unset);
  std::vector<int16_t> parent(masks * k, -1);
  for (int j = 0; j < k; ++j) {
    dp[(size_t{1} << j) * k + j] = w[0 * n + (j + 1)];
    parent[(size_t{1} << j) * k + j] = -1;
  }
  for (size_t mask = 1; mask < masks; ++mask)
    for (int j = 0; j < k; ++j) {
      if (!(mask & (size_t{1} << j))) continue;
      long long cur = dp[mask * k + j];
      if (cur == unset) continue;
      for (int t = 0; t < k; ++t) {
        if (mask & (size_t{1} << t)) continue;
        size_t nmask = mask | (size_t{1} << t);
        long long cand = cur + w[(j + 1) * n + (t + 1)];
        long long& slot = dp[nmask * k + t];
        if (slot == unset || cand < slot) {
          slot = cand;
          parent[nmask * k + t] = static_cast<int16_t>(j);
        }
      }
    }
  size_t full = masks - 1;
  long long best = unset;
  int best_last = -1;
  for (int j = 0; j < k; ++j) {
    long long cand = dp[full * k + j] + w[(j + 1) * n + 0];
    if (best == unset || cand < best) {
      best = cand;
      best_last = j;
    }
  }
  std::vector<int> order;
  order.reserve(n);
  size_t mask = full;
  int j = best_last;
  while (j >= 0) {
    order.push_back(j + 1);
    int pj = parent[mask * k + j];
    mask &= ~(size_t{1} << j);
    j = pj;
  }
  order.push_back(0);
  std::reverse(order.begin(), order.end());
  // canonical orientation: neighbor of the start with the smaller id first
  if (n > 2 && order[1] > order[n - 1])
    std::reverse(order.begin() + 1, order.end());
  return {order, tour_length(m, order)};
}

}  // namespace ttp
