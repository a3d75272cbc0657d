#pragma once

#include <cstdint>
#include <vector>

namespace ttp {

// Exact minimum-weight perfect matching on the complete graph over an even
// number of vertices, via the primal-dual blossom algorithm in O(n^3).
// `weights` is row-major n*n, symmetric, nonnegative. Returns mate[] with
// mate[mate[v]] == v for every vertex.
std::vector<int> min_weight_perfect_matching(
    int n, const std::vector<long long>& weights);

// Greedy fallback without optimality guarantee: repeatedly matches the
// globally cheapest remaining pair. Only used behind the explicit
// no-guarantee flag; never part of ratio-certified runs.
std::vector<int> greedy_perfect_matching(int n,
                                         const std::vector<long long>& weights);

}  // namespace ttp
