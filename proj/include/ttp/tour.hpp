#pragma once

#include <vector>

#include "ttp/instance.hpp"
#include "ttp/rational.hpp"

namespace ttp {

// Hamiltonian cycle over all venues. `order` holds 0-based vertex ids;
// `length` is the cyclic length including the closing edge.
struct Tour {
  std::vector<int> order;
  Rat length;
};

// Cyclic length of an arbitrary vertex permutation; throws DomainError if
// `order` is not a permutation of 0..n-1.
Rat tour_length(const DistanceMatrix& m, const std::vector<int>& order);

enum class MatchingMode {
  exact,   // blossom minimum-weight perfect matching; 3/2 guarantee holds
  greedy,  // no guarantee; excluded from ratio-certified runs
};

// MST + minimum-weight perfect matching on odd-degree vertices + Euler
// circuit + first-visit shortcut. With exact matching the classical bound
// d(T) <= (3/2) d(T*) applies. Deterministic: MST ties break on
// lexicographic edge order, the Euler circuit starts at the lowest-index
// vertex.
Tour christofides(const DistanceMatrix& m,
                  MatchingMode mode = MatchingMode::exact);

// Total weight of the minimum spanning tree; a classic lower bound on the
// optimal tour length, exposed for sanity checks.
Rat mst_weight(const DistanceMatrix& m);

inline constexpr int kDefaultExactTourLimit = 16;

// Held-Karp dynamic program; provably optimal. Throws CapabilityError when
// n exceeds `limit`.
Tour exact_tour(const DistanceMatrix& m, int limit = kDefaultExactTourLimit);

}  // namespace ttp
