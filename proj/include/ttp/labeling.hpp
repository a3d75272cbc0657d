#pragma once

#include <vector>

#include "ttp/instance.hpp"
#include "ttp/tour.hpp"

namespace ttp {

// Bijection between teams and labels 1..n. The hub carries label n; labels
// 1..n-1 run consecutively along the oriented reduced cycle T'.
struct Labeling {
  int hub;                 // team holding label n
  std::vector<int> order;  // order[i] = team with label i+1, for labels 1..n-1

  int n() const { return static_cast<int>(order.size()) + 1; }
  // team carrying the given 1-based label
  int team_of_label(int label) const {
    return label == n() ? hub : order[label - 1];
  }
};

// argmin_i s(i), ties to the lowest team index. Guarantees s(hub) <= delta/n.
int select_hub(const DistanceMatrix& m, const Tour& t);

// Cyclic order of t with the hub removed, orientation preserved.
std::vector<int> shortcut_tour(const Tour& t, int hub);

// One labeling per choice of which team receives label 1; labels 2..n-1
// follow the fixed orientation of the reduced cycle.
std::vector<Labeling> enumerate_labelings(const std::vector<int>& reduced,
                                          int hub);

// {1..k} when k < n/2, {n/2 - 1} otherwise.
std::vector<int> candidate_ls(int n, int k);

// Length of the reduced cycle T' induced by a labeling.
Rat reduced_cycle_length(const DistanceMatrix& m, const Labeling& lab);

}  // namespace ttp
