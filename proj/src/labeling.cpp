#include "ttp/labeling.hpp"

#include <algorithm>

#include "ttp/errors.hpp"

namespace ttp {

int select_hub(const DistanceMatrix& m, const Tour& t) {
  if (static_cast<int>(t.order.size()) != m.size())
    throw DomainError("tour does not span the instance");
  InstanceStats st = instance_stats(m);
  int best = 0;
  for (int i = 1; i < m.size(); ++i)
    if (st.s[i] < st.s[best]) best = i;
  return best;
}

std::vector<int> shortcut_tour(const Tour& t, int hub) {
  auto it = std::find(t.order.begin(), t.order.end(), hub);
  if (it == t.order.end())
    throw DomainError("hub team does not appear in the tour");
  std::vector<int> reduced;
  reduced.reserve(t.order.size() - 1);
  size_t start = it - t.order.begin();
  for (size_t i = 1; i < t.order.size(); ++i)
    reduced.push_back(t.order[(start + i) % t.order.size()]);
  return reduced;
}

std::vector<Labeling> enumerate_labelings(const std::vector<int>& reduced,
                                          int hub) {
  int cnt = static_cast<int>(reduced.size());
  std::vector<Labeling> out;
  out.reserve(cnt);
  for (int r = 0; r < cnt; ++r) {
    Labeling lab;
    lab.hub = hub;
    lab.order.reserve(cnt);
    for (int i = 0; i < cnt; ++i) lab.order.push_back(reduced[(r + i) % cnt]);
    out.push_back(std::move(lab));
  }
  return out;
}

std::vector<int> candidate_ls(int n, int k) {
  if (k < 2 || k >= n)
    throw DomainError("streak cap k must satisfy 2 <= k < n");
  std::vector<int> ls;
  if (k < n / 2) {
    for (int l = 1; l <= k; ++l) ls.push_back(l);
  } else {
    ls.push_back(n / 2 - 1);
  }
  return ls;
}

Rat reduced_cycle_length(const DistanceMatrix& m, const Labeling& lab) {
  Rat len(0);
  int cnt = static_cast<int>(lab.order.size());
  for (int i = 0; i < cnt; ++i)
    len += m(lab.order[i], lab.order[(i + 1) % cnt]);
  return len;
}

}  // namespace ttp
