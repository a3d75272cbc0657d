#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "ttp/errors.hpp"
#include "ttp/labeling.hpp"

using namespace ttp;

namespace {

DistanceMatrix four_team_metric() {
  std::istringstream in(
      "4\n"
      "0 1 2 3\n"
      "1 0 1 2\n"
      "2 1 0 1\n"
      "3 2 1 0\n");
  return load_instance(in, InstanceFormat::plain);
}

}  // namespace

TEST_CASE("hub selection minimizes incident distance, ties to lowest index") {
  DistanceMatrix unit = generate_instance(InstanceKind::unit, 8, 0);
  CHECK(select_hub(unit, christofides(unit)) == 0);

  DistanceMatrix m = four_team_metric();  // s = (6,4,4,6)
  CHECK(select_hub(m, christofides(m)) == 1);
}

TEST_CASE("hub guarantee s(hub) <= delta/n") {
  for (unsigned long long seed = 1; seed <= 10; ++seed) {
    DistanceMatrix m =
        generate_instance(InstanceKind::euclidean_random, 12, seed);
    int hub = select_hub(m, christofides(m));
    InstanceStats st = instance_stats(m);
    CHECK(st.s[hub] <= st.delta / Rat(m.size()));
  }
}

TEST_CASE("shortcut removes the hub and keeps the orientation") {
  Tour t{{0, 1, 2, 3}, Rat(0)};
  CHECK(shortcut_tour(t, 3) == std::vector<int>{0, 1, 2});
  CHECK(shortcut_tour(t, 1) == std::vector<int>{2, 3, 0});
  CHECK_THROWS_AS(shortcut_tour(t, 9), DomainError);
}

TEST_CASE("reduced cycle is never longer than the tour") {
  for (unsigned long long seed = 1; seed <= 8; ++seed) {
    DistanceMatrix m =
        generate_instance(InstanceKind::euclidean_random, 10, seed);
    Tour t = christofides(m);
    int hub = select_hub(m, t);
    auto labelings = enumerate_labelings(shortcut_tour(t, hub), hub);
    for (const Labeling& lab : labelings)
      CHECK(reduced_cycle_length(m, lab) <= t.length);
  }
}

TEST_CASE("labeling enumeration rotates label 1 around the reduced cycle") {
  std::vector<int> reduced = {5, 2, 7};
  auto labs = enumerate_labelings(reduced, 9);
  REQUIRE(labs.size() == 3);
  CHECK(labs[0].order == std::vector<int>{5, 2, 7});
  CHECK(labs[1].order == std::vector<int>{2, 7, 5});
  CHECK(labs[2].order == std::vector<int>{7, 5, 2});
  for (const Labeling& lab : labs) {
    CHECK(lab.hub == 9);
    CHECK(lab.team_of_label(4) == 9);
    CHECK(lab.team_of_label(1) == lab.order[0]);
  }
}

TEST_CASE("labeling multiset is invariant under rotating the input") {
  std::vector<int> reduced = {3, 1, 4, 6, 0};
  std::vector<int> rotated = {4, 6, 0, 3, 1};
  auto as_set = [](const std::vector<Labeling>& labs) {
    std::set<std::vector<int>> s;
    for (const auto& lab : labs) s.insert(lab.order);
    return s;
  };
  CHECK(as_set(enumerate_labelings(reduced, 9)) ==
        as_set(enumerate_labelings(rotated, 9)));
}

TEST_CASE("reduced cycle length is identical across labelings") {
  DistanceMatrix m = generate_instance(InstanceKind::euclidean_random, 12, 3);
  Tour t = christofides(m);
  int hub = select_hub(m, t);
  auto labs = enumerate_labelings(shortcut_tour(t, hub), hub);
  Rat base = reduced_cycle_length(m, labs[0]);
  for (const Labeling& lab : labs) CHECK(reduced_cycle_length(m, lab) == base);
}

TEST_CASE("candidate l values follow the two branches") {
  CHECK(candidate_ls(20, 4) == std::vector<int>{1, 2, 3, 4});
  CHECK(candidate_ls(20, 10) == std::vector<int>{9});
  CHECK(candidate_ls(20, 19) == std::vector<int>{9});
  CHECK(candidate_ls(4, 2) == std::vector<int>{1});
  CHECK_THROWS_AS(candidate_ls(20, 1), DomainError);
  CHECK_THROWS_AS(candidate_ls(20, 20), DomainError);
}

TEST_CASE("a strict argmin vertex is the hub regardless of the tour") {
  // venue 2 strictly cheapest: all its edges are 2, the rest are 3
  std::vector<Rat> entries(36, Rat(3));
  for (int i = 0; i < 6; ++i) entries[i * 6 + i] = Rat(0);
  for (int i = 0; i < 6; ++i)
    if (i != 2) entries[i * 6 + 2] = entries[2 * 6 + i] = Rat(2);
  DistanceMatrix m = DistanceMatrix::from_entries(6, std::move(entries));
  Tour a{{0, 1, 2, 3, 4, 5}, Rat(0)};
  Tour b{{5, 3, 1, 2, 0, 4}, Rat(0)};
  CHECK(select_hub(m, a) == 2);
  CHECK(select_hub(m, b) == 2);
}
