#include <doctest.h>

#include <sstream>

#include "ttp/errors.hpp"
#include "ttp/instance.hpp"

using namespace ttp;

namespace {

DistanceMatrix four_team_metric() {
  // d(1,2)=1 d(1,3)=2 d(1,4)=3 d(2,3)=1 d(2,4)=2 d(3,4)=1
  std::istringstream in(
      "4\n"
      "0 1 2 3\n"
      "1 0 1 2\n"
      "2 1 0 1\n"
      "3 2 1 0\n");
  return load_instance(in, InstanceFormat::plain);
}

}  // namespace

TEST_CASE("plain loader parses the unit matrix") {
  std::istringstream in(
      "# unit metric on four teams\n"
      "4\n"
      "0 1 1 1\n"
      "1 0 1 1\n"
      "1 1 0 1\n"
      "1 1 1 0\n");
  DistanceMatrix m = load_instance(in, InstanceFormat::plain);
  CHECK(m.size() == 4);
  InstanceStats st = instance_stats(m);
  CHECK(st.delta == Rat(12));  // n(n-1) on the unit metric
}

TEST_CASE("loader rejects odd or tiny team counts") {
  std::istringstream odd("5\n0 1 1 1 1\n1 0 1 1 1\n1 1 0 1 1\n1 1 1 0 1\n1 1 1 1 0\n");
  CHECK_THROWS_AS(load_instance(odd, InstanceFormat::plain), DomainError);
  std::istringstream tiny("2\n0 1\n1 0\n");
  CHECK_THROWS_AS(load_instance(tiny, InstanceFormat::plain), DomainError);
}

TEST_CASE("symmetry violation names the offending pair") {
  std::istringstream in(
      "4\n"
      "0 5 1 1\n"
      "4 0 1 1\n"
      "1 1 0 1\n"
      "1 1 1 0\n");
  try {
    load_instance(in, InstanceFormat::plain);
    FAIL("expected MetricError");
  } catch (const MetricError& e) {
    CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
  }
}

TEST_CASE("triangle violation names the lexicographically smallest triple") {
  std::istringstream in(
      "4\n"
      "0 1 10 1\n"
      "1 0 1 1\n"
      "10 1 0 9\n"
      "1 1 9 0\n");
  try {
    load_instance(in, InstanceFormat::plain);
    FAIL("expected MetricError");
  } catch (const MetricError& e) {
    CHECK(std::string(e.what()).find("(1,2,3)") != std::string::npos);
  }
}

TEST_CASE("parse errors carry line and column") {
  std::istringstream in("4\n0 1 1 1\n1 0 x 1\n");
  try {
    load_instance(in, InstanceFormat::plain);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 5);
  }
}

TEST_CASE("tsplib full-matrix subset loads, other types rejected") {
  std::istringstream ok(
      "NAME : tiny\n"
      "TYPE : TSP\n"
      "COMMENT : four venues\n"
      "DIMENSION : 4\n"
      "EDGE_WEIGHT_TYPE : EXPLICIT\n"
      "EDGE_WEIGHT_FORMAT : FULL_MATRIX\n"
      "EDGE_WEIGHT_SECTION\n"
      "0 1 2 3\n"
      "1 0 1 2\n"
      "2 1 0 1\n"
      "3 2 1 0\n"
      "EOF\n");
  DistanceMatrix m = load_instance(ok, InstanceFormat::tsplib_full_matrix);
  CHECK(m.size() == 4);
  CHECK(m(0, 3) == Rat(3));

  std::istringstream euc(
      "DIMENSION : 4\nEDGE_WEIGHT_TYPE : EUC_2D\nEDGE_WEIGHT_SECTION\n");
  CHECK_THROWS_AS(load_instance(euc, InstanceFormat::tsplib_full_matrix),
                  ParseError);
}

TEST_CASE("unit generator matches the appendix values") {
  DistanceMatrix m = generate_instance(InstanceKind::unit, 20, 0);
  InstanceStats st = instance_stats(m);
  CHECK(st.delta == Rat(380));  // delta = n(n-1)
  for (const Rat& s : st.s) CHECK(s == Rat(19));  // s(i) = n-1
}

TEST_CASE("circle generator uses shortest-arc distances") {
  DistanceMatrix m = generate_instance(InstanceKind::circle, 8, 0);
  CHECK(m(0, 1) == Rat(1));
  CHECK(m(0, 4) == Rat(4));
  CHECK(m(0, 7) == Rat(1));
  CHECK(m(1, 6) == Rat(3));
}

TEST_CASE("euclidean generator is deterministic in the seed") {
  DistanceMatrix a = generate_instance(InstanceKind::euclidean_random, 8, 7);
  DistanceMatrix b = generate_instance(InstanceKind::euclidean_random, 8, 7);
  DistanceMatrix c = generate_instance(InstanceKind::euclidean_random, 8, 8);
  bool same = true, differs = false;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      same = same && a(i, j) == b(i, j);
      differs = differs || a(i, j) != c(i, j);
    }
  CHECK(same);
  CHECK(differs);
}

TEST_CASE("stats of the hand-summed 4-team metric") {
  DistanceMatrix m = four_team_metric();
  InstanceStats st = instance_stats(m);
  CHECK(st.s[0] == Rat(6));
  CHECK(st.s[1] == Rat(4));
  CHECK(st.s[2] == Rat(4));
  CHECK(st.s[3] == Rat(6));
  CHECK(st.delta == Rat(20));
}

TEST_CASE("all-zero metric is accepted with delta zero") {
  std::istringstream in("4\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n");
  DistanceMatrix m = load_instance(in, InstanceFormat::plain);
  CHECK(instance_stats(m).delta == Rat(0));
}

TEST_CASE("save/load round-trips bit-exactly") {
  for (auto kind : {InstanceKind::unit, InstanceKind::circle,
                    InstanceKind::euclidean_random}) {
    DistanceMatrix m = generate_instance(kind, 10, 3);
    std::ostringstream out;
    save_instance(m, out);
    std::istringstream in(out.str());
    DistanceMatrix back = load_instance(in, InstanceFormat::plain);
    REQUIRE(back.size() == m.size());
    for (int i = 0; i < m.size(); ++i)
      for (int j = 0; j < m.size(); ++j) CHECK(back(i, j) == m(i, j));
  }
}

TEST_CASE("delta equals twice the total edge weight") {
  for (auto kind : {InstanceKind::circle, InstanceKind::euclidean_random}) {
    DistanceMatrix m = generate_instance(kind, 12, 5);
    InstanceStats st = instance_stats(m);
    Rat twice_edges(0);
    for (int i = 0; i < m.size(); ++i)
      for (int j = i + 1; j < m.size(); ++j)
        twice_edges += Rat(2) * m(i, j);
    CHECK(st.delta == twice_edges);
  }
}
