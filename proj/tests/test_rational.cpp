#include <doctest.h>

#include "ttp/rational.hpp"

using ttp::Rat;

TEST_CASE("rational arithmetic reduces and compares exactly") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(10, 4) == Rat(5, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(7) * Rat(3, 7) == Rat(3));
  CHECK(Rat(1) / Rat(3) < Rat(34, 100));
  CHECK(Rat(2, 3) > Rat(66, 100));
  CHECK((Rat(5, 3) - Rat(2, 3)).is_integer());
  CHECK_THROWS_AS(Rat(1, 0), ttp::DomainError);
  CHECK_THROWS_AS(Rat(1) / Rat(0), ttp::DomainError);
}

TEST_CASE("rational parsing accepts integers, decimals and fractions") {
  CHECK(Rat::parse("12") == Rat(12));
  CHECK(Rat::parse("-3.25") == Rat(-13, 4));
  CHECK(Rat::parse("7/3") == Rat(7, 3));
  CHECK(Rat::parse("0.5") == Rat(1, 2));
  CHECK_THROWS_AS(Rat::parse("abc"), ttp::DomainError);
  CHECK_THROWS_AS(Rat::parse("1.2.3"), ttp::DomainError);
  CHECK_THROWS_AS(Rat::parse(""), ttp::DomainError);
}

TEST_CASE("decimal emission rounds deterministically") {
  CHECK(Rat(1, 3).decimal(6) == "0.333333");
  CHECK(Rat(2, 3).decimal(6) == "0.666667");
  CHECK(Rat(5, 2).decimal(2) == "2.50");
  CHECK(Rat(-1, 8).decimal(2) == "-0.13");
  CHECK(Rat(999, 1000).decimal(2) == "1.00");
  CHECK(Rat(7).decimal(0) == "7");
}

TEST_CASE("str round-trips through parse") {
  for (long long num : {-7LL, 0LL, 3LL, 22LL})
    for (long long den : {1LL, 2LL, 9LL}) {
      Rat r(num, den);
      CHECK(Rat::parse(r.str()) == r);
    }
}
