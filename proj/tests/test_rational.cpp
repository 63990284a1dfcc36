#include <doctest.h>

#include "cwdc/errors.hpp"
#include "cwdc/rational.hpp"

using namespace cwdc;

TEST_CASE("make_rat canonicalizes") {
  CHECK(make_rat(4, 8) == make_rat(1, 2));
  CHECK(rat_to_string(make_rat(6, 4)) == "3/2");
  CHECK_THROWS_AS(make_rat(1, 0), SimError);
}

TEST_CASE("floor, ceil, integrality") {
  CHECK(rat_floor(make_rat(7, 2)) == 3);
  CHECK(rat_ceil(make_rat(7, 2)) == 4);
  CHECK(rat_floor(make_rat(-7, 2)) == -4);
  CHECK(rat_floor(Rat(5)) == 5);
  CHECK(rat_is_integer(Rat(5)));
  CHECK_FALSE(rat_is_integer(make_rat(5, 3)));
}

TEST_CASE("rat_pow exact") {
  CHECK(rat_pow(make_rat(3, 5), 12) == make_rat(531441, 244140625));
  CHECK(rat_pow(make_rat(2, 3), 0) == Rat(1));
}

TEST_CASE("parse_ratio exact fraction forms") {
  CHECK(parse_ratio("2/3") == make_rat(2, 3));
  CHECK(parse_ratio("10/15") == make_rat(2, 3));
  CHECK(parse_ratio("1") == Rat(1));
  CHECK_THROWS_AS(parse_ratio("abc"), SimError);
  CHECK_THROWS_AS(parse_ratio(""), SimError);
  CHECK_THROWS_AS(parse_ratio("1/0"), SimError);
}

TEST_CASE("decimal inputs snap to the simplest fraction in tolerance") {
  CHECK(parse_ratio("0.6667") == make_rat(2, 3));
  CHECK(parse_ratio("0.3333") == make_rat(1, 3));
  CHECK(parse_ratio("0.5") == make_rat(1, 2));
  CHECK(parse_ratio("0.4") == make_rat(2, 5));
  CHECK(parse_ratio("0.375") == make_rat(3, 8));
  CHECK(parse_ratio("1.0") == Rat(1));
  CHECK(parse_ratio("0.05") == make_rat(1, 20));
}

TEST_CASE("rationalize picks smallest denominator in the window") {
  CHECK(rationalize(0.6667, 5e-5) == make_rat(2, 3));
  // interval excludes 2/3, lands on a nearby but coarser fraction
  Rat q = rationalize(0.672, 1e-3);
  CHECK(q != make_rat(2, 3));
  double v = rat_to_double(q);
  CHECK(v > 0.670);
  CHECK(v < 0.674);
  CHECK(rationalize(0.0, 1e-6) == Rat(0));
  CHECK(rationalize(-0.5, 1e-6) == make_rat(-1, 2));
}
