#include <doctest.h>

#include <cmath>
#include <limits>

#include "iet/error.hpp"
#include "iet/scalar.hpp"

using iet::Scalar;

TEST_CASE("parse_scalar accepts fractions, integers and decimals exactly") {
  CHECK(iet::parse_scalar("1597/987") == Scalar(1597, 987));
  CHECK(iet::parse_scalar("4/6") == Scalar(2, 3));
  CHECK(iet::parse_scalar("-3/9") == Scalar(-1, 3));
  CHECK(iet::parse_scalar("+7") == Scalar(7));
  CHECK(iet::parse_scalar("0.1") == Scalar(1, 10));
  CHECK(iet::parse_scalar("-.25") == Scalar(-1, 4));
  CHECK(iet::parse_scalar("2.5e-3") == Scalar(1, 400));
  CHECK(iet::parse_scalar("3E2") == Scalar(300));
}

TEST_CASE("parse_scalar rejects malformed text") {
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "--1", ".", "1e", "0x10", "1e99999999"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(iet::parse_scalar(bad), iet::Error);
  }
}

TEST_CASE("to_string always prints p/q in lowest terms") {
  CHECK(iet::to_string(Scalar(2)) == "2/1");
  CHECK(iet::to_string(Scalar(-6, 4) + 0) == "-3/2");
  CHECK(iet::to_string(iet::parse_scalar("0")) == "0/1");
}

TEST_CASE("from_double is exact and rejects non-finite values") {
  CHECK(iet::from_double(0.5) == Scalar(1, 2));
  CHECK(iet::from_double(0.1) == Scalar(3602879701896397, mpz_class("36028797018963968")));
  CHECK(iet::to_double(iet::from_double(0.1)) == 0.1);
  CHECK_THROWS_AS(iet::from_double(std::numeric_limits<double>::quiet_NaN()), iet::Error);
  CHECK_THROWS_AS(iet::from_double(INFINITY), iet::Error);
}

TEST_CASE("parse_scalar_list splits on commas") {
  const auto v = iet::parse_scalar_list("1,1597/987,-2");
  REQUIRE(v.size() == 3);
  CHECK(v[1] == Scalar(1597, 987));
  CHECK(iet::sum(v) == Scalar(1597, 987) - 1);
  CHECK(iet::parse_scalar_list("").empty());
}
