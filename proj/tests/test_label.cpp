#include <doctest.h>

#include <stdexcept>

#include "tarb/label.hpp"

using tarb::Label;

TEST_CASE("label parsing accepts integers, fractions and decimals") {
  CHECK(Label::parse("3") == Label(3));
  CHECK(Label::parse("3/2") == Label(3, 2));
  CHECK(Label::parse("2.5") == Label(5, 2));
  CHECK(Label::parse(".5") == Label(1, 2));
  CHECK(Label::parse("4.") == Label(4));
  CHECK(Label::parse("0") == Label(0));
  CHECK(Label::parse("6/4").str() == "3/2");
  CHECK(Label::parse("10.00").str() == "10");
}

TEST_CASE("1/2 and 0.5 are the same label") {
  CHECK(Label::parse("1/2") == Label::parse("0.5"));
  CHECK_FALSE(Label::parse("1/3") == Label::parse("0.3333333333333333"));
  CHECK(Label::parse("1/3") > Label::parse("0.3333333333333333"));
}

TEST_CASE("label parsing rejects bad text") {
  CHECK_THROWS_AS(Label::parse("-1"), std::invalid_argument);
  CHECK_THROWS_AS(Label::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Label::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Label::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Label::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Label::parse("."), std::invalid_argument);
  CHECK_THROWS_AS(Label::parse("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(Label(-1, 2), std::invalid_argument);
}

TEST_CASE("label order is exact") {
  CHECK(Label(1, 3) < Label(1, 2));
  CHECK(Label(1, 3) + Label(1, 6) == Label(1, 2));
  CHECK(Label::parse("100000000000000000000001/100000000000000000000000") > Label(1));
}
