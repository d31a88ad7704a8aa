#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsp/rational.hpp"

using namespace gsp;

TEST_CASE("parsing accepts integers, decimals, and fractions") {
  CHECK(rat_from_string("3") == Rat(3));
  CHECK(rat_from_string("-2") == Rat(-2));
  CHECK(rat_from_string("0.25") == Rat(1, 4));
  CHECK(rat_from_string("0.0001") == Rat(1, 10000));
  CHECK(rat_from_string("7/2") == Rat(7, 2));
  CHECK(rat_from_string("4/8") == Rat(1, 2));
  CHECK(rat_from_string("-1/3") == Rat(-1, 3));
}

TEST_CASE("parsing rejects malformed literals") {
  CHECK_THROWS_AS(rat_from_string(""), input_error);
  CHECK_THROWS_AS(rat_from_string("1/0"), input_error);
  CHECK_THROWS_AS(rat_from_string("a"), input_error);
  CHECK_THROWS_AS(rat_from_string("1e-4"), input_error);
  CHECK_THROWS_AS(rat_from_string("1/2/3"), input_error);
}

TEST_CASE("rendering round-trips") {
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK(rat_to_string(Rat(2, 3)) == "2/3");
  CHECK(rat_from_string(rat_to_string(Rat(-22, 7))) == Rat(-22, 7));
  CHECK(rat_to_decimal(Rat(1, 4), 6) == "0.25");
  CHECK(rat_to_decimal(Rat(1, 3), 4) == "0.3333");
}

TEST_CASE("extended arithmetic conventions") {
  ExtRat inf = ExtRat::infinity();
  CHECK((Rat(2) * inf).is_inf());
  CHECK(Rat(0) * inf == ExtRat(Rat(0)));  // zero discount annihilates
  CHECK(inf > ExtRat(Rat(1000000)));
  CHECK(inf == ExtRat::infinity());
  CHECK((inf + ExtRat(Rat(3))).is_inf());
  CHECK(ExtRat(Rat(3)) + ExtRat(Rat(4)) == ExtRat(Rat(7)));
  CHECK(ext_from_string("inf").is_inf());
  CHECK(ext_to_string(inf) == "inf");
  CHECK(ext_to_string(ExtRat(Rat(1, 2))) == "1/2");
}

TEST_CASE("rational square roots") {
  Rat root;
  CHECK(rational_sqrt(Rat(49), &root));
  CHECK(root == Rat(7));
  CHECK(rational_sqrt(Rat(9, 4), &root));
  CHECK(root == Rat(3, 2));
  CHECK(rational_sqrt(Rat(0), &root));
  CHECK(root == Rat(0));
  CHECK_FALSE(rational_sqrt(Rat(2), &root));
  CHECK_FALSE(rational_sqrt(Rat(5, 4), &root));
  CHECK_FALSE(rational_sqrt(Rat(-4), &root));
}
