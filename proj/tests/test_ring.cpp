#include <doctest.h>

#include "support.hpp"

using namespace bqf;
using namespace bqf::testing;

TEST_CASE("content") {
  CHECK(content({Z(2), Z(4), Z(6)}) == Z(2));
  CHECK(content({Z(2), Z(1), Z(3)}) == Z(1));
  CHECK(content({Z(0), Z(0), Z(0)}) == Z(0));
  CHECK(content({Z(-4), Z(6)}) == Z(2));
  const Ring r = Ring::modular(6);
  CHECK_THROWS_AS(content({Elem(r, 2L)}), Error);
}

TEST_CASE("units") {
  CHECK(is_unit(Z(-1)));
  CHECK_FALSE(is_unit(Z(2)));
  CHECK(is_unit(Elem(Ring::modular(10), 3L)));
  CHECK_FALSE(is_unit(Elem(Ring::modular(10), 4L)));
  CHECK(is_unit(Elem(Ring::rationals(), Rat(2, 3))));
  CHECK(units(Ring::modular(12)).size() == 4);
  CHECK(units(Ring::integers()).size() == 2);
}

TEST_CASE("homomorphisms") {
  const Hom to5(Ring::integers(), Ring::modular(5));
  CHECK(to5(Z(7)) == Elem(Ring::modular(5), 2L));
  CHECK(to5(Z(-6)).value() == 4);
  const Hom down(Ring::modular(12), Ring::modular(4));
  CHECK(down(Elem(Ring::modular(12), 3L)) == Elem(Ring::modular(4), 3L));
  CHECK_THROWS_AS(Hom(Ring::modular(12), Ring::modular(5)), Error);
  CHECK(Hom(Ring::integers(), Ring::rationals())(Z(-3)).value() == -3);
}

TEST_CASE("canonical elements") {
  const Ring r = Ring::modular(7);
  CHECK(Elem(r, -1L).value() == 6);
  CHECK(Elem(r, Rat(1, 2)) == Elem(r, 4L));
  CHECK_THROWS_AS(Elem(Ring::integers(), Rat(1, 2)), Error);
  CHECK_THROWS_AS(Elem(Ring::modular(4), 2L).inverse(), Error);
  CHECK_THROWS_AS(Elem(r, 1L) + Elem(Ring::modular(5), 1L), Error);
  CHECK_THROWS_AS(Ring::modular(1), Error);
  CHECK(Ring::parse("mod:9") == Ring::modular(9));
  CHECK(Ring::modular(9).name() == "mod:9");
  CHECK(symmetric_residue(Elem(r, 6L)) == -1);
}

TEST_CASE("ring predicates") {
  CHECK_FALSE(Ring::modular(4).two_is_regular());
  CHECK(Ring::modular(9).two_is_regular());
  CHECK(Ring::modular(7).is_field());
  CHECK_FALSE(Ring::modular(9).is_field());
  CHECK(rational_sqrt(Rat(9, 4)) == Rat(3, 2));
  CHECK_FALSE(rational_sqrt(Rat(2)).has_value());
  CHECK(floor_div(Int(-7), Int(2)) == -4);
}
