#include <doctest.h>

#include "bqf/serialize.hpp"
#include "support.hpp"

using namespace bqf;
using namespace bqf::testing;

TEST_CASE("form JSON") {
  const Json j = to_json(F(2, 1, 3));
  CHECK(j.dump() == R"({"a":2,"b":1,"c":3,"ring":{"ring":"int"}})");
  CHECK(form_from_json(j, Ring::rationals()) == F(2, 1, 3));
  CHECK(form_from_json(Json::parse("[2,1,3]"), Ring::integers()) == F(2, 1, 3));
  const Form m = form_from_json(Json::parse(R"({"a":9,"b":-1,"c":3,"ring":{"ring":"mod","n":7}})"), Ring::integers());
  CHECK(m == F(Ring::modular(7), 2, 6, 3));
  CHECK(to_json(m)["ring"].dump() == R"({"n":7,"ring":"mod"})");
}

TEST_CASE("rationals and big integers") {
  const Ring q = Ring::rationals();
  const Elem half(q, Rat(-1, 2));
  CHECK(to_json(half).dump() == R"({"den":2,"num":-1})");
  CHECK(elem_from_json(to_json(half), q) == half);
  CHECK(elem_from_json(Json("3/6"), q) == Elem(q, Rat(1, 2)));
  const Int big("123456789012345678901234567890");
  CHECK(to_json(big) == Json("123456789012345678901234567890"));
  CHECK(int_from_json(to_json(big)) == big);
  CHECK_THROWS_AS(int_from_json(Json("12x")), Error);
  CHECK_THROWS_AS(form_from_json(Json::parse(R"({"a":1,"b":2})"), Ring::integers()), Error);
}

TEST_CASE("pairs, algebras, quaternions") {
  const CliffordPair p = form_to_pair(F(2, 1, 3));
  const Json j = to_json(p);
  CHECK(j.dump() == R"({"alg":{"nm":6,"t":1},"m":[[1,3],[-2,0]],"ring":{"ring":"int"}})");
  CHECK(pair_from_json(j, Ring::integers()) == p);
  CHECK(algebra_from_json(Json::parse(R"({"t":1,"nm":6})"), Ring::integers()) == even_clifford(F(2, 1, 3)));
  const QuaternionElem z{Z(1), Z(-2), Z(0), Z(5)};
  CHECK(quaternion_from_json(to_json(z), Ring::integers()) == z);
}

TEST_CASE("verdicts") {
  CHECK(to_json(similar(F(1, 0, 1), F(1, 1, 1))).dump() == R"({"reason":"discriminant","verdict":"not_similar"})");
  const Json s = to_json(similar(F(2, 1, 3), F(2, 1, 3)));
  CHECK(s["verdict"] == "similar");
  CHECK(s["witness"]["u"] == 1);
}
