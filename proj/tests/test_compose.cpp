#include <doctest.h>

#include "bqf/compose.hpp"
#include "bqf/picard.hpp"
#include "support.hpp"

using namespace bqf;
using namespace bqf::testing;

namespace {

Form red(const Form& q) { return reduce_definite(q).form; }

}  // namespace

TEST_CASE("composition") {
  CHECK(red(compose(F(2, 1, 3), F(2, 1, 3))) == F(2, -1, 3));
  CHECK(red(compose(F(2, 1, 3), F(1, 1, 6))) == F(2, 1, 3));
  CHECK(red(compose(F(2, 1, 3), F(2, -1, 3))) == F(1, 1, 6));
  CHECK_THROWS_AS(compose(F(1, 0, 1), F(1, 1, 1)), Error);
  CHECK_THROWS_AS(compose(F(2, 0, 2), F(2, 0, 2)), Error);
  const Form c = compose(F(2, 1, 3), F(3, 1, 2));
  CHECK(discriminant(c).classical == Z(-23));
  CHECK(is_primitive(c));
}

TEST_CASE("sigma twist composes with the inverse") {
  for (const Form& x : reduced_forms(-47))
    for (const Form& y : reduced_forms(-47)) {
      CHECK(red(compose(x, y, Twist::Sigma)) == red(compose(x, inverse_form(y))));
    }
}

TEST_CASE("identity and inverse") {
  CHECK(identity_form({Z(1), Z(6)}) == F(1, 1, 6));
  CHECK(identity_form({Z(0), Z(1)}) == F(1, 0, 1));
  CHECK(identity_form({Z(0), Z(-1)}) == F(1, 0, -1));
  CHECK(inverse_form(F(2, 1, 3)) == F(2, -1, 3));
  CHECK(inverse_form(F(1, 0, 1)) == F(1, 0, 1));
  CHECK(inverse_form(F(3, 1, 2)) == F(3, -1, 2));
  CHECK_THROWS_AS(inverse_form(F(2, 2, 2)), Error);
}

TEST_CASE("Dirichlet composition") {
  CHECK(dirichlet_compose(F(2, 1, 3), F(2, 1, 3)) == F(4, 5, 3));
  CHECK(red(dirichlet_compose(F(2, 1, 3), F(2, 1, 3))) == F(2, -1, 3));
  CHECK(red(dirichlet_compose(F(3, 1, 2), F(1, 1, 6))) == red(F(3, 1, 2)));
  CHECK(red(dirichlet_compose(F(2, 2, 3), F(2, 2, 3))) == F(1, 0, 5));
  CHECK_THROWS_AS(dirichlet_compose(F(1, 0, 1), F(1, 1, 1)), Error);
}

TEST_CASE("indefinite composition agrees with the oracle") {
  // D = 40: both computations land in one SL2 orbit, checked by search.
  for (const auto& [x, y] : std::vector<std::pair<Form, Form>>{{F(1, 0, -10), F(2, 0, -5)},
                                                               {F(2, 0, -5), F(2, 0, -5)},
                                                               {F(3, 2, -3), F(-1, 6, 1)}}) {
    const Form c = compose(x, y), d = dirichlet_compose(x, y);
    CHECK(discriminant(c).classical == discriminant(x).classical);
    CHECK(proper_search(c, d, 8).has_value());
  }
}
