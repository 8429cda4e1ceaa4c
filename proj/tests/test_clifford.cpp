#include <doctest.h>

#include "bqf/clifford.hpp"
#include "support.hpp"

using namespace bqf;
using namespace bqf::testing;

namespace {

QuadraticAlgebra C(long t, long nm) { return {Z(t), Z(nm)}; }
EvenElem E(long x, long y) { return {Z(x), Z(y)}; }
QuaternionElem Q(long x0, long x1, long y1, long y2) { return {Z(x0), Z(x1), Z(y1), Z(y2)}; }

}  // namespace

TEST_CASE("even Clifford algebra") {
  CHECK(even_clifford(F(2, 1, 3)) == C(1, 6));
  CHECK(even_clifford(F(1, 0, 1)) == C(0, 1));
  CHECK(even_clifford(F(0, 1, 0)) == C(1, 0));
  CHECK(alg_discriminant(C(1, 6)) == Z(-23));
  CHECK(alg_discriminant(C(0, 1)) == Z(-4));
  CHECK(alg_discriminant(C(1, 0)) == Z(1));
  CHECK(discriminant(F(2, 1, 3)).paper == -alg_discriminant(even_clifford(F(2, 1, 3))));
}

TEST_CASE("bimodule") {
  const CliffordModule m = clifford_bimodule(F(2, 1, 3));
  CHECK(m.left == M(1, 3, -2, 0));
  CHECK(*m.right == M(0, -3, 2, 1));
  CHECK(m.left * *m.right == *m.right * m.left);
  CHECK(satisfies_module_axiom(m.alg, m.left));
  CHECK(satisfies_module_axiom(m.alg, *m.right));
  for (long a = -3; a <= 3; ++a)
    for (long c = -3; c <= 3; ++c) {
      const CliffordModule k = clifford_bimodule(F(a, 2, c));
      CHECK(k.left * *k.right == *k.right * k.left);
    }
}

TEST_CASE("conjugation, trace, norm") {
  const QuadraticAlgebra c = C(1, 6);
  CHECK(conj(c, E(2, 3)) == E(5, -3));
  CHECK(norm(c, E(2, 3)) == Z(64));
  CHECK(mul(c, E(2, 3), E(5, -3)) == E(64, 0));
  CHECK(norm(c, E(0, 1)) == Z(6));
  CHECK(trace(c, E(0, 1)) == Z(1));
  CHECK(conj(c, E(1, 0)) == E(1, 0));
  CHECK(norm(c, E(1, 0)) == Z(1));
  CHECK(mul(c, E(0, 1), E(0, 1)) == E(-6, 1));
}

TEST_CASE("traceability") {
  CHECK(is_traceable(C(1, 6), M(1, 3, -2, 0)));
  CHECK_FALSE(is_traceable(C(1, 0), M(1, 0, 0, 1)));
  CHECK(is_traceable(C(5, 7), regular_representation(C(5, 7))));
  CHECK_THROWS_AS(is_traceable(C(1, 6), M(1, 0, 0, 1)), Error);
}

TEST_CASE("algebra isomorphisms") {
  auto w = algebra_isomorphic(C(1, 6), C(9, 26));
  REQUIRE(w);
  CHECK(*w == AlgebraWitness{Z(4), Z(1)});
  w = algebra_isomorphic(C(1, 6), C(-1, 6));
  REQUIRE(w);
  CHECK(*w == AlgebraWitness{Z(0), Z(-1)});
  CHECK_FALSE(algebra_isomorphic(C(1, 6), C(1, 5)).has_value());
  CHECK(verify_algebra_witness(C(1, 6), C(9, 26), {Z(4), Z(1)}));

  const Ring q = Ring::rationals();
  const QuadraticAlgebra cq{Elem(q, 0L), Elem(q, 1L)}, cq4{Elem(q, 0L), Elem(q, 4L)};
  CHECK(algebra_isomorphisms(cq, cq4).size() == 2);
  const QuadraticAlgebra deg{Elem(q, 0L), Elem(q, 0L)};
  CHECK_THROWS_AS(algebra_isomorphisms(deg, deg), Error);
}

TEST_CASE("automorphisms") {
  CHECK(automorphisms(C(1, 6)) == std::vector<AlgebraWitness>{{Z(0), Z(1)}, {Z(1), Z(-1)}});
  CHECK(automorphisms(C(0, 2)) == std::vector<AlgebraWitness>{{Z(0), Z(1)}, {Z(0), Z(-1)}});
  CHECK(oriented_automorphisms(C(1, 6)) == std::vector<AlgebraWitness>{{Z(0), Z(1)}});
  const Ring r2 = Ring::modular(2);
  CHECK_THROWS_AS(automorphisms({Elem(r2, 1L), Elem(r2, 1L)}), Error);
  // Over Z/15 the scale can be any square root of 1.
  const Ring r15 = Ring::modular(15);
  CHECK(automorphisms({Elem(r15, 1L), Elem(r15, 1L)}).size() == 4);
}

TEST_CASE("quaternion multiplication") {
  const Form q = F(1, 0, 1);
  CHECK(quat_mul(q, Q(0, 0, 1, 0), Q(0, 0, 0, 1)) == Q(0, 1, 0, 0));
  CHECK(quat_mul(q, Q(0, 0, 0, 1), Q(0, 0, 1, 0)) == Q(0, -1, 0, 0));
  CHECK(quat_mul(F(1, 0, -1), Q(0, 0, 1, 1), Q(0, 0, 1, 1)) == Q(0, 0, 0, 0));
  CHECK(quat_mul(F(2, 1, 3), Q(0, 0, 1, 0), Q(0, 0, 1, 0)) == Q(2, 0, 0, 0));
  CHECK(quat_mul(F(2, 1, 3), Q(0, 0, 1, 0), Q(0, 0, 0, 1)) == Q(0, 1, 0, 0));
}

TEST_CASE("quaternion trace and norm") {
  const Form q = F(1, 0, 1);
  CHECK(quat_trace(q, Q(1, 0, 1, 0)) == Z(2));
  CHECK(quat_norm(q, Q(1, 0, 1, 0)) == Z(0));
  CHECK(quat_norm(q, Q(0, 1, 0, 0)) == Z(1));
  CHECK(quat_norm(q, Q(0, 0, 1, 0)) * quat_norm(q, Q(0, 0, 0, 1)) == Z(1));
  CHECK(quat_trace(F(2, 1, 3), Q(1, 0, 0, 0)) == Z(2));
  CHECK(quat_norm(F(2, 1, 3), Q(1, 0, 0, 0)) == Z(1));
  const Form g = F(2, 1, 3);
  const QuaternionElem z = Q(1, 2, -1, 3);
  CHECK(quat_mul(g, z, quat_conj(g, z)) == quat_scalar(quat_norm(g, z)));
}
