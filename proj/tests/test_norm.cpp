#include <doctest.h>

#include "bqf/norm.hpp"
#include "support.hpp"

using namespace bqf;
using namespace bqf::testing;

namespace {

const QuadraticAlgebra C16{Z(1), Z(6)};

IdealLattice L(const QuadraticAlgebra& alg, long a, long b, long c, long d) {
  return IdealLattice(alg, IntMat(a, b, c, d));
}

}  // namespace

TEST_CASE("lattice validation") {
  CHECK_THROWS_AS(L(C16, 2, 0, 0, 0), Error);
  CHECK_THROWS_AS(L(C16, 5, 0, 0, 1), Error);  // <5, tau> is not tau-stable in C(1,6)
  CHECK_NOTHROW(L(C16, 2, 0, 0, 1));
  CHECK(L(C16, 2, 1, 0, -1).orientation() == -1);
  CHECK(L(C16, 2, 1, 0, -1).index() == 2);
}

TEST_CASE("ideal of a form") {
  const IdealLattice i = form_to_ideal(F(2, 1, 3));
  CHECK(i.alg() == C16);
  CHECK(i.orientation() == 1);
  CHECK(i.hermite().basis() == L(C16, 2, -1, 0, 1).hermite().basis());
  // Same set as the basis (2, 1 - tau), with the orientation fixed.
  CHECK(i.hermite().basis() == IntMat(2, 1, 0, 1));
  CHECK(form_to_ideal(F(1, 1, 6)) == unit_ideal(C16));
  CHECK(universal_norm_form(form_to_ideal(F(0, 1, 0))) == act(F(0, 1, 0), M(1, 0, 1, 1), Z(1)));
  CHECK_THROWS_AS(form_to_ideal(F(2, 4, 6)), Error);
}

TEST_CASE("norm forms") {
  const IdealLattice i = L(C16, 2, -1, 0, 1);
  CHECK(naive_norm_form(i) == F(4, 2, 6));
  CHECK(universal_norm_form(i) == F(2, 1, 3));
  CHECK(universal_norm_form(unit_ideal(C16)) == F(1, 1, 6));
  CHECK(universal_norm_form(L(C16, 10, -5, 0, 5)) == F(2, 1, 3));
  for (long a : {-3, -2, 2, 3, 5})
    for (long b = -4; b <= 4; ++b)
      for (long c : {-7, -2, 1, 4}) {
        const Form q = F(a, b, c);
        if (is_primitive(q)) CHECK(universal_norm_form(form_to_ideal(q)) == q);
      }
}

TEST_CASE("Clifford stability") {
  for (const Form& q : {F(1, 1, 6), F(2, 1, 3), F(3, 1, 2), F(5, 7, -2)}) {
    const IdealLattice i = form_to_ideal(q);
    const IdealClifford c = even_clifford_of_ideal(i);
    CHECK(c.alg == even_clifford(universal_norm_form(i)));
    CHECK(verify_algebra_witness(i.alg(), c.alg, c.witness));
  }
  const IdealClifford u = even_clifford_of_ideal(unit_ideal(C16));
  CHECK(u.alg == C16);
  CHECK(u.witness == AlgebraWitness{Z(0), Z(1)});
  // <3, 1 - tau> carries the form (3,1,2).
  const IdealLattice three = L(C16, 3, -1, 0, 1);
  CHECK(universal_norm_form(three) == F(3, 1, 2));
  CHECK(verify_algebra_witness(C16, even_clifford_of_ideal(three).alg, even_clifford_of_ideal(three).witness));
}

TEST_CASE("products and conjugates") {
  const IdealLattice p = L(C16, 2, -1, 0, 1);  // <2, 1 - tau>
  const IdealLattice s = ideal_conjugate(p);
  CHECK(s == L(C16, 2, 0, 0, 1));             // <2, tau>
  CHECK(ideal_conjugate(s) == p);
  CHECK(ideal_conjugate(unit_ideal(C16)) == unit_ideal(C16));

  const IdealLattice ps = ideal_multiply(p, s);
  CHECK(ps.index() == 4);
  CHECK(ps.hermite().basis() == IntMat(2, 0, 0, 2));
  CHECK(properly_equivalent(universal_norm_form(ps), F(1, 1, 6)));
  CHECK(ideal_multiply(p, unit_ideal(C16)) == p);
  CHECK(properly_equivalent(universal_norm_form(ideal_multiply(p, p)), F(2, -1, 3)));
  CHECK(properly_equivalent(universal_norm_form(ideal_multiply(p, p)), F(4, 5, 3)));
}

TEST_CASE("transport") {
  const QuadraticAlgebra c9{Z(9), Z(26)};
  // tau' = 4 + tau carries <2, tau' - 5> back to <2, tau - 1>.
  const IdealLattice there = L(c9, 2, -5, 0, 1);
  const IdealLattice here = transport(there, C16, {Z(4), Z(1)});
  CHECK(here == L(C16, 2, -1, 0, 1));
  CHECK(universal_norm_form(here) == universal_norm_form(there));
  const IdealLattice flipped = transport(L(C16, 2, -1, 0, 1), {Z(-1), Z(6)}, {Z(0), Z(-1)});
  CHECK(flipped.orientation() == 1);
}

TEST_CASE("base change") {
  const Hom to5(Ring::integers(), Ring::modular(5));
  const Hom to7(Ring::integers(), Ring::modular(7));
  const Hom toq(Ring::integers(), Ring::rationals());
  CHECK(base_change_checks(F(1, 1, 6), to5).passed());
  const BaseChangeReport r = base_change_checks(F(2, 1, 3), to7);
  CHECK(r.passed());
  CHECK(r.checks.size() == 4);
  CHECK(base_change_checks(F(2, 1, 3), toq).passed());
  const BaseChangeReport z = base_change_checks(F(0, 0, 0), to5);
  CHECK(z.passed());
  CHECK(z.checks.back().status == CheckStatus::Skipped);
  CHECK(clifford_bimodule(F(Ring::modular(7), 2, 1, 3)).left == make_mat(Ring::modular(7), 1, 3, 5, 0));
}
