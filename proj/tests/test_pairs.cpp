#include <doctest.h>

#include "bqf/pairs.hpp"
#include "support.hpp"

using namespace bqf;
using namespace bqf::testing;

namespace {

CliffordPair P(long t, long nm, const Mat& m) { return {{Z(t), Z(nm)}, m}; }

}  // namespace

TEST_CASE("normalization") {
  const NormalizedPair n = normalize_pair(P(9, 20, M(7, 6, -1, 2)));
  CHECK(n.shift == Z(2));
  CHECK(n.pair == P(5, 6, M(5, 6, -1, 0)));
  CHECK(normalize_pair(P(1, 6, M(1, 3, -2, 0))).shift == Z(0));
  CHECK(normalize_pair(P(0, -1, M(0, 1, 1, 0))).pair == P(0, -1, M(0, 1, 1, 0)));
  CHECK_THROWS_AS(normalize_pair(P(1, 0, M(1, 0, 0, 1))), Error);
}

TEST_CASE("pair to form") {
  CHECK(pair_to_form(P(1, 6, M(1, 3, -2, 0))) == F(2, 1, 3));
  CHECK(pair_to_form(P(9, 20, M(7, 6, -1, 2))) == F(1, 5, 6));
  CHECK(pair_to_form(P(0, -1, M(0, 1, 1, 0))) == F(-1, 0, 1));
  CHECK(form_to_pair(F(2, 1, 3)) == P(1, 6, M(1, 3, -2, 0)));
  CHECK(form_to_pair(F(0, 0, 0)) == P(0, 0, M(0, 0, 0, 0)));
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c) CHECK(pair_to_form(form_to_pair(F(a, b, c))) == F(a, b, c));
}

TEST_CASE("pair isomorphism") {
  const CliffordPair p = form_to_pair(F(4, 5, 3)), p2 = form_to_pair(F(2, -1, 3));
  const PairVerdict v = pairs_isomorphic(p, p2);
  REQUIRE(v.is_isomorphic());
  CHECK(verify_pair_witness(p, p2, *v.witness));
  CHECK(search_pair_isomorphism(p, p2, 6).has_value());

  const PairVerdict no = pairs_isomorphic(form_to_pair(F(1, 0, 1)), form_to_pair(F(1, 1, 1)));
  CHECK(no.verdict == Verdict::NotSimilar);

  const PairVerdict self = pairs_isomorphic(p, p);
  REQUIRE(self.is_isomorphic());
  CHECK(self.witness->psi == M(1, 0, 0, 1));
  CHECK(self.witness->alg == AlgebraWitness{Z(0), Z(1)});

  // A shifted, conjugated copy of a normalized pair.
  const CliffordPair shifted = P(9, 20, M(7, 6, -1, 2));
  const PairVerdict s = pairs_isomorphic(shifted, form_to_pair(F(1, 5, 6)));
  REQUIRE(s.is_isomorphic());
  CHECK(verify_pair_witness(shifted, form_to_pair(F(1, 5, 6)), *s.witness));
}

TEST_CASE("similarity witness transport") {
  const Form q = F(2, 1, 3);
  const SimilarityWitness w{M(2, 1, 1, 1), Z(-1)};
  const Form q2 = act(q, w.m, w.u);
  CHECK(verify_pair_witness(form_to_pair(q), form_to_pair(q2), pair_witness_from_similarity(q, w)));
}

TEST_CASE("Wood forms") {
  CHECK(clifford_form_to_wood_form(F(2, 1, 3)) == F(3, -1, 2));
  CHECK(clifford_form_to_wood_form(F(1, 1, 1)) == F(1, -1, 1));
  CHECK(clifford_form_to_wood_form(F(4, 0, 9)) == F(9, 0, 4));
  CHECK(wood_pair(F(2, 1, 3)) == P(-1, 6, M(-1, 2, -3, 0)));
}

TEST_CASE("dual form") {
  CHECK(dual_form(F(1, 1, 1)) == F(1, -1, 1));
  CHECK(dual_form(dual_form(F(1, 1, 1))) == F(1, 1, 1));
  CHECK(dual_form(F(0, 5, 0)) == F(0, -5, 0));
  const DualTrace t = dual_form_trace(F(2, 1, 3));
  REQUIRE(t.stages.size() == 5);
  CHECK(t.stages[1].form == F(3, -1, 2));
  // tau e1* = -e1* - 3 e2*, tau e2* = 2 e1*
  REQUIRE(t.stages[2].relations);
  CHECK(t.stages[2].relations->m == M(-1, 2, -3, 0));
  CHECK(t.stages[4].form == F(2, 1, 3));
}

TEST_CASE("dual conic") {
  const Ring q = Ring::rationals();
  auto R = [&](long n, long d = 1) { return Elem(q, Rat(n, d)); };
  CHECK(dual_conic(F(q, 1, 0, 1)) == F(q, 1, 0, 1));
  CHECK(dual_conic(F(q, 1, 3, 1)) == Form(R(-4, 5), R(12, 5), R(-4, 5)));
  CHECK(dual_conic(F(q, 1, 4, 4)) == F(q, 4, -4, 1));
  CHECK(dual_conic(F(1, 4, 4)) == F(q, 4, -4, 1));
  CHECK_THROWS_AS(dual_conic(F(q, 2, 0, 0)), Error);
  CHECK(dual_conic_limit(F(q, 1, 4, 4), F(q, 1, 1, 1)) == F(q, 4, -4, 1));
  CHECK(dual_conic_limit(F(q, 0, 0, 0), F(q, 1, 0, 1)) == F(q, 1, 0, 1));
}
