#include "bqf/compose.hpp"

namespace bqf {

namespace {

void require_composable(const Form& q1, const Form& q2) {
  for (const Form* q : {&q1, &q2}) {
    if (!q->ring().is_integers()) throw Error(ErrorKind::UnsupportedRing, "composition needs integral forms");
    if (q->is_zero() || !is_primitive(*q)) {
      throw Error(ErrorKind::NotPrimitive, q->to_string() + " is not primitive");
    }
  }
  if (discriminant(q1).classical != discriminant(q2).classical) {
    throw Error(ErrorKind::NotComposable, "discriminants of " + q1.to_string() + " and " +
                                              q2.to_string() + " differ");
  }
}

}  // namespace

Form compose(const Form& q1, const Form& q2, Twist twist) {
  require_composable(q1, q2);
  const IdealLattice i1 = form_to_ideal(q1);
  const IdealLattice i2 = form_to_ideal(q2);
  const Elem want = Elem(Ring::integers(), twist == Twist::Oriented ? 1L : -1L);
  for (const AlgebraWitness& w : algebra_isomorphisms(i1.alg(), i2.alg())) {
    if (w.eps != want) continue;
    return universal_norm_form(ideal_multiply(i1, transport(i2, i1.alg(), w)));
  }
  throw Error(ErrorKind::NotComposable, "no algebra isomorphism with the requested orientation");
}

Form identity_form(const QuadraticAlgebra& alg) { return Form(alg.t.one(), alg.t, alg.nm); }

Form inverse_form(const Form& q) {
  if (!q.ring().is_integers() || q.is_zero() || !is_primitive(q)) {
    throw Error(ErrorKind::NotPrimitive, q.to_string() + " is not a primitive integral form");
  }
  return universal_norm_form(ideal_conjugate(form_to_ideal(q)));
}

namespace {

// A properly equivalent form whose first coefficient is nonzero and coprime
// to m.
Form with_leading_coprime_to(const Form& q, const Int& m) {
  const Int a = q.a.to_int();
  if (a != 0 && gcd(a, m) == 1) return q;
  const Ring& r = q.ring();
  const Elem one(r, 1L);
  for (long radius = 1;; ++radius) {
    for (long x = -radius; x <= radius; ++x) {
      for (long y = 0; y <= radius; ++y) {
        if (std::max(std::abs(x), y) != radius || gcd(Int(x), Int(y)) != 1) continue;
        const Int v = evaluate(q, Elem(r, x), Elem(r, y)).to_int();
        if (v == 0 || gcd(v, m) != 1) continue;
        // Complete (x, y) to an SL2 matrix [[x, s], [y, w]].
        Int g, u, t;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), t.get_mpz_t(), Int(x).get_mpz_t(), Int(y).get_mpz_t());
        if (g < 0) {
          u = -u;
          t = -t;
        }
        return act(q, make_mat(r, x, -t, y, u), one);
      }
    }
  }
}

}  // namespace

Form dirichlet_compose(const Form& q1_in, const Form& q2_in) {
  require_composable(q1_in, q2_in);
  const Int d = discriminant(q1_in).classical.to_int();
  const Form q1 = with_leading_coprime_to(q1_in, 1);
  Form q2 = q2_in;
  {
    const Int a1 = q1.a.to_int(), a2 = q2.a.to_int();
    const Int half = (q1.b.to_int() + q2.b.to_int()) / 2;
    if (a2 == 0 || gcd(gcd(a1, a2), half) != 1) q2 = with_leading_coprime_to(q2, a1);
  }
  const Int a1 = q1.a.to_int(), b1 = q1.b.to_int();
  const Int a2 = q2.a.to_int(), b2 = q2.b.to_int();
  const Int m1 = 2 * abs(a1), m2 = 2 * abs(a2), m3 = 4 * abs(a1 * a2);
  // B = b1 (mod 2a1), B = b2 (mod 2a2), B^2 = D (mod 4 a1 a2); the solution
  // is unique modulo 2 a1 a2.
  for (Int k = 0; k < abs(a2); ++k) {
    const Int b3 = b1 + m1 * k;
    Int r2 = (b3 - b2) % m2;
    Int r3 = (b3 * b3 - d) % m3;
    if (r2 != 0 || r3 != 0) continue;
    const Int a3 = a1 * a2;
    const Int c3 = (b3 * b3 - d) / (4 * a3);
    return Form(Ring::integers(), a3, b3, c3);
  }
  throw Error(ErrorKind::NotComposable, "no solution to the composition congruences for " +
                                            q1.to_string() + " and " + q2.to_string());
}

}  // namespace bqf
