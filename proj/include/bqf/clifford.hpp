#pragma once

#include <optional>
#include <vector>

#include "bqf/form.hpp"

namespace bqf {

/// Free rank-2 algebra <1, tau> with tau^2 = t tau - nm.
///
/// In the x^2 + r x + s convention this is r = -t, s = nm; the algebra
/// discriminant r^2 - 4s equals t^2 - 4 nm either way.
struct QuadraticAlgebra {
  Elem t;
  Elem nm;

  const Ring& ring() const { return t.ring(); }
  friend bool operator==(const QuadraticAlgebra& x, const QuadraticAlgebra& y) {
    return x.t == y.t && x.nm == y.nm;
  }
};

/// x + y tau.
struct EvenElem {
  Elem x;
  Elem y;
  friend bool operator==(const EvenElem& p, const EvenElem& q) { return p.x == q.x && p.y == q.y; }
};

QuadraticAlgebra even_clifford(const Form& q);
Elem alg_discriminant(const QuadraticAlgebra& alg);

EvenElem mul(const QuadraticAlgebra& alg, const EvenElem& z, const EvenElem& w);
EvenElem conj(const QuadraticAlgebra& alg, const EvenElem& z);
Elem trace(const QuadraticAlgebra& alg, const EvenElem& z);
Elem norm(const QuadraticAlgebra& alg, const EvenElem& z);

/// Matrix of left multiplication by tau on the basis (1, tau).
Mat regular_representation(const QuadraticAlgebra& alg);

/// M^2 = t M - nm I.
bool satisfies_module_axiom(const QuadraticAlgebra& alg, const Mat& m);

/// trace(M) == t. Throws NotAModule when M does not satisfy the relation.
bool is_traceable(const QuadraticAlgebra& alg, const Mat& m);

/// Odd part of the Clifford algebra: the module E with tau acting on both
/// sides.
struct CliffordModule {
  QuadraticAlgebra alg;
  Mat left;
  std::optional<Mat> right;
};

/// left = [[b, c], [-a, 0]], right = [[0, -c], [a, b]].
CliffordModule clifford_bimodule(const Form& q);

// ---------------------------------------------------------------------------
// isomorphisms

/// An algebra isomorphism C -> C' presented by where the generator of C'
/// sits in C: tau' = k + eps * tau.
struct AlgebraWitness {
  Elem k;
  Elem eps;
  friend bool operator==(const AlgebraWitness& x, const AlgebraWitness& y) {
    return x.k == y.k && x.eps == y.eps;
  }
};

/// Relation transport: k + eps tau has trace t' and norm nm' in C.
bool verify_algebra_witness(const QuadraticAlgebra& from, const QuadraticAlgebra& to,
                            const AlgebraWitness& w);

/// Every isomorphism from -> to. Over Z the scale eps is +-1; over Z/n every
/// unit with eps^2 disc = disc'; over Q the two square roots of disc'/disc.
/// Throws UnsupportedRing when 2 is a zero divisor, and when both algebras
/// are degenerate over Q (the isomorphism set is then infinite).
std::vector<AlgebraWitness> algebra_isomorphisms(const QuadraticAlgebra& from,
                                                 const QuadraticAlgebra& to);

/// The isomorphism with smallest |k|, preferring eps = 1 on ties.
std::optional<AlgebraWitness> algebra_isomorphic(const QuadraticAlgebra& from,
                                                 const QuadraticAlgebra& to);

/// Over Z and Z/p this is {identity, conjugation}.
std::vector<AlgebraWitness> automorphisms(const QuadraticAlgebra& alg);

/// Automorphisms inducing the identity on C / R, i.e. eps = 1.
std::vector<AlgebraWitness> oriented_automorphisms(const QuadraticAlgebra& alg);

// ---------------------------------------------------------------------------
// full Clifford algebra C0 + C1 of a trivially valued form

/// x0 + x1 tau + y1 e1 + y2 e2.
struct QuaternionElem {
  Elem x0, x1, y1, y2;

  bool is_scalar() const { return x1.is_zero() && y1.is_zero() && y2.is_zero(); }
  friend bool operator==(const QuaternionElem& p, const QuaternionElem& q) {
    return p.x0 == q.x0 && p.x1 == q.x1 && p.y1 == q.y1 && p.y2 == q.y2;
  }
};

QuaternionElem quat_scalar(const Elem& s);
QuaternionElem quat_mul(const Form& q, const QuaternionElem& z, const QuaternionElem& w);
QuaternionElem quat_add(const QuaternionElem& z, const QuaternionElem& w);
QuaternionElem quat_scale(const Elem& s, const QuaternionElem& z);
QuaternionElem quat_conj(const Form& q, const QuaternionElem& z);
/// z + conj(z); throws NonScalarNorm if the sum is not a scalar.
Elem quat_trace(const Form& q, const QuaternionElem& z);
/// z conj(z); throws NonScalarNorm if the product is not a scalar.
Elem quat_norm(const Form& q, const QuaternionElem& z);

}  // namespace bqf
