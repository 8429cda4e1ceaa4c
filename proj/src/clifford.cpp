#include "bqf/clifford.hpp"

#include <algorithm>
#include <array>

namespace bqf {

QuadraticAlgebra even_clifford(const Form& q) { return {q.b, q.a * q.c}; }

Elem alg_discriminant(const QuadraticAlgebra& alg) { return alg.t * alg.t - 4 * alg.nm; }

EvenElem mul(const QuadraticAlgebra& alg, const EvenElem& z, const EvenElem& w) {
  // (x + y tau)(u + v tau) = xu - nm yv + (xv + yu + t yv) tau
  const Elem yv = z.y * w.y;
  return {z.x * w.x - alg.nm * yv, z.x * w.y + z.y * w.x + alg.t * yv};
}

EvenElem conj(const QuadraticAlgebra& alg, const EvenElem& z) { return {z.x + z.y * alg.t, -z.y}; }

Elem trace(const QuadraticAlgebra& alg, const EvenElem& z) { return 2 * z.x + z.y * alg.t; }

Elem norm(const QuadraticAlgebra& alg, const EvenElem& z) {
  return z.x * z.x + alg.t * z.x * z.y + alg.nm * z.y * z.y;
}

Mat regular_representation(const QuadraticAlgebra& alg) {
  const Elem zero = alg.t.zero();
  return {zero, -alg.nm, zero.one(), alg.t};
}

bool satisfies_module_axiom(const QuadraticAlgebra& alg, const Mat& m) {
  const Elem zero = alg.t.zero();
  return m * m == alg.t * m - Mat::scalar(alg.nm, zero);
}

bool is_traceable(const QuadraticAlgebra& alg, const Mat& m) {
  if (!satisfies_module_axiom(alg, m)) {
    throw Error(ErrorKind::NotAModule, "action matrix does not satisfy tau^2 = t tau - nm");
  }
  return m.trace() == alg.t;
}

CliffordModule clifford_bimodule(const Form& q) {
  const Elem zero = q.a.zero();
  Mat left{q.b, q.c, -q.a, zero};
  Mat right{zero, -q.c, q.a, q.b};
  return {even_clifford(q), std::move(left), std::move(right)};
}

// ---------------------------------------------------------------------------

bool verify_algebra_witness(const QuadraticAlgebra& from, const QuadraticAlgebra& to,
                            const AlgebraWitness& w) {
  if (!is_unit(w.eps)) return false;
  const EvenElem image{w.k, w.eps};
  return trace(from, image) == to.t && norm(from, image) == to.nm;
}

namespace {

void require_two_regular(const Ring& ring) {
  if (!ring.two_is_regular()) {
    throw Error(ErrorKind::UnsupportedRing, "2 is a zero divisor in " + ring.name());
  }
}

}  // namespace

std::vector<AlgebraWitness> algebra_isomorphisms(const QuadraticAlgebra& from,
                                                 const QuadraticAlgebra& to) {
  const Ring& ring = from.ring();
  if (!(ring == to.ring())) throw Error(ErrorKind::IncompatibleRings, "algebras over different rings");
  require_two_regular(ring);

  // trace: 2k + eps t = t'. norm then reduces to eps^2 disc = disc'.
  const Elem d = alg_discriminant(from);
  const Elem d2 = alg_discriminant(to);
  std::vector<Elem> scales;
  switch (ring.kind()) {
    case RingKind::Integers:
      scales = units(ring);
      break;
    case RingKind::Modular:
      for (Elem& e : units(ring)) {
        if (e * e * d == d2) scales.push_back(std::move(e));
      }
      break;
    case RingKind::Rationals: {
      if (d.is_zero() && d2.is_zero()) {
        throw Error(ErrorKind::UnsupportedRing,
                    "degenerate algebras over rat have infinitely many isomorphisms");
      }
      if (d.is_zero() || d2.is_zero()) return {};
      if (auto r = rational_sqrt(d2.value() / d.value())) {
        scales = {Elem(ring, *r), Elem(ring, Rat(-*r))};
      }
      break;
    }
  }

  std::vector<AlgebraWitness> out;
  for (const Elem& eps : scales) {
    const Elem twice_k = to.t - eps * from.t;
    Elem k = twice_k.zero();
    if (ring.is_integers()) {
      if (mpz_odd_p(twice_k.to_int().get_mpz_t())) continue;
      k = Elem(ring, Int(twice_k.to_int() / 2));
    } else {
      k = divide(twice_k, Elem(ring, 2L));
    }
    AlgebraWitness w{k, eps};
    if (verify_algebra_witness(from, to, w)) out.push_back(std::move(w));
  }
  return out;
}

std::optional<AlgebraWitness> algebra_isomorphic(const QuadraticAlgebra& from,
                                                 const QuadraticAlgebra& to) {
  auto all = algebra_isomorphisms(from, to);
  if (all.empty()) return std::nullopt;
  auto size = [](const AlgebraWitness& w) {
    Rat k = w.k.ring().is_rationals() ? w.k.value() : Rat(symmetric_residue(w.k));
    return abs(k);
  };
  auto best = std::min_element(all.begin(), all.end(), [&](const auto& x, const auto& y) {
    const Rat sx = size(x), sy = size(y);
    if (sx != sy) return sx < sy;
    return x.eps.is_one() && !y.eps.is_one();
  });
  return *best;
}

std::vector<AlgebraWitness> automorphisms(const QuadraticAlgebra& alg) {
  auto all = algebra_isomorphisms(alg, alg);
  // Identity first.
  std::stable_partition(all.begin(), all.end(),
                        [](const AlgebraWitness& w) { return w.eps.is_one() && w.k.is_zero(); });
  return all;
}

std::vector<AlgebraWitness> oriented_automorphisms(const QuadraticAlgebra& alg) {
  std::vector<AlgebraWitness> out;
  for (auto& w : automorphisms(alg)) {
    if (w.eps.is_one()) out.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using Coeffs = std::array<Elem, 4>;  // over (1, tau, e1, e2)

// Products of basis elements from the Clifford relations:
//   e1^2 = a, e2^2 = c, e1 e2 = tau, e2 e1 = b - tau, tau^2 = b tau - ac,
//   tau e1 = b e1 - a e2, tau e2 = c e1, e1 tau = a e2, e2 tau = b e2 - c e1.
Coeffs basis_product(const Form& q, int i, int j) {
  const Elem z = q.a.zero();
  const Elem one = z.one();
  if (i == 0) {
    Coeffs r{z, z, z, z};
    r[j] = one;
    return r;
  }
  if (j == 0) {
    Coeffs r{z, z, z, z};
    r[i] = one;
    return r;
  }
  const Elem& a = q.a;
  const Elem& b = q.b;
  const Elem& c = q.c;
  switch (4 * i + j) {
    case 4 * 1 + 1: return {-(a * c), b, z, z};
    case 4 * 1 + 2: return {z, z, b, -a};
    case 4 * 1 + 3: return {z, z, c, z};
    case 4 * 2 + 1: return {z, z, z, a};
    case 4 * 2 + 2: return {a, z, z, z};
    case 4 * 2 + 3: return {z, one, z, z};
    case 4 * 3 + 1: return {z, z, -c, b};
    case 4 * 3 + 2: return {b, -one, z, z};
    case 4 * 3 + 3: return {c, z, z, z};
  }
  return {z, z, z, z};
}

Coeffs coeffs(const QuaternionElem& z) { return {z.x0, z.x1, z.y1, z.y2}; }

}  // namespace

QuaternionElem quat_scalar(const Elem& s) {
  const Elem z = s.zero();
  return {s, z, z, z};
}

QuaternionElem quat_mul(const Form& q, const QuaternionElem& z, const QuaternionElem& w) {
  const Coeffs zc = coeffs(z);
  const Coeffs wc = coeffs(w);
  const Elem zero = q.a.zero();
  Coeffs out{zero, zero, zero, zero};
  for (int i = 0; i < 4; ++i) {
    if (zc[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (wc[j].is_zero()) continue;
      const Elem s = zc[i] * wc[j];
      const Coeffs p = basis_product(q, i, j);
      for (int k = 0; k < 4; ++k) out[k] += s * p[k];
    }
  }
  return {out[0], out[1], out[2], out[3]};
}

QuaternionElem quat_add(const QuaternionElem& z, const QuaternionElem& w) {
  return {z.x0 + w.x0, z.x1 + w.x1, z.y1 + w.y1, z.y2 + w.y2};
}

QuaternionElem quat_scale(const Elem& s, const QuaternionElem& z) {
  return {s * z.x0, s * z.x1, s * z.y1, s * z.y2};
}

QuaternionElem quat_conj(const Form& q, const QuaternionElem& z) {
  return {z.x0 + z.x1 * q.b, -z.x1, -z.y1, -z.y2};
}

Elem quat_trace(const Form& q, const QuaternionElem& z) {
  const QuaternionElem s = quat_add(z, quat_conj(q, z));
  if (!s.is_scalar()) throw Error(ErrorKind::NonScalarNorm, "z + conj(z) is not a scalar");
  return s.x0;
}

Elem quat_norm(const Form& q, const QuaternionElem& z) {
  const QuaternionElem p = quat_mul(q, z, quat_conj(q, z));
  if (!p.is_scalar()) throw Error(ErrorKind::NonScalarNorm, "z conj(z) is not a scalar");
  return p.x0;
}

}  // namespace bqf
