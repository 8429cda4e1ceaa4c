#include "bqf/pairs.hpp"

#include <utility>

namespace bqf {

bool is_traceable(const CliffordPair& p) { return is_traceable(p.alg, p.m); }

NormalizedPair normalize_pair(const CliffordPair& p) {
  if (!is_traceable(p)) throw Error(ErrorKind::NotTraceable, "pair is not traceable");
  const Elem m = p.m(1, 1);
  const Elem zero = m.zero();
  QuadraticAlgebra alg{p.alg.t - 2 * m, p.alg.nm - m * p.alg.t + m * m};
  Mat shifted = p.m - Mat::scalar(m, zero);
  return {{std::move(alg), std::move(shifted)}, m};
}

Form pair_to_form(const CliffordPair& p) {
  const NormalizedPair n = normalize_pair(p);
  const Mat& mm = n.pair.m;
  Form q(-mm(1, 0), mm(0, 0), mm(0, 1));
  if (q.b != n.pair.alg.t || q.a * q.c != n.pair.alg.nm) {
    throw Error(ErrorKind::InconsistentPair, "normalized pair does not satisfy tau^2 = b tau - ac");
  }
  return q;
}

CliffordPair form_to_pair(const Form& q) {
  CliffordModule mod = clifford_bimodule(q);
  return {std::move(mod.alg), std::move(mod.left)};
}

bool verify_pair_witness(const CliffordPair& p, const CliffordPair& p2, const PairWitness& w) {
  if (!is_unit(w.psi.det())) return false;
  if (!verify_algebra_witness(p.alg, p2.alg, w.alg)) return false;
  const Elem zero = w.alg.k.zero();
  return p2.m * w.psi == w.psi * (Mat::scalar(w.alg.k, zero) + w.alg.eps * p.m);
}

namespace {

// X -> Y followed by Y -> Z.
PairWitness then(const PairWitness& xy, const PairWitness& yz) {
  return {yz.psi * xy.psi, {yz.alg.k + yz.alg.eps * xy.alg.k, yz.alg.eps * xy.alg.eps}};
}

PairWitness shift_witness(const Ring& ring, const Elem& k) {
  return {identity_mat(ring), {k, Elem(ring, 1L)}};
}

}  // namespace

PairWitness pair_witness_from_similarity(const Form& q, const SimilarityWitness& s) {
  const Mat& a = s.m;
  const Elem& p = a(0, 0);
  const Elem& r = a(1, 0);
  const Elem& sx = a(0, 1);
  const Elem& w = a(1, 1);
  // (A e1)(A e2) = k0 + det(A) tau in the Clifford algebra of q.
  const Elem k0 = p * sx * q.a + r * sx * q.b + r * w * q.c;
  const Elem det = a.det();
  Mat inverse = det.inverse() * a.adjugate();
  return {std::move(inverse), {s.u * k0, s.u * det}};
}

PairVerdict pairs_isomorphic(const CliffordPair& p, const CliffordPair& p2,
                             const SimilarityOptions& opts) {
  const NormalizedPair n1 = normalize_pair(p);
  const NormalizedPair n2 = normalize_pair(p2);
  const Form q1 = pair_to_form(p);
  const Form q2 = pair_to_form(p2);
  const SimilarityVerdict v = similar(q1, q2, opts);
  if (v.verdict == Verdict::NotSimilar) return {Verdict::NotSimilar, std::nullopt, v.reason, 0};
  if (v.verdict == Verdict::Unknown) return {Verdict::Unknown, std::nullopt, {}, v.bound};

  const Ring& ring = p.ring();
  PairWitness w = shift_witness(ring, -n1.shift);
  w = then(w, pair_witness_from_similarity(q1, *v.witness));
  w = then(w, shift_witness(ring, n2.shift));
  if (!verify_pair_witness(p, p2, w)) {
    throw Error(ErrorKind::InconsistentPair, "transported pair witness failed to verify");
  }
  return {Verdict::Similar, std::move(w), {}, 0};
}

std::optional<PairWitness> search_pair_isomorphism(const CliffordPair& p, const CliffordPair& p2,
                                                   int bound) {
  const Ring& ring = p.ring();
  if (!(ring == p2.ring())) throw Error(ErrorKind::IncompatibleRings, "pairs over different rings");
  const Elem zero(ring, 0L);

  std::vector<Int> range;
  if (ring.is_modular() && ring.modulus() <= 2 * bound + 1) {
    for (Int x = 0; x < ring.modulus(); ++x) range.push_back(x);
  } else {
    for (long x = -bound; x <= bound; ++x) range.push_back(x);
  }

  for (const AlgebraWitness& aw : algebra_isomorphisms(p.alg, p2.alg)) {
    const Mat n = Mat::scalar(aw.k, zero) + aw.eps * p.m;
    auto check = [&](Mat psi) -> std::optional<PairWitness> {
      PairWitness w{std::move(psi), aw};
      if (verify_pair_witness(p, p2, w)) return w;
      return std::nullopt;
    };
    // psi N e1 = M' psi e1 gives psi e2 = (M' - N00) psi e1 / N10 when N10 is
    // invertible over Q, or divides exactly over Z.
    const bool derive = !ring.is_modular() && !n(1, 0).is_zero();
    for (const Int& x : range) {
      for (const Int& y : range) {
        const Vec v = make_vec(ring, x, y);
        if (derive) {
          const Vec image = p2.m * v;
          const Elem wx = image.x - n(0, 0) * v.x;
          const Elem wy = image.y - n(0, 0) * v.y;
          if (ring.is_integers() &&
              (wx.to_int() % n(1, 0).to_int() != 0 || wy.to_int() % n(1, 0).to_int() != 0)) {
            continue;
          }
          Mat psi{v.x, divide(wx, n(1, 0)), v.y, divide(wy, n(1, 0))};
          if (auto w = check(std::move(psi))) return w;
          continue;
        }
        for (const Int& s : range) {
          for (const Int& t : range) {
            if (auto w = check(make_mat(ring, x, s, y, t))) return w;
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Form clifford_form_to_wood_form(const Form& q) { return Form(q.c, -q.b, q.a); }

CliffordPair wood_pair(const Form& f) {
  const Elem zero = f.a.zero();
  // Columns: tau x = -B x - C y, tau y = A x.
  return {{-f.b, f.a * f.c}, Mat{-f.b, f.a, -f.c, zero}};
}

DualTrace dual_form_trace(const Form& q) {
  const Form w = clifford_form_to_wood_form(q);
  std::vector<DualStage> stages;
  stages.push_back({"q", "E", "classical", q, form_to_pair(q)});
  stages.push_back({"q_W", "E", "wood", w, std::nullopt});
  // Kneser reading of the Wood form on the dual module: tau^2 = -b tau - ac,
  // tau e1* = -b e1* - c e2*, tau e2* = a e1*.
  stages.push_back({"(q_W)_K", "E_dual", "classical", w, wood_pair(q)});
  const Form back = clifford_form_to_wood_form(w);
  stages.push_back({"((q_W)_K)_W", "E_dual", "wood", back, std::nullopt});
  stages.push_back({"(((q_W)_K)_W)_K", "E", "classical", back, form_to_pair(back)});
  return {w, std::move(stages)};
}

Form dual_form(const Form& q) { return dual_form_trace(q).dual; }

namespace {

Form promote(const Form& q) {
  if (q.ring().is_rationals()) return q;
  if (!q.ring().is_integers()) throw Error(ErrorKind::UnsupportedRing, "dual conics need int or rat");
  const Hom h(Ring::integers(), Ring::rationals());
  return Form(h(q.a), h(q.b), h(q.c));
}

}  // namespace

Form dual_conic(const Form& input) {
  const Form q = promote(input);
  const Elem det = q.a * q.c - divide(q.b * q.b, Elem(q.ring(), 4L));
  if (!det.is_zero()) {
    const Elem s = det.inverse();
    return Form(s * q.c, -(s * q.b), s * q.a);
  }
  // q = (alpha x + beta y)^2 -> (beta x - alpha y)^2.
  const auto alpha = rational_sqrt(q.a.value());
  const auto beta_abs = rational_sqrt(q.c.value());
  if (!alpha || !beta_abs) {
    throw Error(ErrorKind::NotAPerfectSquare, q.to_string() + " is not a square of a linear form");
  }
  Rat beta = *beta_abs;
  if (2 * *alpha * beta != q.b.value()) beta = -beta;
  if (2 * *alpha * beta != q.b.value()) {
    throw Error(ErrorKind::NotAPerfectSquare, q.to_string() + " is not a square of a linear form");
  }
  const Ring& r = q.ring();
  return Form(Elem(r, Rat(beta * beta)), Elem(r, Rat(-2 * *alpha * beta)), Elem(r, Rat(*alpha * *alpha)));
}

namespace {

using Poly = std::vector<Rat>;  // coefficients in t, lowest degree first

Poly poly_add(const Poly& x, const Poly& y) {
  Poly out(std::max(x.size(), y.size()), Rat(0));
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

Poly poly_mul(const Poly& x, const Poly& y) {
  if (x.empty() || y.empty()) return {};
  Poly out(x.size() + y.size() - 1, Rat(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

Poly poly_scale(const Rat& s, Poly p) {
  for (auto& c : p) c *= s;
  return p;
}

std::size_t order_at_zero(const Poly& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) return i;
  return p.size();
}

Rat coeff(const Poly& p, std::size_t i) { return i < p.size() ? p[i] : Rat(0); }

}  // namespace

Form dual_conic_limit(const Form& input, const Form& gin) {
  const Form q = promote(input);
  const Form g = promote(gin);
  const Poly a{q.a.value(), g.a.value()};
  const Poly b{q.b.value(), g.b.value()};
  const Poly c{q.c.value(), g.c.value()};
  const Poly det = poly_add(poly_mul(a, c), poly_scale(Rat(-1, 4), poly_mul(b, b)));
  if (order_at_zero(det) == det.size()) {
    throw Error(ErrorKind::BadDiscriminant, "the family q + t g is degenerate for every t");
  }
  // dual(q_t) = (c(t), -b(t), a(t)) / det(t). As a point of the projective
  // plane the det(t) factor drops out; what remains is polynomial in t and
  // its limit is the lowest-order coefficient shared by all three entries.
  const std::vector<Poly> numerators{c, poly_scale(Rat(-1), b), a};
  std::size_t common = numerators[0].size();
  for (const Poly& p : numerators) common = std::min(common, order_at_zero(p));
  const Ring r = Ring::rationals();
  return Form(Elem(r, coeff(numerators[0], common)), Elem(r, coeff(numerators[1], common)),
              Elem(r, coeff(numerators[2], common)));
}

}  // namespace bqf
