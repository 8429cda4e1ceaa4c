#include "bqf/form.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace bqf {

Mat make_mat(const Ring& ring, const Int& a00, const Int& a01, const Int& a10, const Int& a11) {
  return {Elem(ring, a00), Elem(ring, a01), Elem(ring, a10), Elem(ring, a11)};
}

Mat identity_mat(const Ring& ring) { return make_mat(ring, 1, 0, 0, 1); }

Vec make_vec(const Ring& ring, const Int& x, const Int& y) { return {Elem(ring, x), Elem(ring, y)}; }

Form::Form(Elem a_, Elem b_, Elem c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (!(a.ring() == b.ring()) || !(a.ring() == c.ring())) {
    throw Error(ErrorKind::IncompatibleRings, "form coefficients live in different rings");
  }
}

std::string Form::to_string() const {
  return "(" + a.to_string() + "," + b.to_string() + "," + c.to_string() + ")";
}

Elem evaluate(const Form& q, const Elem& x, const Elem& y) {
  return q.a * x * x + q.b * x * y + q.c * y * y;
}

Elem polar(const Form& q, const Vec& v, const Vec& w) {
  // Expanded form of q(v + w) - q(v) - q(w).
  return 2 * q.a * v.x * w.x + q.b * (v.x * w.y + v.y * w.x) + 2 * q.c * v.y * w.y;
}

Discriminants discriminant(const Form& q) {
  Elem paper = 4 * q.a * q.c - q.b * q.b;
  Elem classical = -paper;
  return {std::move(paper), std::move(classical)};
}

bool is_primitive(const Form& q) {
  const Ring& ring = q.ring();
  switch (ring.kind()) {
    case RingKind::Integers:
      return is_unit(content({q.a, q.b, q.c}));
    case RingKind::Modular: {
      Int g = gcd(gcd(q.a.to_int(), q.b.to_int()), gcd(q.c.to_int(), ring.modulus()));
      return g == 1;
    }
    case RingKind::Rationals:
      return !q.is_zero();
  }
  return false;
}

Form act(const Form& q, const Mat& m, const Elem& u) {
  if (!is_unit(m.det())) {
    throw Error(ErrorKind::NotInvertible, "det " + m.det().to_string() + " is not a unit");
  }
  if (!is_unit(u)) throw Error(ErrorKind::NotInvertible, "scale " + u.to_string() + " is not a unit");
  const Vec v1{m(0, 0), m(1, 0)};
  const Vec v2{m(0, 1), m(1, 1)};
  return Form(u * evaluate(q, v1), u * polar(q, v1, v2), u * evaluate(q, v2));
}

// ---------------------------------------------------------------------------
// reduction

namespace {

struct IntForm {
  Int a, b, c;
};

struct IntMat {
  Int m00 = 1, m01 = 0, m10 = 0, m11 = 1;

  // this <- this * [[p, q], [r, s]]
  void right_mul(const Int& p, const Int& q, const Int& r, const Int& s) {
    Int n00 = m00 * p + m01 * r, n01 = m00 * q + m01 * s;
    Int n10 = m10 * p + m11 * r, n11 = m10 * q + m11 * s;
    m00 = n00; m01 = n01; m10 = n10; m11 = n11;
  }
};

// b -> b + 2ak with -a < b <= a, via x -> x + k y.
void normalize(IntForm& f, IntMat& w) {
  const Int k = floor_div(f.a - f.b, 2 * f.a);
  if (k == 0) return;
  f.c = f.a * k * k + f.b * k + f.c;
  f.b = f.b + 2 * f.a * k;
  w.right_mul(1, k, 0, 1);
}

void swap_sides(IntForm& f, IntMat& w) {
  std::swap(f.a, f.c);
  f.b = -f.b;
  w.right_mul(0, -1, 1, 0);
}

}  // namespace

bool is_reduced(const Form& q) {
  if (!q.ring().is_integers()) return false;
  const Int a = q.a.to_int(), b = q.b.to_int(), c = q.c.to_int();
  if (a <= 0) return false;
  if (!(-a < b && b <= a && a <= c)) return false;
  if (a == c && b < 0) return false;
  return true;
}

Reduction reduce_definite(const Form& q) {
  if (!q.ring().is_integers()) {
    throw Error(ErrorKind::UnsupportedRing, "reduction needs an integral form");
  }
  IntForm f{q.a.to_int(), q.b.to_int(), q.c.to_int()};
  if (f.b * f.b - 4 * f.a * f.c >= 0 || f.a <= 0) {
    throw Error(ErrorKind::NotDefinite, q.to_string() + " is not positive definite");
  }
  IntMat w;
  normalize(f, w);
  while (f.a > f.c) {
    swap_sides(f, w);
    normalize(f, w);
  }
  if (f.a == f.c && f.b < 0) swap_sides(f, w);
  const Ring z = Ring::integers();
  return {Form(z, f.a, f.b, f.c), make_mat(z, w.m00, w.m01, w.m10, w.m11)};
}

bool properly_equivalent(const Form& p, const Form& q) {
  if (discriminant(p).classical != discriminant(q).classical) return false;
  const Int pa = p.a.to_int(), qa = q.a.to_int();
  if ((pa > 0) != (qa > 0)) return false;
  if (pa > 0) return reduce_definite(p).form == reduce_definite(q).form;
  const Elem one(Ring::integers(), 1L), minus(Ring::integers(), -1L);
  const Mat id = identity_mat(Ring::integers());
  return reduce_definite(act(p, id, minus)).form == reduce_definite(act(q, id, minus)).form;
}

// ---------------------------------------------------------------------------
// similarity

bool verify_witness(const Form& q, const Form& q2, const SimilarityWitness& w) {
  if (!is_unit(w.m.det()) || !is_unit(w.u)) return false;
  const Ring& r = q.ring();
  const Vec probes[] = {make_vec(r, 1, 0), make_vec(r, 0, 1), make_vec(r, 1, 1)};
  for (const Vec& v : probes) {
    if (evaluate(q2, v) != w.u * evaluate(q, w.m * v)) return false;
  }
  return true;
}

namespace {

SimilarityVerdict not_similar(std::string reason) {
  return {Verdict::NotSimilar, std::nullopt, std::move(reason), 0};
}

SimilarityVerdict similar_with(SimilarityWitness w) {
  return {Verdict::Similar, std::move(w), {}, 0};
}

// Values of q on (Z/m)^2, as a sorted residue set.
std::set<long> value_set(const Form& q, long m) {
  std::set<long> out;
  const Int a = q.a.to_int(), b = q.b.to_int(), c = q.c.to_int();
  for (long x = 0; x < m; ++x) {
    for (long y = 0; y < m; ++y) {
      Int v = (a * x * x + b * x * y + c * y * y) % m;
      if (v < 0) v += m;
      out.insert(v.get_si());
    }
  }
  return out;
}

std::set<long> scaled(const std::set<long>& s, long u, long m) {
  std::set<long> out;
  for (long v : s) out.insert(((u * v) % m + m) % m);
  return out;
}

// Integral invariants: discriminant, content, value sets mod m up to sign.
std::optional<std::string> integral_obstruction(const Form& q, const Form& q2) {
  if (discriminant(q).classical != discriminant(q2).classical) return "discriminant";
  if (content({q.a, q.b, q.c}) != content({q2.a, q2.b, q2.c})) return "content";
  for (long m = 2; m <= 16; ++m) {
    const auto v1 = value_set(q, m);
    const auto v2 = value_set(q2, m);
    if (v2 != v1 && v2 != scaled(v1, -1, m)) return "value_set_mod_" + std::to_string(m);
  }
  return std::nullopt;
}

std::optional<std::string> modular_obstruction(const Form& q, const Form& q2) {
  const Ring& r = q.ring();
  const Elem d1 = discriminant(q).classical;
  const Elem d2 = discriminant(q2).classical;
  const auto us = units(r);
  bool disc_ok = false;
  for (const Elem& w : us) {
    if (w * w * d1 == d2) {
      disc_ok = true;
      break;
    }
  }
  if (!disc_ok) return "discriminant";
  // Value sets on the whole of (Z/n)^2 are only cheap for small moduli.
  if (r.modulus() <= 64) {
    const long n = r.modulus().get_si();
    const auto v1 = value_set(q, n);
    const auto v2 = value_set(q2, n);
    bool match = false;
    for (const Elem& u : us) {
      if (scaled(v1, u.to_int().get_si(), n) == v2) {
        match = true;
        break;
      }
    }
    if (!match) return "value_set";
  }
  return std::nullopt;
}

std::optional<std::string> rational_obstruction(const Form& q, const Form& q2) {
  const Rat d1 = discriminant(q).classical.value();
  const Rat d2 = discriminant(q2).classical.value();
  if ((d1 == 0) != (d2 == 0)) return "discriminant";
  if (q.is_zero() != q2.is_zero()) return "zero_form";
  if (d1 != 0) {
    // disc changes by the square (u det M)^2.
    const Rat ratio = d2 / d1;
    if (ratio < 0 || !mpz_perfect_square_p(ratio.get_num_mpz_t()) ||
        !mpz_perfect_square_p(ratio.get_den_mpz_t())) {
      return "discriminant_square_class";
    }
  }
  return std::nullopt;
}

std::vector<Vec> search_box(const Ring& ring, int bound, bool& exhaustive) {
  std::vector<Vec> out;
  exhaustive = false;
  if (ring.is_modular() && ring.modulus() <= 2 * bound + 1) {
    exhaustive = true;
    const long n = ring.modulus().get_si();
    for (long x = 0; x < n; ++x)
      for (long y = 0; y < n; ++y) out.push_back(make_vec(ring, x, y));
    return out;
  }
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y) out.push_back(make_vec(ring, x, y));
  return out;
}

}  // namespace

std::optional<SimilarityWitness> search_similarity(const Form& q, const Form& q2, int bound) {
  const Ring& ring = q.ring();
  bool exhaustive = false;
  const std::vector<Vec> box = search_box(ring, bound, exhaustive);
  std::vector<Elem> values;
  values.reserve(box.size());
  std::map<Rat, std::vector<std::size_t>> by_value;
  for (std::size_t i = 0; i < box.size(); ++i) {
    values.push_back(evaluate(q, box[i]));
    by_value[values.back().value()].push_back(i);
  }

  auto try_pair = [&](std::size_t i, std::size_t j, const Elem& u) -> std::optional<SimilarityWitness> {
    const Vec& v = box[i];
    const Vec& w = box[j];
    Mat m{v.x, w.x, v.y, w.y};
    if (!is_unit(m.det())) return std::nullopt;
    if (u * values[i] != q2.a || u * values[j] != q2.c) return std::nullopt;
    if (u * polar(q, v, w) != q2.b) return std::nullopt;
    return SimilarityWitness{std::move(m), u};
  };

  if (!ring.is_rationals()) {
    for (const Elem& u : units(ring)) {
      const Elem uinv = u.inverse();
      const auto bucket = by_value.find((q2.c * uinv).value());
      if (bucket == by_value.end()) continue;
      const Rat target_a = (q2.a * uinv).value();
      for (std::size_t i = 0; i < box.size(); ++i) {
        if (values[i].value() != target_a) continue;
        for (std::size_t j : bucket->second) {
          if (auto w = try_pair(i, j, u)) return w;
        }
      }
    }
    return std::nullopt;
  }

  // Over Q the scale is determined by any coefficient pair with q(v) != 0.
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (!q2.a.is_zero()) {
      if (values[i].is_zero()) continue;
      const Elem u = divide(q2.a, values[i]);
      const auto bucket = by_value.find(divide(q2.c, u).value());
      if (bucket == by_value.end()) continue;
      for (std::size_t j : bucket->second) {
        if (auto w = try_pair(i, j, u)) return w;
      }
    } else {
      if (!values[i].is_zero()) continue;
      for (std::size_t j = 0; j < box.size(); ++j) {
        Elem p = polar(q, box[i], box[j]);
        Elem u = !q2.c.is_zero() ? (values[j].is_zero() ? p.zero() : divide(q2.c, values[j]))
                                  : (p.is_zero() ? p.zero() : divide(q2.b, p));
        if (u.is_zero()) {
          if (!q2.is_zero()) continue;
          u = u.one();
        }
        if (auto w = try_pair(i, j, u)) return w;
      }
    }
  }
  return std::nullopt;
}

SimilarityVerdict similar(const Form& q, const Form& q2, const SimilarityOptions& opts) {
  const Ring& ring = q.ring();
  if (!(ring == q2.ring())) throw Error(ErrorKind::IncompatibleRings, "forms over different rings");

  if (ring.is_integers()) {
    if (auto why = integral_obstruction(q, q2)) return not_similar(*why);
    const Int d = discriminant(q).classical.to_int();
    if (d < 0) {
      // Definite: complete decision by reduction. Normalize both to positive
      // definite with u = -1 where needed; reduction is SL2, the flip
      // diag(1, -1) accounts for the other GL2 coset.
      const Elem one(ring, 1L), minus(ring, -1L);
      const Mat id = identity_mat(ring);
      const Elem s1 = q.a.to_int() > 0 ? one : minus;
      const Elem s2 = q2.a.to_int() > 0 ? one : minus;
      const Reduction r1 = reduce_definite(act(q, id, s1));
      const Reduction r2 = reduce_definite(act(q2, id, s2));
      // q2 = act(r2.form, r2.witness^-1, s2) and r2.witness^-1 = adjugate in SL2.
      const Mat back = r2.witness.adjugate();
      if (r1.form == r2.form) {
        SimilarityWitness w{r1.witness * back, s1 * s2};
        return similar_with(std::move(w));
      }
      const Mat flip = make_mat(ring, 1, 0, 0, -1);
      const Reduction r3 = reduce_definite(act(r1.form, flip, one));
      if (r3.form == r2.form) {
        SimilarityWitness w{r1.witness * flip * r3.witness * back, s1 * s2};
        return similar_with(std::move(w));
      }
      return not_similar("reduced_form");
    }
  } else if (ring.is_modular()) {
    if (auto why = modular_obstruction(q, q2)) return not_similar(*why);
  } else {
    if (auto why = rational_obstruction(q, q2)) return not_similar(*why);
  }

  if (auto w = search_similarity(q, q2, opts.bound)) return similar_with(std::move(*w));
  if (ring.is_modular() && ring.modulus() <= 2 * opts.bound + 1) {
    return not_similar("exhaustive_search");
  }
  return {Verdict::Unknown, std::nullopt, {}, opts.bound};
}

}  // namespace bqf
