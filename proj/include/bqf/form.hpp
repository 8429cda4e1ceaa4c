#pragma once

#include <optional>
#include <string>

#include "bqf/mat2.hpp"
#include "bqf/ring.hpp"

namespace bqf {

using Mat = Mat2<Elem>;
using Vec = Vec2<Elem>;

Mat make_mat(const Ring& ring, const Int& a00, const Int& a01, const Int& a10, const Int& a11);
Mat identity_mat(const Ring& ring);
Vec make_vec(const Ring& ring, const Int& x, const Int& y);

/// q(x e1 + y e2) = a x^2 + b x y + c y^2 with coefficients in one ring.
struct Form {
  Elem a, b, c;

  Form(Elem a_, Elem b_, Elem c_);
  Form(const Ring& ring, const Int& a_, const Int& b_, const Int& c_)
      : Form(Elem(ring, a_), Elem(ring, b_), Elem(ring, c_)) {}
  /// Integral form.
  Form(long a_, long b_, long c_) : Form(Ring::integers(), a_, b_, c_) {}

  const Ring& ring() const { return a.ring(); }
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }

  friend bool operator==(const Form& p, const Form& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c;
  }

  std::string to_string() const;
};

Elem evaluate(const Form& q, const Elem& x, const Elem& y);
inline Elem evaluate(const Form& q, const Vec& v) { return evaluate(q, v.x, v.y); }

/// b_q(v, w) = q(v + w) - q(v) - q(w).
Elem polar(const Form& q, const Vec& v, const Vec& w);

struct Discriminants {
  Elem paper;      // 4ac - b^2
  Elem classical;  // b^2 - 4ac
};

Discriminants discriminant(const Form& q);

/// Over Z: content(a, b, c) is a unit. Over Z/n: the lifted gcd together with
/// n is a unit. Over Q: true iff the form is nonzero.
bool is_primitive(const Form& q);

/// The form v -> u * q(M v). Its coefficients are u q(M e1), u b_q(M e1, M e2)
/// and u q(M e2). This is a right action: act(act(q, M1, u1), M2, u2) equals
/// act(q, M1 M2, u1 u2).
Form act(const Form& q, const Mat& m, const Elem& u);

/// Integral positive definite Gauss reduction.
struct Reduction {
  Form form;
  Mat witness;  // in SL2(Z), form == act(q, witness, 1)
};

bool is_reduced(const Form& q);
Reduction reduce_definite(const Form& q);

/// Proper (SL2, scale +1) equivalence of integral definite forms.
bool properly_equivalent(const Form& p, const Form& q);

// ---------------------------------------------------------------------------
// similarity

/// Certifies q' = act(q, m, u): q'(v) = u q(m v).
struct SimilarityWitness {
  Mat m;
  Elem u;
};

bool verify_witness(const Form& q, const Form& q2, const SimilarityWitness& w);

enum class Verdict { Similar, NotSimilar, Unknown };

struct SimilarityVerdict {
  Verdict verdict;
  std::optional<SimilarityWitness> witness;  // set iff Similar
  std::string reason;                        // set iff NotSimilar
  int bound = 0;                             // search bound behind Unknown

  bool is_similar() const { return verdict == Verdict::Similar; }
};

struct SimilarityOptions {
  int bound = 12;
};

SimilarityVerdict similar(const Form& q, const Form& q2, const SimilarityOptions& opts = {});

/// Bounded witness search alone: matrices whose columns have entries in
/// [-bound, bound] (residues of that range over Z/n).
std::optional<SimilarityWitness> search_similarity(const Form& q, const Form& q2, int bound);

}  // namespace bqf
