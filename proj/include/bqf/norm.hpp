#pragma once

#include <string>
#include <vector>

#include "bqf/clifford.hpp"
#include "bqf/form.hpp"
#include "bqf/ring.hpp"

namespace bqf {

using IntMat = Mat2<Int>;

/// A full-rank lattice in an integral quadratic algebra C = Z<1, tau>,
/// closed under multiplication by tau.
///
/// Columns of `basis` are the coordinates of the ordered basis (alpha, beta)
/// in (1, tau). The sign of det(basis) is the orientation of the lattice;
/// lattices built from positive definite forms, products and conjugates of
/// them are positively oriented.
class IdealLattice {
 public:
  /// Validates full rank and tau-closure; throws InvalidLattice otherwise.
  IdealLattice(QuadraticAlgebra alg, IntMat basis);

  const QuadraticAlgebra& alg() const { return alg_; }
  const IntMat& basis() const { return basis_; }
  EvenElem alpha() const;
  EvenElem beta() const;

  int orientation() const { return sgn(basis_.det()); }
  /// Index in C, |det(basis)|.
  Int index() const { return abs(basis_.det()); }

  /// Canonical basis [[A, B], [0, C]] with A, C > 0 and 0 <= B < A; the
  /// second column is negated for negatively oriented lattices.
  IdealLattice hermite() const;

  /// Same lattice, same orientation.
  friend bool operator==(const IdealLattice& x, const IdealLattice& y);

 private:
  QuadraticAlgebra alg_;
  IntMat basis_;
};

/// C itself with basis (1, tau - t).
IdealLattice unit_ideal(const QuadraticAlgebra& alg);

/// The lattice <a, tau - b> inside C0(q), carrying the module structure of
/// q under e1 -> a, e2 -> b - tau. Forms with a = 0 are first moved by an
/// SL2 substitution to one with a != 0; the lattice then lives in the even
/// Clifford algebra of the moved form.
IdealLattice form_to_ideal(const Form& q);

/// N(x alpha - y beta).
Form naive_norm_form(const IdealLattice& lattice);
/// The naive form divided by its content, signed by the orientation.
Form universal_norm_form(const IdealLattice& lattice);

struct IdealClifford {
  QuadraticAlgebra alg;     // even Clifford algebra of the universal form
  AlgebraWitness witness;   // lattice.alg() -> alg
};

IdealClifford even_clifford_of_ideal(const IdealLattice& lattice);

IdealLattice ideal_multiply(const IdealLattice& x, const IdealLattice& y);
IdealLattice ideal_conjugate(const IdealLattice& lattice);

/// Moves a lattice of `to` into `from` along the isomorphism `w : from -> to`
/// (tau_to = k + eps tau_from). Orientation is preserved.
IdealLattice transport(const IdealLattice& lattice, const QuadraticAlgebra& from,
                       const AlgebraWitness& w);

// ---------------------------------------------------------------------------

enum class CheckStatus { Pass, Fail, Skipped };

struct BaseChangeCheck {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct BaseChangeReport {
  std::vector<BaseChangeCheck> checks;
  bool passed() const;
};

/// Coefficientwise commutation of the Clifford constructions (and, for
/// primitive integral forms mapped to a field, of the universal norm form)
/// with the homomorphism.
BaseChangeReport base_change_checks(const Form& q, const Hom& hom);

std::string_view to_string(CheckStatus s);

}  // namespace bqf
