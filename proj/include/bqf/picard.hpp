#pragma once

#include <cstddef>
#include <vector>

#include "bqf/clifford.hpp"
#include "bqf/form.hpp"

namespace bqf {

/// Primitive reduced positive definite forms of classical discriminant d,
/// ordered by a, then |b|, positive b first. Throws BadDiscriminant unless
/// d < 0 and d = 0, 1 mod 4.
std::vector<Form> reduced_forms(const Int& d);

std::size_t class_number(const Int& d);

struct ClassGroup {
  std::vector<Form> forms;                       // forms[0] is principal
  std::vector<std::vector<std::size_t>> table;   // reduced compose, by index
  std::vector<Int> invariant_factors;            // d1 | d2 | ..., empty if trivial
};

ClassGroup class_group(const Int& d);

/// Orders in an abelian group given by its Cayley table and identity.
std::vector<Int> invariant_factors(const std::vector<std::vector<std::size_t>>& table,
                                   std::size_t identity);

struct PicardCounts {
  std::size_t oriented;          // proper classes of forms
  std::size_t unoriented;        // orbits of q -> (a, -b, c)
  std::size_t oriented_ideals;   // invertible ideal classes of the order
  std::size_t unoriented_ideals; // ideal classes up to conjugation
  bool agree() const { return oriented == oriented_ideals && unoriented == unoriented_ideals; }
};

PicardCounts pic_counts(const Int& d);

struct AlgebraForm {
  Form form;
  AlgebraWitness witness;  // even_clifford(form) -> alg
};

/// (1, t, nm) together with the isomorphism from its even Clifford algebra.
AlgebraForm form_for_algebra(const QuadraticAlgebra& alg);

}  // namespace bqf
