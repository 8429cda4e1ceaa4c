#pragma once

#include "bqf/clifford.hpp"
#include "bqf/form.hpp"
#include "bqf/norm.hpp"

namespace bqf {

/// Which isomorphism carries the second module onto the first form's even
/// Clifford algebra. The two choices differ by conjugation.
enum class Twist {
  Oriented,  // eps = +1: the usual composition
  Sigma,     // eps = -1: composes with the inverse class of the second form
};

/// Composition of primitive integral forms of equal discriminant as the
/// universal norm form of the product of their ideal lattices.
Form compose(const Form& q1, const Form& q2, Twist twist = Twist::Oriented);

/// (1, t, nm), the norm form of C.
Form identity_form(const QuadraticAlgebra& alg);

/// Universal norm form of the conjugate lattice; (a, -b, c) for a != 0.
Form inverse_form(const Form& q);

/// Classical composition of united forms by solving for the middle
/// coefficient. Pairs that are not united are first made so by a proper
/// change of variables on the second form.
Form dirichlet_compose(const Form& q1, const Form& q2);

}  // namespace bqf
