#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bqf/error.hpp"

namespace bqf {

using Int = mpz_class;
using Rat = mpq_class;

enum class RingKind { Integers, Modular, Rationals };

/// One of the three exact coefficient rings: Z, Z/n (n >= 2), Q.
///
/// Copies are cheap; the modulus lives in shared immutable storage.
class Ring {
 public:
  static Ring integers();
  static Ring modular(const Int& n);
  static Ring rationals();

  RingKind kind() const { return data_->kind; }
  bool is_integers() const { return kind() == RingKind::Integers; }
  bool is_modular() const { return kind() == RingKind::Modular; }
  bool is_rationals() const { return kind() == RingKind::Rationals; }

  /// Modulus of Z/n. Throws UnsupportedRing for Z and Q.
  const Int& modulus() const;

  /// False exactly for Z/n with n even.
  bool two_is_regular() const;
  /// Q, or Z/p with p prime.
  bool is_field() const;

  /// "int", "mod:N" or "rat"; the same syntax `parse` accepts.
  std::string name() const;
  static Ring parse(const std::string& spec);

  friend bool operator==(const Ring& x, const Ring& y);

 private:
  struct Data {
    RingKind kind;
    Int n;
  };
  explicit Ring(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// An element of a Ring, stored canonically: integers as themselves,
/// residues in [0, n), rationals in lowest terms with positive denominator.
class Elem {
 public:
  Elem();  // integer zero
  Elem(const Ring& ring, const Rat& value);
  Elem(const Ring& ring, const Int& value) : Elem(ring, Rat(value)) {}
  Elem(const Ring& ring, long value) : Elem(ring, Rat(value)) {}

  const Ring& ring() const { return ring_; }
  const Rat& value() const { return value_; }
  /// Integer representative; throws for a non-integral rational.
  Int to_int() const;

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  Elem zero() const { return Elem(ring_, 0L); }
  Elem one() const { return Elem(ring_, 1L); }

  /// Multiplicative inverse; throws NotInvertible for non-units.
  Elem inverse() const;

  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o);

  friend Elem operator+(Elem x, const Elem& y) { return x += y; }
  friend Elem operator-(Elem x, const Elem& y) { return x -= y; }
  friend Elem operator*(Elem x, const Elem& y) { return x *= y; }
  friend Elem operator*(long k, Elem x) { return x *= Elem(x.ring_, k); }
  friend Elem operator*(Elem x, long k) { return x *= Elem(x.ring_, k); }
  Elem operator-() const;

  friend bool operator==(const Elem& x, const Elem& y);
  friend bool operator!=(const Elem& x, const Elem& y) { return !(x == y); }

  std::string to_string() const;

 private:
  void canonicalize();
  void check_same_ring(const Elem& o) const;

  Ring ring_;
  Rat value_;
};

/// Exact quotient x / y. Over Z this requires divisibility, over Z/n and Q
/// it requires y to be a unit.
Elem divide(const Elem& x, const Elem& y);

/// Non-negative gcd of integer elements; 0 only when all are 0.
Elem content(std::span<const Elem> values);
Elem content(std::initializer_list<Elem> values);

bool is_unit(const Elem& v);

/// Every unit of a finite ring, or {1, -1} over Z. Throws for Q.
std::vector<Elem> units(const Ring& ring);

/// Canonical ring homomorphism between supported rings:
/// Z -> Z/n, Z -> Q, Z/n -> Z/m with m | n, and identities.
class Hom {
 public:
  Hom(Ring source, Ring target);

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }

  Elem operator()(const Elem& v) const;

 private:
  Ring source_;
  Ring target_;
};

inline Elem hom_apply(const Elem& v, const Hom& hom) { return hom(v); }

/// Non-negative integer gcd helpers shared across modules.
Int gcd(const Int& x, const Int& y);

/// Floor division for integers.
Int floor_div(const Int& x, const Int& y);

/// Non-negative square root of a rational square, if it is one.
std::optional<Rat> rational_sqrt(const Rat& v);

/// Integer representative of a residue closest to zero, in (-n/2, n/2].
Int symmetric_residue(const Elem& v);

}  // namespace bqf
