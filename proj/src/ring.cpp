#include "bqf/ring.hpp"

#include <utility>

namespace bqf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::IncompatibleRings: return "IncompatibleRings";
    case ErrorKind::IncompatibleHom: return "IncompatibleHom";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotDefinite: return "NotDefinite";
    case ErrorKind::NotAModule: return "NotAModule";
    case ErrorKind::NotTraceable: return "NotTraceable";
    case ErrorKind::InconsistentPair: return "InconsistentPair";
    case ErrorKind::NotAPerfectSquare: return "NotAPerfectSquare";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::IncompatibleAlgebras: return "IncompatibleAlgebras";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::BadDiscriminant: return "BadDiscriminant";
    case ErrorKind::NonScalarNorm: return "NonScalarNorm";
    case ErrorKind::InvalidLattice: return "InvalidLattice";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Ring

Ring Ring::integers() {
  static const auto data = std::make_shared<const Data>(Data{RingKind::Integers, 0});
  return Ring(data);
}

Ring Ring::rationals() {
  static const auto data = std::make_shared<const Data>(Data{RingKind::Rationals, 0});
  return Ring(data);
}

Ring Ring::modular(const Int& n) {
  if (n < 2) {
    throw Error(ErrorKind::UnsupportedRing, "modulus must be at least 2, got " + n.get_str());
  }
  return Ring(std::make_shared<const Data>(Data{RingKind::Modular, n}));
}

const Int& Ring::modulus() const {
  if (!is_modular()) throw Error(ErrorKind::UnsupportedRing, "ring " + name() + " has no modulus");
  return data_->n;
}

bool Ring::two_is_regular() const {
  return !is_modular() || mpz_odd_p(data_->n.get_mpz_t());
}

bool Ring::is_field() const {
  if (is_rationals()) return true;
  if (is_modular()) return mpz_probab_prime_p(data_->n.get_mpz_t(), 30) != 0;
  return false;
}

std::string Ring::name() const {
  switch (kind()) {
    case RingKind::Integers: return "int";
    case RingKind::Rationals: return "rat";
    case RingKind::Modular: return "mod:" + data_->n.get_str();
  }
  return "?";
}

Ring Ring::parse(const std::string& spec) {
  if (spec == "int") return integers();
  if (spec == "rat") return rationals();
  if (spec.rfind("mod:", 0) == 0) {
    Int n;
    if (n.set_str(spec.substr(4), 10) != 0) {
      throw Error(ErrorKind::Parse, "bad modulus in ring spec '" + spec + "'");
    }
    return modular(n);
  }
  throw Error(ErrorKind::Parse, "unknown ring spec '" + spec + "'");
}

bool operator==(const Ring& x, const Ring& y) {
  if (x.data_ == y.data_) return true;
  return x.kind() == y.kind() && x.data_->n == y.data_->n;
}

// ---------------------------------------------------------------------------
// Elem

Elem::Elem() : ring_(Ring::integers()), value_(0) {}

Elem::Elem(const Ring& ring, const Rat& value) : ring_(ring), value_(value) {
  canonicalize();
}

void Elem::canonicalize() {
  value_.canonicalize();
  switch (ring_.kind()) {
    case RingKind::Rationals:
      break;
    case RingKind::Integers:
      if (value_.get_den() != 1) {
        throw Error(ErrorKind::UnsupportedRing, value_.get_str() + " is not an integer");
      }
      break;
    case RingKind::Modular: {
      const Int& n = ring_.modulus();
      Int num = value_.get_num() % n;
      if (value_.get_den() != 1) {
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), value_.get_den_mpz_t(), n.get_mpz_t()) == 0) {
          throw Error(ErrorKind::NotInvertible,
                      "denominator of " + value_.get_str() + " is not a unit mod " + n.get_str());
        }
        num = (num * inv) % n;
      }
      if (num < 0) num += n;
      value_ = Rat(num);
      break;
    }
  }
}

void Elem::check_same_ring(const Elem& o) const {
  if (!(ring_ == o.ring_)) {
    throw Error(ErrorKind::IncompatibleRings,
                "mixed-ring arithmetic: " + ring_.name() + " vs " + o.ring_.name());
  }
}

Int Elem::to_int() const {
  if (value_.get_den() != 1) {
    throw Error(ErrorKind::UnsupportedRing, value_.get_str() + " is not integral");
  }
  return value_.get_num();
}

Elem& Elem::operator+=(const Elem& o) {
  check_same_ring(o);
  value_ += o.value_;
  if (ring_.is_modular()) canonicalize();
  return *this;
}

Elem& Elem::operator-=(const Elem& o) {
  check_same_ring(o);
  value_ -= o.value_;
  if (ring_.is_modular()) canonicalize();
  return *this;
}

Elem& Elem::operator*=(const Elem& o) {
  check_same_ring(o);
  value_ *= o.value_;
  if (ring_.is_modular()) canonicalize();
  return *this;
}

Elem Elem::operator-() const { return Elem(ring_, Rat(-value_)); }

bool operator==(const Elem& x, const Elem& y) {
  x.check_same_ring(y);
  return x.value_ == y.value_;
}

Elem Elem::inverse() const {
  switch (ring_.kind()) {
    case RingKind::Integers:
      if (value_ == 1 || value_ == -1) return *this;
      break;
    case RingKind::Rationals:
      if (value_ != 0) return Elem(ring_, Rat(1) / value_);
      break;
    case RingKind::Modular: {
      Int inv;
      if (mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), ring_.modulus().get_mpz_t()) != 0) {
        return Elem(ring_, inv);
      }
      break;
    }
  }
  throw Error(ErrorKind::NotInvertible, to_string() + " is not a unit in " + ring_.name());
}

std::string Elem::to_string() const { return value_.get_str(); }

Elem divide(const Elem& x, const Elem& y) {
  if (x.ring().is_integers()) {
    const Int num = x.to_int();
    const Int den = y.to_int();
    if (den == 0 || num % den != 0) {
      throw Error(ErrorKind::NotInvertible,
                  num.get_str() + " is not divisible by " + den.get_str());
    }
    return Elem(x.ring(), Int(num / den));
  }
  return x * y.inverse();
}

// ---------------------------------------------------------------------------
// free functions

Int gcd(const Int& x, const Int& y) {
  Int g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

Int floor_div(const Int& x, const Int& y) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return q;
}

std::optional<Rat> rational_sqrt(const Rat& v) {
  if (v < 0) return std::nullopt;
  if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t())) {
    return std::nullopt;
  }
  Int num, den;
  mpz_sqrt(num.get_mpz_t(), v.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), v.get_den_mpz_t());
  return Rat(num, den);
}

Int symmetric_residue(const Elem& v) {
  Int r = v.to_int();
  if (v.ring().is_modular()) {
    const Int& n = v.ring().modulus();
    if (2 * r > n) r -= n;
  }
  return r;
}

Elem content(std::span<const Elem> values) {
  if (values.empty()) throw Error(ErrorKind::UnsupportedRing, "content of an empty sequence");
  const Ring& ring = values.front().ring();
  if (!ring.is_integers()) {
    throw Error(ErrorKind::UnsupportedRing, "content is defined over int only, got " + ring.name());
  }
  Int g = 0;
  for (const auto& v : values) g = gcd(g, v.to_int());
  return Elem(ring, g);
}

Elem content(std::initializer_list<Elem> values) {
  return content(std::span<const Elem>(values.begin(), values.size()));
}

bool is_unit(const Elem& v) {
  switch (v.ring().kind()) {
    case RingKind::Integers: return v.value() == 1 || v.value() == -1;
    case RingKind::Rationals: return v.value() != 0;
    case RingKind::Modular: return gcd(v.to_int(), v.ring().modulus()) == 1;
  }
  return false;
}

std::vector<Elem> units(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Integers:
      return {Elem(ring, 1L), Elem(ring, -1L)};
    case RingKind::Rationals:
      throw Error(ErrorKind::UnsupportedRing, "the unit group of rat is infinite");
    case RingKind::Modular: {
      std::vector<Elem> out;
      for (Int r = 1; r < ring.modulus(); ++r) {
        if (gcd(r, ring.modulus()) == 1) out.emplace_back(ring, r);
      }
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Hom

Hom::Hom(Ring source, Ring target) : source_(std::move(source)), target_(std::move(target)) {
  if (source_ == target_) return;
  const bool ok =
      (source_.is_integers() && (target_.is_modular() || target_.is_rationals())) ||
      (source_.is_modular() && target_.is_modular() &&
       mpz_divisible_p(source_.modulus().get_mpz_t(), target_.modulus().get_mpz_t()) != 0);
  if (!ok) {
    throw Error(ErrorKind::IncompatibleHom,
                "no canonical homomorphism " + source_.name() + " -> " + target_.name());
  }
}

Elem Hom::operator()(const Elem& v) const {
  if (!(v.ring() == source_)) {
    throw Error(ErrorKind::IncompatibleHom,
                "element of " + v.ring().name() + " given to hom from " + source_.name());
  }
  return Elem(target_, v.value());
}

}  // namespace bqf
