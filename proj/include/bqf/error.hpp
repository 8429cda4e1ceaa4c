#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bqf {

enum class ErrorKind {
  UnsupportedRing,
  IncompatibleRings,
  IncompatibleHom,
  NotInvertible,
  NotDefinite,
  NotAModule,
  NotTraceable,
  InconsistentPair,
  NotAPerfectSquare,
  ZeroForm,
  IncompatibleAlgebras,
  NotComposable,
  NotPrimitive,
  BadDiscriminant,
  NonScalarNorm,
  InvalidLattice,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every library operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bqf
