#pragma once

#include "bialg/algebroid.hpp"

namespace bialg {

/// A validated 1-cocycle: a degree-1 form with vanishing algebroid
/// differential. Deformed operations only accept this wrapper, so the
/// cocycle condition is checked exactly once, at construction.
class Cocycle {
 public:
  /// Throws ConstructionError (with the failing report) if d(value) != 0.
  static Cocycle validated(const Algebroid& owner, Form value);
  static Cocycle zero(const Algebroid& owner);

  const Algebroid& owner() const { return owner_; }
  const Form& value() const { return value_; }
  Scalar apply(const Multivector& x) const { return pairing(value_, x); }

  bool operator==(const Cocycle&) const = default;

 private:
  Cocycle(Algebroid owner, Form value) : owner_(std::move(owner)), value_(std::move(value)) {}
  Algebroid owner_;
  Form value_;
};

/// Report form of the cocycle test: exact closure plus seeded checks of the
/// defining identity phi([X,Y]) = rho(X)phi(Y) - rho(Y)phi(X).
CheckReport is_cocycle(const Algebroid& a, const Form& candidate, const SampleConfig& cfg);

Scalar deformed_anchor_apply(const Cocycle& phi, const Multivector& x, const Scalar& f);
Form deformed_differential(const Cocycle& phi, const Scalar& f);
Form deformed_differential(const Cocycle& phi, const Form& alpha);
Form deformed_lie_derivative(const Cocycle& phi, const Multivector& x, const Form& alpha);
/// Deformed Schouten bracket, closed formula over the undeformed one.
Multivector deformed_schouten(const Cocycle& phi, const Multivector& p, const Multivector& q);
Multivector deformed_lie_derivative(const Cocycle& phi, const Multivector& x, const Multivector& p);

/// Seeded verification that the deformed operations satisfy the derivation
/// and bracket laws they are supposed to.
CheckReport verify_deformed_properties(const Cocycle& phi, const SampleConfig& cfg);

}  // namespace bialg
