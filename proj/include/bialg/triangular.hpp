#pragma once

#include "bialg/bialgebroid.hpp"

namespace bialg {

/// Bundle map induced by a bivector, convention <beta, sharp(P, alpha)> =
/// P(alpha, beta).
Multivector sharp(const Multivector& p, const Form& alpha);

/// Exact evaluation of [P,P]^phi; passes iff the trivector vanishes.
CheckReport check_maurer_cartan(const Cocycle& phi, const Multivector& p);

/// An algebroid with a 1-cocycle and a bivector P solving [P,P]^phi0 = 0.
class TriangularDatum {
 public:
  /// Throws ConstructionError if the bivector fails the bracket equation.
  static TriangularDatum validated(const Cocycle& phi, const Multivector& p);

  const Algebroid& algebroid() const { return phi_.owner(); }
  const Cocycle& phi0() const { return phi_; }
  const Multivector& bivector() const { return p_; }

  bool operator==(const TriangularDatum&) const = default;

 private:
  TriangularDatum(Cocycle phi, Multivector p) : phi_(std::move(phi)), p_(std::move(p)) {}
  Cocycle phi_;
  Multivector p_;
};

/// Dual algebroid with bracket [a,b]_* = L^phi0_{P#a} b - L^phi0_{P#b} a -
/// d^phi0(P(a,b)) on the coframe, anchor rho o P#, and cocycle X0 = -P#(phi0),
/// assembled into a full pair.
GenBialgebroidPair build_dual(const TriangularDatum& t, const SampleConfig& cfg);

/// Checks the construction end to end: d_*^{X0} X = [P,X]^phi0, P# is an
/// anchor- and bracket-preserving map with (P#)*(phi0) = X0, the coframe
/// bracket formula extends correctly to sampled covectors, and the assembled
/// pair passes the compatibility and duality suites.
CheckReport verify_triangular(const TriangularDatum& t, const SampleConfig& cfg);

}  // namespace bialg
