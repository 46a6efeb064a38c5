#pragma once

#include "bialg/algebroid.hpp"

namespace bialg {

/// Jacobi structure on a patch: a bivector field Lambda and a vector field E
/// over the tangent frame, validated against both the tensorial conditions
/// and the bracket Jacobiator before construction succeeds.
class JacobiStructure {
 public:
  static JacobiStructure validated(BasePatch base, Multivector lambda, Multivector e_field,
                                   const SampleConfig& cfg = {});

  const BasePatch& base() const { return base_; }
  const Multivector& lambda() const { return lambda_; }
  const Multivector& e_field() const { return e_field_; }
  bool is_poisson() const { return e_field_.is_zero(); }

  bool operator==(const JacobiStructure&) const = default;

 private:
  JacobiStructure(BasePatch base, Multivector lambda, Multivector e_field)
      : base_(std::move(base)), lambda_(std::move(lambda)), e_field_(std::move(e_field)) {}
  BasePatch base_;
  Multivector lambda_;
  Multivector e_field_;
};

/// {f, g} = Lambda(df, dg) + f E(g) - g E(f).
Scalar jacobi_bracket(const JacobiStructure& j, const Scalar& f, const Scalar& g);

/// Tensorial conditions [Lambda,Lambda] + 2 E^Lambda = 0 and [E,Lambda] = 0
/// (in this Schouten sign convention), plus the bracket Jacobiator on
/// coordinate triples and seeded polynomial triples. The two routes agree by
/// construction; both are reported.
CheckReport check_jacobi_structure(const BasePatch& base, const Multivector& lambda,
                                   const Multivector& e_field, const SampleConfig& cfg);

/// Cotangent algebroid of a Poisson bivector: anchor pi-sharp, bracket
/// [a,b] = L_{pi#a} b - L_{pi#b} a - d(pi(a,b)) extended from the coordinate
/// coframe. Rejects non-Poisson input.
Algebroid cotangent_algebroid(const BasePatch& base, const Multivector& poisson,
                              const SampleConfig& cfg = {});

/// First-jet algebroid of a Jacobi structure: rank dim+1, frame the
/// coordinate differentials plus one extra direction, with the distinguished
/// cocycle section x0 = (-E, 0).
struct OneJetAlgebroid {
  Algebroid algebroid;
  Multivector x0;
};

OneJetAlgebroid one_jet_algebroid(const JacobiStructure& j);

}  // namespace bialg
