#pragma once

#include <vector>

#include "bialg/biproduct.hpp"
#include "bialg/deformed.hpp"
#include "bialg/jacobi.hpp"

namespace bialg {

/// Two algebroids in duality over one patch, each carrying a 1-cocycle of the
/// other side. Both live on the same frame size: a degree-p multivector of the
/// primal side is the same data as a degree-p form of the dual side, and the
/// as_form / as_multivector flips move sections across.
class GenBialgebroidPair {
 public:
  /// Validates shapes, both sets of algebroid axioms and both cocycles.
  /// Throws ConstructionError carrying the failing report.
  static GenBialgebroidPair assemble(const Algebroid& primal, const Form& phi0_value,
                                     const Algebroid& dual, const Form& x0_value,
                                     const SampleConfig& cfg);

  const Algebroid& primal() const { return primal_; }
  const Algebroid& dual() const { return dual_; }
  const Cocycle& phi0() const { return phi0_; }
  const Cocycle& x0() const { return x0_; }

  /// X0 as a section of the primal algebroid (it is stored as a dual form).
  Multivector x0_section() const { return as_multivector(x0_.value()); }
  /// phi0 as a section of the dual algebroid.
  Multivector phi0_dual_section() const { return as_multivector(phi0_.value()); }

  /// d_*^{X0} on functions and on primal multivectors.
  Multivector dual_differential(const Scalar& f) const;
  Multivector dual_differential(const Multivector& p) const;
  /// Undeformed d_* of the dual algebroid, expressed on primal multivectors.
  Multivector dual_differential_plain(const Multivector& p) const;

  /// Brackets of the dual algebroid expressed on primal forms: the plain
  /// bracket [xi,eta]_*, and its X0-twisted Schouten extension.
  Form dual_bracket(const Form& xi, const Form& eta) const;
  Form dual_schouten_deformed(const Form& xi, const Form& eta) const;

  /// The swapped pair ((A*, X0), (A, phi0)); no revalidation.
  GenBialgebroidPair dualize() const;

  bool operator==(const GenBialgebroidPair&) const = default;

 private:
  GenBialgebroidPair(Algebroid primal, Cocycle phi0, Algebroid dual, Cocycle x0)
      : primal_(std::move(primal)), dual_(std::move(dual)),
        phi0_(std::move(phi0)), x0_(std::move(x0)) {}

  Algebroid primal_;
  Algebroid dual_;
  Cocycle phi0_;
  Cocycle x0_;
};

/// The compatibility conditions making the pair a generalized Lie bialgebroid:
/// the mixed Leibniz rule for d_*^{X0} over the bracket, the vanishing of
/// L*^{X0}_phi0 + L^{phi0}_X0 in degrees 0..2, and its closed-form
/// consequences phi0(X0) = 0, rho(X0) + rho*(phi0) = 0, L*_phi0 X + [X0,X] = 0.
CheckReport check_compatibility(const GenBialgebroidPair& p, const SampleConfig& cfg);

/// The derived duality identities: twisted Leibniz rules on both sides,
/// exchange laws between d^{phi0} and d_*^{X0}, the pairing antisymmetry
/// <d_*^{X0}f, d^{phi0}g> + <d^{phi0}f, d_*^{X0}g> = 0, the mixed derivative
/// commutator, and the undeformed invariance L*_phi0 xi + L_X0 xi = 0.
/// Together these witness that the swapped pair is again a valid pair.
CheckReport verify_duality_lemmas(const GenBialgebroidPair& p, const SampleConfig& cfg);

/// Induced bracket on functions: {f,g} = <d^{phi0}f, d_*^{X0}g>.
Scalar induced_bracket(const GenBialgebroidPair& p, const Scalar& f, const Scalar& g);

/// Section X_f = -d_*^{X0}f; satisfies rho^{phi0}(X_f)g = {f,g}.
Multivector hamiltonian_section(const GenBialgebroidPair& p, const Scalar& f);

/// The bivector/vector pair induced on the base patch, validated as a Jacobi
/// structure: Lambda(i,j) = <dx_i, d_* x_j> (undeformed), E = rho*(phi0).
JacobiStructure induced_jacobi(const GenBialgebroidPair& p, const SampleConfig& cfg);

/// Checks that the induced bracket is compatible with both differentials:
/// d^{phi0}{f,g} = [d^{phi0}f, d^{phi0}g]_*, d_*^{X0}{f,g} = -[d_*^{X0}f,
/// d_*^{X0}g], skewness, and that f -> X_f is a bracket homomorphism.
CheckReport verify_bracket_differentials(const GenBialgebroidPair& p, const SampleConfig& cfg);

/// Bundle map between pair primal sides, columns over the source frame:
/// Phi(e_i) = sum_j matrix[j][i] f_j. The dual map is the transpose.
struct PairMorphism {
  GenBialgebroidPair source;
  GenBialgebroidPair target;
  std::vector<std::vector<Scalar>> matrix;

  Multivector apply(const Multivector& x) const;
  Form dual_apply(const Form& beta) const;
};

/// Checks both legs: Phi intertwines anchors and brackets, the transpose
/// intertwines the dual anchors and brackets, cocycles map onto each other,
/// and both pairs induce the same Jacobi structure on the base.
CheckReport is_morphism(const PairMorphism& m, const SampleConfig& cfg);

/// The pair ((T x R, (0,1)), (T* x R, (-E,0))) attached to a Jacobi structure,
/// assembled from the extended tangent algebroid and the 1-jet algebroid.
GenBialgebroidPair one_jet_pair(const JacobiStructure& j, const SampleConfig& cfg);

/// The canonical morphism X -> (rho(X), phi0(X)) from a pair into the 1-jet
/// pair of its induced Jacobi structure.
PairMorphism canonical_morphism(const GenBialgebroidPair& p, const SampleConfig& cfg);

}  // namespace bialg
