#pragma once

#include "bialg/graded.hpp"
#include "bialg/report.hpp"
#include "bialg/sampler.hpp"

#include <functional>
#include <map>
#include <utility>

namespace bialg {

/// Lie algebroid presented over a coordinate patch: a trivialized rank-k
/// bundle with a global frame, an anchor matrix (rows = frame sections,
/// columns = coordinate directions) and structure functions for frame
/// brackets. Construction takes raw data; check_axioms decides whether the
/// data is an actual Lie algebroid.
struct Algebroid {
  BasePatch base;
  int rank = 0;
  std::vector<std::string> frame;
  std::vector<std::vector<Scalar>> anchor;
  std::map<std::pair<int, int>, Multivector> structure;  // keys i < j, values degree 1

  void check_shape() const;

  int dim() const { return base.dim(); }
  Scalar zero_scalar() const { return Scalar(dim()); }
  Multivector zero_multivector(int degree) const { return Multivector(rank, degree, dim()); }
  Form zero_form(int degree) const { return Form(rank, degree, dim()); }
  Multivector frame_section(int i) const;
  Form coframe_element(int i) const;

  /// Canonicalizing setter: stores only i < j and drops zero brackets.
  void set_bracket(int i, int j, const Multivector& value);
  /// Frame bracket with antisymmetry filled in; zero when absent.
  Multivector structure_bracket(int i, int j) const;

  Scalar frame_anchor_apply(int i, const Scalar& f) const;
  Scalar anchor_apply(const Multivector& x, const Scalar& f) const;
  /// rho(X) as a coordinate vector field, one component per coordinate.
  std::vector<Scalar> anchor_vector(const Multivector& x) const;

  /// Section bracket, extended from the structure functions by the Leibniz
  /// rule in each slot.
  Multivector bracket(const Multivector& x, const Multivector& y) const;

  Form differential(const Scalar& f) const;
  Form differential(const Form& alpha) const;

  /// Lie derivative of a form along a section (contraction-differential
  /// anticommutator).
  Form lie_derivative(const Multivector& x, const Form& alpha) const;

  /// Schouten bracket on multivectors: bilinear extension from frame data by
  /// the graded Leibniz rule. Degree (p, q) input yields degree p + q - 1.
  Multivector schouten(const Multivector& p, const Multivector& q) const;

  bool operator==(const Algebroid&) const = default;
};

Algebroid tangent_algebroid(const BasePatch& base);

/// Exact frame-level verification of the Jacobi identity and the anchor
/// morphism property, plus seeded random sections.
CheckReport check_axioms(const Algebroid& a, const SampleConfig& cfg);

/// Visit all strictly increasing index tuples of the given length.
void for_each_tuple(int rank, int length, const std::function<void(const IndexTuple&)>& fn);

}  // namespace bialg
