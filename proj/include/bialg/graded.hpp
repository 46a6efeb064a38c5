#pragma once

#include "bialg/scalar.hpp"

namespace bialg {

/// Strictly increasing 0-based frame indices; length equals the degree.
using IndexTuple = std::vector<int>;

/// Sign of sorting the concatenation (a, b) of two disjoint ascending tuples;
/// 0 if they intersect. out receives the merged ascending tuple.
int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& out);

/// If sub is contained in sup, rest = sup minus sub and the return value is
/// the sign of sorting the concatenation (sub, rest); 0 if sub is not
/// contained in sup.
int contraction_sign(const IndexTuple& sub, const IndexTuple& sup, IndexTuple& rest);

enum class Variance { primal, dual };

/// Homogeneous element of the exterior algebra over a rank-k frame, with
/// polynomial components. Variance::primal elements are multivectors (frame
/// e_i), Variance::dual elements are forms (coframe e^i). Components are kept
/// sparse and normalized: zero components are never stored.
template <Variance V>
class Graded {
 public:
  Graded(int rank, int degree, int nvars) : rank_(rank), degree_(degree), nvars_(nvars) {
    if (rank < 0 || degree < 0 || nvars < 0)
      throw StructureError("graded: invalid shape");
  }

  static Graded basis(int rank, int nvars, const IndexTuple& idx) {
    Graded g(rank, static_cast<int>(idx.size()), nvars);
    g.add_component(idx, Scalar::constant(nvars, 1));
    return g;
  }

  static Graded from_scalar(int rank, const Scalar& s) {
    Graded g(rank, 0, s.nvars());
    g.add_component({}, s);
    return g;
  }

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return comps_.empty(); }
  const std::map<IndexTuple, Scalar>& components() const { return comps_; }

  Scalar component(const IndexTuple& idx) const {
    check_tuple(idx);
    auto it = comps_.find(idx);
    return it == comps_.end() ? Scalar(nvars_) : it->second;
  }

  void add_component(const IndexTuple& idx, const Scalar& s) {
    check_tuple(idx);
    if (s.nvars() != nvars_) throw StructureError("graded: component over wrong patch");
    if (s.is_zero()) return;
    auto it = comps_.find(idx);
    if (it == comps_.end()) {
      comps_.emplace(idx, s);
    } else {
      it->second += s;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  Scalar to_scalar() const {
    if (degree_ != 0) throw StructureError("graded: to_scalar on positive degree");
    auto it = comps_.find(IndexTuple{});
    return it == comps_.end() ? Scalar(nvars_) : it->second;
  }

  Graded operator-() const {
    Graded g(*this);
    for (auto& [i, s] : g.comps_) s = -s;
    return g;
  }

  Graded& operator+=(const Graded& rhs) {
    require_same_shape(rhs);
    for (const auto& [i, s] : rhs.comps_) add_component(i, s);
    return *this;
  }

  Graded& operator-=(const Graded& rhs) {
    require_same_shape(rhs);
    for (const auto& [i, s] : rhs.comps_) add_component(i, -s);
    return *this;
  }

  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }

  Graded scaled(const Scalar& f) const {
    Graded g(rank_, degree_, nvars_);
    for (const auto& [i, s] : comps_) g.add_component(i, s * f);
    return g;
  }

  Graded scaled(const Rational& c) const {
    Graded g(rank_, degree_, nvars_);
    if (c == 0) return g;
    for (const auto& [i, s] : comps_) g.add_component(i, s * c);
    return g;
  }

  bool operator==(const Graded&) const = default;

 private:
  int rank_;
  int degree_;
  int nvars_;
  std::map<IndexTuple, Scalar> comps_;

  void check_tuple(const IndexTuple& idx) const {
    if (static_cast<int>(idx.size()) != degree_)
      throw StructureError("graded: tuple length differs from degree");
    for (size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] < 0 || idx[i] >= rank_) throw StructureError("graded: frame index out of range");
      if (i > 0 && idx[i - 1] >= idx[i]) throw StructureError("graded: tuple not strictly increasing");
    }
  }

  void require_same_shape(const Graded& rhs) const {
    if (rank_ != rhs.rank_ || degree_ != rhs.degree_ || nvars_ != rhs.nvars_)
      throw StructureError("graded: mismatched shapes");
  }
};

using Multivector = Graded<Variance::primal>;
using Form = Graded<Variance::dual>;

template <Variance V>
Graded<V> wedge(const Graded<V>& a, const Graded<V>& b) {
  if (a.rank() != b.rank() || a.nvars() != b.nvars())
    throw StructureError("wedge: mismatched frames");
  Graded<V> out(a.rank(), a.degree() + b.degree(), a.nvars());
  for (const auto& [ia, sa] : a.components()) {
    for (const auto& [ib, sb] : b.components()) {
      IndexTuple merged;
      int sign = merge_sign(ia, ib, merged);
      if (sign == 0) continue;
      Scalar term = sa * sb;
      if (sign < 0) term = -term;
      out.add_component(merged, term);
    }
  }
  return out;
}

/// Interior product of a form into a multivector, contracting the first
/// slots: <beta, interior(phi, P)> = <phi ^ beta, P>. Degree underflow is a
/// structural error.
Multivector interior(const Form& phi, const Multivector& p);
/// Mirror contraction of a multivector into a form.
Form interior(const Multivector& x, const Form& alpha);
/// Underflow-tolerant variants used inside bracket recursions: degree
/// underflow yields the zero of degree 0.
Multivector interior_or_zero(const Form& phi, const Multivector& p);
Form interior_or_zero(const Multivector& x, const Form& alpha);

/// Full pairing of equal-degree elements; Kronecker on basis tuples, which is
/// the determinant pairing on decomposables.
Scalar pairing(const Form& alpha, const Multivector& p);

/// Reinterpret components across a declared duality: a multivector over A is
/// a form over the dual frame and vice versa.
Form as_form(const Multivector& p);
Multivector as_multivector(const Form& alpha);

std::string to_string(const Multivector& p, const BasePatch& base);
std::string to_string(const Form& alpha, const BasePatch& base);

}  // namespace bialg
