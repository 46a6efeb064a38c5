#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bialg {

using Rational = boost::multiprecision::cpp_rational;

/// Structural misuse: mismatched patches, ranks, degrees, bad indices.
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A polynomial coordinate patch. Everything in a computation lives over a
/// single patch; dim 0 (a point) is allowed.
struct BasePatch {
  std::vector<std::string> coords;

  int dim() const { return static_cast<int>(coords.size()); }
  static BasePatch point() { return BasePatch{}; }

  bool operator==(const BasePatch&) const = default;
};

/// Exponent vector; length always equals the patch dimension.
using Monomial = std::vector<unsigned>;

/// Graded lexicographic order: lower total degree first, ties by lex.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariant: no zero coefficient is ever stored, so operator== decides
/// mathematical equality and is_zero() is emptiness.
class Scalar {
 public:
  explicit Scalar(int nvars = 0);

  static Scalar constant(int nvars, const Rational& c);
  static Scalar variable(int nvars, int index);
  static Scalar monomial(int nvars, Monomial exponents, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // 0 for the zero polynomial
  const std::map<Monomial, Rational, GradedLexLess>& terms() const { return terms_; }

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator*=(const Rational& c);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator*(Scalar a, const Rational& c) { return a *= c; }
  friend Scalar operator*(const Rational& c, Scalar a) { return a *= c; }

  Scalar derivative(int index) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  bool operator==(const Scalar&) const = default;

 private:
  int nvars_;
  std::map<Monomial, Rational, GradedLexLess> terms_;

  void require_same_patch(const Scalar& rhs) const;
};

std::string to_string(const Rational& q);
/// Canonical rendering, highest graded-lex term first: "x^2*y - 1/2*z + 3".
std::string to_string(const Scalar& p, const BasePatch& base);

}  // namespace bialg
