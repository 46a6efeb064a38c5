#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bialg/jacobi.hpp"
#include "bialg/sampler.hpp"

using namespace bialg;

namespace {

BasePatch r3() { return BasePatch{{"x", "y", "z"}}; }
BasePatch r2() { return BasePatch{{"x", "y"}}; }

// Lambda = dx^dy - y dy^dz directions, E = d/dz.
Multivector contact_lambda() {
  Multivector l = Multivector::basis(3, 3, {0, 1});
  l -= Multivector::basis(3, 3, {1, 2}).scaled(Scalar::variable(3, 1));
  return l;
}

Multivector contact_e() { return Multivector::basis(3, 3, {2}); }

JacobiStructure contact() {
  return JacobiStructure::validated(r3(), contact_lambda(), contact_e());
}

Scalar sx() { return Scalar::variable(3, 0); }
Scalar sy() { return Scalar::variable(3, 1); }
Scalar sz() { return Scalar::variable(3, 2); }

}  // namespace

TEST_CASE("validation accepts genuine structures") {
  JacobiStructure c = contact();
  CHECK(c.lambda() == contact_lambda());
  CHECK(c.e_field() == contact_e());
  CHECK_FALSE(c.is_poisson());

  JacobiStructure plane = JacobiStructure::validated(r2(), Multivector::basis(2, 2, {0, 1}),
                                                     Multivector(2, 1, 2));
  CHECK(plane.is_poisson());

  // variable coefficient: Lambda = z dx^dy, E = d/dx
  JacobiStructure zxy = JacobiStructure::validated(
      r3(), Multivector::basis(3, 3, {0, 1}).scaled(sz()), Multivector::basis(3, 3, {0}));
  CHECK_FALSE(zxy.is_poisson());
}

TEST_CASE("validation rejects a pair failing the tensor conditions") {
  // Lambda = z dx^dy with E = d/dz breaks both conditions
  Multivector lam = Multivector::basis(3, 3, {0, 1}).scaled(sz());
  Multivector e = Multivector::basis(3, 3, {2});
  CHECK_THROWS_AS(JacobiStructure::validated(r3(), lam, e), ConstructionError);

  SampleConfig cfg;
  CheckReport rep = check_jacobi_structure(r3(), lam, e, cfg);
  CHECK_FALSE(rep.all_passed());
  bool bivector_failed = false;
  bool vector_failed = false;
  for (const CheckEntry& entry : rep.entries()) {
    if (entry.name == "jacobi_tensor_bivector" && !entry.passed) {
      bivector_failed = true;
      REQUIRE(entry.counterexample.has_value());
      CHECK(entry.counterexample->residual != "0");
    }
    if (entry.name == "jacobi_tensor_vector" && !entry.passed) vector_failed = true;
  }
  CHECK(bivector_failed);
  CHECK(vector_failed);
}

TEST_CASE("tensor report covers both routes and passes on the contact structure") {
  SampleConfig cfg;
  CheckReport rep = check_jacobi_structure(r3(), contact_lambda(), contact_e(), cfg);
  CHECK(rep.all_passed());
  std::vector<std::string> names;
  for (const CheckEntry& entry : rep.entries()) names.push_back(entry.name);
  CHECK(names == std::vector<std::string>{"jacobi_tensor_bivector", "jacobi_tensor_vector",
                                          "jacobi_bracket_coordinates", "jacobi_bracket_samples"});
}

TEST_CASE("bracket values on the contact structure") {
  JacobiStructure c = contact();
  Scalar one = Scalar::constant(3, 1);
  CHECK(jacobi_bracket(c, sx(), sy()) == one);
  CHECK(jacobi_bracket(c, sx(), sz()) == sx());
  CHECK(jacobi_bracket(c, sy(), sz()).is_zero());
  // constants are not central: {1, z} = E(z) = 1
  CHECK(jacobi_bracket(c, one, sz()) == one);
  CHECK(jacobi_bracket(c, sz(), one) == -one);
}

TEST_CASE("bracket values with variable coefficients") {
  JacobiStructure zxy = JacobiStructure::validated(
      r3(), Multivector::basis(3, 3, {0, 1}).scaled(sz()), Multivector::basis(3, 3, {0}));
  CHECK(jacobi_bracket(zxy, sx(), sy()) == sz() - sy());
  CHECK(jacobi_bracket(zxy, sx(), sz()) == -sz());
  CHECK(jacobi_bracket(zxy, sy(), sz()).is_zero());
}

TEST_CASE("bracket is antisymmetric and satisfies its identity") {
  JacobiStructure c = contact();
  SampleStream s(61);
  for (int t = 0; t < 16; ++t) {
    Scalar f = s.scalar(3, 2);
    Scalar g = s.scalar(3, 2);
    Scalar h = s.scalar(3, 2);
    CHECK((jacobi_bracket(c, f, g) + jacobi_bracket(c, g, f)).is_zero());
    Scalar jac = jacobi_bracket(c, jacobi_bracket(c, f, g), h) +
                 jacobi_bracket(c, jacobi_bracket(c, g, h), f) +
                 jacobi_bracket(c, jacobi_bracket(c, h, f), g);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("bracket is first order with defect measured by the vector field") {
  JacobiStructure c = contact();
  // {f, g h} - g {f, h} - h {f, g} = g h E(f)
  SampleStream s(62);
  for (int t = 0; t < 16; ++t) {
    Scalar f = s.scalar(3, 2);
    Scalar g = s.scalar(3, 2);
    Scalar h = s.scalar(3, 2);
    Scalar defect = jacobi_bracket(c, f, g * h) - g * jacobi_bracket(c, f, h) -
                    h * jacobi_bracket(c, f, g);
    Scalar ef = interior(contact_e(), tangent_algebroid(r3()).differential(f)).to_scalar();
    CHECK(defect == g * h * ef);
  }
  // concrete witness: {z, x y} - x {z, y} - y {z, x} = x y
  CHECK(jacobi_bracket(c, sz(), sx() * sy()) - sx() * jacobi_bracket(c, sz(), sy()) -
            sy() * jacobi_bracket(c, sz(), sx()) ==
        sx() * sy());
}

TEST_CASE("cotangent algebroid of the standard symplectic plane") {
  Algebroid cot = cotangent_algebroid(r2(), Multivector::basis(2, 2, {0, 1}));
  CHECK(cot.rank == 2);
  CHECK(cot.dim() == 2);
  CHECK(cot.anchor[0][0].is_zero());
  CHECK(cot.anchor[0][1] == Scalar::constant(2, 1));
  CHECK(cot.anchor[1][0] == Scalar::constant(2, -1));
  CHECK(cot.anchor[1][1].is_zero());
  CHECK(cot.structure_bracket(0, 1).is_zero());
  SampleConfig cfg;
  CHECK(check_axioms(cot, cfg).all_passed());
}

TEST_CASE("cotangent algebroid with a variable coefficient bivector") {
  Multivector pois = Multivector::basis(3, 3, {0, 1}).scaled(sz());
  Algebroid cot = cotangent_algebroid(r3(), pois);
  // pi-sharp columns: dx -> z d/dy, dy -> -z d/dx, dz -> 0
  CHECK(cot.anchor[0][1] == sz());
  CHECK(cot.anchor[1][0] == -sz());
  CHECK(cot.anchor[2][0].is_zero());
  CHECK(cot.anchor[2][2].is_zero());
  // [dx, dy] = dz from the differential of pi(dx, dy)
  CHECK(cot.structure_bracket(0, 1) == Multivector::basis(3, 3, {2}));
  CHECK(cot.structure_bracket(0, 2).is_zero());
  CHECK(cot.structure_bracket(1, 2).is_zero());
  SampleConfig cfg;
  CHECK(check_axioms(cot, cfg).all_passed());
}

TEST_CASE("cotangent algebroid rejects a non poisson bivector") {
  Multivector p = Multivector::basis(3, 3, {0, 1}).scaled(sx()) + Multivector::basis(3, 3, {0, 2});
  CHECK_THROWS_AS(cotangent_algebroid(r3(), p), ConstructionError);
}

TEST_CASE("first jet algebroid of the contact structure") {
  OneJetAlgebroid jet = one_jet_algebroid(contact());
  const Algebroid& a = jet.algebroid;
  CHECK(a.rank == 4);
  CHECK(a.dim() == 3);

  Scalar y4 = Scalar::variable(3, 1);
  // anchor rows over (x, y, z)
  CHECK(a.anchor[0][0].is_zero());
  CHECK(a.anchor[0][1] == Scalar::constant(3, 1));
  CHECK(a.anchor[0][2].is_zero());
  CHECK(a.anchor[1][0] == Scalar::constant(3, -1));
  CHECK(a.anchor[1][1].is_zero());
  CHECK(a.anchor[1][2] == -y4);
  CHECK(a.anchor[2][0].is_zero());
  CHECK(a.anchor[2][1] == y4);
  CHECK(a.anchor[2][2].is_zero());
  CHECK(a.anchor[3][0].is_zero());
  CHECK(a.anchor[3][1].is_zero());
  CHECK(a.anchor[3][2] == Scalar::constant(3, 1));

  CHECK(a.structure_bracket(0, 1) == Multivector::basis(4, 3, {3}).scaled(Rational(-1)));
  CHECK(a.structure_bracket(0, 2) == Multivector::basis(4, 3, {0}));
  CHECK(a.structure_bracket(1, 2) == Multivector::basis(4, 3, {3}).scaled(y4));
  CHECK(a.structure_bracket(0, 3).is_zero());
  CHECK(a.structure_bracket(1, 3).is_zero());
  CHECK(a.structure_bracket(2, 3).is_zero());

  CHECK(jet.x0 == Multivector::basis(4, 3, {2}).scaled(Rational(-1)));

  SampleConfig cfg;
  CHECK(check_axioms(a, cfg).all_passed());
}

TEST_CASE("first jet of a poisson structure restricts to the cotangent algebroid") {
  Multivector pois = Multivector::basis(3, 3, {0, 1}).scaled(sz());
  JacobiStructure j = JacobiStructure::validated(r3(), pois, Multivector(3, 1, 3));
  OneJetAlgebroid jet = one_jet_algebroid(j);
  Algebroid cot = cotangent_algebroid(r3(), pois);

  CHECK(jet.x0.is_zero());
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 3; ++c) CHECK(jet.algebroid.anchor[i][c] == cot.anchor[i][c]);
  // extra direction is flat when E = 0
  for (int c = 0; c < 3; ++c) CHECK(jet.algebroid.anchor[3][c].is_zero());
  for (int i = 0; i < 3; ++i)
    for (int k = i + 1; k < 3; ++k) {
      Multivector jb = jet.algebroid.structure_bracket(i, k);
      Multivector cb = cot.structure_bracket(i, k);
      for (int m = 0; m < 3; ++m) CHECK(jb.component({m}) == cb.component({m}));
      // the extra slot carries -Lambda(a_i, a_k) even when E vanishes
      CHECK(jb.component({3}) == -pois.component({i, k}));
      CHECK(jet.algebroid.structure_bracket(i, 3).is_zero());
    }
}
