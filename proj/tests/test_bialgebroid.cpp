#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "bialg/bialgebroid.hpp"
#include "bialg/commands.hpp"
#include "bialg/dsl.hpp"

using namespace bialg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

GenBialgebroidPair contact_pair() {
  static StructureFile file = parse_structure(slurp(std::string(FIXTURE_DIR) + "/contact_pair.alg"));
  SampleConfig cfg;
  return resolve_pair(file, "contact_pair", cfg).pair;
}

JacobiStructure contact_structure() {
  BasePatch base{{"x", "y", "z"}};
  Multivector lam = Multivector::basis(3, 3, {0, 1});
  lam -= Multivector::basis(3, 3, {1, 2}).scaled(Scalar::variable(3, 1));
  return JacobiStructure::validated(base, lam, Multivector::basis(3, 3, {2}));
}

}  // namespace

TEST_CASE("fixture pair passes all three verification suites") {
  GenBialgebroidPair p = contact_pair();
  SampleConfig cfg;
  CheckReport compat = check_compatibility(p, cfg);
  CheckReport duality = verify_duality_lemmas(p, cfg);
  CheckReport brackets = verify_bracket_differentials(p, cfg);
  CHECK(compat.all_passed());
  CHECK(duality.all_passed());
  CHECK(brackets.all_passed());
  CHECK(compat.entries().size() + duality.entries().size() + brackets.entries().size() == 30);
}

TEST_CASE("jet pair of a poisson plane") {
  BasePatch base{{"x", "y"}};
  JacobiStructure plane =
      JacobiStructure::validated(base, Multivector::basis(2, 2, {0, 1}), Multivector(2, 1, 2));
  SampleConfig cfg;
  GenBialgebroidPair p = one_jet_pair(plane, cfg);
  CHECK(p.primal().rank == 3);
  CHECK(p.phi0().value() == p.primal().coframe_element(2));
  CHECK(p.x0().value().is_zero());
  CHECK(check_compatibility(p, cfg).all_passed());
  CHECK(verify_duality_lemmas(p, cfg).all_passed());
  CHECK(verify_bracket_differentials(p, cfg).all_passed());
}

TEST_CASE("scaling the distinguished section breaks compatibility") {
  GenBialgebroidPair p = contact_pair();
  SampleConfig cfg;
  // 2 X0 is still a cocycle, so assembly succeeds
  GenBialgebroidPair bad = GenBialgebroidPair::assemble(
      p.primal(), p.phi0().value(), p.dual(), p.x0().value().scaled(Rational(2)), cfg);
  CheckReport rep = check_compatibility(bad, cfg);
  CHECK_FALSE(rep.all_passed());
  bool opposition_failed = false;
  for (const CheckEntry& e : rep.entries())
    if (e.name == "pair_anchor_opposition" && !e.passed) {
      opposition_failed = true;
      REQUIRE(e.counterexample.has_value());
      CHECK(e.counterexample->residual != "0");
    }
  CHECK(opposition_failed);
}

TEST_CASE("a non closed form is rejected at assembly") {
  GenBialgebroidPair p = contact_pair();
  SampleConfig cfg;
  // y theta^1 has differential theta^2 ^ theta^1 != 0 on the extended tangent
  Form bad_phi = p.primal().coframe_element(0).scaled(Scalar::variable(3, 1));
  try {
    GenBialgebroidPair::assemble(p.primal(), bad_phi, p.dual(), p.x0().value(), cfg);
    FAIL("assembly accepted a non cocycle");
  } catch (const ConstructionError& err) {
    CHECK_FALSE(err.report.all_passed());
    bool witnessed = false;
    for (const CheckEntry& e : err.report.entries())
      if (!e.passed && e.counterexample.has_value() && e.counterexample->residual != "0")
        witnessed = true;
    CHECK(witnessed);
  }
}

TEST_CASE("dualize swaps the sides and is an involution") {
  GenBialgebroidPair p = contact_pair();
  GenBialgebroidPair d = p.dualize();
  CHECK(d.primal() == p.dual());
  CHECK(d.dual() == p.primal());
  CHECK(d.phi0().value() == p.x0().value());
  CHECK(d.x0().value() == p.phi0().value());
  CHECK(d.dualize() == p);
  SampleConfig cfg;
  CHECK(check_compatibility(d, cfg).all_passed());
}

TEST_CASE("induced structures of a pair and its dual are opposite") {
  GenBialgebroidPair p = contact_pair();
  SampleConfig cfg;
  JacobiStructure j = induced_jacobi(p, cfg);
  JacobiStructure jd = induced_jacobi(p.dualize(), cfg);
  CHECK(jd.lambda() == j.lambda().scaled(Rational(-1)));
  CHECK(jd.e_field() == j.e_field().scaled(Rational(-1)));
}

TEST_CASE("jet pair induces the structure it came from") {
  JacobiStructure j = contact_structure();
  SampleConfig cfg;
  GenBialgebroidPair p = one_jet_pair(j, cfg);
  JacobiStructure back = induced_jacobi(p, cfg);
  CHECK(back.lambda() == j.lambda());
  CHECK(back.e_field() == j.e_field());
  CHECK(back == j);
}

TEST_CASE("induced bracket matches the jacobi bracket of the induced structure") {
  GenBialgebroidPair p = contact_pair();
  SampleConfig cfg;
  JacobiStructure j = induced_jacobi(p, cfg);
  SampleStream s(71);
  for (int t = 0; t < 16; ++t) {
    Scalar f = s.scalar(3, 2);
    Scalar g = s.scalar(3, 2);
    CHECK(induced_bracket(p, f, g) == jacobi_bracket(j, f, g));
  }
}

TEST_CASE("hamiltonian sections") {
  GenBialgebroidPair p = contact_pair();
  Scalar one = Scalar::constant(3, 1);
  CHECK(hamiltonian_section(p, one) == p.x0_section().scaled(Rational(-1)));
  SampleStream s(72);
  for (int t = 0; t < 16; ++t) {
    Scalar f = s.scalar(3, 2);
    Scalar g = s.scalar(3, 2);
    CHECK(deformed_anchor_apply(p.phi0(), hamiltonian_section(p, f), g) ==
          induced_bracket(p, f, g));
  }
}

TEST_CASE("deformed dual operators reduce to the plain ones plus corrections") {
  GenBialgebroidPair p = contact_pair();
  SampleStream s(73);
  for (int t = 0; t < 16; ++t) {
    Scalar f = s.scalar(3, 2);
    // d*^X0 f = d* f + f X0
    Multivector plain = p.dual_differential_plain(Multivector::from_scalar(4, f));
    CHECK(p.dual_differential(f) == plain + p.x0_section().scaled(f));
    // on 1-forms the twisted Schouten bracket has no correction terms
    Form xi = s.form(4, 1, 3, 2);
    Form eta = s.form(4, 1, 3, 2);
    CHECK(p.dual_schouten_deformed(xi, eta) == p.dual_bracket(xi, eta));
  }
}

TEST_CASE("canonical morphism of a jet pair is the identity") {
  JacobiStructure j = contact_structure();
  SampleConfig cfg;
  GenBialgebroidPair p = one_jet_pair(j, cfg);
  PairMorphism m = canonical_morphism(p, cfg);
  REQUIRE(m.matrix.size() == 4);
  for (int i = 0; i < 4; ++i) {
    REQUIRE(m.matrix[i].size() == 4);
    for (int k = 0; k < 4; ++k) {
      if (i == k)
        CHECK(m.matrix[i][k] == Scalar::constant(3, 1));
      else
        CHECK(m.matrix[i][k].is_zero());
    }
  }
  CheckReport rep = is_morphism(m, cfg);
  CHECK(rep.all_passed());
  CHECK(rep.entries().size() == 12);
}

TEST_CASE("transpose of a bundle map is adjoint under the pairing") {
  GenBialgebroidPair p = contact_pair();
  SampleStream s(74);
  PairMorphism m{p, p, {}};
  m.matrix.assign(4, std::vector<Scalar>(4, Scalar::constant(3, 0)));
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) m.matrix[i][k] = s.scalar(3, 1);
  for (int t = 0; t < 32; ++t) {
    Multivector x = s.multivector(4, 1, 3, 2);
    Form beta = s.form(4, 1, 3, 2);
    CHECK(pairing(m.dual_apply(beta), x) == pairing(beta, m.apply(x)));
  }
}

TEST_CASE("a broken matrix fails the morphism checks with a witness") {
  JacobiStructure j = contact_structure();
  SampleConfig cfg;
  GenBialgebroidPair p = one_jet_pair(j, cfg);
  PairMorphism m = canonical_morphism(p, cfg);
  m.matrix[2][3] = Scalar::constant(3, 1);
  CheckReport rep = is_morphism(m, cfg);
  CHECK_FALSE(rep.all_passed());
  bool witnessed = false;
  for (const CheckEntry& e : rep.entries())
    if (!e.passed && e.counterexample.has_value() && e.counterexample->residual != "0")
      witnessed = true;
  CHECK(witnessed);
}
