#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bialg/biproduct.hpp"

using namespace bialg;

namespace {

Algebroid contact_tangent() { return tangent_algebroid(BasePatch{{"x", "y", "z"}}); }

SplitMultivector sample_split_multi(SampleStream& s, int rank, int nvars, int deg) {
  return SplitMultivector{s.multivector(rank, deg, nvars, 2),
                          s.multivector(rank, deg > 0 ? deg - 1 : 0, nvars, 2)};
}

SplitForm sample_split_form(SampleStream& s, int rank, int nvars, int deg) {
  return SplitForm{s.form(rank, deg, nvars, 2), s.form(rank, deg > 0 ? deg - 1 : 0, nvars, 2)};
}

}  // namespace

TEST_CASE("extension appends one flat direction") {
  Algebroid tm = contact_tangent();
  ExtendedAlgebroid ext = extend_algebroid(tm);
  CHECK(ext.algebroid.rank == 4);
  CHECK(ext.algebroid.dim() == 3);
  // new direction: zero anchor row, zero brackets, dual to the canonical
  // cocycle
  for (int c = 0; c < 3; ++c) CHECK(ext.algebroid.anchor[3][c].is_zero());
  for (int i = 0; i < 4; ++i) CHECK(ext.algebroid.structure_bracket(i, 3).is_zero());
  CHECK(ext.canonical.value() == ext.algebroid.coframe_element(3));
  SampleConfig cfg;
  CHECK(check_axioms(ext.algebroid, cfg).all_passed());
}

TEST_CASE("extension of a nontrivial algebra keeps its brackets") {
  Algebroid a;
  a.base = BasePatch::point();
  a.rank = 2;
  a.frame = {"e1", "e2"};
  a.anchor = {{}, {}};
  a.set_bracket(0, 1, Multivector::basis(2, 0, {1}));
  ExtendedAlgebroid ext = extend_algebroid(a);
  CHECK(ext.algebroid.rank == 3);
  CHECK(ext.algebroid.structure_bracket(0, 1) == Multivector::basis(3, 0, {1}));
  CHECK(ext.algebroid.structure_bracket(0, 2).is_zero());
}

TEST_CASE("join and split are inverse bijections") {
  SampleStream s(51);
  for (int t = 0; t < 32; ++t) {
    const int deg = static_cast<int>(s.range(1, 3));
    SplitMultivector sm = sample_split_multi(s, 3, 3, deg);
    Multivector w = join(sm);
    CHECK(w.rank() == 4);
    CHECK(w.degree() == deg);
    SplitMultivector back = split(w);
    CHECK(back.main == sm.main);
    CHECK(back.aux == sm.aux);
    SplitForm sf = sample_split_form(s, 3, 3, deg);
    SplitForm fback = split(join(sf));
    CHECK(fback.main == sf.main);
    CHECK(fback.aux == sf.aux);
  }
}

TEST_CASE("join embeds as main + last ^ aux") {
  Multivector p = Multivector::basis(2, 0, {0, 1});
  Multivector q = Multivector::basis(2, 0, {0});
  Multivector w = join(SplitMultivector{p, q});
  // e_last ^ e_0 = -e_0 ^ e_last lands with a sign in increasing order
  CHECK(w.component({0, 1}) == Scalar::constant(0, 1));
  CHECK(w.component({0, 2}) == Scalar::constant(0, -1));
  CHECK(split(w).aux == q);
}

TEST_CASE("degree-0 splits carry no aux part") {
  Scalar f = Scalar::variable(2, 0);
  Multivector w = Multivector::from_scalar(4, f);
  SplitMultivector sm = split(w);
  CHECK(sm.main.to_scalar() == f);
  CHECK(sm.aux.is_zero());
  CHECK(join(sm) == w);
}

TEST_CASE("tilde contraction mirrors the joined interior product") {
  SampleStream s(52);
  for (int t = 0; t < 32; ++t) {
    const int deg = static_cast<int>(s.range(1, 3));
    SplitForm sf = sample_split_form(s, 3, 3, 1);
    SplitMultivector sm = sample_split_multi(s, 3, 3, deg);
    SplitMultivector out = tilde_contract(sf, sm);
    CHECK(join(out) == interior(join(sf), join(sm)));
  }
}

TEST_CASE("tilde wedge mirrors the joined wedge") {
  SampleStream s(53);
  for (int t = 0; t < 32; ++t) {
    const int dp = static_cast<int>(s.range(1, 2));
    const int dq = static_cast<int>(s.range(1, 2));
    SplitMultivector a = sample_split_multi(s, 3, 3, dp);
    SplitMultivector b = sample_split_multi(s, 3, 3, dq);
    SplitMultivector out = tilde_wedge(a, b);
    CHECK(join(out) == wedge(join(a), join(b)));
  }
}

TEST_CASE("tilde differential mirrors the extended differential") {
  Algebroid tm = contact_tangent();
  ExtendedAlgebroid ext = extend_algebroid(tm);
  SampleStream s(54);
  for (int t = 0; t < 32; ++t) {
    const int deg = static_cast<int>(s.range(1, 2));
    SplitForm sf = sample_split_form(s, 3, 3, deg);
    SplitForm out = tilde_differential(tm, sf);
    CHECK(join(out) == ext.algebroid.differential(join(sf)));
  }
}

TEST_CASE("tilde differential over a point") {
  Algebroid a;
  a.base = BasePatch::point();
  a.rank = 2;
  a.frame = {"e1", "e2"};
  a.anchor = {{}, {}};
  a.set_bracket(0, 1, Multivector::basis(2, 0, {1}));
  ExtendedAlgebroid ext = extend_algebroid(a);
  SampleStream s(55);
  for (int t = 0; t < 32; ++t) {
    SplitForm sf = sample_split_form(s, 2, 0, 1);
    CHECK(join(tilde_differential(a, sf)) == ext.algebroid.differential(join(sf)));
  }
}
