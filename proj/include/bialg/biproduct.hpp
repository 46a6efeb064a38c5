#pragma once

#include "bialg/deformed.hpp"

namespace bialg {

/// Degree-r element of the extended bundle written in split form (P, Q) with
/// deg P = r, deg Q = r - 1, both over the original rank-k frame. For r = 0
/// the aux part is the zero element of degree 0 and is ignored.
struct SplitMultivector {
  Multivector main;
  Multivector aux;
};

struct SplitForm {
  Form main;
  Form aux;
};

/// The original algebroid with one extra flat frame direction appended: the
/// anchor row of the new direction is zero and all its brackets vanish. The
/// canonical cocycle is the coframe element dual to the new direction.
struct ExtendedAlgebroid {
  Algebroid algebroid;
  Cocycle canonical;
};

ExtendedAlgebroid extend_algebroid(const Algebroid& a);

/// join embeds (P, Q) as P + e_last ^ Q over rank k + 1; split inverts it.
Multivector join(const SplitMultivector& s);
SplitMultivector split(const Multivector& w);
Form join(const SplitForm& s);
SplitForm split(const Form& w);

/// Contraction, wedge and differential computed directly on split pairs.
/// Each mirrors the corresponding operation on the joined elements.
SplitMultivector tilde_contract(const SplitForm& s, const SplitMultivector& t);
SplitMultivector tilde_wedge(const SplitMultivector& s, const SplitMultivector& t);
SplitForm tilde_differential(const Algebroid& a, const SplitForm& s);

}  // namespace bialg
