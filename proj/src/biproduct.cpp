#include "bialg/biproduct.hpp"

namespace bialg {

namespace {

int parity_sign(long n) { return (((n % 2) + 2) % 2 == 0) ? 1 : -1; }

void check_split_pair(int main_degree, int aux_degree) {
  if (main_degree == 0) {
    if (aux_degree != 0) throw StructureError("split element: degree-0 main needs degree-0 zero aux");
  } else if (aux_degree != main_degree - 1) {
    throw StructureError("split element: aux degree must be main degree - 1");
  }
}

}  // namespace

ExtendedAlgebroid extend_algebroid(const Algebroid& a) {
  a.check_shape();
  Algebroid ext;
  ext.base = a.base;
  ext.rank = a.rank + 1;
  ext.frame = a.frame;
  ext.frame.push_back("e_inf");
  ext.anchor = a.anchor;
  ext.anchor.push_back(std::vector<Scalar>(static_cast<size_t>(a.dim()), Scalar(a.dim())));
  for (const auto& [key, value] : a.structure) {
    Multivector lifted = ext.zero_multivector(1);
    for (const auto& [idx, s] : value.components()) lifted.add_component(idx, s);
    ext.set_bracket(key.first, key.second, lifted);
  }
  Cocycle canonical = Cocycle::validated(ext, ext.coframe_element(a.rank));
  return ExtendedAlgebroid{std::move(ext), std::move(canonical)};
}

Multivector join(const SplitMultivector& s) {
  check_split_pair(s.main.degree(), s.aux.degree());
  if (s.main.rank() != s.aux.rank() || s.main.nvars() != s.aux.nvars())
    throw StructureError("split element: mismatched parts");
  const int k = s.main.rank();
  const int r = s.main.degree();
  Multivector out(k + 1, r, s.main.nvars());
  for (const auto& [idx, c] : s.main.components()) out.add_component(idx, c);
  if (r > 0) {
    // e_last ^ e_J = (-1)^|J| e_{J,last}
    for (const auto& [idx, c] : s.aux.components()) {
      IndexTuple lifted(idx);
      lifted.push_back(k);
      out.add_component(lifted, parity_sign(static_cast<long>(idx.size())) > 0 ? c : -c);
    }
  }
  return out;
}

SplitMultivector split(const Multivector& w) {
  const int k = w.rank() - 1;
  if (k < 0) throw StructureError("split: rank must be positive");
  const int r = w.degree();
  Multivector main(k, r, w.nvars());
  Multivector aux(k, r > 0 ? r - 1 : 0, w.nvars());
  for (const auto& [idx, c] : w.components()) {
    if (!idx.empty() && idx.back() == k) {
      IndexTuple rest(idx.begin(), idx.end() - 1);
      aux.add_component(rest, parity_sign(static_cast<long>(rest.size())) > 0 ? c : -c);
    } else {
      main.add_component(idx, c);
    }
  }
  return SplitMultivector{std::move(main), std::move(aux)};
}

Form join(const SplitForm& s) {
  SplitMultivector m{as_multivector(s.main), as_multivector(s.aux)};
  return as_form(join(m));
}

SplitForm split(const Form& w) {
  SplitMultivector m = split(as_multivector(w));
  return SplitForm{as_form(m.main), as_form(m.aux)};
}

SplitMultivector tilde_contract(const SplitForm& s, const SplitMultivector& t) {
  check_split_pair(s.main.degree(), s.aux.degree());
  check_split_pair(t.main.degree(), t.aux.degree());
  const int k = s.main.degree();
  const int r = t.main.degree();
  if (k > r) throw StructureError("tilde_contract: contraction degree exceeds target degree");
  // i_(a,b)(P,Q) = (i_a P + i_b Q, (-1)^k i_a Q)
  Multivector main = interior_or_zero(s.main, t.main);
  if (k >= 1 && r >= 1) main += interior_or_zero(s.aux, t.aux);
  if (k == 0) {
    // degree-0 forms act by multiplication on both parts
    const Scalar f = s.main.to_scalar();
    return SplitMultivector{t.main.scaled(f), t.aux.scaled(f)};
  }
  Multivector aux = (k <= r - 1) ? interior_or_zero(s.main, t.aux)
                                 : Multivector(t.main.rank(), 0, t.main.nvars());
  if (parity_sign(k) < 0) aux = -aux;
  return SplitMultivector{std::move(main), std::move(aux)};
}

SplitMultivector tilde_wedge(const SplitMultivector& s, const SplitMultivector& t) {
  check_split_pair(s.main.degree(), s.aux.degree());
  check_split_pair(t.main.degree(), t.aux.degree());
  const int r = s.main.degree();
  // (P,Q)^(P',Q') = (P^P', Q^P' + (-1)^r P^Q')
  Multivector main = wedge(s.main, t.main);
  const int out_degree = s.main.degree() + t.main.degree();
  Multivector aux(s.main.rank(), out_degree > 0 ? out_degree - 1 : 0, s.main.nvars());
  if (s.main.degree() > 0) aux += wedge(s.aux, t.main);
  if (t.main.degree() > 0) {
    Multivector cross = wedge(s.main, t.aux);
    aux += (parity_sign(r) > 0) ? cross : -cross;
  }
  return SplitMultivector{std::move(main), std::move(aux)};
}

SplitForm tilde_differential(const Algebroid& a, const SplitForm& s) {
  check_split_pair(s.main.degree(), s.aux.degree());
  // d~(a, b) = (d a, -d b)
  Form main = a.differential(s.main);
  Form aux = s.main.degree() > 0 ? -a.differential(s.aux) : Form(s.main.rank(), 0, s.main.nvars());
  if (s.main.degree() == 0) {
    // joined element is just the function a; d~ splits as (d a, 0) of degree 1
    aux = Form(s.main.rank(), 0, s.main.nvars());
    return SplitForm{std::move(main), std::move(aux)};
  }
  return SplitForm{std::move(main), std::move(aux)};
}

}  // namespace bialg
