#include "bialg/graded.hpp"

#include <algorithm>

namespace bialg {

int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t i = 0;
  size_t j = 0;
  long swaps = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining elements of a
      swaps += static_cast<long>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return (swaps % 2 == 0) ? 1 : -1;
}

int contraction_sign(const IndexTuple& sub, const IndexTuple& sup, IndexTuple& rest) {
  rest.clear();
  rest.reserve(sup.size() - sub.size());
  size_t i = 0;
  for (int v : sup) {
    if (i < sub.size() && sub[i] == v) {
      ++i;
    } else {
      rest.push_back(v);
    }
  }
  if (i != sub.size()) return 0;
  // sign of sorting (sub, rest): count pairs s in sub, r in rest with s > r
  long inversions = 0;
  for (int s : sub)
    for (int r : rest)
      if (s > r) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

namespace {

// Shared contraction kernel: contract `small` (degree s) into `big`
// (degree r >= s) over the first slots.
template <Variance VO, Variance VS, Variance VB>
Graded<VO> contract(const Graded<VS>& small, const Graded<VB>& big) {
  if (small.rank() != big.rank() || small.nvars() != big.nvars())
    throw StructureError("interior: mismatched frames");
  Graded<VO> out(big.rank(), big.degree() - small.degree(), big.nvars());
  IndexTuple rest;
  for (const auto& [is, ss] : small.components()) {
    for (const auto& [ib, sb] : big.components()) {
      int sign = contraction_sign(is, ib, rest);
      if (sign == 0) continue;
      Scalar term = ss * sb;
      if (sign < 0) term = -term;
      out.add_component(rest, term);
    }
  }
  return out;
}

}  // namespace

Multivector interior(const Form& phi, const Multivector& p) {
  if (phi.degree() > p.degree())
    throw StructureError("interior: contraction degree exceeds target degree");
  return contract<Variance::primal>(phi, p);
}

Form interior(const Multivector& x, const Form& alpha) {
  if (x.degree() > alpha.degree())
    throw StructureError("interior: contraction degree exceeds target degree");
  return contract<Variance::dual>(x, alpha);
}

Multivector interior_or_zero(const Form& phi, const Multivector& p) {
  if (phi.degree() > p.degree()) return Multivector(p.rank(), 0, p.nvars());
  return contract<Variance::primal>(phi, p);
}

Form interior_or_zero(const Multivector& x, const Form& alpha) {
  if (x.degree() > alpha.degree()) return Form(alpha.rank(), 0, alpha.nvars());
  return contract<Variance::dual>(x, alpha);
}

Scalar pairing(const Form& alpha, const Multivector& p) {
  if (alpha.rank() != p.rank() || alpha.nvars() != p.nvars())
    throw StructureError("pairing: mismatched frames");
  if (alpha.degree() != p.degree())
    throw StructureError("pairing: mismatched degrees");
  Scalar acc(p.nvars());
  for (const auto& [i, s] : alpha.components()) {
    auto it = p.components().find(i);
    if (it != p.components().end()) acc += s * it->second;
  }
  return acc;
}

Form as_form(const Multivector& p) {
  Form out(p.rank(), p.degree(), p.nvars());
  for (const auto& [i, s] : p.components()) out.add_component(i, s);
  return out;
}

Multivector as_multivector(const Form& alpha) {
  Multivector out(alpha.rank(), alpha.degree(), alpha.nvars());
  for (const auto& [i, s] : alpha.components()) out.add_component(i, s);
  return out;
}

namespace {

template <Variance V>
std::string render(const Graded<V>& g, const BasePatch& base, const char* symbol) {
  if (g.degree() == 0) return to_string(g.to_scalar(), base);
  if (g.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, s] : g.components()) {
    if (!out.empty()) out += " + ";
    std::string basis = symbol;
    basis += "[";
    for (size_t i = 0; i < idx.size(); ++i) {
      if (i > 0) basis += ",";
      basis += std::to_string(idx[i] + 1);
    }
    basis += "]";
    const std::string coeff = to_string(s, base);
    if (coeff == "1") {
      out += basis;
    } else {
      out += "(" + coeff + ")*" + basis;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const Multivector& p, const BasePatch& base) { return render(p, base, "e"); }
std::string to_string(const Form& alpha, const BasePatch& base) { return render(alpha, base, "E"); }

}  // namespace bialg
