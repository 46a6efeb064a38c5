#include "bialg/algebroid.hpp"

#include <set>

namespace bialg {

void Algebroid::check_shape() const {
  if (rank < 0) throw StructureError("algebroid: negative rank");
  if (static_cast<int>(frame.size()) != rank) throw StructureError("algebroid: frame size differs from rank");
  std::set<std::string> seen(frame.begin(), frame.end());
  if (static_cast<int>(seen.size()) != rank) throw StructureError("algebroid: duplicate frame names");
  if (static_cast<int>(anchor.size()) != rank) throw StructureError("algebroid: anchor row count differs from rank");
  for (const auto& row : anchor) {
    if (static_cast<int>(row.size()) != dim()) throw StructureError("algebroid: anchor row length differs from dim");
    for (const Scalar& s : row)
      if (s.nvars() != dim()) throw StructureError("algebroid: anchor entry over wrong patch");
  }
  for (const auto& [key, value] : structure) {
    if (key.first < 0 || key.second >= rank || key.first >= key.second)
      throw StructureError("algebroid: bad structure key");
    if (value.rank() != rank || value.degree() != 1 || value.nvars() != dim())
      throw StructureError("algebroid: structure value has wrong shape");
  }
}

Multivector Algebroid::frame_section(int i) const {
  if (i < 0 || i >= rank) throw StructureError("algebroid: frame index out of range");
  return Multivector::basis(rank, dim(), {i});
}

Form Algebroid::coframe_element(int i) const {
  if (i < 0 || i >= rank) throw StructureError("algebroid: coframe index out of range");
  return Form::basis(rank, dim(), {i});
}

void Algebroid::set_bracket(int i, int j, const Multivector& value) {
  if (i == j) {
    if (!value.is_zero()) throw StructureError("algebroid: diagonal bracket must vanish");
    return;
  }
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  if (value.rank() != rank || value.degree() != 1 || value.nvars() != dim())
    throw StructureError("algebroid: bracket value has wrong shape");
  if (value.is_zero()) {
    structure.erase({i, j});
    return;
  }
  structure.insert_or_assign({i, j}, flip ? -value : value);
}

Multivector Algebroid::structure_bracket(int i, int j) const {
  if (i < 0 || i >= rank || j < 0 || j >= rank)
    throw StructureError("algebroid: bracket index out of range");
  if (i == j) return zero_multivector(1);
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = structure.find({i, j});
  if (it == structure.end()) return zero_multivector(1);
  return flip ? -it->second : it->second;
}

Scalar Algebroid::frame_anchor_apply(int i, const Scalar& f) const {
  Scalar out(dim());
  for (int l = 0; l < dim(); ++l) out += anchor[static_cast<size_t>(i)][static_cast<size_t>(l)] * f.derivative(l);
  return out;
}

Scalar Algebroid::anchor_apply(const Multivector& x, const Scalar& f) const {
  if (x.degree() != 1) throw StructureError("algebroid: anchor needs a degree-1 section");
  if (x.rank() != rank || x.nvars() != dim()) throw StructureError("algebroid: section over wrong bundle");
  Scalar out(dim());
  for (const auto& [idx, xi] : x.components()) out += xi * frame_anchor_apply(idx[0], f);
  return out;
}

std::vector<Scalar> Algebroid::anchor_vector(const Multivector& x) const {
  if (x.degree() != 1) throw StructureError("algebroid: anchor needs a degree-1 section");
  std::vector<Scalar> out(static_cast<size_t>(dim()), Scalar(dim()));
  for (const auto& [idx, xi] : x.components())
    for (int l = 0; l < dim(); ++l)
      out[static_cast<size_t>(l)] += xi * anchor[static_cast<size_t>(idx[0])][static_cast<size_t>(l)];
  return out;
}

Multivector Algebroid::bracket(const Multivector& x, const Multivector& y) const {
  if (x.degree() != 1 || y.degree() != 1) throw StructureError("algebroid: bracket needs degree-1 sections");
  if (x.rank() != rank || y.rank() != rank || x.nvars() != dim() || y.nvars() != dim())
    throw StructureError("algebroid: sections over wrong bundle");
  Multivector out = zero_multivector(1);
  for (const auto& [ix, xi] : x.components())
    for (const auto& [iy, yj] : y.components())
      out += structure_bracket(ix[0], iy[0]).scaled(xi * yj);
  for (const auto& [ix, xi] : x.components())
    for (const auto& [iy, yj] : y.components())
      out.add_component(iy, xi * frame_anchor_apply(ix[0], yj));
  for (const auto& [iy, yj] : y.components())
    for (const auto& [ix, xi] : x.components())
      out.add_component(ix, -(yj * frame_anchor_apply(iy[0], xi)));
  return out;
}

Form Algebroid::differential(const Scalar& f) const {
  if (f.nvars() != dim()) throw StructureError("algebroid: function over wrong patch");
  Form out = zero_form(1);
  for (int i = 0; i < rank; ++i) out.add_component({i}, frame_anchor_apply(i, f));
  return out;
}

void for_each_tuple(int rank, int length, const std::function<void(const IndexTuple&)>& fn) {
  if (length < 0) return;
  IndexTuple idx;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(idx.size()) == length) {
      fn(idx);
      return;
    }
    for (int i = start; i < rank; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

Form Algebroid::differential(const Form& alpha) const {
  if (alpha.rank() != rank || alpha.nvars() != dim())
    throw StructureError("algebroid: form over wrong bundle");
  if (alpha.degree() == 0) return differential(alpha.to_scalar());
  const int p = alpha.degree();
  Form out = zero_form(p + 1);
  for_each_tuple(rank, p + 1, [&](const IndexTuple& idx) {
    Scalar val(dim());
    for (int a = 0; a <= p; ++a) {
      IndexTuple rest;
      rest.reserve(static_cast<size_t>(p));
      for (int b = 0; b <= p; ++b)
        if (b != a) rest.push_back(idx[static_cast<size_t>(b)]);
      Scalar term = frame_anchor_apply(idx[static_cast<size_t>(a)], alpha.component(rest));
      val += (a % 2 == 0) ? term : -term;
    }
    for (int a = 0; a <= p; ++a) {
      for (int b = a + 1; b <= p; ++b) {
        Multivector inner = structure_bracket(idx[static_cast<size_t>(a)], idx[static_cast<size_t>(b)]);
        if (inner.is_zero()) continue;
        IndexTuple rest;
        rest.reserve(static_cast<size_t>(p - 1));
        for (int c = 0; c <= p; ++c)
          if (c != a && c != b) rest.push_back(idx[static_cast<size_t>(c)]);
        Scalar term = pairing(alpha, wedge(inner, Multivector::basis(rank, dim(), rest)));
        val += ((a + b) % 2 == 0) ? term : -term;
      }
    }
    out.add_component(idx, val);
  });
  return out;
}

Form Algebroid::lie_derivative(const Multivector& x, const Form& alpha) const {
  if (x.degree() != 1) throw StructureError("algebroid: lie derivative along a degree-1 section only");
  if (alpha.degree() == 0) return Form::from_scalar(rank, anchor_apply(x, alpha.to_scalar()));
  return interior(x, differential(alpha)) + differential(interior(x, alpha));
}

namespace {

// Recursive frame-tuple Schouten with a per-call memo; the memo lives only
// for one public schouten() evaluation, keeping the operation pure.
struct SchoutenWork {
  const Algebroid& a;
  std::map<std::pair<IndexTuple, IndexTuple>, Multivector> memo;

  Multivector basis(const IndexTuple& idx) const {
    return Multivector::basis(a.rank, a.dim(), idx);
  }

  // [e_I, e_J] by repeated Leibniz splitting down to structure functions.
  Multivector frame_bracket(const IndexTuple& i, const IndexTuple& j) {
    const int p = static_cast<int>(i.size());
    const int q = static_cast<int>(j.size());
    if (p == 0 || q == 0) return a.zero_multivector(std::max(p + q - 1, 0));
    if (p == 1 && q == 1) return a.structure_bracket(i[0], j[0]);
    auto key = std::make_pair(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Multivector out = a.zero_multivector(p + q - 1);
    if (p == 1) {
      // [X, Q ^ R] = [X, Q] ^ R + Q ^ [X, R]
      IndexTuple head{j[0]};
      IndexTuple rest(j.begin() + 1, j.end());
      out = wedge(frame_bracket(i, head), basis(rest)) + wedge(basis(head), frame_bracket(i, rest));
    } else {
      // [A ^ B, Q] = (-1)^((q-1) deg B) [A, Q] ^ B + A ^ [B, Q]
      IndexTuple head{i[0]};
      IndexTuple rest(i.begin() + 1, i.end());
      Multivector first = wedge(frame_bracket(head, j), basis(rest));
      if (((q - 1) * (p - 1)) % 2 != 0) first = -first;
      out = first + wedge(basis(head), frame_bracket(rest, j));
    }
    memo.emplace(std::move(key), out);
    return out;
  }
};

int parity_sign(long n) { return (((n % 2) + 2) % 2 == 0) ? 1 : -1; }

}  // namespace

Multivector Algebroid::schouten(const Multivector& p, const Multivector& q) const {
  if (p.rank() != rank || q.rank() != rank || p.nvars() != dim() || q.nvars() != dim())
    throw StructureError("algebroid: multivectors over wrong bundle");
  const int dp = p.degree();
  const int dq = q.degree();
  Multivector out = zero_multivector(std::max(dp + dq - 1, 0));
  SchoutenWork work{*this, {}};
  for (const auto& [i, c] : p.components()) {
    for (const auto& [j, d] : q.components()) {
      // [c e_I, d e_J] = c (-1)^(p+1) (i_{dd} e_I) ^ e_J
      //                + c d [e_I, e_J]
      //                - (-1)^((q-1)p) d (i_{dc} e_J) ^ e_I
      if (dp >= 1) {
        Multivector t = interior_or_zero(differential(d), work.basis(i));
        if (!t.is_zero()) {
          t = wedge(t, work.basis(j)).scaled(c);
          if (parity_sign(dp + 1) < 0) t = -t;
          out += t;
        }
      }
      out += work.frame_bracket(i, j).scaled(c * d);
      if (dq >= 1) {
        Multivector t = interior_or_zero(differential(c), work.basis(j));
        if (!t.is_zero()) {
          t = wedge(t, work.basis(i)).scaled(d);
          if (parity_sign(static_cast<long>(dq - 1) * dp) > 0) t = -t;
          out += t;
        }
      }
    }
  }
  return out;
}

Algebroid tangent_algebroid(const BasePatch& base) {
  Algebroid a;
  a.base = base;
  a.rank = base.dim();
  for (const std::string& c : base.coords) a.frame.push_back("v_" + c);
  a.anchor.assign(static_cast<size_t>(a.rank), std::vector<Scalar>(static_cast<size_t>(a.rank), Scalar(a.rank)));
  for (int i = 0; i < a.rank; ++i)
    a.anchor[static_cast<size_t>(i)][static_cast<size_t>(i)] = Scalar::constant(a.rank, 1);
  return a;
}

namespace {

std::string frame_label(int i) { return "e[" + std::to_string(i + 1) + "]"; }

}  // namespace

CheckReport check_axioms(const Algebroid& a, const SampleConfig& cfg) {
  a.check_shape();
  CheckReport report;
  const int n = a.dim();

  {
    bool ok = true;
    Counterexample ce;
    for (int i = 0; i < a.rank && ok; ++i)
      for (int j = i + 1; j < a.rank && ok; ++j)
        for (int l = j + 1; l < a.rank && ok; ++l) {
          Multivector ei = a.frame_section(i);
          Multivector ej = a.frame_section(j);
          Multivector el = a.frame_section(l);
          Multivector res = a.bracket(a.bracket(ei, ej), el) + a.bracket(a.bracket(ej, el), ei) +
                            a.bracket(a.bracket(el, ei), ej);
          if (!res.is_zero()) {
            ok = false;
            ce.inputs = {{"X", frame_label(i)}, {"Y", frame_label(j)}, {"Z", frame_label(l)}};
            ce.residual = to_string(res, a.base);
          }
        }
    if (ok)
      report.add_pass("axioms_jacobi_frames", "[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] = 0");
    else
      report.add_fail("axioms_jacobi_frames", "[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] = 0", ce);
  }

  {
    SampleStream stream(cfg.seed);
    bool ok = true;
    Counterexample ce;
    for (int t = 0; t < cfg.trials && ok; ++t) {
      Multivector x = stream.multivector(a.rank, 1, n, cfg.max_degree);
      Multivector y = stream.multivector(a.rank, 1, n, cfg.max_degree);
      Multivector z = stream.multivector(a.rank, 1, n, cfg.max_degree);
      Multivector res = a.bracket(a.bracket(x, y), z) + a.bracket(a.bracket(y, z), x) +
                        a.bracket(a.bracket(z, x), y);
      if (!res.is_zero()) {
        ok = false;
        ce.inputs = {{"X", to_string(x, a.base)}, {"Y", to_string(y, a.base)}, {"Z", to_string(z, a.base)}};
        ce.residual = to_string(res, a.base);
      }
    }
    if (ok)
      report.add_pass("axioms_jacobi_samples", "[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] = 0");
    else
      report.add_fail("axioms_jacobi_samples", "[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] = 0", ce);
  }

  {
    bool ok = true;
    Counterexample ce;
    for (int i = 0; i < a.rank && ok; ++i)
      for (int j = i + 1; j < a.rank && ok; ++j)
        for (int l = 0; l < n && ok; ++l) {
          Scalar h = Scalar::variable(n, l);
          Scalar res = a.anchor_apply(a.structure_bracket(i, j), h) -
                       a.frame_anchor_apply(i, a.frame_anchor_apply(j, h)) +
                       a.frame_anchor_apply(j, a.frame_anchor_apply(i, h));
          if (!res.is_zero()) {
            ok = false;
            ce.inputs = {{"X", frame_label(i)}, {"Y", frame_label(j)}, {"f", a.base.coords[static_cast<size_t>(l)]}};
            ce.residual = to_string(res, a.base);
          }
        }
    if (ok)
      report.add_pass("axioms_anchor_frames", "rho([X,Y])f = rho(X)rho(Y)f - rho(Y)rho(X)f");
    else
      report.add_fail("axioms_anchor_frames", "rho([X,Y])f = rho(X)rho(Y)f - rho(Y)rho(X)f", ce);
  }

  {
    SampleStream stream(cfg.seed + 1);
    bool ok = true;
    Counterexample ce;
    for (int t = 0; t < cfg.trials && ok; ++t) {
      Multivector x = stream.multivector(a.rank, 1, n, cfg.max_degree);
      Multivector y = stream.multivector(a.rank, 1, n, cfg.max_degree);
      Scalar h = stream.scalar(n, cfg.max_degree);
      Scalar res = a.anchor_apply(a.bracket(x, y), h) - a.anchor_apply(x, a.anchor_apply(y, h)) +
                   a.anchor_apply(y, a.anchor_apply(x, h));
      if (!res.is_zero()) {
        ok = false;
        ce.inputs = {{"X", to_string(x, a.base)}, {"Y", to_string(y, a.base)}, {"f", to_string(h, a.base)}};
        ce.residual = to_string(res, a.base);
      }
    }
    if (ok)
      report.add_pass("axioms_anchor_samples", "rho([X,Y])f = rho(X)rho(Y)f - rho(Y)rho(X)f");
    else
      report.add_fail("axioms_anchor_samples", "rho([X,Y])f = rho(X)rho(Y)f - rho(Y)rho(X)f", ce);
  }

  return report;
}

}  // namespace bialg
