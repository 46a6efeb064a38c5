#include "bialg/jacobi.hpp"

namespace bialg {

namespace {

void check_shapes(const BasePatch& base, const Multivector& lambda, const Multivector& e_field) {
  const int n = base.dim();
  if (lambda.rank() != n || lambda.degree() != 2 || lambda.nvars() != n)
    throw StructureError("jacobi: Lambda must be a tangent bivector");
  if (e_field.rank() != n || e_field.degree() != 1 || e_field.nvars() != n)
    throw StructureError("jacobi: E must be a tangent vector field");
}

Scalar raw_bracket(const Algebroid& tangent, const Multivector& lambda, const Multivector& e_field,
                   const Scalar& f, const Scalar& g) {
  Scalar out = pairing(wedge(tangent.differential(f), tangent.differential(g)), lambda);
  out += f * tangent.anchor_apply(e_field, g);
  out -= g * tangent.anchor_apply(e_field, f);
  return out;
}

}  // namespace

Scalar jacobi_bracket(const JacobiStructure& j, const Scalar& f, const Scalar& g) {
  Algebroid tangent = tangent_algebroid(j.base());
  return raw_bracket(tangent, j.lambda(), j.e_field(), f, g);
}

CheckReport check_jacobi_structure(const BasePatch& base, const Multivector& lambda,
                                   const Multivector& e_field, const SampleConfig& cfg) {
  check_shapes(base, lambda, e_field);
  CheckReport report;
  const int n = base.dim();
  Algebroid tangent = tangent_algebroid(base);

  {
    Multivector res = tangent.schouten(lambda, lambda) + wedge(e_field, lambda).scaled(Rational(2));
    if (res.is_zero()) {
      report.add_pass("jacobi_tensor_bivector", "[Lambda,Lambda] + 2 E^Lambda = 0");
    } else {
      Counterexample ce;
      ce.inputs = {{"Lambda", to_string(lambda, base)}, {"E", to_string(e_field, base)}};
      ce.residual = to_string(res, base);
      report.add_fail("jacobi_tensor_bivector", "[Lambda,Lambda] + 2 E^Lambda = 0", std::move(ce));
    }
  }

  {
    Multivector res = tangent.schouten(e_field, lambda);
    if (res.is_zero()) {
      report.add_pass("jacobi_tensor_vector", "[E,Lambda] = 0");
    } else {
      Counterexample ce;
      ce.inputs = {{"Lambda", to_string(lambda, base)}, {"E", to_string(e_field, base)}};
      ce.residual = to_string(res, base);
      report.add_fail("jacobi_tensor_vector", "[E,Lambda] = 0", std::move(ce));
    }
  }

  auto jacobiator = [&](const Scalar& f, const Scalar& g, const Scalar& h) {
    return raw_bracket(tangent, lambda, e_field, raw_bracket(tangent, lambda, e_field, f, g), h) +
           raw_bracket(tangent, lambda, e_field, raw_bracket(tangent, lambda, e_field, g, h), f) +
           raw_bracket(tangent, lambda, e_field, raw_bracket(tangent, lambda, e_field, h, f), g);
  };

  {
    bool ok = true;
    Counterexample ce;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        for (int l = j + 1; l < n && ok; ++l) {
          Scalar res = jacobiator(Scalar::variable(n, i), Scalar::variable(n, j), Scalar::variable(n, l));
          if (!res.is_zero()) {
            ok = false;
            ce.inputs = {{"f", base.coords[static_cast<size_t>(i)]},
                         {"g", base.coords[static_cast<size_t>(j)]},
                         {"h", base.coords[static_cast<size_t>(l)]}};
            ce.residual = to_string(res, base);
          }
        }
    if (ok)
      report.add_pass("jacobi_bracket_coordinates", "{{f,g},h} + {{g,h},f} + {{h,f},g} = 0");
    else
      report.add_fail("jacobi_bracket_coordinates", "{{f,g},h} + {{g,h},f} + {{h,f},g} = 0", ce);
  }

  {
    SampleStream stream(cfg.seed);
    bool ok = true;
    Counterexample ce;
    for (int t = 0; t < cfg.trials && ok; ++t) {
      Scalar f = stream.scalar(n, cfg.max_degree);
      Scalar g = stream.scalar(n, cfg.max_degree);
      Scalar h = stream.scalar(n, cfg.max_degree);
      Scalar res = jacobiator(f, g, h);
      if (!res.is_zero()) {
        ok = false;
        ce.inputs = {{"f", to_string(f, base)}, {"g", to_string(g, base)}, {"h", to_string(h, base)}};
        ce.residual = to_string(res, base);
      }
    }
    if (ok)
      report.add_pass("jacobi_bracket_samples", "{{f,g},h} + {{g,h},f} + {{h,f},g} = 0");
    else
      report.add_fail("jacobi_bracket_samples", "{{f,g},h} + {{g,h},f} + {{h,f},g} = 0", ce);
  }

  return report;
}

JacobiStructure JacobiStructure::validated(BasePatch base, Multivector lambda, Multivector e_field,
                                           const SampleConfig& cfg) {
  CheckReport report = check_jacobi_structure(base, lambda, e_field, cfg);
  if (!report.all_passed())
    throw ConstructionError("jacobi: tensor pair fails the structure conditions", std::move(report));
  return JacobiStructure(std::move(base), std::move(lambda), std::move(e_field));
}

namespace {

// Lambda-sharp of the i-th coordinate differential, as a tangent section.
Multivector sharp_row(const Algebroid& tangent, const Multivector& lambda, int i) {
  const int n = tangent.rank;
  Multivector out = tangent.zero_multivector(1);
  for (int l = 0; l < n; ++l) {
    Scalar entry = pairing(wedge(tangent.coframe_element(i), tangent.coframe_element(l)), lambda);
    if (!entry.is_zero()) out.add_component({l}, entry);
  }
  return out;
}

}  // namespace

Algebroid cotangent_algebroid(const BasePatch& base, const Multivector& poisson,
                              const SampleConfig& cfg) {
  const int n = base.dim();
  Algebroid tangent = tangent_algebroid(base);
  {
    CheckReport report = check_jacobi_structure(base, poisson, tangent.zero_multivector(1), cfg);
    if (!report.all_passed())
      throw ConstructionError("cotangent algebroid: bivector is not Poisson", std::move(report));
  }
  Algebroid out;
  out.base = base;
  out.rank = n;
  for (const std::string& c : base.coords) out.frame.push_back("a_" + c);
  out.anchor.assign(static_cast<size_t>(n), std::vector<Scalar>(static_cast<size_t>(n), Scalar(n)));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      out.anchor[static_cast<size_t>(i)][static_cast<size_t>(l)] =
          pairing(wedge(tangent.coframe_element(i), tangent.coframe_element(l)), poisson);
  for (int i = 0; i < n; ++i) {
    Multivector sharp_i = sharp_row(tangent, poisson, i);
    for (int j = i + 1; j < n; ++j) {
      Multivector sharp_j = sharp_row(tangent, poisson, j);
      Form value = tangent.lie_derivative(sharp_i, tangent.coframe_element(j)) -
                   tangent.lie_derivative(sharp_j, tangent.coframe_element(i)) -
                   tangent.differential(
                       pairing(wedge(tangent.coframe_element(i), tangent.coframe_element(j)), poisson));
      out.set_bracket(i, j, as_multivector(value));
    }
  }
  return out;
}

OneJetAlgebroid one_jet_algebroid(const JacobiStructure& j) {
  const int n = j.base().dim();
  Algebroid tangent = tangent_algebroid(j.base());
  Algebroid out;
  out.base = j.base();
  out.rank = n + 1;
  for (const std::string& c : j.base().coords) out.frame.push_back("a_" + c);
  out.frame.push_back("a_inf");
  out.anchor.assign(static_cast<size_t>(n + 1), std::vector<Scalar>(static_cast<size_t>(n), Scalar(n)));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      out.anchor[static_cast<size_t>(i)][static_cast<size_t>(l)] =
          pairing(wedge(tangent.coframe_element(i), tangent.coframe_element(l)), j.lambda());
  for (int l = 0; l < n; ++l)
    out.anchor[static_cast<size_t>(n)][static_cast<size_t>(l)] = j.e_field().component({l});

  auto lift = [&](const Form& alpha, const Scalar& f) {
    Multivector section = out.zero_multivector(1);
    for (int l = 0; l < n; ++l) {
      Scalar c = alpha.component({l});
      if (!c.is_zero()) section.add_component({l}, c);
    }
    if (!f.is_zero()) section.add_component({n}, f);
    return section;
  };

  for (int i = 0; i < n; ++i) {
    Multivector sharp_i = sharp_row(tangent, j.lambda(), i);
    for (int l = i + 1; l < n; ++l) {
      Multivector sharp_l = sharp_row(tangent, j.lambda(), l);
      Scalar lambda_il = pairing(wedge(tangent.coframe_element(i), tangent.coframe_element(l)), j.lambda());
      Form form_part = tangent.lie_derivative(sharp_i, tangent.coframe_element(l)) -
                       tangent.lie_derivative(sharp_l, tangent.coframe_element(i)) -
                       tangent.differential(lambda_il) -
                       interior(j.e_field(), wedge(tangent.coframe_element(i), tangent.coframe_element(l)));
      out.set_bracket(i, l, lift(form_part, -lambda_il));
    }
    // bracket with the constant-function direction: (-L_E dx_i, 0)
    Form edge = -tangent.lie_derivative(j.e_field(), tangent.coframe_element(i));
    out.set_bracket(i, n, lift(edge, Scalar(n)));
  }

  Multivector x0 = out.zero_multivector(1);
  for (int l = 0; l < n; ++l) {
    Scalar c = j.e_field().component({l});
    if (!c.is_zero()) x0.add_component({l}, -c);
  }
  return OneJetAlgebroid{std::move(out), std::move(x0)};
}

}  // namespace bialg
