#include "bialg/deformed.hpp"

namespace bialg {

namespace {

int parity_sign(long n) { return (((n % 2) + 2) % 2 == 0) ? 1 : -1; }

void check_value_shape(const Algebroid& a, const Form& value) {
  if (value.degree() != 1) throw StructureError("cocycle: value must have degree 1");
  if (value.rank() != a.rank || value.nvars() != a.dim())
    throw StructureError("cocycle: value over wrong bundle");
}

}  // namespace

Cocycle Cocycle::validated(const Algebroid& owner, Form value) {
  owner.check_shape();
  check_value_shape(owner, value);
  Form d = owner.differential(value);
  if (!d.is_zero()) {
    CheckReport report;
    Counterexample ce;
    ce.inputs = {{"phi", to_string(value, owner.base)}};
    ce.residual = to_string(d, owner.base);
    report.add_fail("cocycle_closed", "d(phi) = 0", std::move(ce));
    throw ConstructionError("cocycle: candidate is not closed", std::move(report));
  }
  return Cocycle(owner, std::move(value));
}

Cocycle Cocycle::zero(const Algebroid& owner) {
  return validated(owner, owner.zero_form(1));
}

CheckReport is_cocycle(const Algebroid& a, const Form& candidate, const SampleConfig& cfg) {
  check_value_shape(a, candidate);
  CheckReport report;

  Form d = a.differential(candidate);
  if (d.is_zero()) {
    report.add_pass("cocycle_closed", "d(phi) = 0");
  } else {
    Counterexample ce;
    ce.inputs = {{"phi", to_string(candidate, a.base)}};
    ce.residual = to_string(d, a.base);
    report.add_fail("cocycle_closed", "d(phi) = 0", std::move(ce));
  }

  {
    SampleStream stream(cfg.seed);
    bool ok = true;
    Counterexample ce;
    for (int t = 0; t < cfg.trials && ok; ++t) {
      Multivector x = stream.multivector(a.rank, 1, a.dim(), cfg.max_degree);
      Multivector y = stream.multivector(a.rank, 1, a.dim(), cfg.max_degree);
      Scalar res = pairing(candidate, a.bracket(x, y)) -
                   a.anchor_apply(x, pairing(candidate, y)) +
                   a.anchor_apply(y, pairing(candidate, x));
      if (!res.is_zero()) {
        ok = false;
        ce.inputs = {{"X", to_string(x, a.base)}, {"Y", to_string(y, a.base)}};
        ce.residual = to_string(res, a.base);
      }
    }
    if (ok)
      report.add_pass("cocycle_identity_samples", "phi([X,Y]) = rho(X)phi(Y) - rho(Y)phi(X)");
    else
      report.add_fail("cocycle_identity_samples", "phi([X,Y]) = rho(X)phi(Y) - rho(Y)phi(X)", ce);
  }

  return report;
}

Scalar deformed_anchor_apply(const Cocycle& phi, const Multivector& x, const Scalar& f) {
  return phi.owner().anchor_apply(x, f) + phi.apply(x) * f;
}

Form deformed_differential(const Cocycle& phi, const Scalar& f) {
  return phi.owner().differential(f) + phi.value().scaled(f);
}

Form deformed_differential(const Cocycle& phi, const Form& alpha) {
  return phi.owner().differential(alpha) + wedge(phi.value(), alpha);
}

Form deformed_lie_derivative(const Cocycle& phi, const Multivector& x, const Form& alpha) {
  if (x.degree() != 1) throw StructureError("deformed lie derivative: need a degree-1 section");
  if (alpha.degree() == 0) return interior(x, deformed_differential(phi, alpha));
  return interior(x, deformed_differential(phi, alpha)) +
         deformed_differential(phi, interior(x, alpha));
}

Multivector deformed_schouten(const Cocycle& phi, const Multivector& p, const Multivector& q) {
  const Algebroid& a = phi.owner();
  const int dp = p.degree();
  const int dq = q.degree();
  Multivector out = a.schouten(p, q);
  // [P,Q]^phi = [P,Q] + (p-1) P ^ i_phi Q - (-1)^(p-1) (q-1) (i_phi P) ^ Q
  if (dq >= 1 && dp != 1) {
    Multivector t = wedge(p, interior(phi.value(), q)).scaled(Rational(dp - 1));
    out += t;
  }
  if (dp >= 1 && dq != 1) {
    Multivector t = wedge(interior(phi.value(), p), q).scaled(Rational(dq - 1));
    if (parity_sign(dp - 1) > 0) t = -t;
    out += t;
  }
  return out;
}

Multivector deformed_lie_derivative(const Cocycle& phi, const Multivector& x, const Multivector& p) {
  if (x.degree() != 1) throw StructureError("deformed lie derivative: need a degree-1 section");
  return deformed_schouten(phi, x, p);
}

namespace {

struct Sampler {
  const Algebroid& a;
  SampleStream stream;
  int max_degree;
  int cap;  // highest graded degree worth sampling

  Multivector section() { return stream.multivector(a.rank, 1, a.dim(), max_degree); }
  Scalar function() { return stream.scalar(a.dim(), max_degree); }
  Form form_of(int d) { return stream.form(a.rank, d, a.dim(), max_degree); }
  Multivector multi_of(int d) { return stream.multivector(a.rank, d, a.dim(), max_degree); }
  int degree(int lo) { return static_cast<int>(stream.range(lo, std::max(lo, cap))); }
};

}  // namespace

CheckReport verify_deformed_properties(const Cocycle& phi, const SampleConfig& cfg) {
  const Algebroid& a = phi.owner();
  CheckReport report;
  const int cap = std::min(2, a.rank);

  auto run = [&](const char* name, const char* ref,
                 const std::function<bool(Sampler&, Counterexample&)>& trial) {
    Sampler s{a, SampleStream(cfg.seed), cfg.max_degree, cap};
    Counterexample ce;
    bool ok = true;
    for (int t = 0; t < cfg.trials && ok; ++t) ok = trial(s, ce);
    if (ok)
      report.add_pass(name, ref);
    else
      report.add_fail(name, ref, ce);
  };

  run("deformed_differential_wedge",
      "d^phi(a^b) = d^phi(a)^b + (-1)^|a| a^d^phi(b) - phi^a^b",
      [&](Sampler& s, Counterexample& ce) {
        const int da = s.degree(0);
        const int db = s.degree(0);
        Form alpha = s.form_of(da);
        Form beta = s.form_of(db);
        Form res = deformed_differential(phi, wedge(alpha, beta)) -
                   wedge(deformed_differential(phi, alpha), beta) +
                   wedge(phi.value(), wedge(alpha, beta));
        Form cross = wedge(alpha, deformed_differential(phi, beta));
        res -= (da % 2 == 0) ? cross : -cross;
        if (res.is_zero()) return true;
        ce.inputs = {{"alpha", to_string(alpha, a.base)}, {"beta", to_string(beta, a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      });

  run("deformed_lie_derivative_function_factor",
      "L^phi_X(f a) = f L^phi_X(a) + (rho(X)f) a",
      [&](Sampler& s, Counterexample& ce) {
        Multivector x = s.section();
        Scalar f = s.function();
        Form alpha = s.form_of(s.degree(0));
        Form res = deformed_lie_derivative(phi, x, alpha.scaled(f)) -
                   deformed_lie_derivative(phi, x, alpha).scaled(f) -
                   alpha.scaled(a.anchor_apply(x, f));
        if (res.is_zero()) return true;
        ce.inputs = {{"X", to_string(x, a.base)}, {"f", to_string(f, a.base)},
                     {"alpha", to_string(alpha, a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      });

  run("deformed_lie_derivative_section_factor",
      "L^phi_{fX}(a) = f L^phi_X(a) + df ^ i_X(a)",
      [&](Sampler& s, Counterexample& ce) {
        Multivector x = s.section();
        Scalar f = s.function();
        Form alpha = s.form_of(s.degree(0));
        Form res = deformed_lie_derivative(phi, x.scaled(f), alpha) -
                   deformed_lie_derivative(phi, x, alpha).scaled(f);
        // the contraction correction carries degree |a| and is absent on
        // functions
        if (alpha.degree() >= 1) res -= wedge(a.differential(f), interior(x, alpha));
        if (res.is_zero()) return true;
        ce.inputs = {{"X", to_string(x, a.base)}, {"f", to_string(f, a.base)},
                     {"alpha", to_string(alpha, a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      });

  run("deformed_lie_derivative_wedge",
      "L^phi_X(a^b) = L^phi_X(a)^b + a^L^phi_X(b) - phi(X) a^b",
      [&](Sampler& s, Counterexample& ce) {
        Multivector x = s.section();
        Form alpha = s.form_of(s.degree(0));
        Form beta = s.form_of(s.degree(0));
        Form res = deformed_lie_derivative(phi, x, wedge(alpha, beta)) -
                   wedge(deformed_lie_derivative(phi, x, alpha), beta) -
                   wedge(alpha, deformed_lie_derivative(phi, x, beta)) +
                   wedge(alpha, beta).scaled(phi.apply(x));
        if (res.is_zero()) return true;
        ce.inputs = {{"X", to_string(x, a.base)}, {"alpha", to_string(alpha, a.base)},
                     {"beta", to_string(beta, a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      });

  run("deformed_schouten_function",
      "[X,f]^phi = rho(X)f + phi(X)f",
      [&](Sampler& s, Counterexample& ce) {
        Multivector x = s.section();
        Scalar f = s.function();
        Scalar res = deformed_schouten(phi, x, Multivector::from_scalar(a.rank, f)).to_scalar() -
                     deformed_anchor_apply(phi, x, f);
        if (res.is_zero()) return true;
        ce.inputs = {{"X", to_string(x, a.base)}, {"f", to_string(f, a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      });

  run("deformed_schouten_sections",
      "[X,Y]^phi = [X,Y]",
      [&](Sampler& s, Counterexample& ce) {
        Multivector x = s.section();
        Multivector y = s.section();
        Multivector res = deformed_schouten(phi, x, y) - a.bracket(x, y);
        if (res.is_zero()) return true;
        ce.inputs = {{"X", to_string(x, a.base)}, {"Y", to_string(y, a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      });

  run("deformed_schouten_antisymmetry",
      "[P,Q]^phi = -(-1)^((p-1)(q-1)) [Q,P]^phi",
      [&](Sampler& s, Counterexample& ce) {
        const int dp = s.degree(0);
        const int dq = s.degree(0);
        Multivector p = s.multi_of(dp);
        Multivector q = s.multi_of(dq);
        Multivector flip = deformed_schouten(phi, q, p);
        Multivector res = deformed_schouten(phi, p, q) +
                          (parity_sign(static_cast<long>(dp - 1) * (dq - 1)) > 0 ? flip : -flip);
        if (res.is_zero()) return true;
        ce.inputs = {{"P", to_string(p, a.base)}, {"Q", to_string(q, a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      });

  run("deformed_schouten_wedge_leibniz",
      "[P,Q^R]^phi = [P,Q]^phi^R + (-1)^((p-1)q) Q^[P,R]^phi - (-1)^(p-1) i_phi(P)^Q^R",
      [&](Sampler& s, Counterexample& ce) {
        const int dp = s.degree(1);
        const int dq = s.degree(0);
        const int dr = s.degree(0);
        Multivector p = s.multi_of(dp);
        Multivector q = s.multi_of(dq);
        Multivector r = s.multi_of(dr);
        Multivector res = deformed_schouten(phi, p, wedge(q, r)) -
                          wedge(deformed_schouten(phi, p, q), r);
        Multivector cross = wedge(q, deformed_schouten(phi, p, r));
        res -= (parity_sign(static_cast<long>(dp - 1) * dq) > 0) ? cross : -cross;
        Multivector last = wedge(interior_or_zero(phi.value(), p), wedge(q, r));
        if (dp >= 1) res += (parity_sign(dp - 1) > 0) ? last : -last;
        if (res.is_zero()) return true;
        ce.inputs = {{"P", to_string(p, a.base)}, {"Q", to_string(q, a.base)},
                     {"R", to_string(r, a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      });

  return report;
}

}  // namespace bialg
