#include "bialg/bialgebroid.hpp"

#include <functional>
#include <string>
#include <utility>

namespace bialg {

namespace {

Multivector tangent_vector(int nvars, const std::vector<Scalar>& comps) {
  Multivector v(nvars, 1, nvars);
  for (int l = 0; l < nvars; ++l) v.add_component({l}, comps[l]);
  return v;
}

}  // namespace

GenBialgebroidPair GenBialgebroidPair::assemble(const Algebroid& primal, const Form& phi0_value,
                                                const Algebroid& dual, const Form& x0_value,
                                                const SampleConfig& cfg) {
  primal.check_shape();
  dual.check_shape();
  if (!(primal.base == dual.base)) throw StructureError("pair: sides live over different patches");
  if (primal.rank != dual.rank) throw StructureError("pair: sides have different ranks");

  CheckReport axioms;
  axioms.append(check_axioms(primal, cfg), "primal_");
  axioms.append(check_axioms(dual, cfg), "dual_");
  if (!axioms.all_passed())
    throw ConstructionError("pair: a side fails the algebroid axioms", std::move(axioms));

  auto lift = [](const Algebroid& owner, const Form& value, const char* prefix) {
    try {
      return Cocycle::validated(owner, value);
    } catch (const ConstructionError& err) {
      CheckReport r;
      r.append(err.report, prefix);
      throw ConstructionError("pair: cocycle validation failed", std::move(r));
    }
  };
  Cocycle phi0 = lift(primal, phi0_value, "phi0_");
  Cocycle x0 = lift(dual, x0_value, "x0_");
  return GenBialgebroidPair(primal, std::move(phi0), dual, std::move(x0));
}

Multivector GenBialgebroidPair::dual_differential(const Scalar& f) const {
  return as_multivector(deformed_differential(x0_, f));
}

Multivector GenBialgebroidPair::dual_differential(const Multivector& p) const {
  return as_multivector(deformed_differential(x0_, as_form(p)));
}

Multivector GenBialgebroidPair::dual_differential_plain(const Multivector& p) const {
  return as_multivector(dual_.differential(as_form(p)));
}

Form GenBialgebroidPair::dual_bracket(const Form& xi, const Form& eta) const {
  return as_form(dual_.bracket(as_multivector(xi), as_multivector(eta)));
}

Form GenBialgebroidPair::dual_schouten_deformed(const Form& xi, const Form& eta) const {
  return as_form(deformed_schouten(x0_, as_multivector(xi), as_multivector(eta)));
}

GenBialgebroidPair GenBialgebroidPair::dualize() const {
  return GenBialgebroidPair(dual_, x0_, primal_, phi0_);
}

namespace {

// Deterministic frame sweep then seeded trials, one report entry each.
struct LemmaRunner {
  CheckReport& report;
  const SampleConfig& cfg;

  void frames(const char* name, const char* ref,
              const std::function<bool(Counterexample&)>& sweep) {
    Counterexample ce;
    if (sweep(ce))
      report.add_pass(name, ref);
    else
      report.add_fail(name, ref, std::move(ce));
  }

  void samples(const char* name, const char* ref,
               const std::function<bool(SampleStream&, Counterexample&)>& trial) {
    SampleStream stream(cfg.seed);
    Counterexample ce;
    bool ok = true;
    for (int t = 0; t < cfg.trials && ok; ++t) ok = trial(stream, ce);
    if (ok)
      report.add_pass(name, ref);
    else
      report.add_fail(name, ref, std::move(ce));
  }
};

}  // namespace

CheckReport check_compatibility(const GenBialgebroidPair& p, const SampleConfig& cfg) {
  const Algebroid& a = p.primal();
  const Algebroid& b = p.dual();
  const int n = a.dim();
  CheckReport report;
  LemmaRunner run{report, cfg};

  const char* ref1 = "d*^X0 [X,Y] = [d*^X0 X, Y]^phi0 + [X, d*^X0 Y]^phi0";
  auto leibniz_residual = [&](const Multivector& x, const Multivector& y) {
    return p.dual_differential(a.bracket(x, y)) -
           deformed_schouten(p.phi0(), p.dual_differential(x), y) -
           deformed_schouten(p.phi0(), x, p.dual_differential(y));
  };
  auto record_pair = [&](Counterexample& ce, const Multivector& x, const Multivector& y,
                         const Multivector& res) {
    ce.inputs = {{"X", to_string(x, a.base)}, {"Y", to_string(y, a.base)}};
    ce.residual = to_string(res, a.base);
  };
  run.frames("pair_mixed_leibniz_frames", ref1, [&](Counterexample& ce) {
    for (int i = 0; i < a.rank; ++i)
      for (int j = 0; j < a.rank; ++j) {
        Multivector res = leibniz_residual(a.frame_section(i), a.frame_section(j));
        if (res.is_zero()) continue;
        record_pair(ce, a.frame_section(i), a.frame_section(j), res);
        return false;
      }
    return true;
  });
  run.samples("pair_mixed_leibniz_samples", ref1, [&](SampleStream& s, Counterexample& ce) {
    Multivector x = s.multivector(a.rank, 1, n, cfg.max_degree);
    Multivector y = s.multivector(a.rank, 1, n, cfg.max_degree);
    Multivector res = leibniz_residual(x, y);
    if (res.is_zero()) return true;
    record_pair(ce, x, y, res);
    return false;
  });

  const char* ref2 = "L*^X0_phi0 P + L^phi0_X0 P = 0";
  auto sum_deg0 = [&](const Scalar& f) {
    return deformed_anchor_apply(p.x0(), p.phi0_dual_section(), f) +
           deformed_anchor_apply(p.phi0(), p.x0_section(), f);
  };
  auto sum_higher = [&](const Multivector& q) {
    return as_multivector(deformed_lie_derivative(p.x0(), p.phi0_dual_section(), as_form(q))) +
           deformed_lie_derivative(p.phi0(), p.x0_section(), q);
  };
  run.samples("pair_derivative_sum_deg0", ref2, [&](SampleStream& s, Counterexample& ce) {
    Scalar f = s.scalar(n, cfg.max_degree);
    Scalar res = sum_deg0(f);
    if (res.is_zero()) return true;
    ce.inputs = {{"P", to_string(f, a.base)}};
    ce.residual = to_string(res, a.base);
    return false;
  });
  for (int deg = 1; deg <= 2; ++deg) {
    const char* name = deg == 1 ? "pair_derivative_sum_deg1" : "pair_derivative_sum_deg2";
    run.samples(name, ref2, [&](SampleStream& s, Counterexample& ce) {
      Multivector q = s.multivector(a.rank, deg, n, cfg.max_degree);
      Multivector res = sum_higher(q);
      if (res.is_zero()) return true;
      ce.inputs = {{"P", to_string(q, a.base)}};
      ce.residual = to_string(res, a.base);
      return false;
    });
  }

  run.frames("pair_cocycle_pairing", "phi0(X0) = 0", [&](Counterexample& ce) {
    Scalar res = p.phi0().apply(p.x0_section());
    if (res.is_zero()) return true;
    ce.inputs = {{"phi0", to_string(p.phi0().value(), a.base)},
                 {"X0", to_string(p.x0_section(), a.base)}};
    ce.residual = to_string(res, a.base);
    return false;
  });

  run.frames("pair_anchor_opposition", "rho(X0) + rho*(phi0) = 0", [&](Counterexample& ce) {
    std::vector<Scalar> lhs = a.anchor_vector(p.x0_section());
    std::vector<Scalar> rhs = b.anchor_vector(p.phi0_dual_section());
    for (int l = 0; l < n; ++l) lhs[l] += rhs[l];
    Multivector res = tangent_vector(n, lhs);
    if (res.is_zero()) return true;
    ce.inputs = {{"phi0", to_string(p.phi0().value(), a.base)},
                 {"X0", to_string(p.x0_section(), a.base)}};
    ce.residual = to_string(res, a.base);
    return false;
  });

  const char* ref4 = "L*_phi0 X + [X0, X] = 0";
  auto invariance_residual = [&](const Multivector& x) {
    return as_multivector(b.lie_derivative(p.phi0_dual_section(), as_form(x))) +
           a.bracket(p.x0_section(), x);
  };
  run.frames("pair_cocycle_invariance_frames", ref4, [&](Counterexample& ce) {
    for (int i = 0; i < a.rank; ++i) {
      Multivector res = invariance_residual(a.frame_section(i));
      if (res.is_zero()) continue;
      ce.inputs = {{"X", to_string(a.frame_section(i), a.base)}};
      ce.residual = to_string(res, a.base);
      return false;
    }
    return true;
  });
  run.samples("pair_cocycle_invariance_samples", ref4, [&](SampleStream& s, Counterexample& ce) {
    Multivector x = s.multivector(a.rank, 1, n, cfg.max_degree);
    Multivector res = invariance_residual(x);
    if (res.is_zero()) return true;
    ce.inputs = {{"X", to_string(x, a.base)}};
    ce.residual = to_string(res, a.base);
    return false;
  });

  return report;
}

CheckReport verify_duality_lemmas(const GenBialgebroidPair& p, const SampleConfig& cfg) {
  const Algebroid& a = p.primal();
  const Algebroid& b = p.dual();
  const Cocycle& phi0 = p.phi0();
  const Cocycle& x0 = p.x0();
  const int n = a.dim();
  CheckReport report;
  LemmaRunner run{report, cfg};

  auto dphi = [&](const Scalar& f) { return deformed_differential(phi0, f); };
  auto dphi_form = [&](const Form& xi) { return deformed_differential(phi0, xi); };
  auto dstar = [&](const Scalar& f) { return p.dual_differential(f); };
  auto lie_phi_fn = [&](const Multivector& x, const Scalar& f) {
    return deformed_anchor_apply(phi0, x, f);
  };
  auto lie_star_fn = [&](const Form& xi, const Scalar& f) {
    return deformed_anchor_apply(x0, as_multivector(xi), f);
  };
  auto lie_star_sec = [&](const Form& xi, const Multivector& x) {
    return as_multivector(deformed_lie_derivative(x0, as_multivector(xi), as_form(x)));
  };
  auto lie_phi_form = [&](const Multivector& x, const Form& xi) {
    return deformed_lie_derivative(phi0, x, xi);
  };
  auto lie_star_form = [&](const Form& xi, const Form& eta) {
    return as_form(deformed_lie_derivative(x0, as_multivector(xi), as_multivector(eta)));
  };

  // Coordinate functions plus one constant exercise the cocycle terms.
  std::vector<Scalar> fns;
  fns.push_back(Scalar::constant(n, 1));
  for (int l = 0; l < n; ++l) fns.push_back(Scalar::variable(n, l));

  const char* ref5 = "d*^X0 [X,f]^phi0 = [d*^X0 X, f]^phi0 + [X, d*^X0 f]^phi0";
  auto res5 = [&](const Multivector& x, const Scalar& f) {
    return dstar(lie_phi_fn(x, f)) -
           deformed_schouten(phi0, p.dual_differential(x), Multivector::from_scalar(a.rank, f)) -
           deformed_schouten(phi0, x, dstar(f));
  };
  run.frames("duality_mixed_leibniz_function_frames", ref5, [&](Counterexample& ce) {
    for (int i = 0; i < a.rank; ++i)
      for (const Scalar& f : fns) {
        Multivector res = res5(a.frame_section(i), f);
        if (res.is_zero()) continue;
        ce.inputs = {{"X", to_string(a.frame_section(i), a.base)}, {"f", to_string(f, a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      }
    return true;
  });
  run.samples("duality_mixed_leibniz_function_samples", ref5,
              [&](SampleStream& s, Counterexample& ce) {
                Multivector x = s.multivector(a.rank, 1, n, cfg.max_degree);
                Scalar f = s.scalar(n, cfg.max_degree);
                Multivector res = res5(x, f);
                if (res.is_zero()) return true;
                ce.inputs = {{"X", to_string(x, a.base)}, {"f", to_string(f, a.base)}};
                ce.residual = to_string(res, a.base);
                return false;
              });

  const char* ref6 = "L*^X0_{d^phi0 f} X + L^phi0_{d*^X0 f} X = 0";
  auto res6 = [&](const Multivector& x, const Scalar& f) {
    return lie_star_sec(dphi(f), x) + deformed_lie_derivative(phi0, dstar(f), x);
  };
  run.frames("duality_hamiltonian_exchange_sections_frames", ref6, [&](Counterexample& ce) {
    for (int i = 0; i < a.rank; ++i)
      for (const Scalar& f : fns) {
        Multivector res = res6(a.frame_section(i), f);
        if (res.is_zero()) continue;
        ce.inputs = {{"X", to_string(a.frame_section(i), a.base)}, {"f", to_string(f, a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      }
    return true;
  });
  run.samples("duality_hamiltonian_exchange_sections_samples", ref6,
              [&](SampleStream& s, Counterexample& ce) {
                Multivector x = s.multivector(a.rank, 1, n, cfg.max_degree);
                Scalar f = s.scalar(n, cfg.max_degree);
                Multivector res = res6(x, f);
                if (res.is_zero()) return true;
                ce.inputs = {{"X", to_string(x, a.base)}, {"f", to_string(f, a.base)}};
                ce.residual = to_string(res, a.base);
                return false;
              });

  const char* ref7 = "<d*^X0 f, d^phi0 g> + <d^phi0 f, d*^X0 g> = 0";
  auto res7 = [&](const Scalar& f, const Scalar& g) {
    return pairing(dphi(g), dstar(f)) + pairing(dphi(f), dstar(g));
  };
  run.frames("duality_pairing_antisymmetry_frames", ref7, [&](Counterexample& ce) {
    for (const Scalar& f : fns)
      for (const Scalar& g : fns) {
        Scalar res = res7(f, g);
        if (res.is_zero()) continue;
        ce.inputs = {{"f", to_string(f, a.base)}, {"g", to_string(g, a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      }
    return true;
  });
  run.samples("duality_pairing_antisymmetry_samples", ref7,
              [&](SampleStream& s, Counterexample& ce) {
                Scalar f = s.scalar(n, cfg.max_degree);
                Scalar g = s.scalar(n, cfg.max_degree);
                Scalar res = res7(f, g);
                if (res.is_zero()) return true;
                ce.inputs = {{"f", to_string(f, a.base)}, {"g", to_string(g, a.base)}};
                ce.residual = to_string(res, a.base);
                return false;
              });

  const char* ref8 = "L*^X0_{d^phi0 f} xi + L^phi0_{d*^X0 f} xi = 0";
  auto res8 = [&](const Scalar& f, const Form& xi) {
    return lie_star_form(dphi(f), xi) + lie_phi_form(dstar(f), xi);
  };
  run.frames("duality_hamiltonian_exchange_forms_frames", ref8, [&](Counterexample& ce) {
    for (const Scalar& f : fns)
      for (int i = 0; i < a.rank; ++i) {
        Form xi = a.coframe_element(i);
        Form res = res8(f, xi);
        if (res.is_zero()) continue;
        ce.inputs = {{"f", to_string(f, a.base)}, {"xi", to_string(xi, a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      }
    return true;
  });
  run.samples("duality_hamiltonian_exchange_forms_samples", ref8,
              [&](SampleStream& s, Counterexample& ce) {
                Scalar f = s.scalar(n, cfg.max_degree);
                Form xi = s.form(a.rank, 1, n, cfg.max_degree);
                Form res = res8(f, xi);
                if (res.is_zero()) return true;
                ce.inputs = {{"f", to_string(f, a.base)}, {"xi", to_string(xi, a.base)}};
                ce.residual = to_string(res, a.base);
                return false;
              });

  const char* ref9 = "d^phi0 [xi,f]*^X0 = [d^phi0 xi, f]*^X0 + [xi, d^phi0 f]*^X0";
  auto res9 = [&](const Form& xi, const Scalar& f) {
    Form two = dphi_form(xi);
    Form first = as_form(
        deformed_schouten(x0, as_multivector(two), Multivector::from_scalar(a.rank, f)));
    return dphi(lie_star_fn(xi, f)) - first - p.dual_schouten_deformed(xi, dphi(f));
  };
  run.frames("duality_dual_mixed_leibniz_function_frames", ref9, [&](Counterexample& ce) {
    for (int i = 0; i < a.rank; ++i)
      for (const Scalar& f : fns) {
        Form xi = a.coframe_element(i);
        Form res = res9(xi, f);
        if (res.is_zero()) continue;
        ce.inputs = {{"xi", to_string(xi, a.base)}, {"f", to_string(f, a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      }
    return true;
  });
  run.samples("duality_dual_mixed_leibniz_function_samples", ref9,
              [&](SampleStream& s, Counterexample& ce) {
                Form xi = s.form(a.rank, 1, n, cfg.max_degree);
                Scalar f = s.scalar(n, cfg.max_degree);
                Form res = res9(xi, f);
                if (res.is_zero()) return true;
                ce.inputs = {{"xi", to_string(xi, a.base)}, {"f", to_string(f, a.base)}};
                ce.residual = to_string(res, a.base);
                return false;
              });

  const char* ref10 =
      "[L^phi0_X, L*^X0_xi]f - L*^X0_{L^phi0_X xi} f + L^phi0_{L*^X0_xi X} f = "
      "L^phi0_{d*^X0 <xi,X>} f";
  auto res10 = [&](const Multivector& x, const Form& xi, const Scalar& f) {
    return lie_phi_fn(x, lie_star_fn(xi, f)) - lie_star_fn(xi, lie_phi_fn(x, f)) -
           lie_star_fn(lie_phi_form(x, xi), f) + lie_phi_fn(lie_star_sec(xi, x), f) -
           lie_phi_fn(dstar(pairing(xi, x)), f);
  };
  run.frames("duality_derivative_commutator_frames", ref10, [&](Counterexample& ce) {
    for (int i = 0; i < a.rank; ++i)
      for (int j = 0; j < a.rank; ++j)
        for (int l = 0; l < n; ++l) {
          Multivector x = a.frame_section(i);
          Form xi = a.coframe_element(j);
          Scalar f = Scalar::variable(n, l);
          Scalar res = res10(x, xi, f);
          if (res.is_zero()) continue;
          ce.inputs = {{"X", to_string(x, a.base)}, {"xi", to_string(xi, a.base)},
                       {"f", to_string(f, a.base)}};
          ce.residual = to_string(res, a.base);
          return false;
        }
    return true;
  });
  run.samples("duality_derivative_commutator_samples", ref10,
              [&](SampleStream& s, Counterexample& ce) {
                Multivector x = s.multivector(a.rank, 1, n, cfg.max_degree);
                Form xi = s.form(a.rank, 1, n, cfg.max_degree);
                Scalar f = s.scalar(n, cfg.max_degree);
                Scalar res = res10(x, xi, f);
                if (res.is_zero()) return true;
                ce.inputs = {{"X", to_string(x, a.base)}, {"xi", to_string(xi, a.base)},
                             {"f", to_string(f, a.base)}};
                ce.residual = to_string(res, a.base);
                return false;
              });

  const char* ref11 = "d^phi0 [xi,eta]* = [d^phi0 xi, eta]*^X0 + [xi, d^phi0 eta]*^X0";
  auto res11 = [&](const Form& xi, const Form& eta) {
    return dphi_form(p.dual_bracket(xi, eta)) - p.dual_schouten_deformed(dphi_form(xi), eta) -
           p.dual_schouten_deformed(xi, dphi_form(eta));
  };
  run.frames("duality_dual_mixed_leibniz_frames", ref11, [&](Counterexample& ce) {
    for (int i = 0; i < a.rank; ++i)
      for (int j = i + 1; j < a.rank; ++j) {
        Form xi = a.coframe_element(i);
        Form eta = a.coframe_element(j);
        Form res = res11(xi, eta);
        if (res.is_zero()) continue;
        ce.inputs = {{"xi", to_string(xi, a.base)}, {"eta", to_string(eta, a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      }
    return true;
  });
  run.samples("duality_dual_mixed_leibniz_samples", ref11,
              [&](SampleStream& s, Counterexample& ce) {
                Form xi = s.form(a.rank, 1, n, cfg.max_degree);
                Form eta = s.form(a.rank, 1, n, cfg.max_degree);
                Form res = res11(xi, eta);
                if (res.is_zero()) return true;
                ce.inputs = {{"xi", to_string(xi, a.base)}, {"eta", to_string(eta, a.base)}};
                ce.residual = to_string(res, a.base);
                return false;
              });

  const char* refobs = "L*_phi0 xi + L_X0 xi = 0";
  auto resobs = [&](const Form& xi) {
    return as_form(b.schouten(p.phi0_dual_section(), as_multivector(xi))) +
           a.lie_derivative(p.x0_section(), xi);
  };
  run.frames("duality_undeformed_invariance_frames", refobs, [&](Counterexample& ce) {
    for (int i = 0; i < a.rank; ++i) {
      Form xi = a.coframe_element(i);
      Form res = resobs(xi);
      if (res.is_zero()) continue;
      ce.inputs = {{"xi", to_string(xi, a.base)}};
      ce.residual = to_string(res, a.base);
      return false;
    }
    return true;
  });
  run.samples("duality_undeformed_invariance_samples", refobs,
              [&](SampleStream& s, Counterexample& ce) {
                Form xi = s.form(a.rank, 1, n, cfg.max_degree);
                Form res = resobs(xi);
                if (res.is_zero()) return true;
                ce.inputs = {{"xi", to_string(xi, a.base)}};
                ce.residual = to_string(res, a.base);
                return false;
              });

  return report;
}

Scalar induced_bracket(const GenBialgebroidPair& p, const Scalar& f, const Scalar& g) {
  return pairing(deformed_differential(p.phi0(), f), p.dual_differential(g));
}

Multivector hamiltonian_section(const GenBialgebroidPair& p, const Scalar& f) {
  return -p.dual_differential(f);
}

JacobiStructure induced_jacobi(const GenBialgebroidPair& p, const SampleConfig& cfg) {
  const Algebroid& a = p.primal();
  const Algebroid& b = p.dual();
  const int n = a.dim();
  Multivector lambda(n, 2, n);
  for (int i = 0; i < n; ++i)
    for (int l = i + 1; l < n; ++l) {
      Scalar c = pairing(a.differential(Scalar::variable(n, i)),
                         as_multivector(b.differential(Scalar::variable(n, l))));
      lambda.add_component({i, l}, c);
    }
  Multivector e = tangent_vector(n, b.anchor_vector(p.phi0_dual_section()));
  return JacobiStructure::validated(a.base, std::move(lambda), std::move(e), cfg);
}

CheckReport verify_bracket_differentials(const GenBialgebroidPair& p, const SampleConfig& cfg) {
  const Algebroid& a = p.primal();
  const int n = a.dim();
  CheckReport report;
  LemmaRunner run{report, cfg};

  auto dphi = [&](const Scalar& f) { return deformed_differential(p.phi0(), f); };

  run.samples("induced_bracket_skew", "{f,g} + {g,f} = 0", [&](SampleStream& s, Counterexample& ce) {
    Scalar f = s.scalar(n, cfg.max_degree);
    Scalar g = s.scalar(n, cfg.max_degree);
    Scalar res = induced_bracket(p, f, g) + induced_bracket(p, g, f);
    if (res.is_zero()) return true;
    ce.inputs = {{"f", to_string(f, a.base)}, {"g", to_string(g, a.base)}};
    ce.residual = to_string(res, a.base);
    return false;
  });

  run.samples("induced_differential_primal", "d^phi0 {f,g} = [d^phi0 f, d^phi0 g]*",
              [&](SampleStream& s, Counterexample& ce) {
                Scalar f = s.scalar(n, cfg.max_degree);
                Scalar g = s.scalar(n, cfg.max_degree);
                Form res = dphi(induced_bracket(p, f, g)) - p.dual_bracket(dphi(f), dphi(g));
                if (res.is_zero()) return true;
                ce.inputs = {{"f", to_string(f, a.base)}, {"g", to_string(g, a.base)}};
                ce.residual = to_string(res, a.base);
                return false;
              });

  run.samples("induced_differential_dual", "d*^X0 {f,g} = -[d*^X0 f, d*^X0 g]",
              [&](SampleStream& s, Counterexample& ce) {
                Scalar f = s.scalar(n, cfg.max_degree);
                Scalar g = s.scalar(n, cfg.max_degree);
                Multivector res = p.dual_differential(induced_bracket(p, f, g)) +
                                  a.bracket(p.dual_differential(f), p.dual_differential(g));
                if (res.is_zero()) return true;
                ce.inputs = {{"f", to_string(f, a.base)}, {"g", to_string(g, a.base)}};
                ce.residual = to_string(res, a.base);
                return false;
              });

  run.samples("hamiltonian_derivation", "rho^phi0(X_f)g = {f,g}",
              [&](SampleStream& s, Counterexample& ce) {
                Scalar f = s.scalar(n, cfg.max_degree);
                Scalar g = s.scalar(n, cfg.max_degree);
                Scalar res = deformed_anchor_apply(p.phi0(), hamiltonian_section(p, f), g) -
                             induced_bracket(p, f, g);
                if (res.is_zero()) return true;
                ce.inputs = {{"f", to_string(f, a.base)}, {"g", to_string(g, a.base)}};
                ce.residual = to_string(res, a.base);
                return false;
              });

  run.samples("hamiltonian_homomorphism", "[X_f, X_g] = X_{f,g}",
              [&](SampleStream& s, Counterexample& ce) {
                Scalar f = s.scalar(n, cfg.max_degree);
                Scalar g = s.scalar(n, cfg.max_degree);
                Multivector res =
                    a.bracket(hamiltonian_section(p, f), hamiltonian_section(p, g)) -
                    hamiltonian_section(p, induced_bracket(p, f, g));
                if (res.is_zero()) return true;
                ce.inputs = {{"f", to_string(f, a.base)}, {"g", to_string(g, a.base)}};
                ce.residual = to_string(res, a.base);
                return false;
              });

  return report;
}

Multivector PairMorphism::apply(const Multivector& x) const {
  if (x.degree() != 1) throw StructureError("morphism: apply expects a degree-1 section");
  const Algebroid& tgt = target.primal();
  Multivector out = tgt.zero_multivector(1);
  for (const auto& [idx, c] : x.components())
    for (int j = 0; j < tgt.rank; ++j) out.add_component({j}, matrix[j][idx[0]] * c);
  return out;
}

Form PairMorphism::dual_apply(const Form& beta) const {
  if (beta.degree() != 1) throw StructureError("morphism: dual_apply expects degree 1");
  const Algebroid& src = source.primal();
  Form out = src.zero_form(1);
  for (const auto& [idx, c] : beta.components())
    for (int i = 0; i < src.rank; ++i) out.add_component({i}, matrix[idx[0]][i] * c);
  return out;
}

CheckReport is_morphism(const PairMorphism& m, const SampleConfig& cfg) {
  const Algebroid& a = m.source.primal();
  const Algebroid& b = m.target.primal();
  const Algebroid& ad = m.source.dual();
  const Algebroid& bd = m.target.dual();
  if (!(a.base == b.base)) throw StructureError("morphism: pairs live over different patches");
  if (static_cast<int>(m.matrix.size()) != b.rank)
    throw StructureError("morphism: matrix row count differs from target rank");
  for (const auto& row : m.matrix)
    if (static_cast<int>(row.size()) != a.rank)
      throw StructureError("morphism: matrix column count differs from source rank");

  const int n = a.dim();
  CheckReport report;
  LemmaRunner run{report, cfg};

  const char* ref_anchor = "rho_B(Phi(X)) = rho_A(X)";
  auto anchor_residual = [&](const Multivector& x) {
    std::vector<Scalar> lhs = b.anchor_vector(m.apply(x));
    std::vector<Scalar> rhs = a.anchor_vector(x);
    for (int l = 0; l < n; ++l) lhs[l] -= rhs[l];
    return tangent_vector(n, lhs);
  };
  run.frames("morphism_anchor_frames", ref_anchor, [&](Counterexample& ce) {
    for (int i = 0; i < a.rank; ++i) {
      Multivector res = anchor_residual(a.frame_section(i));
      if (res.is_zero()) continue;
      ce.inputs = {{"X", to_string(a.frame_section(i), a.base)}};
      ce.residual = to_string(res, a.base);
      return false;
    }
    return true;
  });
  run.samples("morphism_anchor_samples", ref_anchor, [&](SampleStream& s, Counterexample& ce) {
    Multivector x = s.multivector(a.rank, 1, n, cfg.max_degree);
    Multivector res = anchor_residual(x);
    if (res.is_zero()) return true;
    ce.inputs = {{"X", to_string(x, a.base)}};
    ce.residual = to_string(res, a.base);
    return false;
  });

  const char* ref_bracket = "Phi[X,Y] = [Phi(X), Phi(Y)]";
  auto bracket_residual = [&](const Multivector& x, const Multivector& y) {
    return m.apply(a.bracket(x, y)) - b.bracket(m.apply(x), m.apply(y));
  };
  run.frames("morphism_bracket_frames", ref_bracket, [&](Counterexample& ce) {
    for (int i = 0; i < a.rank; ++i)
      for (int j = i + 1; j < a.rank; ++j) {
        Multivector res = bracket_residual(a.frame_section(i), a.frame_section(j));
        if (res.is_zero()) continue;
        ce.inputs = {{"X", to_string(a.frame_section(i), a.base)},
                     {"Y", to_string(a.frame_section(j), a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      }
    return true;
  });
  run.samples("morphism_bracket_samples", ref_bracket, [&](SampleStream& s, Counterexample& ce) {
    Multivector x = s.multivector(a.rank, 1, n, cfg.max_degree);
    Multivector y = s.multivector(a.rank, 1, n, cfg.max_degree);
    Multivector res = bracket_residual(x, y);
    if (res.is_zero()) return true;
    ce.inputs = {{"X", to_string(x, a.base)}, {"Y", to_string(y, a.base)}};
    ce.residual = to_string(res, a.base);
    return false;
  });

  run.frames("morphism_cocycle_section", "Phi(X0) = Y0", [&](Counterexample& ce) {
    Multivector res = m.apply(m.source.x0_section()) - m.target.x0_section();
    if (res.is_zero()) return true;
    ce.inputs = {{"X0", to_string(m.source.x0_section(), a.base)}};
    ce.residual = to_string(res, a.base);
    return false;
  });

  run.frames("morphism_cocycle_dual", "Phi*(psi0) = phi0", [&](Counterexample& ce) {
    Form res = m.dual_apply(m.target.phi0().value()) - m.source.phi0().value();
    if (res.is_zero()) return true;
    ce.inputs = {{"psi0", to_string(m.target.phi0().value(), a.base)}};
    ce.residual = to_string(res, a.base);
    return false;
  });

  const char* ref_dual_anchor = "rho_A*(Phi*(beta)) = rho_B*(beta)";
  auto dual_anchor_residual = [&](const Form& beta) {
    std::vector<Scalar> lhs = ad.anchor_vector(as_multivector(m.dual_apply(beta)));
    std::vector<Scalar> rhs = bd.anchor_vector(as_multivector(beta));
    for (int l = 0; l < n; ++l) lhs[l] -= rhs[l];
    return tangent_vector(n, lhs);
  };
  run.frames("morphism_dual_anchor_frames", ref_dual_anchor, [&](Counterexample& ce) {
    for (int j = 0; j < b.rank; ++j) {
      Form beta = b.coframe_element(j);
      Multivector res = dual_anchor_residual(beta);
      if (res.is_zero()) continue;
      ce.inputs = {{"beta", to_string(beta, a.base)}};
      ce.residual = to_string(res, a.base);
      return false;
    }
    return true;
  });
  run.samples("morphism_dual_anchor_samples", ref_dual_anchor,
              [&](SampleStream& s, Counterexample& ce) {
                Form beta = s.form(b.rank, 1, n, cfg.max_degree);
                Multivector res = dual_anchor_residual(beta);
                if (res.is_zero()) return true;
                ce.inputs = {{"beta", to_string(beta, a.base)}};
                ce.residual = to_string(res, a.base);
                return false;
              });

  const char* ref_dual_bracket = "Phi*[beta,gamma]* = [Phi*(beta), Phi*(gamma)]*";
  auto dual_bracket_residual = [&](const Form& beta, const Form& gamma) {
    return m.dual_apply(m.target.dual_bracket(beta, gamma)) -
           m.source.dual_bracket(m.dual_apply(beta), m.dual_apply(gamma));
  };
  run.frames("morphism_dual_bracket_frames", ref_dual_bracket, [&](Counterexample& ce) {
    for (int i = 0; i < b.rank; ++i)
      for (int j = i + 1; j < b.rank; ++j) {
        Form res = dual_bracket_residual(b.coframe_element(i), b.coframe_element(j));
        if (res.is_zero()) continue;
        ce.inputs = {{"beta", to_string(b.coframe_element(i), a.base)},
                     {"gamma", to_string(b.coframe_element(j), a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      }
    return true;
  });
  run.samples("morphism_dual_bracket_samples", ref_dual_bracket,
              [&](SampleStream& s, Counterexample& ce) {
                Form beta = s.form(b.rank, 1, n, cfg.max_degree);
                Form gamma = s.form(b.rank, 1, n, cfg.max_degree);
                Form res = dual_bracket_residual(beta, gamma);
                if (res.is_zero()) return true;
                ce.inputs = {{"beta", to_string(beta, a.base)},
                             {"gamma", to_string(gamma, a.base)}};
                ce.residual = to_string(res, a.base);
                return false;
              });

  const char* ref_induced = "{f,g}_source = {f,g}_target";
  auto induced_residual = [&](const Scalar& f, const Scalar& g) {
    return induced_bracket(m.source, f, g) - induced_bracket(m.target, f, g);
  };
  run.frames("morphism_induced_bracket_frames", ref_induced, [&](Counterexample& ce) {
    for (int i = 0; i < n; ++i)
      for (int l = i + 1; l < n; ++l) {
        Scalar f = Scalar::variable(n, i);
        Scalar g = Scalar::variable(n, l);
        Scalar res = induced_residual(f, g);
        if (res.is_zero()) continue;
        ce.inputs = {{"f", to_string(f, a.base)}, {"g", to_string(g, a.base)}};
        ce.residual = to_string(res, a.base);
        return false;
      }
    return true;
  });
  run.samples("morphism_induced_bracket_samples", ref_induced,
              [&](SampleStream& s, Counterexample& ce) {
                Scalar f = s.scalar(n, cfg.max_degree);
                Scalar g = s.scalar(n, cfg.max_degree);
                Scalar res = induced_residual(f, g);
                if (res.is_zero()) return true;
                ce.inputs = {{"f", to_string(f, a.base)}, {"g", to_string(g, a.base)}};
                ce.residual = to_string(res, a.base);
                return false;
              });

  return report;
}

GenBialgebroidPair one_jet_pair(const JacobiStructure& j, const SampleConfig& cfg) {
  ExtendedAlgebroid ext = extend_algebroid(tangent_algebroid(j.base()));
  OneJetAlgebroid jet = one_jet_algebroid(j);
  return GenBialgebroidPair::assemble(ext.algebroid, ext.canonical.value(), jet.algebroid,
                                      as_form(jet.x0), cfg);
}

PairMorphism canonical_morphism(const GenBialgebroidPair& p, const SampleConfig& cfg) {
  const Algebroid& a = p.primal();
  const int n = a.dim();
  GenBialgebroidPair target = one_jet_pair(induced_jacobi(p, cfg), cfg);
  std::vector<std::vector<Scalar>> matrix(
      static_cast<size_t>(n) + 1, std::vector<Scalar>(static_cast<size_t>(a.rank), a.zero_scalar()));
  for (int i = 0; i < a.rank; ++i) {
    for (int l = 0; l < n; ++l) matrix[l][i] = a.anchor[i][l];
    matrix[n][i] = p.phi0().value().component({i});
  }
  return PairMorphism{p, std::move(target), std::move(matrix)};
}

}  // namespace bialg
