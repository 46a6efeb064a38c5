#include "bialg/commands.hpp"

#include "bialg/jacobi.hpp"

#include <json.hpp>

#include <optional>
#include <utility>

namespace bialg {

namespace {

struct CommandResult {
  CheckReport report;
  std::vector<std::pair<std::string, std::string>> induced;
  std::optional<std::string> emitted;
};

std::string render_text(const std::string& command, const SampleConfig& cfg,
                        const CommandResult& r) {
  std::string out = "command: " + command + "\nseed: " + std::to_string(cfg.seed) + "\n";
  for (const CheckEntry& e : r.report.entries()) {
    out += (e.passed ? "PASS " : "FAIL ") + e.name + "  [" + e.ref + "]\n";
    if (!e.passed && e.counterexample) {
      for (const auto& [key, value] : e.counterexample->inputs)
        out += "    " + key + " = " + value + "\n";
      out += "    residual = " + e.counterexample->residual + "\n";
    }
  }
  for (const auto& [key, value] : r.induced) out += key + " = " + value + "\n";
  if (r.emitted) out += "\n" + *r.emitted;
  return out;
}

std::string render_json(const std::string& command, const SampleConfig& cfg,
                        const CommandResult& r) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["seed"] = cfg.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckEntry& e : r.report.entries()) {
    nlohmann::ordered_json c;
    c["name"] = e.name;
    c["paper_ref"] = e.ref;
    c["status"] = e.passed ? "pass" : "fail";
    if (!e.passed && e.counterexample) {
      nlohmann::ordered_json ce;
      ce["inputs"] = nlohmann::ordered_json::object();
      for (const auto& [key, value] : e.counterexample->inputs) ce["inputs"][key] = value;
      ce["residual"] = e.counterexample->residual;
      c["counterexample"] = std::move(ce);
    }
    j["checks"].push_back(std::move(c));
  }
  if (!r.induced.empty()) {
    j["induced"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.induced) j["induced"][key] = value;
  }
  if (r.emitted) j["emitted"] = *r.emitted;
  return j.dump(2) + "\n";
}

CommandResult cmd_validate(const StructureFile& f, const SampleConfig& cfg) {
  CommandResult r;
  for (const Decl& d : f.decls) {
    if (const auto* ad = std::get_if<AlgebroidDecl>(&d)) {
      r.report.append(check_axioms(ad->value, cfg), ad->name + "_");
    } else if (const auto* cd = std::get_if<CocycleDecl>(&d)) {
      r.report.append(is_cocycle(f.find_algebroid(cd->owner)->value, cd->value, cfg),
                      cd->name + "_");
    } else if (const auto* jd = std::get_if<JacobiDecl>(&d)) {
      r.report.append(check_jacobi_structure(f.base, jd->lambda, jd->e_field, cfg),
                      jd->name + "_");
    }
  }
  return r;
}

CommandResult cmd_check_pair(const StructureFile& f, const std::string& name,
                             const SampleConfig& cfg) {
  CommandResult r;
  const ResolvedPair rp = resolve_pair(f, name, cfg);
  r.report.append(check_compatibility(rp.pair, cfg));
  r.report.append(verify_duality_lemmas(rp.pair, cfg));
  r.report.append(verify_bracket_differentials(rp.pair, cfg));
  return r;
}

CommandResult cmd_dualize(const StructureFile& f, const std::string& name,
                          const SampleConfig& cfg) {
  CommandResult r;
  const ResolvedPair rp = resolve_pair(f, name, cfg);
  const ResolvedPair flipped{rp.pair.dualize(), rp.pair_name + "_dual", rp.dual_name,
                             rp.x0_name,        rp.primal_name,         rp.phi0_name,
                             nullptr};
  r.report.append(check_compatibility(flipped.pair, cfg));
  r.emitted = emit_pair(flipped);
  return r;
}

CommandResult cmd_induce(const StructureFile& f, const std::string& name,
                         const SampleConfig& cfg) {
  CommandResult r;
  const ResolvedPair rp = resolve_pair(f, name, cfg);
  const JacobiStructure j = induced_jacobi(rp.pair, cfg);
  r.report.append(check_jacobi_structure(j.base(), j.lambda(), j.e_field(), cfg), "induced_");
  if (rp.origin_jacobi) {
    const char* ref = "induced (Lambda, E) = declared (Lambda, E)";
    if (j.lambda() == rp.origin_jacobi->lambda && j.e_field() == rp.origin_jacobi->e_field) {
      r.report.add_pass("induce_round_trip", ref);
    } else {
      Counterexample ce;
      ce.inputs = {{"declared_Lambda", to_string(rp.origin_jacobi->lambda, f.base)},
                   {"declared_E", to_string(rp.origin_jacobi->e_field, f.base)}};
      ce.residual = to_string(j.lambda() - rp.origin_jacobi->lambda, f.base) + " ; " +
                    to_string(j.e_field() - rp.origin_jacobi->e_field, f.base);
      r.report.add_fail("induce_round_trip", ref, std::move(ce));
    }
  }
  r.induced = {{"Lambda", to_string(j.lambda(), f.base)}, {"E", to_string(j.e_field(), f.base)}};
  StructureFile emitted;
  emitted.base = f.base;
  emitted.decls.push_back(JacobiDecl{name + "_induced", j.lambda(), j.e_field()});
  r.emitted = render(emitted);
  return r;
}

CommandResult cmd_triangular(const StructureFile& f, const std::vector<std::string>& args,
                             const SampleConfig& cfg) {
  const AlgebroidDecl* ad = f.find_algebroid(args[0]);
  if (!ad) throw StructureError("no algebroid declaration named '" + args[0] + "'");
  const CocycleDecl* cd = f.find_cocycle(args[1]);
  if (!cd) throw StructureError("no cocycle declaration named '" + args[1] + "'");
  if (cd->owner != args[0])
    throw StructureError("cocycle '" + args[1] + "' is not declared on '" + args[0] + "'");
  const BivectorDecl* bd = f.find_bivector(args[2]);
  if (!bd) throw StructureError("no bivector declaration named '" + args[2] + "'");
  if (bd->owner != args[0])
    throw StructureError("bivector '" + args[2] + "' is not declared on '" + args[0] + "'");

  CommandResult r;
  const Cocycle phi = Cocycle::validated(ad->value, cd->value);
  const TriangularDatum datum = TriangularDatum::validated(phi, bd->value);
  r.report.append(verify_triangular(datum, cfg));
  const ResolvedPair rp{build_dual(datum, cfg), args[2] + "_pair",   args[0], args[1],
                        args[0] + "_star",      args[2] + "_x0", nullptr};
  r.emitted = emit_pair(rp);
  return r;
}

CommandResult cmd_jacobi(const StructureFile& f, const std::string& name,
                         const SampleConfig& cfg) {
  if (!f.find_jacobi(name)) throw StructureError("no jacobi declaration named '" + name + "'");
  CommandResult r;
  const ResolvedPair rp = resolve_pair(f, name, cfg);
  r.report.append(check_compatibility(rp.pair, cfg));
  r.emitted = emit_pair(rp);
  return r;
}

CommandResult cmd_morphism(const StructureFile& f, const std::string& name,
                           const SampleConfig& cfg) {
  const MorphismDecl* md = f.find_morphism(name);
  if (!md) throw StructureError("no morphism declaration named '" + name + "'");
  CommandResult r;
  const ResolvedPair src = resolve_pair(f, md->source, cfg);
  const ResolvedPair tgt = resolve_pair(f, md->target, cfg);
  r.report.append(is_morphism(PairMorphism{src.pair, tgt.pair, md->matrix}, cfg));
  return r;
}

}  // namespace

ResolvedPair resolve_pair(const StructureFile& f, const std::string& name,
                          const SampleConfig& cfg) {
  if (const PairDecl* pd = f.find_pair(name)) {
    const AlgebroidDecl* a = f.find_algebroid(pd->primal_algebroid);
    const CocycleDecl* c1 = f.find_cocycle(pd->primal_cocycle);
    const AlgebroidDecl* b = f.find_algebroid(pd->dual_algebroid);
    const CocycleDecl* c2 = f.find_cocycle(pd->dual_cocycle);
    return ResolvedPair{
        GenBialgebroidPair::assemble(a->value, c1->value, b->value, c2->value, cfg),
        pd->name, pd->primal_algebroid, pd->primal_cocycle, pd->dual_algebroid,
        pd->dual_cocycle, nullptr};
  }
  if (const JacobiDecl* jd = f.find_jacobi(name)) {
    const JacobiStructure j = JacobiStructure::validated(f.base, jd->lambda, jd->e_field, cfg);
    return ResolvedPair{one_jet_pair(j, cfg), name + "_pair", name + "_ext", name + "_theta",
                        name + "_jet", name + "_x0", jd};
  }
  throw StructureError("no pair or jacobi declaration named '" + name + "'");
}

std::string emit_pair(const ResolvedPair& rp) {
  StructureFile out;
  out.base = rp.pair.primal().base;
  out.decls.push_back(AlgebroidDecl{rp.primal_name, rp.pair.primal()});
  out.decls.push_back(AlgebroidDecl{rp.dual_name, rp.pair.dual()});
  out.decls.push_back(CocycleDecl{rp.phi0_name, rp.primal_name, rp.pair.phi0().value()});
  out.decls.push_back(CocycleDecl{rp.x0_name, rp.dual_name, rp.pair.x0().value()});
  out.decls.push_back(
      PairDecl{rp.pair_name, rp.primal_name, rp.phi0_name, rp.dual_name, rp.x0_name});
  return render(out);
}

Outcome run_command(const std::string& command, const std::vector<std::string>& args,
                    const StructureFile& file, const SampleConfig& cfg, ReportFormat format) {
  if (cfg.trials < 1) throw StructureError("trials must be at least 1");
  auto need = [&](size_t n) {
    if (args.size() != n)
      throw StructureError("command '" + command + "' expects " + std::to_string(n) +
                           " name argument(s), got " + std::to_string(args.size()));
  };
  CommandResult result;
  try {
    if (command == "validate") {
      need(0);
      result = cmd_validate(file, cfg);
    } else if (command == "check-pair") {
      need(1);
      result = cmd_check_pair(file, args[0], cfg);
    } else if (command == "dualize") {
      need(1);
      result = cmd_dualize(file, args[0], cfg);
    } else if (command == "induce") {
      need(1);
      result = cmd_induce(file, args[0], cfg);
    } else if (command == "triangular") {
      need(3);
      result = cmd_triangular(file, args, cfg);
    } else if (command == "jacobi") {
      need(1);
      result = cmd_jacobi(file, args[0], cfg);
    } else if (command == "morphism") {
      need(1);
      result = cmd_morphism(file, args[0], cfg);
    } else {
      throw StructureError("unknown command '" + command + "'");
    }
  } catch (const ConstructionError& err) {
    CommandResult failed;
    failed.report = err.report;
    return Outcome{1, format == ReportFormat::json ? render_json(command, cfg, failed)
                                                   : render_text(command, cfg, failed)};
  }
  return Outcome{result.report.all_passed() ? 0 : 1,
                 format == ReportFormat::json ? render_json(command, cfg, result)
                                              : render_text(command, cfg, result)};
}

Outcome run_on_text(const std::string& command, const std::vector<std::string>& args,
                    const std::string& text, const SampleConfig& cfg, ReportFormat format) {
  try {
    const StructureFile file = parse_structure(text);
    return run_command(command, args, file, cfg, format);
  } catch (const ParseError& err) {
    return Outcome{2, std::string("error: ") + err.what() + "\n"};
  } catch (const ConstructionError& err) {
    // Validating constructors reached outside run_command's guard (e.g. while
    // resolving a reference argument) still mean a failed check, not bad input.
    CommandResult failed;
    failed.report = err.report;
    return Outcome{1, format == ReportFormat::json ? render_json(command, cfg, failed)
                                                   : render_text(command, cfg, failed)};
  } catch (const StructureError& err) {
    return Outcome{2, std::string("error: ") + err.what() + "\n"};
  }
}

}  // namespace bialg
