#pragma once

#include "bialg/bialgebroid.hpp"
#include "bialg/dsl.hpp"
#include "bialg/triangular.hpp"

#include <string>
#include <vector>

namespace bialg {

enum class ReportFormat { text, json };

struct Outcome {
  int exit_code = 0;  // 0 all checks pass, 1 some check fails, 2 unusable input
  std::string output;
};

/// A pair resolved from a declaration: either a pair decl by name, or a
/// jacobi decl lifted to its 1-jet pair with synthesized member names.
struct ResolvedPair {
  GenBialgebroidPair pair;
  std::string pair_name;
  std::string primal_name;
  std::string phi0_name;
  std::string dual_name;
  std::string x0_name;
  const JacobiDecl* origin_jacobi = nullptr;
};

/// Throws StructureError when the name is neither a pair nor a jacobi decl;
/// assembly failures surface as ConstructionError.
ResolvedPair resolve_pair(const StructureFile& f, const std::string& name,
                          const SampleConfig& cfg);

/// Renders a pair back to structure-file text (two algebroids, two cocycles,
/// one pair declaration).
std::string emit_pair(const ResolvedPair& rp);

/// Executes one verification command against a parsed structure file.
/// Commands: validate, check-pair, dualize, induce, triangular, jacobi,
/// morphism. Bad command names and unresolved references throw
/// StructureError.
Outcome run_command(const std::string& command, const std::vector<std::string>& args,
                    const StructureFile& file, const SampleConfig& cfg, ReportFormat format);

/// Parse + run. ParseError and StructureError map to exit 2 with a one-line
/// error message; failed validating constructors map to exit 1 with their
/// report rendered.
Outcome run_on_text(const std::string& command, const std::vector<std::string>& args,
                    const std::string& text, const SampleConfig& cfg, ReportFormat format);

}  // namespace bialg
