#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bialg/algebroid.hpp"

namespace bialg {

/// Lexical, syntactic or semantic failure, positioned 1-based.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line(line), column(column) {}
  int line;
  int column;
};

struct AlgebroidDecl {
  std::string name;
  Algebroid value;
  bool operator==(const AlgebroidDecl&) const = default;
};

struct CocycleDecl {
  std::string name;
  std::string owner;
  Form value;
  bool operator==(const CocycleDecl&) const = default;
};

struct BivectorDecl {
  std::string name;
  std::string owner;
  Multivector value;
  bool operator==(const BivectorDecl&) const = default;
};

struct JacobiDecl {
  std::string name;
  Multivector lambda;
  Multivector e_field;
  bool operator==(const JacobiDecl&) const = default;
};

struct PairDecl {
  std::string name;
  std::string primal_algebroid;
  std::string primal_cocycle;
  std::string dual_algebroid;
  std::string dual_cocycle;
  bool operator==(const PairDecl&) const = default;
};

struct MorphismDecl {
  std::string name;
  std::string source;
  std::string target;
  std::vector<std::vector<Scalar>> matrix;
  bool operator==(const MorphismDecl&) const = default;
};

using Decl =
    std::variant<AlgebroidDecl, CocycleDecl, BivectorDecl, JacobiDecl, PairDecl, MorphismDecl>;

/// Parsed structure file: one manifold patch, then declarations in source
/// order. Name lookups return nullptr when absent.
struct StructureFile {
  BasePatch base;
  std::vector<Decl> decls;

  const AlgebroidDecl* find_algebroid(const std::string& name) const;
  const CocycleDecl* find_cocycle(const std::string& name) const;
  const BivectorDecl* find_bivector(const std::string& name) const;
  const JacobiDecl* find_jacobi(const std::string& name) const;
  const PairDecl* find_pair(const std::string& name) const;
  const MorphismDecl* find_morphism(const std::string& name) const;

  bool operator==(const StructureFile&) const = default;
};

/// Throws ParseError on any lexical, grammar or reference failure.
StructureFile parse_structure(const std::string& text);

/// Polynomial expression parser over a patch's coordinates.
Scalar parse_scalar(const std::string& text, const BasePatch& base);

/// Canonical text form; parse(render(f)) == f.
std::string render(const StructureFile& f);

}  // namespace bialg
