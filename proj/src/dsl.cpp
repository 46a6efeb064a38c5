#include "bialg/dsl.hpp"

#include <cctype>
#include <set>
#include <utility>

namespace bialg {

namespace {

struct Token {
  enum Kind { Ident, Number, Punct, Arrow, End };
  Kind kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  size_t i = 0;
  const size_t n = text.size();
  auto advance = [&](size_t count) {
    for (size_t k = 0; k < count; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  const std::string punctuation = "{}[](),;:=+-*^/";
  while (i < n) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < n && text[i] != '\n') advance(1);
      continue;
    }
    const int tl = line;
    const int tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Token::Ident, text.substr(i, j - i), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Number, text.substr(i, j - i), tl, tc});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < n && text[i + 1] == '>') {
      out.push_back({Token::Arrow, "->", tl, tc});
      advance(2);
      continue;
    }
    if (punctuation.find(c) != std::string::npos) {
      out.push_back({Token::Punct, std::string(1, c), tl, tc});
      advance(1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  StructureFile parse_file() {
    expect_keyword("manifold");
    parse_manifold();
    while (peek().kind != Token::End) parse_decl();
    return std::move(file_);
  }

  Scalar parse_expr_all(const BasePatch& base) {
    file_.base = base;
    Scalar s = parse_expr();
    if (peek().kind != Token::End) fail(peek(), "trailing input after expression");
    return s;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  StructureFile file_;
  std::set<std::string> names_;

  const Token& peek() const { return toks_[pos_]; }

  const Token& take() {
    const Token& t = toks_[pos_];
    if (t.kind != Token::End) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(msg, t.line, t.column);
  }

  bool at_punct(char c) const { return peek().kind == Token::Punct && peek().text[0] == c; }

  bool at_keyword(const char* kw) const {
    return peek().kind == Token::Ident && peek().text == kw;
  }

  void expect_punct(char c) {
    if (!at_punct(c)) fail(peek(), std::string("expected '") + c + "'");
    take();
  }

  bool accept_punct(char c) {
    if (!at_punct(c)) return false;
    take();
    return true;
  }

  const Token& expect_ident(const char* what) {
    if (peek().kind != Token::Ident) fail(peek(), std::string("expected ") + what);
    return take();
  }

  void expect_keyword(const char* kw) {
    if (!at_keyword(kw)) fail(peek(), std::string("expected '") + kw + "'");
    take();
  }

  long long expect_number(const char* what) {
    if (peek().kind != Token::Number) fail(peek(), std::string("expected ") + what);
    const Token& t = take();
    if (t.text.size() > 18) fail(t, "number literal too large");
    return std::stoll(t.text);
  }

  void declare(const std::string& name, const Token& t) {
    if (!names_.insert(name).second) fail(t, "duplicate name '" + name + "'");
  }

  int dim() const { return file_.base.dim(); }

  void parse_manifold() {
    expect_punct('{');
    expect_keyword("dim");
    expect_punct('=');
    const Token& dim_tok = peek();
    const long long d = expect_number("dimension");
    if (d < 0 || d > 16) fail(dim_tok, "dimension out of range");
    expect_punct(';');
    expect_keyword("coords");
    expect_punct('=');
    expect_punct('[');
    std::set<std::string> seen;
    while (!at_punct(']')) {
      const Token& t = expect_ident("coordinate name");
      if (!seen.insert(t.text).second) fail(t, "duplicate coordinate '" + t.text + "'");
      file_.base.coords.push_back(t.text);
      accept_punct(',');
    }
    const Token& close = take();
    if (static_cast<long long>(file_.base.coords.size()) != d)
      fail(close, "coords count differs from dim");
    expect_punct('}');
  }

  void parse_decl() {
    if (at_keyword("algebroid")) return parse_algebroid();
    if (at_keyword("cocycle")) return parse_cocycle();
    if (at_keyword("bivector")) return parse_bivector();
    if (at_keyword("jacobi")) return parse_jacobi();
    if (at_keyword("pair")) return parse_pair();
    if (at_keyword("morphism")) return parse_morphism();
    fail(peek(), "expected a declaration");
  }

  std::vector<Scalar> parse_expr_list() {
    expect_punct('[');
    std::vector<Scalar> out;
    if (!at_punct(']')) {
      out.push_back(parse_expr());
      while (accept_punct(',')) out.push_back(parse_expr());
    }
    expect_punct(']');
    return out;
  }

  std::vector<std::vector<Scalar>> parse_matrix() {
    expect_punct('[');
    std::vector<std::vector<Scalar>> rows;
    if (!at_punct(']')) {
      rows.push_back(parse_expr_list());
      while (accept_punct(',')) rows.push_back(parse_expr_list());
    }
    expect_punct(']');
    return rows;
  }

  void parse_algebroid() {
    take();
    const Token& name_tok = expect_ident("algebroid name");
    declare(name_tok.text, name_tok);
    Algebroid a;
    a.base = file_.base;
    expect_punct('{');
    expect_keyword("rank");
    expect_punct('=');
    const Token& rank_tok = peek();
    const long long rank = expect_number("rank");
    if (rank < 1 || rank > 16) fail(rank_tok, "rank out of range");
    a.rank = static_cast<int>(rank);
    expect_punct(';');
    expect_keyword("frame");
    expect_punct('=');
    expect_punct('[');
    std::set<std::string> seen;
    while (!at_punct(']')) {
      const Token& t = expect_ident("frame name");
      if (!seen.insert(t.text).second) fail(t, "duplicate frame name '" + t.text + "'");
      a.frame.push_back(t.text);
      accept_punct(',');
    }
    const Token& fclose = take();
    if (static_cast<int>(a.frame.size()) != a.rank) fail(fclose, "frame count differs from rank");
    expect_punct(';');
    expect_keyword("anchor");
    expect_punct('=');
    const Token& mat_tok = peek();
    auto matrix = parse_matrix();
    if (static_cast<int>(matrix.size()) != a.rank)
      fail(mat_tok, "anchor row count differs from rank");
    for (const auto& row : matrix)
      if (static_cast<int>(row.size()) != dim())
        fail(mat_tok, "anchor row length differs from dim");
    a.anchor = std::move(matrix);
    expect_punct(';');
    std::set<std::pair<int, int>> entries;
    while (at_keyword("bracket")) {
      take();
      expect_punct('[');
      const Token& i_tok = peek();
      const long long i = expect_number("bracket index");
      expect_punct(',');
      const Token& j_tok = peek();
      const long long j = expect_number("bracket index");
      expect_punct(']');
      if (i < 1 || i > a.rank) fail(i_tok, "bracket index out of range");
      if (j < 1 || j > a.rank) fail(j_tok, "bracket index out of range");
      if (i >= j) fail(i_tok, "bracket indices must be increasing");
      if (!entries.insert({static_cast<int>(i), static_cast<int>(j)}).second)
        fail(i_tok, "duplicate bracket entry");
      expect_punct('=');
      const Token& sec_tok = peek();
      std::vector<Scalar> comps = parse_expr_list();
      if (static_cast<int>(comps.size()) != a.rank)
        fail(sec_tok, "section length differs from rank");
      Multivector value(a.rank, 1, dim());
      for (int l = 0; l < a.rank; ++l) value.add_component({l}, comps[l]);
      a.set_bracket(static_cast<int>(i) - 1, static_cast<int>(j) - 1, value);
      expect_punct(';');
    }
    expect_punct('}');
    file_.decls.push_back(AlgebroidDecl{name_tok.text, std::move(a)});
  }

  void parse_cocycle() {
    take();
    const Token& name_tok = expect_ident("cocycle name");
    declare(name_tok.text, name_tok);
    expect_keyword("on");
    const Token& owner_tok = expect_ident("algebroid name");
    const AlgebroidDecl* owner = file_.find_algebroid(owner_tok.text);
    if (!owner) fail(owner_tok, "unknown algebroid '" + owner_tok.text + "'");
    expect_punct('=');
    const Token& list_tok = peek();
    std::vector<Scalar> comps = parse_expr_list();
    if (static_cast<int>(comps.size()) != owner->value.rank)
      fail(list_tok, "covector length differs from rank");
    Form value(owner->value.rank, 1, dim());
    for (int l = 0; l < owner->value.rank; ++l) value.add_component({l}, comps[l]);
    expect_punct(';');
    file_.decls.push_back(CocycleDecl{name_tok.text, owner_tok.text, std::move(value)});
  }

  Multivector parse_bivector_body(int rank) {
    expect_punct('{');
    Multivector out(rank, 2, dim());
    std::set<std::pair<int, int>> seen;
    while (!at_punct('}')) {
      expect_punct('(');
      const Token& i_tok = peek();
      const long long i = expect_number("component index");
      expect_punct(',');
      const Token& j_tok = peek();
      const long long j = expect_number("component index");
      expect_punct(')');
      if (i < 1 || i > rank) fail(i_tok, "component index out of range");
      if (j < 1 || j > rank) fail(j_tok, "component index out of range");
      if (i >= j) fail(i_tok, "component indices must be increasing");
      if (!seen.insert({static_cast<int>(i), static_cast<int>(j)}).second)
        fail(i_tok, "duplicate component");
      expect_punct(':');
      out.add_component({static_cast<int>(i) - 1, static_cast<int>(j) - 1}, parse_expr());
      accept_punct(',');
    }
    take();
    return out;
  }

  void parse_bivector() {
    take();
    const Token& name_tok = expect_ident("bivector name");
    declare(name_tok.text, name_tok);
    expect_keyword("on");
    const Token& owner_tok = expect_ident("algebroid name");
    const AlgebroidDecl* owner = file_.find_algebroid(owner_tok.text);
    if (!owner) fail(owner_tok, "unknown algebroid '" + owner_tok.text + "'");
    expect_punct('=');
    Multivector value = parse_bivector_body(owner->value.rank);
    expect_punct(';');
    file_.decls.push_back(BivectorDecl{name_tok.text, owner_tok.text, std::move(value)});
  }

  void parse_jacobi() {
    take();
    const Token& name_tok = expect_ident("jacobi name");
    declare(name_tok.text, name_tok);
    expect_punct('=');
    expect_punct('{');
    expect_keyword("Lambda");
    expect_punct(':');
    Multivector lambda = parse_bivector_body(dim());
    expect_punct(';');
    expect_keyword("E");
    expect_punct(':');
    const Token& vec_tok = peek();
    std::vector<Scalar> comps = parse_expr_list();
    if (static_cast<int>(comps.size()) != dim()) fail(vec_tok, "vector length differs from dim");
    Multivector e(dim(), 1, dim());
    for (int l = 0; l < dim(); ++l) e.add_component({l}, comps[l]);
    expect_punct('}');
    expect_punct(';');
    file_.decls.push_back(JacobiDecl{name_tok.text, std::move(lambda), std::move(e)});
  }

  void parse_pair() {
    take();
    const Token& name_tok = expect_ident("pair name");
    declare(name_tok.text, name_tok);
    expect_punct('=');
    expect_punct('(');
    auto side = [&]() {
      const Token& a_tok = expect_ident("algebroid name");
      const AlgebroidDecl* ad = file_.find_algebroid(a_tok.text);
      if (!ad) fail(a_tok, "unknown algebroid '" + a_tok.text + "'");
      expect_punct(',');
      const Token& c_tok = expect_ident("cocycle name");
      const CocycleDecl* cd = file_.find_cocycle(c_tok.text);
      if (!cd) fail(c_tok, "unknown cocycle '" + c_tok.text + "'");
      if (cd->owner != a_tok.text)
        fail(c_tok, "cocycle '" + c_tok.text + "' is not declared on '" + a_tok.text + "'");
      return std::make_pair(ad, cd);
    };
    auto [ad1, cd1] = side();
    expect_punct(';');
    const Token& side2_tok = peek();
    auto [ad2, cd2] = side();
    if (ad1->value.rank != ad2->value.rank) fail(side2_tok, "pair sides have different ranks");
    expect_punct(')');
    expect_punct(';');
    file_.decls.push_back(PairDecl{name_tok.text, ad1->name, cd1->name, ad2->name, cd2->name});
  }

  int pair_rank(const std::string& name, const Token& tok) const {
    if (const PairDecl* pd = file_.find_pair(name))
      return file_.find_algebroid(pd->primal_algebroid)->value.rank;
    if (file_.find_jacobi(name)) return dim() + 1;
    fail(tok, "unknown pair '" + name + "'");
  }

  void parse_morphism() {
    take();
    const Token& name_tok = expect_ident("morphism name");
    declare(name_tok.text, name_tok);
    expect_punct(':');
    const Token& src_tok = expect_ident("pair name");
    const int src_rank = pair_rank(src_tok.text, src_tok);
    if (peek().kind != Token::Arrow) fail(peek(), "expected '->'");
    take();
    const Token& tgt_tok = expect_ident("pair name");
    const int tgt_rank = pair_rank(tgt_tok.text, tgt_tok);
    expect_punct('=');
    const Token& mat_tok = peek();
    auto matrix = parse_matrix();
    if (static_cast<int>(matrix.size()) != tgt_rank)
      fail(mat_tok, "matrix row count differs from target rank");
    for (const auto& row : matrix)
      if (static_cast<int>(row.size()) != src_rank)
        fail(mat_tok, "matrix column count differs from source rank");
    expect_punct(';');
    file_.decls.push_back(
        MorphismDecl{name_tok.text, src_tok.text, tgt_tok.text, std::move(matrix)});
  }

  Scalar parse_expr() {
    bool neg = false;
    if (at_punct('-')) {
      take();
      neg = true;
    }
    Scalar out = parse_term();
    if (neg) out = -out;
    while (at_punct('+') || at_punct('-')) {
      const bool minus = at_punct('-');
      take();
      Scalar t = parse_term();
      if (minus)
        out -= t;
      else
        out += t;
    }
    return out;
  }

  Scalar parse_term() {
    Scalar out = parse_factor();
    while (at_punct('*')) {
      take();
      out *= parse_factor();
    }
    return out;
  }

  Scalar parse_factor() {
    Scalar base = parse_atom();
    if (at_punct('^')) {
      take();
      const Token& e_tok = peek();
      const long long e = expect_number("exponent");
      if (e < 0 || e > 64) fail(e_tok, "exponent out of range");
      Scalar out = Scalar::constant(dim(), 1);
      for (long long k = 0; k < e; ++k) out *= base;
      return out;
    }
    return base;
  }

  Scalar parse_atom() {
    if (peek().kind == Token::Number) {
      const long long num = expect_number("number");
      if (accept_punct('/')) {
        const Token& den_tok = peek();
        const long long den = expect_number("denominator");
        if (den == 0) fail(den_tok, "zero denominator");
        return Scalar::constant(dim(), Rational(num, den));
      }
      return Scalar::constant(dim(), Rational(num));
    }
    if (peek().kind == Token::Ident) {
      const Token& t = take();
      for (int l = 0; l < dim(); ++l)
        if (file_.base.coords[static_cast<size_t>(l)] == t.text) return Scalar::variable(dim(), l);
      fail(t, "unknown coordinate '" + t.text + "'");
    }
    if (accept_punct('(')) {
      Scalar out = parse_expr();
      expect_punct(')');
      return out;
    }
    fail(peek(), "expected expression");
  }
};

std::string render_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out + "]";
}

template <Variance V>
std::string render_components(const Graded<V>& g, const BasePatch& base) {
  std::vector<std::string> items;
  for (int i = 0; i < g.rank(); ++i) items.push_back(to_string(g.component({i}), base));
  return render_list(items);
}

std::string render_matrix(const std::vector<std::vector<Scalar>>& m, const BasePatch& base) {
  std::vector<std::string> rows;
  for (const auto& row : m) {
    std::vector<std::string> items;
    for (const Scalar& s : row) items.push_back(to_string(s, base));
    rows.push_back(render_list(items));
  }
  return render_list(rows);
}

std::string render_body(const Multivector& b, const BasePatch& base) {
  if (b.components().empty()) return "{ }";
  std::string out = "{ ";
  bool first = true;
  for (const auto& [idx, c] : b.components()) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(idx[0] + 1) + "," + std::to_string(idx[1] + 1) +
           "): " + to_string(c, base);
  }
  return out + " }";
}

std::string render_decl(const AlgebroidDecl& d, const BasePatch& base) {
  std::string out = "algebroid " + d.name + " {\n";
  out += "  rank = " + std::to_string(d.value.rank) + ";\n";
  out += "  frame = " + render_list(d.value.frame) + ";\n";
  out += "  anchor = " + render_matrix(d.value.anchor, base) + ";\n";
  for (const auto& [ij, value] : d.value.structure)
    out += "  bracket[" + std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1) +
           "] = " + render_components(value, base) + ";\n";
  return out + "}\n";
}

std::string render_decl(const CocycleDecl& d, const BasePatch& base) {
  return "cocycle " + d.name + " on " + d.owner + " = " + render_components(d.value, base) + ";\n";
}

std::string render_decl(const BivectorDecl& d, const BasePatch& base) {
  return "bivector " + d.name + " on " + d.owner + " = " + render_body(d.value, base) + ";\n";
}

std::string render_decl(const JacobiDecl& d, const BasePatch& base) {
  return "jacobi " + d.name + " = { Lambda: " + render_body(d.lambda, base) +
         "; E: " + render_components(d.e_field, base) + " };\n";
}

std::string render_decl(const PairDecl& d, const BasePatch&) {
  return "pair " + d.name + " = (" + d.primal_algebroid + ", " + d.primal_cocycle + "; " +
         d.dual_algebroid + ", " + d.dual_cocycle + ");\n";
}

std::string render_decl(const MorphismDecl& d, const BasePatch& base) {
  return "morphism " + d.name + " : " + d.source + " -> " + d.target + " = " +
         render_matrix(d.matrix, base) + ";\n";
}

}  // namespace

const AlgebroidDecl* StructureFile::find_algebroid(const std::string& name) const {
  for (const Decl& d : decls)
    if (const auto* p = std::get_if<AlgebroidDecl>(&d); p && p->name == name) return p;
  return nullptr;
}

const CocycleDecl* StructureFile::find_cocycle(const std::string& name) const {
  for (const Decl& d : decls)
    if (const auto* p = std::get_if<CocycleDecl>(&d); p && p->name == name) return p;
  return nullptr;
}

const BivectorDecl* StructureFile::find_bivector(const std::string& name) const {
  for (const Decl& d : decls)
    if (const auto* p = std::get_if<BivectorDecl>(&d); p && p->name == name) return p;
  return nullptr;
}

const JacobiDecl* StructureFile::find_jacobi(const std::string& name) const {
  for (const Decl& d : decls)
    if (const auto* p = std::get_if<JacobiDecl>(&d); p && p->name == name) return p;
  return nullptr;
}

const PairDecl* StructureFile::find_pair(const std::string& name) const {
  for (const Decl& d : decls)
    if (const auto* p = std::get_if<PairDecl>(&d); p && p->name == name) return p;
  return nullptr;
}

const MorphismDecl* StructureFile::find_morphism(const std::string& name) const {
  for (const Decl& d : decls)
    if (const auto* p = std::get_if<MorphismDecl>(&d); p && p->name == name) return p;
  return nullptr;
}

StructureFile parse_structure(const std::string& text) {
  Parser p(text);
  return p.parse_file();
}

Scalar parse_scalar(const std::string& text, const BasePatch& base) {
  Parser p(text);
  return p.parse_expr_all(base);
}

std::string render(const StructureFile& f) {
  std::string out = "manifold { dim = " + std::to_string(f.base.dim()) +
                    "; coords = " + render_list(f.base.coords) + " }\n";
  for (const Decl& d : f.decls) {
    out += "\n";
    std::visit([&](const auto& decl) { out += render_decl(decl, f.base); }, d);
  }
  return out;
}

}  // namespace bialg
