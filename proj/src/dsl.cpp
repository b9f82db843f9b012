#include "homlie/dsl.hpp"

#include <cctype>
#include <map>
#include <set>

namespace homlie {

DslError::DslError(SourceSpan at, std::vector<std::string> expected, std::string found, const std::string& message)
    : Error(ErrorKind::ParseError,
            "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + message),
      at_(at),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan at;
};

const std::set<std::string, std::less<>> kReserved = {"L", "beta"};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const SourceSpan at{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), at});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), at});
      advance(j - i);
    } else if ((c == '-' || c == '=') && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Punct, std::string(src.substr(i, 2)), at});
      advance(2);
    } else if (std::string_view("{}[](),;=+-*/^").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), at});
      advance(1);
    } else {
      throw DslError(at, {"token"}, std::string(1, c), "unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

struct RawTerm {
  Scalar coeff;
  std::optional<Token> ident;
};

struct RawAlgebra {
  Token name;
  std::vector<Token> basis;
  struct Bracket {
    Token left, right;
    std::vector<RawTerm> rhs;
  };
  std::vector<Bracket> brackets;
};

struct RawMorphism {
  Token name, on;
  std::vector<std::pair<Token, std::vector<RawTerm>>> images;
};

struct RawRep {
  Token name, of;
  std::size_t dim;
  std::vector<std::pair<Token, Matrix>> actions;
  std::optional<std::pair<Token, Matrix>> beta;
};

struct RawFamily {
  Token kind;
  std::vector<std::pair<Token, Scalar>> params;
};

using RawItem = std::variant<RawAlgebra, RawMorphism, RawRep, RawFamily>;

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<RawItem> document() {
    std::vector<RawItem> items;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (is_ident("algebra")) {
        items.emplace_back(algebra());
      } else if (is_ident("morphism")) {
        items.emplace_back(morphism());
      } else if (is_ident("rep")) {
        items.emplace_back(rep());
      } else if (is_ident("family")) {
        items.emplace_back(family());
      } else {
        throw DslError(t.at, {"algebra", "morphism", "rep", "family"}, t.text,
                       "expected an item keyword, found " + describe(t));
      }
    }
    return items;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool is_punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
  }
  bool is_ident(std::string_view word) const { return peek().kind == Tok::Ident && peek().text == word; }

  [[noreturn]] void expected(std::vector<std::string> what) const {
    std::string list;
    for (std::size_t i = 0; i < what.size(); ++i) list += (i ? " or " : "") + what[i];
    throw DslError(peek().at, what, peek().text, "expected " + list + ", found " + describe(peek()));
  }

  Token punct(std::string_view p) {
    if (!is_punct(p)) expected({"'" + std::string(p) + "'"});
    return take();
  }

  Token keyword(std::string_view word) {
    if (!is_ident(word)) expected({"'" + std::string(word) + "'"});
    return take();
  }

  Token ident() {
    if (peek().kind != Tok::Ident) expected({"identifier"});
    return take();
  }

  Token name() {
    Token t = ident();
    if (kReserved.count(t.text))
      throw DslError(t.at, {"identifier"}, t.text, "'" + t.text + "' is reserved and cannot name a definition");
    return t;
  }

  long integer() {
    if (peek().kind != Tok::Int) expected({"integer"});
    const Token t = take();
    try {
      return std::stol(t.text);
    } catch (const std::out_of_range&) {
      throw DslError(t.at, {"integer"}, t.text, "integer out of range");
    }
  }

  // scalar := sum of products; in a linexpr coefficient only a product is read,
  // and a '*' followed by an identifier other than L ends the coefficient.
  Scalar scalar() {
    Scalar v = product();
    while (is_punct("+") || is_punct("-")) {
      const bool minus = take().text == "-";
      Scalar rhs = product();
      v = minus ? v - rhs : v + rhs;
    }
    return v;
  }

  Scalar product() {
    if (is_punct("-")) {
      take();
      return -product();
    }
    Scalar v = power();
    for (;;) {
      if (is_punct("*") && !(peek(1).kind == Tok::Ident && peek(1).text != "L")) {
        take();
        v = v * power();
      } else if (is_punct("/")) {
        const Token op = take();
        Scalar d = power();
        if (d.is_zero()) throw DslError(op.at, {"nonzero divisor"}, "0", "division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Scalar power() {
    Scalar base = atom();
    if (!is_punct("^")) return base;
    const Token op = take();
    bool negative = false;
    if (is_punct("-")) {
      take();
      negative = true;
    }
    const long e = integer();
    if (negative && base.is_zero()) throw DslError(op.at, {"nonzero base"}, "0", "negative power of zero");
    return pow(base, negative ? -e : e);
  }

  Scalar atom() {
    if (peek().kind == Tok::Int) return Scalar(Rational(mpz_class(take().text)));
    if (is_ident("L")) {
      take();
      return Scalar::lambda();
    }
    if (is_punct("(")) {
      take();
      Scalar v = scalar();
      punct(")");
      return v;
    }
    expected({"integer", "'L'", "'('"});
  }

  RawTerm term() {
    if (is_punct("-")) {
      take();
      RawTerm t = term();
      t.coeff = -t.coeff;
      return t;
    }
    if (peek().kind == Tok::Ident && peek().text != "L") return {Scalar(1), take()};
    Scalar c = product();
    if (is_punct("*")) {
      take();
      Token id = ident();
      if (id.text == "L") expected({"basis element"});
      return {c, id};
    }
    return {c, std::nullopt};
  }

  std::vector<RawTerm> linexpr() {
    std::vector<RawTerm> out{term()};
    while (is_punct("+") || is_punct("-")) {
      const bool minus = take().text == "-";
      RawTerm t = term();
      if (minus) t.coeff = -t.coeff;
      out.push_back(std::move(t));
    }
    return out;
  }

  Matrix matrix() {
    punct("[");
    std::vector<std::vector<Scalar>> rows;
    const SourceSpan start = peek().at;
    for (;;) {
      std::vector<Scalar> row{scalar()};
      while (is_punct(",")) {
        take();
        row.push_back(scalar());
      }
      if (!rows.empty() && row.size() != rows.front().size())
        throw DslError(start, {"rows of equal length"}, std::to_string(row.size()), "matrix rows differ in length");
      rows.push_back(std::move(row));
      if (!is_punct(";")) break;
      take();
    }
    punct("]");
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    return m;
  }

  RawAlgebra algebra() {
    keyword("algebra");
    RawAlgebra a{name(), {}, {}};
    punct("{");
    keyword("basis");
    a.basis.push_back(name());
    while (is_punct(",")) {
      take();
      a.basis.push_back(name());
    }
    punct(";");
    while (is_punct("[")) {
      take();
      Token l = ident();
      punct(",");
      Token r = ident();
      punct("]");
      punct("=");
      auto rhs = linexpr();
      punct(";");
      a.brackets.push_back({l, r, std::move(rhs)});
    }
    if (!is_punct("}")) expected({"'['", "'}'"});
    take();
    return a;
  }

  RawMorphism morphism() {
    keyword("morphism");
    RawMorphism m{name(), {}, {}};
    keyword("on");
    m.on = ident();
    punct("{");
    do {
      Token src = ident();
      punct("->");
      auto img = linexpr();
      punct(";");
      m.images.emplace_back(src, std::move(img));
    } while (!is_punct("}"));
    take();
    return m;
  }

  RawRep rep() {
    keyword("rep");
    RawRep r{name(), {}, 0, {}, std::nullopt};
    keyword("of");
    r.of = ident();
    keyword("dim");
    const Token dim_tok = peek();
    const long d = integer();
    if (d <= 0) throw DslError(dim_tok.at, {"positive integer"}, dim_tok.text, "dimension must be positive");
    r.dim = static_cast<std::size_t>(d);
    punct("{");
    do {
      if (is_ident("beta")) {
        Token b = take();
        punct("=>");
        Matrix m = matrix();
        punct(";");
        r.beta.emplace(b, std::move(m));
        if (!is_punct("}")) expected({"'}'"});
        break;
      }
      Token x = ident();
      punct("=>");
      Matrix m = matrix();
      punct(";");
      r.actions.emplace_back(x, std::move(m));
    } while (!is_punct("}"));
    if (r.actions.empty()) throw DslError(peek().at, {"identifier"}, peek().text, "rep needs at least one action");
    take();
    return r;
  }

  RawFamily family() {
    keyword("family");
    RawFamily f{ident(), {}};
    punct("(");
    do {
      if (!f.params.empty()) take();
      Token key = ident();
      punct("=");
      f.params.emplace_back(key, scalar());
    } while (is_punct(","));
    punct(")");
    punct(";");
    return f;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

[[noreturn]] void unresolved(const Token& t, const std::string& what) {
  throw DslError(t.at, {what}, t.text, "unknown " + what + " '" + t.text + "'");
}

std::size_t basis_index(const std::vector<std::string>& basis, const Token& t) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == t.text) return i;
  unresolved(t, "basis element");
}

Vector resolve_linexpr(const std::vector<RawTerm>& terms, const std::vector<std::string>& basis,
                       const Token& context) {
  Vector v = zero_vector(basis.size());
  for (const auto& t : terms) {
    if (!t.ident) {
      if (!t.coeff.is_zero())
        throw DslError(context.at, {"basis element"}, to_string(t.coeff),
                       "a constant term must be 0 in a linear combination");
      continue;
    }
    const std::size_t i = basis_index(basis, *t.ident);
    v[i] = v[i] + t.coeff;
  }
  return v;
}

template <class T>
[[noreturn]] void duplicate(const Token& t, const T& kind) {
  throw DslError(t.at, {"unique name"}, t.text, std::string("duplicate ") + kind + " '" + t.text + "'");
}

AlgebraDef resolve(const RawAlgebra& raw) {
  AlgebraDef a;
  a.name = raw.name.text;
  a.span = raw.name.at;
  for (const auto& b : raw.basis) {
    for (const auto& seen : a.basis)
      if (seen == b.text) duplicate(b, "basis element");
    a.basis.push_back(b.text);
  }
  a.constants = StructureConstants(a.basis.size());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& br : raw.brackets) {
    std::size_t i = basis_index(a.basis, br.left), j = basis_index(a.basis, br.right);
    Vector v = resolve_linexpr(br.rhs, a.basis, br.left);
    if (i == j) {
      if (!is_zero(v))
        throw DslError(br.left.at, {"zero"}, br.left.text, "bracket of '" + br.left.text + "' with itself must be 0");
      continue;
    }
    if (i > j) {
      std::swap(i, j);
      for (auto& x : v) x = -x;
    }
    if (!seen.insert({i, j}).second)
      throw DslError(br.left.at, {"new bracket pair"}, br.left.text,
                     "bracket [" + a.basis[i] + "," + a.basis[j] + "] is specified twice");
    a.constants.set_skew(i, j, v);
  }
  return a;
}

std::vector<Matrix> ordered_actions(const std::vector<std::pair<Token, Matrix>>& given,
                                    const std::vector<std::string>& basis, const Token& owner, std::size_t dim) {
  std::vector<std::optional<Matrix>> slots(basis.size());
  for (const auto& [tok, m] : given) {
    const std::size_t i = basis_index(basis, tok);
    if (slots[i]) duplicate(tok, "action for");
    if (m.rows() != dim || m.cols() != dim)
      throw DslError(tok.at, {std::to_string(dim) + "x" + std::to_string(dim) + " matrix"},
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()), "action matrix has the wrong shape");
    slots[i] = m;
  }
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!slots[i])
      throw DslError(owner.at, {basis[i]}, owner.text, "rep '" + owner.text + "' gives no action for '" + basis[i] + "'");
    out.push_back(*slots[i]);
  }
  return out;
}

template <class T>
const T* find_item(const std::vector<Item>& items, std::string_view name) {
  for (const auto& it : items)
    if (const T* p = std::get_if<T>(&it); p && p->name == name) return p;
  return nullptr;
}

bool needs_parens(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i > 0 && (s[i] == '+' || s[i] == '-')) return true;
  }
  return false;
}

std::string render_matrix(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + to_string(m(r, c));
  }
  return out + "]";
}

}  // namespace

const AlgebraDef* Document::find_algebra(std::string_view name) const { return find_item<AlgebraDef>(items, name); }
const MorphismDef* Document::find_morphism(std::string_view name) const {
  return find_item<MorphismDef>(items, name);
}
const RepDef* Document::find_rep(std::string_view name) const { return find_item<RepDef>(items, name); }

std::vector<const FamilyDef*> Document::families() const {
  std::vector<const FamilyDef*> out;
  for (const auto& it : items)
    if (const auto* f = std::get_if<FamilyDef>(&it)) out.push_back(f);
  return out;
}

Document parse_document(std::string_view source) {
  const std::vector<RawItem> raw = Parser(lex(source)).document();
  Document doc;

  std::map<std::string, const RawAlgebra*> algebras;
  std::set<std::string> morphism_names, rep_names;
  for (const auto& it : raw) {
    if (const auto* a = std::get_if<RawAlgebra>(&it)) {
      if (!algebras.emplace(a->name.text, a).second) duplicate(a->name, "algebra");
    } else if (const auto* m = std::get_if<RawMorphism>(&it)) {
      if (!morphism_names.insert(m->name.text).second) duplicate(m->name, "morphism");
    } else if (const auto* r = std::get_if<RawRep>(&it)) {
      if (!rep_names.insert(r->name.text).second) duplicate(r->name, "rep");
    }
  }

  std::map<std::string, AlgebraDef> resolved;
  for (const auto& [name, a] : algebras) resolved.emplace(name, resolve(*a));
  std::map<std::string, std::string> morphism_algebra;
  for (const auto& it : raw)
    if (const auto* m = std::get_if<RawMorphism>(&it)) {
      if (!resolved.count(m->on.text)) unresolved(m->on, "algebra");
      morphism_algebra[m->name.text] = m->on.text;
    }

  for (const auto& it : raw) {
    if (const auto* a = std::get_if<RawAlgebra>(&it)) {
      doc.items.emplace_back(resolved.at(a->name.text));
    } else if (const auto* m = std::get_if<RawMorphism>(&it)) {
      const AlgebraDef& alg = resolved.at(m->on.text);
      const std::size_t n = alg.basis.size();
      MorphismDef def{m->name.text, m->on.text, Matrix(n, n), m->name.at};
      std::vector<bool> given(n, false);
      for (const auto& [src, img] : m->images) {
        const std::size_t j = basis_index(alg.basis, src);
        if (given[j]) duplicate(src, "image of");
        given[j] = true;
        const Vector v = resolve_linexpr(img, alg.basis, src);
        for (std::size_t i = 0; i < n; ++i) def.matrix(i, j) = v[i];
      }
      for (std::size_t j = 0; j < n; ++j)
        if (!given[j])
          throw DslError(m->name.at, {alg.basis[j]}, m->name.text,
                         "morphism '" + m->name.text + "' gives no image for '" + alg.basis[j] + "'");
      doc.items.emplace_back(std::move(def));
    } else if (const auto* r = std::get_if<RawRep>(&it)) {
      std::string alg_name;
      if (resolved.count(r->of.text))
        alg_name = r->of.text;
      else if (morphism_algebra.count(r->of.text))
        alg_name = morphism_algebra.at(r->of.text);
      else
        unresolved(r->of, "algebra or morphism");
      RepDef def{r->name.text, r->of.text, r->dim, ordered_actions(r->actions, resolved.at(alg_name).basis, r->name, r->dim),
                 std::nullopt, r->name.at};
      if (r->beta) {
        const Matrix& b = r->beta->second;
        if (b.rows() != r->dim || b.cols() != r->dim)
          throw DslError(r->beta->first.at, {std::to_string(r->dim) + "x" + std::to_string(r->dim) + " matrix"},
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()), "beta has the wrong shape");
        def.beta = b;
      }
      doc.items.emplace_back(std::move(def));
    } else {
      const auto& f = std::get<RawFamily>(it);
      FamilyDef def;
      try {
        def.kind = parse_family_kind(f.kind.text);
      } catch (const Error&) {
        throw DslError(f.kind.at, {"finite", "lowest", "highest", "intermediate"}, f.kind.text,
                       "unknown family kind '" + f.kind.text + "'");
      }
      def.span = f.kind.at;
      std::set<std::string> keys;
      for (const auto& [key, value] : f.params) {
        if (!keys.insert(key.text).second) duplicate(key, "parameter");
        def.params.emplace_back(key.text, value);
      }
      doc.items.emplace_back(std::move(def));
    }
  }
  return doc;
}

std::string render_linexpr(const Vector& v, const std::vector<std::string>& basis) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Scalar c = v[i];
    std::string sign = " + ";
    std::string text = to_string(c);
    if (!needs_parens(text) && text.front() == '-') {
      sign = " - ";
      c = -c;
      text = to_string(c);
    }
    std::string term;
    if (c.is_one())
      term = basis[i];
    else
      term = (needs_parens(text) ? "(" + text + ")" : text) + "*" + basis[i];
    if (out.empty())
      out = sign == " - " ? "-" + term : term;
    else
      out += sign + term;
  }
  return out.empty() ? "0" : out;
}

std::string render(const Document& doc) {
  std::string out;
  for (const auto& it : doc.items) {
    if (!out.empty()) out += "\n";
    if (const auto* a = std::get_if<AlgebraDef>(&it)) {
      out += "algebra " + a->name + " {\n  basis ";
      for (std::size_t i = 0; i < a->basis.size(); ++i) out += (i ? ", " : "") + a->basis[i];
      out += ";\n";
      for (std::size_t i = 0; i < a->basis.size(); ++i)
        for (std::size_t j = i + 1; j < a->basis.size(); ++j)
          if (!is_zero(a->constants.at(i, j)))
            out += "  [" + a->basis[i] + "," + a->basis[j] + "] = " + render_linexpr(a->constants.at(i, j), a->basis) +
                   ";\n";
      out += "}\n";
    } else if (const auto* m = std::get_if<MorphismDef>(&it)) {
      const AlgebraDef* alg = doc.find_algebra(m->on);
      out += "morphism " + m->name + " on " + m->on + " {\n";
      for (std::size_t j = 0; j < m->matrix.cols(); ++j)
        out += "  " + alg->basis[j] + " -> " + render_linexpr(m->matrix.column(j), alg->basis) + ";\n";
      out += "}\n";
    } else if (const auto* r = std::get_if<RepDef>(&it)) {
      const AlgebraDef* alg = doc.find_algebra(r->of);
      if (!alg) alg = doc.find_algebra(doc.find_morphism(r->of)->on);
      out += "rep " + r->name + " of " + r->of + " dim " + std::to_string(r->dim) + " {\n";
      for (std::size_t i = 0; i < r->actions.size(); ++i)
        out += "  " + alg->basis[i] + " => " + render_matrix(r->actions[i]) + ";\n";
      if (r->beta) out += "  beta => " + render_matrix(*r->beta) + ";\n";
      out += "}\n";
    } else {
      const auto& f = std::get<FamilyDef>(it);
      out += "family " + to_string(f.kind) + "(";
      for (std::size_t i = 0; i < f.params.size(); ++i)
        out += (i ? ", " : "") + f.params[i].first + " = " + to_string(f.params[i].second);
      out += ");\n";
    }
  }
  return out;
}

namespace {

Token named(std::string_view name) { return {Tok::Ident, std::string(name), {}}; }

}  // namespace

const AlgebraDef& require_algebra(const Document& doc, std::string_view name) {
  if (const auto* a = doc.find_algebra(name)) return *a;
  unresolved(named(name), "algebra");
}

const MorphismDef& require_morphism(const Document& doc, std::string_view name) {
  if (const auto* m = doc.find_morphism(name)) return *m;
  unresolved(named(name), "morphism");
}

const RepDef& require_rep(const Document& doc, std::string_view name) {
  if (const auto* r = doc.find_rep(name)) return *r;
  unresolved(named(name), "rep");
}

LieAlgebra lie_algebra_of(const Document& doc, std::string_view name) { return require_algebra(doc, name).lie(); }

HomLieAlgebra hom_lie_of(const Document& doc, std::string_view morphism) {
  const MorphismDef& m = require_morphism(doc, morphism);
  const AlgebraDef& a = require_algebra(doc, m.on);
  return {a.basis, a.constants.mapped(m.matrix), m.matrix};
}

LieRep lie_rep_of(const Document& doc, std::string_view rep) {
  const RepDef& r = require_rep(doc, rep);
  const AlgebraDef* alg = doc.find_algebra(r.of);
  if (!alg)
    throw DslError(r.span, {"rep of an algebra"}, r.of, "rep '" + r.name + "' is defined over morphism '" + r.of + "'");
  return {alg->lie(), r.actions};
}

HomRep hom_rep_of(const Document& doc, std::string_view rep) {
  const RepDef& r = require_rep(doc, rep);
  if (!r.beta)
    throw DslError(r.span, {"beta"}, r.name, "rep '" + r.name + "' has no beta and is not a Hom-representation");
  if (const auto* alg = doc.find_algebra(r.of)) return {as_hom_lie(alg->lie()), r.actions, *r.beta};
  return {hom_lie_of(doc, r.of), r.actions, *r.beta};
}

namespace {

long integral(const std::string& key, const Scalar& v) {
  const auto q = v.as_rational();
  if (!q || q->get_den() != 1 || !q->get_num().fits_slong_p())
    fail(ErrorKind::InvalidParams, "family parameter '" + key + "' must be an integer");
  return q->get_num().get_si();
}

}  // namespace

Sl2FamilyParams family_params(const FamilyDef& def) {
  Sl2FamilyParams p;
  p.kind = def.kind;
  for (const auto& [key, value] : def.params) {
    if (key == "n")
      p.n = integral(key, value);
    else if (key == "tau")
      p.tau = integral(key, value);
    else if (key == "mu")
      p.mu = integral(key, value);
    else if (key == "b0")
      p.b0 = value;
    else if (key == "lambda")
      p.lambda = value;
    else if (key != "lo" && key != "hi")
      fail(ErrorKind::InvalidParams, "unknown family parameter '" + key + "'");
  }
  return p;
}

std::pair<long, long> family_window(const FamilyDef& def) {
  auto window = default_window(family_params(def));
  for (const auto& [key, value] : def.params) {
    if (key == "lo") window.first = integral(key, value);
    if (key == "hi") window.second = integral(key, value);
  }
  return window;
}

}  // namespace homlie
