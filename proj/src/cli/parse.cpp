#include "symtensor/cli/parse.hpp"

#include <cctype>
#include <functional>
#include <limits>
#include <optional>

#include "symtensor/errors.hpp"

namespace symtensor::cli {

namespace {

// ---------------------------------------------------------------------------
// Lexer and recursive descent

struct Token {
  enum class Kind { kInteger, kSymbol, kOp, kEnd };
  Kind kind;
  std::string text;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view text, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Token::Kind::kInteger, std::string(text.substr(start, i - start)), offset + start});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      out.push_back({Token::Kind::kSymbol, std::string(text.substr(start, i - start)), offset + start});
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::kOp, std::string(1, c), offset + i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", offset + i);
    }
  }
  out.push_back({Token::Kind::kEnd, "", offset + text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprAST parse() {
    ExprAST e = expr();
    if (peek().kind != Token::Kind::kEnd) throw ParseError("unexpected '" + peek().text + "'", peek().position);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_op(char c) const { return peek().kind == Token::Kind::kOp && peek().text[0] == c; }
  const Token& take() { return tokens_[pos_++]; }

  static ExprAST node(ExprNode::Kind kind, std::size_t position) {
    auto n = std::make_unique<ExprNode>();
    n->kind = kind;
    n->position = position;
    return n;
  }

  static ExprAST binary(ExprNode::Kind kind, ExprAST lhs, ExprAST rhs) {
    ExprAST n = node(kind, lhs->position);
    n->children.push_back(std::move(lhs));
    n->children.push_back(std::move(rhs));
    return n;
  }

  ExprAST expr() {
    ExprAST lhs = term();
    while (at_op('+') || at_op('-')) {
      const auto kind = take().text[0] == '+' ? ExprNode::Kind::kAdd : ExprNode::Kind::kSub;
      lhs = binary(kind, std::move(lhs), term());
    }
    return lhs;
  }

  ExprAST term() {
    ExprAST lhs = unary();
    while (at_op('*') || at_op('/')) {
      const auto kind = take().text[0] == '*' ? ExprNode::Kind::kMul : ExprNode::Kind::kDiv;
      lhs = binary(kind, std::move(lhs), unary());
    }
    return lhs;
  }

  ExprAST unary() {
    if (at_op('-')) {
      ExprAST n = node(ExprNode::Kind::kNeg, take().position);
      n->children.push_back(unary());
      return n;
    }
    return power();
  }

  ExprAST power() {
    ExprAST base = atom();
    if (!at_op('^')) return base;
    const Token& caret = take();
    if (at_op('-')) throw ParseError("negative exponent", peek().position);
    if (peek().kind != Token::Kind::kInteger) {
      throw ParseError("exponent must be a nonnegative integer", peek().position);
    }
    const Token& e = take();
    const mpz_class value(e.text);
    if (value > std::numeric_limits<std::uint32_t>::max()) throw ParseError("exponent too large", e.position);
    ExprAST n = node(ExprNode::Kind::kPow, caret.position);
    n->exponent = value.get_ui();
    n->children.push_back(std::move(base));
    if (at_op('^')) throw ParseError("chained '^' needs parentheses", peek().position);
    return n;
  }

  ExprAST atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::kInteger: {
        ExprAST n = node(ExprNode::Kind::kInteger, t.position);
        n->integer = mpz_class(t.text);
        take();
        return n;
      }
      case Token::Kind::kSymbol: {
        ExprAST n = node(ExprNode::Kind::kSymbol, t.position);
        n->symbol = t.text;
        take();
        return n;
      }
      case Token::Kind::kOp:
        if (t.text == "(") {
          take();
          ExprAST inner = expr();
          if (!at_op(')')) throw ParseError("expected ')'", peek().position);
          take();
          return inner;
        }
        throw ParseError("unexpected '" + t.text + "'", t.position);
      case Token::Kind::kEnd:
        throw ParseError("unexpected end of expression", t.position);
    }
    throw ParseError("unexpected token", t.position);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Evaluation into a target algebra

// Parses "<prefix><k>" with 1 <= k <= n.
std::optional<std::size_t> indexed_symbol(const std::string& name, char prefix, std::size_t n,
                                          std::size_t position) {
  if (name.size() < 2 || name[0] != prefix) return std::nullopt;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  }
  const unsigned long k = std::stoul(name.substr(1));
  if (k == 0 || k > n) {
    throw ParseError(name + " out of range for n = " + std::to_string(n), position);
  }
  return k - 1;
}

template <class T>
struct Algebra {
  RingSpec spec;
  std::string role;
  std::function<T(const RingValue&)> constant;
  std::function<std::optional<T>(const std::string&, std::size_t)> symbol;
};

template <class T>
T evaluate(const ExprNode& n, const Algebra<T>& alg);

RingValue evaluate_constant(const ExprNode& n, const RingSpec& spec, const std::string& role);

template <class T>
T evaluate(const ExprNode& n, const Algebra<T>& alg) {
  using K = ExprNode::Kind;
  switch (n.kind) {
    case K::kInteger:
      return alg.constant(alg.spec.from_integer(n.integer));
    case K::kSymbol: {
      if (auto v = alg.symbol(n.symbol, n.position)) return *v;
      if (auto t = alg.spec.tower_variable(n.symbol)) return alg.constant(*t);
      throw ParseError("unknown symbol '" + n.symbol + "' in " + alg.role, n.position);
    }
    case K::kAdd:
      return evaluate(*n.children[0], alg) + evaluate(*n.children[1], alg);
    case K::kSub:
      return evaluate(*n.children[0], alg) - evaluate(*n.children[1], alg);
    case K::kMul:
      return evaluate(*n.children[0], alg) * evaluate(*n.children[1], alg);
    case K::kNeg:
      return alg.constant(-alg.spec.one()) * evaluate(*n.children[0], alg);
    case K::kDiv: {
      const RingValue d = evaluate_constant(*n.children[1], alg.spec, "a divisor");
      if (!is_unit(d)) {
        throw ParseError("division by " + d.to_string() + ", not a unit of " + alg.spec.to_string(),
                         n.children[1]->position);
      }
      return evaluate(*n.children[0], alg) * alg.constant(inverse(d));
    }
    case K::kPow: {
      T base = evaluate(*n.children[0], alg);
      T acc = alg.constant(alg.spec.one());
      for (std::uint64_t e = n.exponent; e > 0; e >>= 1) {
        if (e & 1) acc = acc * base;
        if (e > 1) base = base * base;
      }
      return acc;
    }
  }
  throw ParseError("malformed expression", n.position);
}

RingValue evaluate_constant(const ExprNode& n, const RingSpec& spec, const std::string& role) {
  Algebra<RingValue> alg{spec, role, [](const RingValue& c) { return c; },
                         [](const std::string&, std::size_t) { return std::optional<RingValue>(); }};
  return evaluate(n, alg);
}

ExprAST parse_nonempty(std::string_view text, std::size_t offset) {
  return parse_expr(text, offset);
}

// ---------------------------------------------------------------------------
// Ring specs

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool is_reserved(std::string_view s) {
  if (s == "X") return true;
  if (s.size() >= 2 && (s[0] == 'X' || s[0] == 'e')) {
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  }
  return false;
}

class RingParser {
 public:
  RingParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  RingSpec parse() {
    RingSpec spec = ring();
    if (pos_ != text_.size()) fail("trailing text in ring spec", pos_);
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(message, offset_ + at);
  }

  std::string_view word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ':') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void expect_colon() {
    if (pos_ >= text_.size() || text_[pos_] != ':') fail("expected ':'", pos_);
    ++pos_;
  }

  mpz_class number() {
    const std::size_t start = pos_;
    const std::string_view digits = word();
    if (digits.empty()) fail("expected a number", start);
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a number", start);
    }
    return mpz_class(std::string(digits));
  }

  RingSpec ring() {
    const std::size_t start = pos_;
    const std::string_view w = word();
    if (w == "ZZ") return RingSpec::integers();
    if (w == "QQ") return RingSpec::rationals();
    if (w == "Zmod") {
      expect_colon();
      const std::size_t at = pos_;
      const mpz_class m = number();
      if (m < 2) fail("Zmod:<m> needs m >= 2", at);
      return RingSpec::mod(m);
    }
    if (w == "GF") {
      expect_colon();
      const std::size_t at = pos_;
      const mpz_class p = number();
      if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
        fail("GF:<p> needs a prime, got " + p.get_str(), at);
      }
      return RingSpec::prime_field(p);
    }
    if (w == "Poly") {
      expect_colon();
      const RingSpec base = ring();
      expect_colon();
      const std::size_t at = pos_;
      const std::string_view var = word();
      if (!is_identifier(var)) fail("bad variable name '" + std::string(var) + "'", at);
      if (is_reserved(var)) fail("variable name '" + std::string(var) + "' is reserved", at);
      if (base.tower_variable(var)) {
        fail("variable '" + std::string(var) + "' already used in " + base.to_string(), at);
      }
      return RingSpec::poly_over(base, std::string(var));
    }
    fail("unknown ring '" + std::string(w) + "'", start);
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

// Splits on `sep`, reporting each piece with its offset.
std::vector<std::pair<std::string_view, std::size_t>> split(std::string_view text, char sep,
                                                             std::size_t offset) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.emplace_back(text.substr(start, i - start), offset + start);
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

ExprAST parse_expr(std::string_view text, std::size_t offset) {
  return Parser(tokenize(text, offset)).parse();
}

RingSpec parse_ring(std::string_view text) { return RingParser(text, 0).parse(); }

RingValue parse_element(std::string_view text, const RingSpec& spec, std::size_t offset) {
  return evaluate_constant(*parse_nonempty(text, offset), spec, "a ring element");
}

Poly parse_poly(std::string_view text, const RingSpec& spec, std::size_t offset) {
  Algebra<Poly> alg{spec, "a polynomial in X", [](const RingValue& c) { return Poly::constant(c); },
                    [&](const std::string& s, std::size_t) -> std::optional<Poly> {
                      if (s == "X") return Poly::x(spec);
                      return std::nullopt;
                    }};
  return evaluate(*parse_nonempty(text, offset), alg);
}

MultiPoly parse_multi(std::string_view text, const RingSpec& spec, std::size_t n) {
  Algebra<MultiPoly> alg{
      spec, "a polynomial in X1..X" + std::to_string(n),
      [n](const RingValue& c) { return MultiPoly::constant(c, n); },
      [&](const std::string& s, std::size_t pos) -> std::optional<MultiPoly> {
        if (auto k = indexed_symbol(s, 'X', n, pos)) return MultiPoly::variable(spec, n, *k);
        return std::nullopt;
      }};
  return evaluate(*parse_nonempty(text, 0), alg);
}

SymElem parse_sym(std::string_view text, const RingSpec& spec, std::size_t n) {
  Algebra<SymElem> alg{
      spec, "a polynomial in e1..e" + std::to_string(n),
      [n](const RingValue& c) { return SymElem::constant(c, n); },
      [&](const std::string& s, std::size_t pos) -> std::optional<SymElem> {
        if (auto k = indexed_symbol(s, 'e', n, pos)) return SymElem::variable(spec, n, *k);
        return std::nullopt;
      }};
  return evaluate(*parse_nonempty(text, 0), alg);
}

SymPolyX parse_sym_x(std::string_view text, const RingSpec& spec, std::size_t arity) {
  Algebra<SymPolyX> alg{
      spec, "a polynomial in X over e1..e" + std::to_string(arity),
      [arity](const RingValue& c) { return SymPolyX::constant(SymElem::constant(c, arity)); },
      [&](const std::string& s, std::size_t pos) -> std::optional<SymPolyX> {
        if (s == "X") return SymPolyX::x(spec, arity);
        if (auto k = indexed_symbol(s, 'e', arity, pos)) {
          return SymPolyX::constant(SymElem::variable(spec, arity, *k));
        }
        return std::nullopt;
      }};
  return evaluate(*parse_nonempty(text, 0), alg);
}

MultSetSpec parse_multset(std::string_view text, const RingSpec& spec) {
  if (text == "trivial") return MultSetSpec::trivial();
  if (text == "all-nonzero") return MultSetSpec::all_nonzero();
  constexpr std::string_view kLocal = "local-at:";
  constexpr std::string_view kGens = "gens:";
  if (text.starts_with(kLocal)) {
    return MultSetSpec::local_at(parse_element(text.substr(kLocal.size()), spec, kLocal.size()));
  }
  if (text.starts_with(kGens)) {
    std::vector<Poly> gens;
    for (const auto& [piece, at] : split(text.substr(kGens.size()), ',', kGens.size())) {
      Poly g = parse_poly(piece, spec, at);
      if (g.is_zero()) throw ParseError("generator is zero", at);
      gens.push_back(std::move(g));
    }
    return MultSetSpec::generated_by(std::move(gens));
  }
  throw ParseError("expected trivial, gens:..., local-at:... or all-nonzero", 0);
}

RingHom parse_hom(std::string_view text, const RingSpec& source) {
  if (text == "id") return RingHom::identity(source);
  constexpr std::string_view kTo = "to:";
  constexpr std::string_view kEval = "eval:";
  if (text.starts_with(kTo)) {
    return RingHom::reduce(source, RingParser(text.substr(kTo.size()), kTo.size()).parse());
  }
  if (text.starts_with(kEval)) {
    if (source.kind() != RingKind::kPolyOver) {
      throw Error(ErrorKind::kUsage, "eval: needs a tower ring, not " + source.to_string());
    }
    return RingHom::evaluate(source, parse_element(text.substr(kEval.size()), source.base(), kEval.size()));
  }
  throw ParseError("expected id, to:<ring> or eval:<elt>", 0);
}

SquareMatrix parse_matrix(std::string_view text, const RingSpec& spec) {
  std::vector<RingValue> entries;
  std::size_t n = 0;
  const auto rows = split(text, ';', 0);
  for (const auto& [row, row_at] : rows) {
    const auto cells = split(row, ',', row_at);
    if (n == 0) n = cells.size();
    if (cells.size() != n || cells.size() != rows.size()) throw ParseError("matrix is not square", row_at);
    for (const auto& [cell, at] : cells) entries.push_back(parse_element(cell, spec, at));
  }
  return SquareMatrix(spec, n, std::move(entries));
}

}  // namespace symtensor::cli
