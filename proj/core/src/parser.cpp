#include "linecong/parser.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace linecong {

namespace {

enum class Tok {
  ident,
  number,
  string,
  lparen,
  rparen,
  comma,
  equals,
  plus,
  minus,
  star,
  slash,
  caret,
  newline,
  end,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int column = 1;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::ident:
      return "identifier '" + t.text + "'";
    case Tok::number:
      return "number " + t.text;
    case Tok::string:
      return "string \"" + t.text + "\"";
    case Tok::newline:
      return "end of line";
    case Tok::end:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Newlines inside parentheses are dropped so statements can span lines.
std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  int depth = 0;
  std::size_t i = 0;
  const auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      const auto byte = static_cast<unsigned char>(src[i]);
      if ((byte & 0xC0u) != 0x80u) ++column;
    }
  };
  const auto push = [&](Tok kind, std::string text, int l, int c) {
    out.push_back(Token{kind, std::move(text), l, c});
  };

  while (i < src.size()) {
    const char c = src[i];
    const int l = line;
    const int col = column;
    if (c == '\n') {
      if (depth == 0 && (out.empty() || out.back().kind != Tok::newline)) push(Tok::newline, "", l, col);
      ++i;
      ++line;
      column = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && (is_ident_start(src[j]) || is_digit(src[j]))) ++j;
      push(Tok::ident, std::string(src.substr(i, j - i)), l, col);
      advance(j - i);
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < src.size() && is_digit(src[i + 1]))) {
      std::size_t j = i;
      while (j < src.size() && is_digit(src[j])) ++j;
      if (j < src.size() && src[j] == '.') {
        ++j;
        while (j < src.size() && is_digit(src[j])) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && is_digit(src[k])) {
          while (k < src.size() && is_digit(src[k])) ++k;
          j = k;
        }
      }
      push(Tok::number, std::string(src.substr(i, j - i)), l, col);
      advance(j - i);
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') throw ParseError(l, col, "unterminated string");
      push(Tok::string, std::string(src.substr(i + 1, j - i - 1)), l, col);
      advance(j + 1 - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(':
        kind = Tok::lparen;
        ++depth;
        break;
      case ')':
        kind = Tok::rparen;
        if (--depth < 0) throw ParseError(l, col, "unbalanced ')'");
        break;
      case ',':
        kind = Tok::comma;
        break;
      case '=':
        kind = Tok::equals;
        break;
      case '+':
        kind = Tok::plus;
        break;
      case '-':
        kind = Tok::minus;
        break;
      case '*':
        kind = Tok::star;
        break;
      case '/':
        kind = Tok::slash;
        break;
      case '^':
        kind = Tok::caret;
        break;
      default: {
        std::size_t n = 1;
        const auto byte = static_cast<unsigned char>(c);
        if (byte >= 0xF0u) n = 4;
        else if (byte >= 0xE0u) n = 3;
        else if (byte >= 0xC0u) n = 2;
        throw ParseError(l, col, "unexpected character '" + std::string(src.substr(i, n)) + "'");
      }
    }
    push(kind, std::string(1, c), l, col);
    advance(1);
  }
  out.push_back(Token{Tok::end, "", line, column});
  return out;
}

/// Recursive-descent parser over a token range that ends with a newline or
/// end token.
class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, std::size_t pos, const VariableNames& names,
             const std::optional<MovingBasis>* omega)
      : toks_(toks), pos_(pos), names_(names), omega_(omega) {}

  ScalarExpr scalar() { return expr(); }

  VectorExpr vector() {
    const Token& t = peek();
    if (t.kind == Tok::ident) {
      if (t.text == "cross") {
        next();
        expect(Tok::lparen, "'('");
        VectorExpr a = vector();
        expect(Tok::comma, "','");
        VectorExpr b = vector();
        expect(Tok::rparen, "')'");
        return VectorExpr::cross(std::move(a), std::move(b));
      }
      if (t.text == "normalize") {
        next();
        expect(Tok::lparen, "'('");
        VectorExpr a = vector();
        expect(Tok::rparen, "')'");
        return VectorExpr::normalize(std::move(a));
      }
      if (t.text == "normal") {
        next();
        expect(Tok::lparen, "'('");
        const Token& arg = peek();
        if (arg.kind != Tok::ident || arg.text != "omega") fail(arg, "expected 'omega' but found " + describe(arg));
        if (omega_ == nullptr || !omega_->has_value()) fail(arg, "normal(omega) used but omega is not defined");
        next();
        expect(Tok::rparen, "')'");
        used_normal_ = true;
        return induced_normal((*omega_)->w1, (*omega_)->w2);
      }
      fail(t, "unknown vector '" + t.text + "'");
    }
    const Token& open = expect(Tok::lparen, "'(' starting a vector");
    std::vector<ScalarExpr> parts;
    parts.push_back(expr());
    while (peek().kind == Tok::comma) {
      next();
      parts.push_back(expr());
    }
    expect(Tok::rparen, "')' or ','");
    if (parts.size() != 3) {
      fail(open, "arity mismatch: a vector needs 3 components, found " + std::to_string(parts.size()));
    }
    return VectorExpr(parts[0], parts[1], parts[2]);
  }

  MovingBasis basis() {
    const Token& open = expect(Tok::lparen, "'(' starting omega");
    std::vector<VectorExpr> cols;
    cols.push_back(vector());
    while (peek().kind == Tok::comma) {
      next();
      cols.push_back(vector());
    }
    expect(Tok::rparen, "')' or ','");
    if (cols.size() != 2) {
      fail(open, "arity mismatch: omega needs 2 columns, found " + std::to_string(cols.size()));
    }
    return MovingBasis{cols[0], cols[1]};
  }

  void finish() {
    const Token& t = peek();
    if (t.kind != Tok::newline && t.kind != Tok::end) fail(t, "unexpected " + describe(t));
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::end) ++pos_;
    return t;
  }
  const Token& expect(Tok kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind) fail(t, "expected " + what + " but found " + describe(t));
    return next();
  }
  const Token& expect_ident(const std::string& word) {
    const Token& t = peek();
    if (t.kind != Tok::ident || t.text != word) {
      fail(t, "expected '" + word + "' but found " + describe(t));
    }
    return next();
  }
  [[noreturn]] static void fail(const Token& t, const std::string& message) {
    throw ParseError(t.line, t.column, message);
  }
  bool used_normal() const { return used_normal_; }
  std::size_t position() const { return pos_; }

 private:
  ScalarExpr expr() {
    ScalarExpr lhs = term();
    for (;;) {
      const Tok k = peek().kind;
      if (k == Tok::plus) {
        next();
        lhs = lhs + term();
      } else if (k == Tok::minus) {
        next();
        lhs = lhs - term();
      } else {
        return lhs;
      }
    }
  }

  ScalarExpr term() {
    ScalarExpr lhs = unary();
    for (;;) {
      const Tok k = peek().kind;
      if (k == Tok::star) {
        next();
        lhs = lhs * unary();
      } else if (k == Tok::slash) {
        next();
        lhs = lhs / unary();
      } else {
        return lhs;
      }
    }
  }

  ScalarExpr unary() {
    if (peek().kind == Tok::minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::plus) {
      next();
      return unary();
    }
    return power();
  }

  ScalarExpr power() {
    ScalarExpr base = primary();
    while (peek().kind == Tok::caret) {
      next();
      base = ScalarExpr::power(std::move(base), exponent());
    }
    return base;
  }

  int exponent() {
    bool paren = false;
    if (peek().kind == Tok::lparen) {
      next();
      paren = true;
    }
    int sign = 1;
    if (peek().kind == Tok::minus || peek().kind == Tok::plus) {
      if (next().kind == Tok::minus) sign = -1;
    }
    const Token& t = peek();
    if (t.kind != Tok::number || t.text.find_first_not_of("0123456789") != std::string::npos) {
      fail(t, "exponent must be an integer literal, found " + describe(t));
    }
    int value = 0;
    const auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (res.ec != std::errc()) fail(t, "exponent out of range");
    next();
    if (paren) expect(Tok::rparen, "')'");
    return sign * value;
  }

  ScalarExpr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        next();
        return ScalarExpr::constant(std::strtod(t.text.c_str(), nullptr));
      }
      case Tok::lparen: {
        next();
        ScalarExpr e = expr();
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::ident: {
        for (int k = 0; k < 2; ++k) {
          if (!names_[k].empty() && t.text == names_[k]) {
            next();
            return ScalarExpr::variable(k);
          }
        }
        if (t.text == "sqrt" || t.text == "sin" || t.text == "cos") {
          const std::string fn = t.text;
          next();
          expect(Tok::lparen, "'(' after " + fn);
          ScalarExpr arg = expr();
          expect(Tok::rparen, "')'");
          if (fn == "sqrt") return ScalarExpr::sqrt(std::move(arg));
          if (fn == "sin") return ScalarExpr::sin(std::move(arg));
          return ScalarExpr::cos(std::move(arg));
        }
        if (t.text == "cross" || t.text == "normalize" || t.text == "normal") {
          fail(t, "vector-valued '" + t.text + "' used where a scalar is expected");
        }
        fail(t, "unknown identifier '" + t.text + "'");
      }
      default:
        fail(t, "expected an expression but found " + describe(t));
    }
  }

  const std::vector<Token>& toks_;
  std::size_t pos_;
  VariableNames names_;
  const std::optional<MovingBasis>* omega_;
  bool used_normal_ = false;
};

struct Statement {
  Token key;
  std::size_t value_pos = 0;  // first token after '='
};

double constant_bound(ExprParser& p) {
  const Token& t = p.peek();
  ScalarExpr e = p.scalar();
  try {
    return eval(e, Point2::Zero());
  } catch (const std::exception& ex) {
    ExprParser::fail(t, std::string("domain bound is not a finite constant: ") + ex.what());
  }
}

void parse_interval(ExprParser& p, const std::string& var, double& lo, double& hi) {
  p.expect_ident(var);
  p.expect_ident("in");
  const Token& open = p.expect(Tok::lparen, "'('");
  lo = constant_bound(p);
  p.expect(Tok::comma, "','");
  hi = constant_bound(p);
  p.expect(Tok::rparen, "')'");
  if (!(lo < hi)) ExprParser::fail(open, "empty interval for " + var + ": lower bound must be below upper bound");
}

}  // namespace

CongruenceScene parse_scene(std::string_view text) {
  const std::vector<Token> toks = tokenize(text);
  static const char* const kKeys[] = {"name", "domain", "x", "omega", "xi", "unitize_xi"};

  std::map<std::string, Statement> statements;
  std::size_t i = 0;
  while (toks[i].kind != Tok::end) {
    if (toks[i].kind == Tok::newline) {
      ++i;
      continue;
    }
    const Token& key = toks[i];
    if (key.kind != Tok::ident) ExprParser::fail(key, "expected a key but found " + describe(key));
    bool known = false;
    for (const char* k : kKeys) known = known || key.text == k;
    if (!known) ExprParser::fail(key, "unknown key '" + key.text + "'");
    if (statements.count(key.text)) ExprParser::fail(key, "duplicate key '" + key.text + "'");
    ++i;
    if (toks[i].kind != Tok::equals) ExprParser::fail(toks[i], "expected '=' but found " + describe(toks[i]));
    ++i;
    statements[key.text] = Statement{key, i};
    while (toks[i].kind != Tok::newline && toks[i].kind != Tok::end) ++i;
  }
  const Token& eof = toks.back();

  CongruenceScene scene;
  std::optional<MovingBasis> none;
  const auto parser_for = [&](const std::string& key, const std::optional<MovingBasis>* omega) {
    return ExprParser(toks, statements.at(key).value_pos, kSurfaceVariables, omega);
  };

  if (statements.count("name")) {
    ExprParser p = parser_for("name", &none);
    scene.name = p.expect(Tok::string, "a quoted name").text;
    p.finish();
  }
  if (statements.count("domain")) {
    ExprParser p = ExprParser(toks, statements.at("domain").value_pos, {"", ""}, &none);
    parse_interval(p, "u1", scene.domain.u1_min, scene.domain.u1_max);
    p.expect(Tok::comma, "','");
    parse_interval(p, "u2", scene.domain.u2_min, scene.domain.u2_max);
    p.finish();
  }
  if (statements.count("unitize_xi")) {
    ExprParser p = parser_for("unitize_xi", &none);
    const Token& t = p.peek();
    if (t.kind != Tok::ident || (t.text != "true" && t.text != "false")) {
      ExprParser::fail(t, "expected 'true' or 'false' but found " + describe(t));
    }
    scene.unitize_xi = t.text == "true";
    p.next();
    p.finish();
  }
  if (statements.count("omega")) {
    ExprParser p = parser_for("omega", &none);
    scene.omega = p.basis();
    p.finish();
  }
  if (!statements.count("x")) throw ParseError(eof.line, eof.column, "missing required key 'x'");
  {
    ExprParser p = parser_for("x", &scene.omega);
    scene.x = p.vector();
    p.finish();
  }
  if (!statements.count("xi")) throw ParseError(eof.line, eof.column, "missing required key 'xi'");
  {
    ExprParser p = parser_for("xi", &scene.omega);
    const Token& first = p.peek();
    scene.xi = p.vector();
    p.finish();
    scene.xi_is_omega_normal = first.kind == Tok::ident && first.text == "normal" && p.used_normal();
  }
  return scene;
}

ScalarExpr parse_scalar(std::string_view text, const VariableNames& names) {
  const std::vector<Token> toks = tokenize(text);
  std::size_t start = 0;
  while (toks[start].kind == Tok::newline) ++start;
  ExprParser p(toks, start, names, nullptr);
  ScalarExpr e = p.scalar();
  std::size_t pos = p.position();
  while (toks[pos].kind == Tok::newline) ++pos;
  if (toks[pos].kind != Tok::end) ExprParser::fail(toks[pos], "unexpected " + describe(toks[pos]));
  return e;
}

VectorExpr parse_vector(std::string_view text, const VariableNames& names) {
  const std::vector<Token> toks = tokenize(text);
  std::size_t start = 0;
  while (toks[start].kind == Tok::newline) ++start;
  ExprParser p(toks, start, names, nullptr);
  VectorExpr v = p.vector();
  std::size_t pos = p.position();
  while (toks[pos].kind == Tok::newline) ++pos;
  if (toks[pos].kind != Tok::end) ExprParser::fail(toks[pos], "unexpected " + describe(toks[pos]));
  return v;
}

CongruenceScene load_scene_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open scene file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str());
}

}  // namespace linecong
