#include "conjcount/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace conjcount {

namespace {

enum class Tok {
  Number,   // integer or p/q, possibly with i suffix
  Ident,    // z, z2, zbar, zbar2, conj, i
  Plus,
  Minus,
  Star,
  Caret,
  LParen,
  RParen,
  Semicolon,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  bool imaginary = false;  // number carried an i suffix
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        // Newlines separate statements, like semicolons.
        tok_ = make(Tok::Semicolon, "\n");
        ++pos_;
        ++line_;
        col_ = 1;
        return;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++col_;
        continue;
      }
      break;
    }
    if (pos_ >= src_.size()) {
      tok_ = make(Tok::End, "");
      return;
    }
    const char c = src_[pos_];
    switch (c) {
      case '+': tok_ = take(Tok::Plus); return;
      case '-': tok_ = take(Tok::Minus); return;
      case '*': tok_ = take(Tok::Star); return;
      case '^': tok_ = take(Tok::Caret); return;
      case '(': tok_ = take(Tok::LParen); return;
      case ')': tok_ = take(Tok::RParen); return;
      case ';': tok_ = take(Tok::Semicolon); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Token t = make(Tok::Number, "");
      std::string text;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        consume(text);
      if (pos_ < src_.size() && src_[pos_] == '/') {
        consume(text);
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
          throw SyntaxError(line_, col_, "expected digits after '/'");
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          consume(text);
      }
      if (pos_ < src_.size() && src_[pos_] == 'i') {
        ++pos_;
        ++col_;
        t.imaginary = true;
      }
      t.text = std::move(text);
      tok_ = t;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      Token t = make(Tok::Ident, "");
      std::string text;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_]))))
        consume(text);
      t.text = std::move(text);
      tok_ = t;
      return;
    }
    throw SyntaxError(line_, col_, std::string("unexpected character '") + c + "'");
  }

  Token make(Tok k, std::string text) const {
    return Token{k, std::move(text), false, line_, col_};
  }
  Token take(Tok k) {
    Token t = make(k, std::string(1, src_[pos_]));
    ++pos_;
    ++col_;
    return t;
  }
  void consume(std::string& into) {
    into.push_back(src_[pos_]);
    ++pos_;
    ++col_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

struct VarRef {
  bool conjugated;
  std::size_t index;  // zero-based
  bool bare;          // written without an index digit
};

// Classifies an identifier as a variable reference; "i" is handled by the
// caller as an imaginary literal.
std::optional<VarRef> classify_var(const std::string& name) {
  std::string_view s = name;
  bool conj = false;
  if (s.rfind("zbar", 0) == 0) {
    conj = true;
    s.remove_prefix(4);
  } else if (s.rfind("z", 0) == 0) {
    s.remove_prefix(1);
  } else {
    return std::nullopt;
  }
  if (s.empty()) return VarRef{conj, 0, true};
  std::size_t idx = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    idx = idx * 10 + static_cast<std::size_t>(c - '0');
  }
  if (idx == 0) return std::nullopt;
  return VarRef{conj, idx - 1, false};
}

// Scans the token stream for variable usage to fix r before building
// polynomials, and enforces the no-mixing rule.
std::size_t scan_arity(std::string_view text) {
  Lexer lex(text);
  bool saw_bare = false, saw_indexed = false;
  std::size_t max_index = 0;
  while (lex.peek().kind != Tok::End) {
    Token t = lex.next();
    if (t.kind != Tok::Ident || t.text == "i" || t.text == "conj") continue;
    auto v = classify_var(t.text);
    if (!v)
      throw SyntaxError(t.line, t.col, "unknown identifier '" + t.text + "'");
    if (v->bare)
      saw_bare = true;
    else {
      saw_indexed = true;
      max_index = std::max(max_index, v->index + 1);
    }
  }
  if (saw_bare && saw_indexed)
    throw ArityError("mixed bare z and indexed z1..zr variables");
  if (saw_indexed) return max_index;
  return 1;  // bare z, or constants only
}

class Parser {
 public:
  Parser(std::string_view src, std::size_t r) : lex_(src), r_(r) {}

  // expr := term (('+'|'-') term)*
  GenPoly parse_expr() {
    GenPoly acc = parse_term();
    while (true) {
      if (lex_.peek().kind == Tok::Plus) {
        lex_.next();
        acc += parse_term();
      } else if (lex_.peek().kind == Tok::Minus) {
        lex_.next();
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  bool at_end() const { return lex_.peek().kind == Tok::End; }
  bool at_separator() const { return lex_.peek().kind == Tok::Semicolon; }
  void skip_separator() { lex_.next(); }
  const Token& peek() const { return lex_.peek(); }

 private:
  // term := unary ('*' unary)*
  GenPoly parse_term() {
    GenPoly acc = parse_unary();
    while (lex_.peek().kind == Tok::Star) {
      lex_.next();
      acc = acc * parse_unary();
    }
    return acc;
  }

  GenPoly parse_unary() {
    if (lex_.peek().kind == Tok::Minus) {
      lex_.next();
      return -parse_unary();
    }
    if (lex_.peek().kind == Tok::Plus) {
      lex_.next();
      return parse_unary();
    }
    return parse_power();
  }

  // power := atom ('^' exponent)?
  GenPoly parse_power() {
    GenPoly base = parse_atom();
    if (lex_.peek().kind != Tok::Caret) return base;
    lex_.next();
    Token e = lex_.peek();
    if (e.kind != Tok::Number || e.imaginary ||
        e.text.find('/') != std::string::npos)
      throw SyntaxError(e.line, e.col, "expected a non-negative integer exponent");
    lex_.next();
    unsigned long exp = 0;
    try {
      exp = std::stoul(e.text);
    } catch (const std::out_of_range&) {
      exp = ~0UL;
    }
    if (exp > 64)
      throw SyntaxError(e.line, e.col, "exponent too large");
    return base.pow(static_cast<std::uint32_t>(exp));
  }

  GenPoly parse_atom() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Number: {
        lex_.next();
        Rational q = rational_from_string(t.text);
        return GenPoly::constant(
            r_, t.imaginary ? GaussianRational(Rational(0), q) : GaussianRational(q));
      }
      case Tok::LParen: {
        lex_.next();
        GenPoly inner = parse_expr();
        expect(Tok::RParen, ")");
        return inner;
      }
      case Tok::Ident: {
        if (t.text == "i") {
          lex_.next();
          return GenPoly::constant(r_, GaussianRational::i());
        }
        if (t.text == "conj") {
          lex_.next();
          expect(Tok::LParen, "(");
          Token v = lex_.peek();
          auto var = v.kind == Tok::Ident ? classify_var(v.text) : std::nullopt;
          if (!var || var->conjugated)
            throw SyntaxError(v.line, v.col,
                              "conj() expects a bare z variable; expand "
                              "conjugates of expressions manually");
          lex_.next();
          expect(Tok::RParen, ")");
          return GenPoly::variable_w(r_, var->index);
        }
        auto var = classify_var(t.text);
        if (!var)
          throw SyntaxError(t.line, t.col, "unknown identifier '" + t.text + "'");
        lex_.next();
        return var->conjugated ? GenPoly::variable_w(r_, var->index)
                               : GenPoly::variable_z(r_, var->index);
      }
      default:
        throw SyntaxError(t.line, t.col, "expected a number, variable or '('");
    }
  }

  void expect(Tok kind, const std::string& what) {
    Token t = lex_.peek();
    if (t.kind != kind)
      throw SyntaxError(t.line, t.col, "expected '" + what + "'");
    lex_.next();
  }

  Lexer lex_;
  std::size_t r_;
};

}  // namespace

ConjSystem parse_system(std::string_view text) {
  const std::size_t r = scan_arity(text);
  Parser parser(text, r);
  ConjSystem sys;
  sys.num_vars = r;
  while (!parser.at_end()) {
    if (parser.at_separator()) {
      parser.skip_separator();
      continue;
    }
    GenPoly p = parser.parse_expr();
    if (!parser.at_end() && !parser.at_separator()) {
      const Token& t = parser.peek();
      throw SyntaxError(t.line, t.col, "unexpected '" + t.text + "'");
    }
    sys.polys.push_back(std::move(p));
  }
  if (sys.polys.empty())
    throw SyntaxError(1, 1, "empty system");
  return sys;
}

GenPoly parse_poly(std::string_view text) {
  ConjSystem sys = parse_system(text);
  if (sys.polys.size() != 1)
    throw SyntaxError(1, 1, "expected a single polynomial");
  return sys.polys.front();
}

GaussianRational parse_gaussian(std::string_view text) {
  GenPoly p = parse_poly(text);
  if (!p.is_constant())
    throw SyntaxError(1, 1, "expected a constant expression");
  return p.is_zero() ? GaussianRational(0) : p.leading_coeff();
}

std::string to_input_string(const GenPoly& p) {
  return p.str(VarStyle::ZConj);
}

}  // namespace conjcount
