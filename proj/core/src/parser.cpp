#include "superrtt/parser.hpp"

#include <cctype>
#include <map>

#include "superrtt/errors.hpp"

namespace superrtt {

namespace {

enum class Tok { end, ident, number, plus, minus, star, slash, caret, lparen, rparen, equals };

struct Token {
  Tok kind = Tok::end;
  std::size_t offset = 0;
  std::string text;
  Rational value;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_continue(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    Token t;
    t.offset = pos_;
    if (pos_ >= s_.size()) return t;
    const unsigned char c = s_[pos_];
    if (ident_start(c)) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && ident_continue(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      t.kind = Tok::ident;
      t.text = std::string(s_.substr(b, pos_ - b));
      return t;
    }
    if (std::isdigit(c)) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num(s_.substr(b, pos_ - b));
      // int/int with no spaces is one rational literal.
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        std::size_t d = ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string den(s_.substr(d, pos_ - d));
        if (Rational(den) == 0) throw SyntaxError(d, "nonzero denominator", "division by zero");
        t.value = Rational(num + "/" + den);
      } else {
        t.value = Rational(num);
      }
      t.value.canonicalize();
      t.kind = Tok::number;
      return t;
    }
    ++pos_;
    switch (c) {
      case '+': t.kind = Tok::plus; break;
      case '-': t.kind = Tok::minus; break;
      case '*': t.kind = Tok::star; break;
      case '/': t.kind = Tok::slash; break;
      case '^': t.kind = Tok::caret; break;
      case '(': t.kind = Tok::lparen; break;
      case ')': t.kind = Tok::rparen; break;
      case '=': t.kind = Tok::equals; break;
      default:
        throw SyntaxError(t.offset, "identifier, number, operator or parenthesis",
                          std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    return t;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s) { advance(); }

  ExprPtr parse_full(bool allow_equals, ExprPtr* rhs) {
    ExprPtr e = expr();
    if (allow_equals && cur_.kind == Tok::equals) {
      advance();
      *rhs = expr();
    }
    if (cur_.kind != Tok::end) {
      throw SyntaxError(cur_.offset, allow_equals ? "operator, '=' or end of input"
                                                  : "operator or end of input",
                        "unexpected token");
    }
    return e;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  ExprPtr expr() {
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::sum;
    node->offset = cur_.offset;
    char sign = '+';
    if (cur_.kind == Tok::minus || cur_.kind == Tok::plus) {
      sign = cur_.kind == Tok::minus ? '-' : '+';
      advance();
    }
    node->children.push_back(term());
    node->ops.push_back(sign);
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      node->ops.push_back(cur_.kind == Tok::minus ? '-' : '+');
      advance();
      node->children.push_back(term());
    }
    if (node->children.size() == 1 && node->ops[0] == '+') return node->children[0];
    return node;
  }

  ExprPtr term() {
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::product;
    node->offset = cur_.offset;
    node->children.push_back(factor());
    node->ops.push_back('*');
    while (cur_.kind == Tok::star || cur_.kind == Tok::slash) {
      node->ops.push_back(cur_.kind == Tok::slash ? '/' : '*');
      advance();
      node->children.push_back(factor());
    }
    if (node->children.size() == 1) return node->children[0];
    return node;
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (cur_.kind != Tok::caret) return base;
    const std::size_t at = cur_.offset;
    advance();
    bool negative = false;
    if (cur_.kind == Tok::minus) {
      negative = true;
      advance();
    }
    if (cur_.kind != Tok::number || cur_.value.get_den() != 1) {
      throw SyntaxError(cur_.offset, "integer exponent", "bad exponent");
    }
    if (abs(cur_.value) > 1000) throw SyntaxError(cur_.offset, "exponent of at most 1000", "exponent too large");
    int e = static_cast<int>(cur_.value.get_num().get_si());
    advance();
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::power;
    node->offset = at;
    node->children.push_back(std::move(base));
    node->exponent = negative ? -e : e;
    return node;
  }

  ExprPtr atom() {
    auto node = std::make_shared<Expr>();
    node->offset = cur_.offset;
    switch (cur_.kind) {
      case Tok::ident:
        node->kind = Expr::Kind::ident;
        node->name = canonical_identifier(cur_.text);
        advance();
        return node;
      case Tok::number:
        node->kind = Expr::Kind::number;
        node->number = cur_.value;
        advance();
        return node;
      case Tok::lparen: {
        advance();
        ExprPtr inner = expr();
        if (cur_.kind != Tok::rparen) throw SyntaxError(cur_.offset, "')'", "unbalanced parenthesis");
        advance();
        return inner;
      }
      default:
        throw SyntaxError(cur_.offset, "identifier, number or '('", "expected an operand");
    }
  }

  Lexer lex_;
  Token cur_;
};

enum Prec { kSum = 0, kProduct = 1, kPower = 2, kAtom = 3 };

Prec precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::sum: return kSum;
    case Expr::Kind::product: return kProduct;
    case Expr::Kind::power: return kPower;
    case Expr::Kind::number: return e.number.get_den() == 1 ? kAtom : kProduct;
    default: return kAtom;
  }
}

std::string wrap_if(const Expr& e, bool cond) {
  std::string s = to_string(e);
  return cond ? "(" + s + ")" : s;
}

Scalar scalar_of(const Element& e, const Expr& at, const char* what) {
  if (e.is_zero()) return Scalar();
  if (e.size() != 1 || !e.terms().begin()->first.empty()) {
    throw SyntaxError(at.offset, "scalar expression", std::string(what) + " of a non-scalar");
  }
  return e.terms().begin()->second;
}

Scalar invert(const Scalar& s, const Expr& at) {
  if (s.component(kOne).is_zero()) {
    throw SyntaxError(at.offset, "invertible scalar", "division by a non-invertible scalar");
  }
  return s.inverse();
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.number != b.number || a.name != b.name || a.ops != b.ops ||
      a.exponent != b.exponent || a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!(*a.children[i] == *b.children[i])) return false;
  }
  return true;
}

ExprPtr parse_expression(std::string_view text) {
  Parser p(text);
  return p.parse_full(false, nullptr);
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
      return e.number.get_str();
    case Expr::Kind::ident:
      return e.name;
    case Expr::Kind::power:
      return wrap_if(*e.children[0], precedence(*e.children[0]) < kAtom) + "^" +
             std::to_string(e.exponent);
    case Expr::Kind::product: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const Expr& c = *e.children[i];
        if (i > 0) out += e.ops[i];
        // Products are flattened by the parser, so a nested one was parenthesised.
        const bool paren = c.kind == Expr::Kind::product || c.kind == Expr::Kind::sum;
        out += wrap_if(c, paren);
      }
      return out;
    }
    case Expr::Kind::sum: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const Expr& c = *e.children[i];
        const bool paren = precedence(c) == kSum;
        if (i == 0) {
          if (e.ops[0] == '-') out += "-";
        } else {
          out += e.ops[i] == '-' ? " - " : " + ";
        }
        out += wrap_if(c, paren);
      }
      return out;
    }
  }
  return {};
}

std::string canonical_identifier(std::string_view name) {
  static const std::map<std::string, std::string, std::less<>> kAliases = {
      {"ξ", "xi"},        {"η", "eta"},       {"β", "beta"},      {"γ", "gamma"},
      {"φ", "phi"},       {"∂x", "dx"},       {"∂ₓ", "dx"},       {"∂ξ", "dxi"},
      {"∂_ξ", "dxi"},     {"∂φ", "dphi"},     {"∂_φ", "dphi"},    {"∂u", "du"},
      {"∂_u", "du"},      {"a⁻¹", "ainv"},    {"d⁻¹", "dinv"},    {"h₁", "h1"},
      {"h₂", "h2"},
  };
  auto it = kAliases.find(name);
  return it == kAliases.end() ? std::string(name) : it->second;
}

Element evaluate(const Expr& e, const Alphabet& alphabet) {
  switch (e.kind) {
    case Expr::Kind::number:
      return Element(Scalar(e.number));
    case Expr::Kind::ident: {
      if (e.name == "p") return Element(Scalar::p());
      if (e.name == "q") return Element(Scalar::q());
      if (e.name == "h1") return Element(Scalar::h1());
      if (e.name == "h2") return Element(Scalar::h2());
      auto idx = alphabet.find(e.name);
      if (!idx) throw SyntaxError(e.offset, "generator or scalar name", "unknown identifier '" + e.name + "'");
      return Element(Word(1, make_letter(*idx, alphabet[*idx].parity)));
    }
    case Expr::Kind::power: {
      Element base = evaluate(*e.children[0], alphabet);
      if (e.exponent >= 0) return power(base, e.exponent);
      Scalar inv = invert(scalar_of(base, e, "negative power"), e);
      Scalar r(1);
      for (int i = 0; i < -e.exponent; ++i) r *= inv;
      return Element(r);
    }
    case Expr::Kind::product: {
      Element acc = evaluate(*e.children[0], alphabet);
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        Element rhs = evaluate(*e.children[i], alphabet);
        if (e.ops[i] == '/') {
          rhs = Element(invert(scalar_of(rhs, *e.children[i], "division"), *e.children[i]));
        }
        acc = acc * rhs;
      }
      return acc;
    }
    case Expr::Kind::sum: {
      Element acc;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        Element t = evaluate(*e.children[i], alphabet);
        if (e.ops[i] == '-') acc -= t;
        else acc += t;
      }
      return acc;
    }
  }
  return {};
}

Element parse_element(std::string_view text, const Alphabet& alphabet) {
  return evaluate(*parse_expression(text), alphabet);
}

Element parse_relation(std::string_view text, const Alphabet& alphabet) {
  Parser p(text);
  ExprPtr rhs;
  ExprPtr lhs = p.parse_full(true, &rhs);
  Element out = evaluate(*lhs, alphabet);
  if (rhs) out -= evaluate(*rhs, alphabet);
  return out;
}

}  // namespace superrtt
