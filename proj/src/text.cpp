#include "chw/text.hpp"

#include <cctype>
#include <limits>

#include "chw/error.hpp"

namespace chw {

std::vector<std::string> default_variable_names(const Ambient& amb) {
  std::vector<std::string> names;
  for (int i = 0; i < amb.n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (int e = 0; e < amb.extra; ++e)
    names.push_back(amb.extra == 1 ? std::string("z") : "z" + std::to_string(e + 1));
  return names;
}

namespace {

constexpr long kMaxExponent = 1L << 30;
constexpr long kMaxRepeatedPower = 4096;

struct Token {
  enum Kind { Number, Ident, Op, End } kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(ch)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Number, std::string(s.substr(start, i - start)), start + 1});
    } else if (std::isalpha(ch) || ch == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::Ident, std::string(s.substr(start, i - start)), start + 1});
    } else if (std::string_view("+-*/^()").find(static_cast<char>(ch)) != std::string_view::npos) {
      out.push_back({Token::Op, std::string(1, static_cast<char>(ch)), start + 1});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(ch) + "'", start + 1);
    }
  }
  out.push_back({Token::End, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Ambient& amb, const std::vector<std::string>& names)
      : toks_(tokenize(text)), amb_(amb), names_(names) {}

  LaurentPoly parse() {
    if (peek().kind == Token::End) throw ParseError("empty expression", 1);
    LaurentPoly r = expr();
    if (peek().kind != Token::End) throw ParseError("unexpected '" + peek().text + "'", peek().column);
    return r;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is_op(char c) const { return peek().kind == Token::Op && peek().text[0] == c; }
  const Token& take() { return toks_[pos_++]; }

  LaurentPoly expr() {
    LaurentPoly acc = term();
    while (is_op('+') || is_op('-')) {
      bool minus = take().text[0] == '-';
      LaurentPoly t = term();
      if (minus) acc -= t;
      else acc += t;
    }
    return acc;
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    while (is_op('*') || is_op('/')) {
      const Token& op = take();
      std::size_t col = peek().column;
      LaurentPoly rhs = factor();
      if (op.text[0] == '*') {
        acc = acc * rhs;
      } else {
        acc = acc * invert(rhs, col);
      }
    }
    return acc;
  }

  LaurentPoly factor() {
    if (is_op('-')) {
      take();
      return -factor();
    }
    if (is_op('+')) {
      take();
      return factor();
    }
    std::size_t base_col = peek().column;
    LaurentPoly base = primary();
    if (is_op('^')) {
      take();
      long e = signed_integer();
      return raise(base, e, base_col);
    }
    return base;
  }

  long signed_integer() {
    bool paren = false;
    if (is_op('(')) {
      take();
      paren = true;
    }
    bool negative = false;
    if (is_op('-') || is_op('+')) negative = take().text[0] == '-';
    const Token& t = peek();
    if (t.kind != Token::Number) throw ParseError("expected integer exponent", t.column);
    take();
    if (t.text.size() > 10) throw ParseError("exponent overflow", t.column);
    long v = std::stol(t.text);
    if (v > kMaxExponent) throw ParseError("exponent overflow", t.column);
    if (paren) {
      if (!is_op(')')) throw ParseError("expected ')'", peek().column);
      take();
    }
    return negative ? -v : v;
  }

  LaurentPoly primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Number: {
        take();
        return LaurentPoly::constant(amb_, Rational(mpq_class(mpz_class(t.text, 10))));
      }
      case Token::Ident: {
        take();
        if (t.text == "k") return LaurentPoly::constant(amb_, RationalFunction::kappa());
        for (std::size_t i = 0; i < names_.size(); ++i)
          if (names_[i] == t.text) return LaurentPoly::variable(amb_, static_cast<int>(i));
        throw ParseError("unknown variable '" + t.text + "'", t.column);
      }
      case Token::Op:
        if (t.text[0] == '(') {
          take();
          LaurentPoly inner = expr();
          if (!is_op(')')) throw ParseError("expected ')'", peek().column);
          take();
          return inner;
        }
        throw ParseError("unexpected '" + t.text + "'", t.column);
      case Token::End:
        break;
    }
    throw ParseError("unexpected end of input", t.column);
  }

  LaurentPoly invert(const LaurentPoly& p, std::size_t col) {
    if (p.is_zero()) throw ParseError("division by zero", col);
    if (!p.is_monomial()) throw ParseError("division by a non-monomial", col);
    const auto& [e, c] = *p.terms().begin();
    Exponent neg = e;
    for (auto& v : neg) v = -v;
    return LaurentPoly::monomial(amb_, neg, c.inv());
  }

  LaurentPoly raise(const LaurentPoly& base, long e, std::size_t col) {
    if (base.is_monomial()) {
      const auto& [ex, c] = *base.terms().begin();
      Exponent out = ex;
      for (auto& v : out) {
        long r = static_cast<long>(v) * e;
        if (r > kMaxExponent || r < -kMaxExponent) throw ParseError("exponent overflow", col);
        v = static_cast<int>(r);
      }
      RationalFunction cc = 1;
      RationalFunction b = e < 0 ? c.inv() : c;
      for (long i = 0; i < (e < 0 ? -e : e); ++i) {
        cc *= b;
        if (i > kMaxRepeatedPower) throw ParseError("exponent overflow", col);
      }
      return LaurentPoly::monomial(amb_, out, cc);
    }
    if (e < 0) throw ParseError("negative power of a non-monomial", col);
    if (e > kMaxRepeatedPower) throw ParseError("exponent overflow", col);
    LaurentPoly r = LaurentPoly::constant(amb_, 1);
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Ambient amb_;
  const std::vector<std::string>& names_;
};

std::string monomial_text(const Exponent& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

LaurentPoly parse_laurent(std::string_view text, const Ambient& amb) {
  return parse_laurent(text, amb, default_variable_names(amb));
}

LaurentPoly parse_laurent(std::string_view text, const Ambient& amb,
                          const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != amb.nvars()) throw DomainError("variable name count mismatch");
  return Parser(text, amb, names).parse();
}

RationalFunction parse_rational_function(std::string_view text) {
  Ambient amb = Ambient::gl(1);
  static const std::vector<std::string> none{"__none__"};
  LaurentPoly p = Parser(text, amb, none).parse();
  if (p.is_zero()) return RationalFunction();
  if (p.size() != 1 || p.terms().begin()->first != Exponent{0})
    throw ParseError("not a scalar expression in k");
  return p.terms().begin()->second;
}

std::string format_laurent(const LaurentPoly& p) {
  return format_laurent(p, default_variable_names(p.ambient()));
}

std::string format_laurent(const LaurentPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_text(e, names);
    bool negative = false;
    std::string body;
    if (c.is_monomial()) {
      negative = c.monomial_sign() < 0;
      RationalFunction a = negative ? -c : c;
      if (mono.empty()) body = a.str();
      else if (a.is_one()) body = mono;
      else body = a.str() + "*" + mono;
    } else {
      body = "(" + c.str() + ")";
      if (!mono.empty()) body += "*" + mono;
    }
    if (out.empty()) out = (negative ? "-" : "") + body;
    else out += (negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace chw
