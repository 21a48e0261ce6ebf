#include "wound/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace wound {

namespace {

enum class Tok { Num, Ident, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Num, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      while (j < s.size() && s[j] == '\'') ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, c), i});
      ++i;
    } else {
      throw InputError("unexpected character '" + std::string(1, c) + "' at column " + std::to_string(i + 1));
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const FieldPtr& field, std::span<const std::string> vars)
      : text_(text), toks_(tokenize(text)), field_(field), vars_(vars) {}

  Poly parse() {
    Poly r = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return r;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool is_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool accept(const char* s) {
    if (!is_sym(s)) return false;
    ++i_;
    return true;
  }
  void expect(const char* s) {
    if (!accept(s)) fail(std::string("expected '") + s + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("in \"" + std::string(text_) + "\" at column " + std::to_string(peek().pos + 1) + ": " + msg);
  }

  Poly expr() {
    Poly r(field_, vars_.size());
    bool negate = false;
    if (accept("-"))
      negate = true;
    else
      accept("+");
    Poly t = term();
    r += negate ? -t : t;
    while (true) {
      if (accept("+"))
        r += term();
      else if (accept("-"))
        r -= term();
      else
        return r;
    }
  }

  Poly term() {
    Poly r = factor();
    while (true) {
      if (accept("*")) {
        r = r * factor();
      } else if (accept("/")) {
        Poly d = factor();
        r = r * constant_of(d, "division").inverse();
      } else {
        return r;
      }
    }
  }

  FieldElem constant_of(const Poly& x, const char* what) const {
    if (!x.is_constant()) fail(std::string(what) + " is only defined for constants");
    FieldElem c = x.constant_term();
    if (c.is_zero()) fail(std::string(what) + " by zero");
    return c;
  }

  std::uint64_t number() {
    if (peek().kind != Tok::Num) fail("expected a number");
    const std::string s = peek().text;
    ++i_;
    if (s.size() > 18) fail("number too large");
    return std::stoull(s);
  }

  void expect_p() {
    if (peek().kind != Tok::Ident || peek().text != "p") fail("expected 'p'");
    ++i_;
  }

  Poly factor() {
    Poly base = atom();
    while (accept("^")) base = power(base);
    return base;
  }

  Poly power(const Poly& base) {
    if (accept("-")) return integer_power(base, -static_cast<std::int64_t>(number()));
    if (peek().kind == Tok::Num) return integer_power(base, static_cast<std::int64_t>(number()));
    expect("(");
    if (peek().kind == Tok::Ident && peek().text == "p") {
      ++i_;
      expect("^");
      const auto e = number();
      expect(")");
      return base.frobenius(static_cast<std::uint32_t>(e));
    }
    const bool negative = accept("-");
    const auto n = static_cast<std::int64_t>(number());
    if (accept(")")) return integer_power(base, negative ? -n : n);
    expect("/");
    expect_p();
    expect("^");
    const auto j = number();
    expect(")");
    FieldElem c = constant_of(base, "a fractional power");
    for (std::uint64_t k = 0; k < j; ++k) {
      auto r = pth_root(c);
      if (!r) fail(c.to_string() + " has no p^" + std::to_string(j) + "-th root at depth " + std::to_string(field_->depth()));
      c = *r;
    }
    return Poly::constant(c.pow(negative ? -n : n), vars_.size());
  }

  Poly integer_power(const Poly& base, std::int64_t n) {
    if (n >= 0) return base.pow(static_cast<std::uint64_t>(n));
    return Poly::constant(constant_of(base, "a negative power").pow(n), vars_.size());
  }

  Poly atom() {
    const Token t = peek();
    if (t.kind == Tok::Num) {
      ++i_;
      std::int64_t v = 0;
      const std::int64_t p = field_->p();
      for (char ch : t.text) v = (v * 10 + (ch - '0')) % p;
      return Poly::constant(FieldElem::constant(field_, v), vars_.size());
    }
    if (t.kind == Tok::Ident) {
      ++i_;
      for (std::size_t k = 0; k < vars_.size(); ++k)
        if (vars_[k] == t.text) return Poly::variable(field_, vars_.size(), k);
      const auto& spec = field_->spec();
      if (t.text == spec.gen) return Poly::constant(FieldElem::gen_root(field_, 0), vars_.size());
      if (spec.e > 1 && t.text == spec.fq_symbol)
        return Poly::constant(FieldElem::from_fq(field_, field_->fq().primitive()), vars_.size());
      --i_;
      fail("unknown symbol '" + t.text + "'");
    }
    if (accept("(")) {
      Poly r = expr();
      expect(")");
      return r;
    }
    fail(t.kind == Tok::End ? "unexpected end of expression" : "unexpected '" + t.text + "'");
  }

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
  FieldPtr field_;
  std::span<const std::string> vars_;
};

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s[0])) return false;
  std::size_t i = 1;
  while (i < s.size() && ident_char(s[i])) ++i;
  while (i < s.size() && s[i] == '\'') ++i;
  return i == s.size();
}

Poly parse_poly(std::string_view text, const FieldPtr& field, std::span<const std::string> vars) {
  return Parser(text, field, vars).parse();
}

FieldElem parse_field_elem(std::string_view text, const FieldPtr& field) {
  Poly p = parse_poly(text, field, {});
  return p.constant_term();
}

PPoly parse_ppoly(std::string_view text, const FieldPtr& field, std::span<const std::string> vars) {
  auto r = ppoly_from_poly(parse_poly(text, field, vars));
  if (!r) throw InputError("\"" + std::string(text) + "\" is not a p-polynomial");
  return *r;
}

ParamPPoly parse_param_ppoly(std::string_view text, const FieldPtr& field, std::span<const std::string> vars,
                             std::span<const std::string> params) {
  std::vector<std::string> all(vars.begin(), vars.end());
  all.insert(all.end(), params.begin(), params.end());
  auto r = param_ppoly_from_poly(parse_poly(text, field, all), vars.size());
  if (!r) throw InputError("\"" + std::string(text) + "\" is not a p-polynomial in " + std::to_string(vars.size()) + " variables");
  return *r;
}

}  // namespace wound
