#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "wnf/ncpoly.hpp"

namespace wnf {

// Expression grammar (bit-exact):
//   expr     := term (('+'|'-') term)*
//   term     := signed? factor ('*' factor)*
//   factor   := atom ('^' nat)?
//   atom     := rational | ident | '(' expr ')'
//   rational := int ('/' nat)?
//   ident    := letter (letter|digit)* apostrophe*
// Multiplication is always explicit. Generators with a display alias ending
// in '*' (vstar -> "v*") are recognized when the '*' cannot start a factor.

namespace detail {

enum class Tok { kEnd, kPlus, kMinus, kStar, kCaret, kSlash, kLParen, kRParen, kNumber, kIdent };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

inline std::vector<Token> tokenize(const std::string& text, const Alphabet& alph) {
  std::vector<Token> out;
  size_t i = 0;
  auto starts_factor = [](char ch) {
    return std::isalpha(static_cast<unsigned char>(ch)) ||
           std::isdigit(static_cast<unsigned char>(ch)) || ch == '(';
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    size_t pos = i;
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      size_t j = i + 1;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])))) ++j;
      while (j < text.size() && text[j] == '\'') ++j;
      std::string name = text.substr(i, j - i);
      // Alias recognition: consume a trailing '*' when "name*" is a declared
      // alias and the '*' cannot be a multiplication sign (no factor starts
      // right after it).
      if (j < text.size() && text[j] == '*' && alph.find_alias(name + "*") >= 0) {
        size_t k = j + 1;
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
        if (k >= text.size() || !starts_factor(text[k])) {
          name = alph.gen(alph.find_alias(name + "*")).name;
          j = j + 1;
        }
      }
      out.push_back({Tok::kIdent, name, pos});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::kNumber, text.substr(i, j - i), pos});
      i = j;
      continue;
    }
    switch (ch) {
      case '+': out.push_back({Tok::kPlus, "+", pos}); break;
      case '-': out.push_back({Tok::kMinus, "-", pos}); break;
      case '*': out.push_back({Tok::kStar, "*", pos}); break;
      case '^': out.push_back({Tok::kCaret, "^", pos}); break;
      case '/': out.push_back({Tok::kSlash, "/", pos}); break;
      case '(': out.push_back({Tok::kLParen, "(", pos}); break;
      case ')': out.push_back({Tok::kRParen, ")", pos}); break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", pos);
    }
    ++i;
  }
  out.push_back({Tok::kEnd, "", text.size()});
  return out;
}

template <class S>
class Parser {
 public:
  Parser(const std::string& text, const Alphabet* alph)
      : alph_(alph), toks_(tokenize(text, *alph)) {}

  NCPoly<S> run() {
    NCPoly<S> p = expr();
    expect(Tok::kEnd, "end of input");
    return p;
  }

 private:
  const Token& cur() const { return toks_[at_]; }
  void advance() { ++at_; }
  void expect(Tok kind, const char* what) {
    if (cur().kind != kind)
      throw ParseError(std::string("expected ") + what, cur().pos);
    advance();
  }

  NCPoly<S> expr() {
    NCPoly<S> acc = term();
    while (cur().kind == Tok::kPlus || cur().kind == Tok::kMinus) {
      bool minus = cur().kind == Tok::kMinus;
      advance();
      NCPoly<S> t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  NCPoly<S> term() {
    bool neg = false;
    if (cur().kind == Tok::kMinus) {
      neg = true;
      advance();
    } else if (cur().kind == Tok::kPlus) {
      advance();
    }
    S scalar = ScalarTraits<S>::from_rational(Rational(neg ? -1 : 1));
    std::optional<NCPoly<S>> poly;
    auto fold = [&](Factor f) {
      if (f.scalar) {
        scalar *= *f.scalar;
      } else {
        poly = poly ? (*poly * f.poly) : f.poly;
      }
    };
    fold(factor());
    while (cur().kind == Tok::kStar) {
      advance();
      fold(factor());
    }
    if (!poly) {
      // Scalar-only term: requires the adjoined unit.
      return NCPoly<S>::monomial(alph_, Word{}, scalar);
    }
    return *poly * scalar;
  }

  struct Factor {
    std::optional<S> scalar;
    NCPoly<S> poly;
  };

  Factor factor() {
    Factor base = atom();
    if (cur().kind == Tok::kCaret) {
      advance();
      if (cur().kind != Tok::kNumber) throw ParseError("expected exponent", cur().pos);
      unsigned long e = std::stoul(cur().text);
      advance();
      if (base.scalar) {
        S acc = ScalarTraits<S>::from_rational(Rational(1));
        for (unsigned long i = 0; i < e; ++i) acc *= *base.scalar;
        return {acc, NCPoly<S>()};
      }
      NCPoly<S> acc = NCPoly<S>::unit(alph_);
      for (unsigned long i = 0; i < e; ++i) acc *= base.poly;
      return {std::nullopt, acc};
    }
    return base;
  }

  Factor atom() {
    if (cur().kind == Tok::kMinus) {
      // signed integer atom (the term-level sign already consumed one)
      advance();
      if (cur().kind != Tok::kNumber) throw ParseError("expected a number after '-'", cur().pos);
      Factor f = atom();
      *f.scalar *= ScalarTraits<S>::from_rational(Rational(-1));
      return f;
    }
    if (cur().kind == Tok::kNumber) {
      mpz_class num(cur().text);
      advance();
      if (cur().kind == Tok::kSlash) {
        advance();
        if (cur().kind != Tok::kNumber) throw ParseError("expected denominator", cur().pos);
        mpz_class den(cur().text);
        advance();
        if (den == 0) throw ParseError("zero denominator", cur().pos);
        return {ScalarTraits<S>::from_rational(Rational(num, den)), NCPoly<S>()};
      }
      return {ScalarTraits<S>::from_rational(Rational(num)), NCPoly<S>()};
    }
    if (cur().kind == Tok::kIdent) {
      std::string name = cur().text;
      size_t pos = cur().pos;
      advance();
      if (name == "one") {
        if (!alph_->unitized())
          throw ParseError("'one' requires a unitized alphabet", pos);
        return {std::nullopt, NCPoly<S>::unit(alph_)};
      }
      int g = alph_->find(name);
      if (g >= 0) {
        return {std::nullopt,
                NCPoly<S>::monomial(alph_, Word{uint8_t(g)},
                                    ScalarTraits<S>::from_rational(Rational(1)))};
      }
      if (auto unit = ScalarTraits<S>::named_unit(name)) return {*unit, NCPoly<S>()};
      throw UnknownGeneratorError(name, pos);
    }
    if (cur().kind == Tok::kLParen) {
      advance();
      NCPoly<S> inner = expr();
      expect(Tok::kRParen, "')'");
      return {std::nullopt, inner};
    }
    throw ParseError("expected a rational, identifier or '('", cur().pos);
  }

  const Alphabet* alph_;
  std::vector<Token> toks_;
  size_t at_ = 0;
};

}  // namespace detail

template <class S = Rational>
NCPoly<S> parse(const std::string& text, const Alphabet* alph) {
  return detail::Parser<S>(text, alph).run();
}

// Canonical printer: terms in descending deglex order, explicit '*',
// rational coefficients inline, composite scalars parenthesized.
template <class S>
std::string print(const NCPoly<S>& p) {
  if (p.is_zero()) return "0";
  const Alphabet& alph = *p.alphabet();
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    bool plain = ScalarTraits<S>::is_plain(c);
    std::string body;
    if (plain) {
      Rational r = ScalarTraits<S>::plain(c);
      std::string mag = r.abs().str();
      if (w.empty()) {
        body = mag;
      } else if (mag == "1") {
        body = alph.word_str(w);
      } else {
        body = mag + "*" + alph.word_str(w);
      }
      if (out.empty()) {
        out = (r.sign() < 0 ? "-" : "") + body;
      } else {
        out += (r.sign() < 0 ? " - " : " + ") + body;
      }
    } else {
      body = "(" + ScalarTraits<S>::str(c) + ")";
      if (!w.empty()) body += "*" + alph.word_str(w);
      out += out.empty() ? body : " + " + body;
    }
  }
  return out;
}

}  // namespace wnf
