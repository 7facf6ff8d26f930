#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "wnf/rational.hpp"

namespace wnf {

// Element of Q[c, s] / (c^2 + s^2 - 1), the coordinate ring housing cos t
// and sin t for one homotopy parameter. Canonical form: every monomial has
// s-degree <= 1, obtained by the fixed reduction s^2 -> 1 - c^2.
class Trig {
 public:
  Trig() = default;
  Trig(const Rational& r) {  // NOLINT
    if (!r.is_zero()) terms_[{0, 0}] = r;
  }
  Trig(long n) : Trig(Rational(n)) {}  // NOLINT

  static Trig cos() { return monomial(1, 0, Rational(1)); }
  static Trig sin() { return monomial(0, 1, Rational(1)); }
  static Trig monomial(unsigned cdeg, unsigned sdeg, const Rational& coeff) {
    Trig out;
    out.add_reduced(cdeg, sdeg, coeff);
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
  }
  Rational to_rational() const {
    if (terms_.empty()) return Rational();
    if (!is_rational()) throw std::domain_error("Trig: not a constant");
    return terms_.begin()->second;
  }

  Trig operator-() const {
    Trig out;
    for (const auto& [k, v] : terms_) out.terms_[k] = -v;
    return out;
  }
  Trig& operator+=(const Trig& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
  }
  Trig& operator-=(const Trig& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
  }
  friend Trig operator+(Trig a, const Trig& b) { return a += b; }
  friend Trig operator-(Trig a, const Trig& b) { return a -= b; }

  friend Trig operator*(const Trig& a, const Trig& b) {
    Trig out;
    for (const auto& [k1, v1] : a.terms_)
      for (const auto& [k2, v2] : b.terms_)
        out.add_reduced(k1.first + k2.first, k1.second + k2.second, v1 * v2);
    return out;
  }
  Trig& operator*=(const Trig& o) { return *this = *this * o; }

  friend bool operator==(const Trig& a, const Trig& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Trig& a, const Trig& b) { return !(a == b); }

  // Evaluate at a point (c0, s0); the caller picks points on c^2 + s^2 = 1.
  Rational eval(const Rational& c0, const Rational& s0) const {
    Rational acc;
    for (const auto& [k, v] : terms_) {
      Rational m = v;
      for (unsigned i = 0; i < k.first; ++i) m *= c0;
      for (unsigned i = 0; i < k.second; ++i) m *= s0;
      acc += m;
    }
    return acc;
  }

  // t -> -t, i.e. (c, s) -> (c, -s).
  Trig negate_parameter() const {
    Trig out;
    for (const auto& [k, v] : terms_) out.terms_[k] = k.second % 2 == 1 ? -v : v;
    return out;
  }

  // t -> pi/2 - t, i.e. (c, s) -> (s, c).
  Trig swap_cos_sin() const {
    Trig out;
    for (const auto& [k, v] : terms_) out.add_reduced(k.second, k.first, v);
    return out;
  }

  // General substitution c -> for_c, s -> for_s (the caller keeps the image
  // pair on the circle when the result should stay canonical).
  Trig substitute(const Trig& for_c, const Trig& for_s) const {
    Trig out;
    for (const auto& [k, v] : terms_) {
      Trig mono(v);
      for (unsigned i = 0; i < k.first; ++i) mono *= for_c;
      for (unsigned i = 0; i < k.second; ++i) mono *= for_s;
      out += mono;
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, v] = *it;
      std::string mono;
      auto pow = [](const char* sym, unsigned d) -> std::string {
        if (d == 0) return "";
        if (d == 1) return sym;
        return std::string(sym) + "^" + std::to_string(d);
      };
      std::string vars = pow("c", k.first);
      std::string svars = pow("s", k.second);
      if (!vars.empty() && !svars.empty()) vars += "*" + svars;
      else if (!svars.empty()) vars = svars;
      if (vars.empty()) {
        mono = v.abs().str();
      } else {
        mono = v.abs().is_one() ? vars : v.abs().str() + "*" + vars;
      }
      if (out.empty()) {
        out = (v.sign() < 0 ? "-" : "") + mono;
      } else {
        out += (v.sign() < 0 ? " - " : " + ") + mono;
      }
    }
    return out;
  }

 private:
  using Key = std::pair<unsigned, unsigned>;  // (c-degree, s-degree <= 1)

  void add_term(const Key& k, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Insert c^a s^b * coeff, reducing s^2 -> 1 - c^2 until b <= 1.
  void add_reduced(unsigned a, unsigned b, const Rational& coeff) {
    if (coeff.is_zero()) return;
    if (b <= 1) {
      add_term({a, b}, coeff);
      return;
    }
    add_reduced(a, b - 2, coeff);
    add_reduced(a + 2, b - 2, -coeff);
  }

  std::map<Key, Rational> terms_;
};

}  // namespace wnf
