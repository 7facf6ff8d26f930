#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wnf/rational.hpp"

namespace wnf {

// Univariate polynomial over Q with a variable tag (display only).
// No zero coefficients are stored; the zero polynomial has degree "none".
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c, std::string var = "t") : var_(std::move(var)) {  // NOLINT
    if (!c.is_zero()) coeffs_[0] = c;
  }
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT

  static Poly variable(std::string var = "t") {
    Poly p;
    p.var_ = std::move(var);
    p.coeffs_[1] = Rational(1);
    return p;
  }
  static Poly monomial(unsigned deg, const Rational& c, std::string var = "t") {
    Poly p;
    p.var_ = std::move(var);
    if (!c.is_zero()) p.coeffs_[deg] = c;
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<unsigned> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
  }
  Rational coeff(unsigned deg) const {
    auto it = coeffs_.find(deg);
    return it == coeffs_.end() ? Rational() : it->second;
  }
  const std::map<unsigned, Rational>& coeffs() const { return coeffs_; }
  const std::string& var() const { return var_; }

  Poly operator-() const {
    Poly out;
    out.var_ = var_;
    for (const auto& [d, c] : coeffs_) out.coeffs_[d] = -c;
    return out;
  }
  Poly& operator+=(const Poly& o) {
    for (const auto& [d, c] : o.coeffs_) add_term(d, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [d, c] : o.coeffs_) add_term(d, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    out.var_ = a.coeffs_.empty() ? b.var_ : a.var_;
    for (const auto& [d1, c1] : a.coeffs_)
      for (const auto& [d2, c2] : b.coeffs_) out.add_term(d1 + d2, c1 * c2);
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Rational eval(const Rational& x) const {
    // Horner over the dense range.
    Rational acc;
    if (coeffs_.empty()) return acc;
    unsigned top = coeffs_.rbegin()->first;
    for (unsigned d = top + 1; d-- > 0;) {
      acc = acc * x + coeff(d);
    }
    return acc;
  }

  // Substitution p(q(x)).
  Poly compose(const Poly& q) const {
    Poly acc;
    acc.var_ = q.var_;
    if (coeffs_.empty()) return acc;
    unsigned top = coeffs_.rbegin()->first;
    for (unsigned d = top + 1; d-- > 0;) {
      acc = acc * q + Poly(coeff(d), q.var_);
    }
    return acc;
  }

  // Exact division by the variable; requires zero constant term.
  Poly divide_by_variable() const {
    if (!coeff(0).is_zero())
      throw std::domain_error("Poly: not divisible by the variable");
    Poly out;
    out.var_ = var_;
    for (const auto& [d, c] : coeffs_) out.coeffs_[d - 1] = c;
    return out;
  }

  // l1 norm of the coefficient vector.
  Rational l1_norm() const {
    Rational acc;
    for (const auto& [d, c] : coeffs_) acc += c.abs();
    return acc;
  }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      const auto& [d, c] = *it;
      std::string mono;
      if (d == 0) {
        mono = c.abs().str();
      } else {
        std::string pow = d == 1 ? var_ : var_ + "^" + std::to_string(d);
        mono = c.abs().is_one() ? pow : c.abs().str() + "*" + pow;
      }
      if (out.empty()) {
        out = (c.sign() < 0 ? "-" : "") + mono;
      } else {
        out += (c.sign() < 0 ? " - " : " + ") + mono;
      }
    }
    return out;
  }

 private:
  void add_term(unsigned d, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  std::string var_ = "t";
  std::map<unsigned, Rational> coeffs_;
};

// f_0 = 1, f_n(t) = t(t+1)...(t+n-1).
inline Poly rising_factorial(unsigned n, const std::string& var = "t") {
  Poly p(Rational(1), var);
  Poly t = Poly::variable(var);
  for (unsigned i = 0; i < n; ++i) p *= t + Poly(Rational(long(i)), var);
  return p;
}

}  // namespace wnf
