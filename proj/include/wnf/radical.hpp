#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "wnf/rational.hpp"

namespace wnf {

// Element of the ring Q[sqrt(2), sqrt(3), sqrt(5), ...]: a finite sum
// sum_d c_d * sqrt(d) over squarefree integers d >= 1. Radicand 1 carries
// the rational part. sqrt(p/q) is stored as sqrt(p*q)/q so radicands stay
// integral.
class Radical {
 public:
  Radical() = default;
  Radical(const Rational& r) {  // NOLINT
    if (!r.is_zero()) terms_[1] = r;
  }
  Radical(long n) : Radical(Rational(n)) {}  // NOLINT

  // sqrt of a nonnegative rational.
  static Radical sqrt_of(const Rational& r) {
    if (r.sign() < 0) throw std::domain_error("Radical: sqrt of negative rational");
    if (r.is_zero()) return Radical();
    mpz_class radicand = r.num() * r.den();
    mpz_class square = 1;
    mpz_class core = squarefree_decompose(radicand, square);
    Radical out;
    out.terms_[core] = Rational(square, r.den());
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
  }
  // Rational part (coefficient of radicand 1).
  Rational rational_part() const {
    auto it = terms_.find(mpz_class(1));
    return it == terms_.end() ? Rational() : it->second;
  }
  Rational to_rational() const {
    if (!is_rational()) throw std::domain_error("Radical: not rational");
    return rational_part();
  }

  const std::map<mpz_class, Rational>& terms() const { return terms_; }

  Radical operator-() const {
    Radical out;
    for (const auto& [d, c] : terms_) out.terms_[d] = -c;
    return out;
  }

  Radical& operator+=(const Radical& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }
  Radical& operator-=(const Radical& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
  }

  friend Radical operator+(Radical a, const Radical& b) { return a += b; }
  friend Radical operator-(Radical a, const Radical& b) { return a -= b; }

  friend Radical operator*(const Radical& a, const Radical& b) {
    Radical out;
    for (const auto& [d1, c1] : a.terms_) {
      for (const auto& [d2, c2] : b.terms_) {
        // d1, d2 squarefree: d1*d2 = g^2 * (d1/g)(d2/g) with g = gcd(d1,d2),
        // and (d1/g)(d2/g) is squarefree since the cofactors are coprime.
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
        mpz_class core = (d1 / g) * (d2 / g);
        out.add_term(core, c1 * c2 * Rational(g));
      }
    }
    return out;
  }
  Radical& operator*=(const Radical& o) { return *this = *this * o; }

  friend bool operator==(const Radical& a, const Radical& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Radical& a, const Radical& b) { return !(a == b); }

  // True iff *this = q * o for some rational q (o nonzero).
  bool is_rational_multiple_of(const Radical& o) const {
    if (o.is_zero()) return is_zero();
    if (is_zero()) return true;
    if (terms_.size() != o.terms_.size()) return false;
    Rational ratio;
    bool have_ratio = false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
      if (it->first != jt->first) return false;
      Rational r = it->second / jt->second;
      if (!have_ratio) {
        ratio = r;
        have_ratio = true;
      } else if (r != ratio) {
        return false;
      }
    }
    return true;
  }

  double to_double() const {
    double acc = 0;
    for (const auto& [d, c] : terms_) acc += c.to_double() * std::sqrt(d.get_d());
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : terms_) {
      std::string piece;
      if (d == 1) {
        piece = c.abs().str();
      } else if (c.abs().is_one()) {
        piece = "sqrt(" + d.get_str() + ")";
      } else {
        piece = c.abs().str() + "*sqrt(" + d.get_str() + ")";
      }
      if (first) {
        out = (c.sign() < 0 ? "-" : "") + piece;
        first = false;
      } else {
        out += (c.sign() < 0 ? " - " : " + ") + piece;
      }
    }
    return out;
  }

 private:
  void add_term(const mpz_class& d, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // n = core * square^2 with core squarefree; returns core. Trial division;
  // radicands in this artifact stay small (lattice points, Fock indices).
  static mpz_class squarefree_decompose(mpz_class n, mpz_class& square) {
    square = 1;
    mpz_class core = 1;
    for (mpz_class p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      unsigned exp = 0;
      while (n % p == 0) {
        n /= p;
        ++exp;
      }
      for (unsigned i = 0; i + 1 < exp; i += 2) square *= p;
      if (exp % 2 == 1) core *= p;
    }
    core *= n;  // leftover prime
    return core;
  }

  std::map<mpz_class, Rational> terms_;
};

}  // namespace wnf
