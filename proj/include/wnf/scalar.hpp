#pragma once

#include <optional>
#include <string>

#include "wnf/radical.hpp"
#include "wnf/rational.hpp"
#include "wnf/trig.hpp"
#include "wnf/upoly.hpp"

namespace wnf {

// Glue used by the generic noncommutative-polynomial code: conversion from
// rationals, zero tests, printing, and the named scalar units the parser
// may fold into coefficients ("t" for Poly, "c"/"s" for Trig).
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& s) { return s.is_zero(); }
  static std::string str(const Rational& s) { return s.str(); }
  static bool is_plain(const Rational& s) { (void)s; return true; }
  static Rational plain(const Rational& s) { return s; }
  static std::optional<Rational> named_unit(const std::string&) { return std::nullopt; }
};

template <>
struct ScalarTraits<Radical> {
  static Radical from_rational(const Rational& r) { return Radical(r); }
  static bool is_zero(const Radical& s) { return s.is_zero(); }
  static std::string str(const Radical& s) { return s.str(); }
  static bool is_plain(const Radical& s) { return s.is_rational(); }
  static Rational plain(const Radical& s) { return s.rational_part(); }
  static std::optional<Radical> named_unit(const std::string&) { return std::nullopt; }
};

template <>
struct ScalarTraits<Poly> {
  static Poly from_rational(const Rational& r) { return Poly(r); }
  static bool is_zero(const Poly& s) { return s.is_zero(); }
  static std::string str(const Poly& s) { return s.str(); }
  static bool is_plain(const Poly& s) {
    return s.is_zero() || (s.degree() && *s.degree() == 0);
  }
  static Rational plain(const Poly& s) { return s.coeff(0); }
  static std::optional<Poly> named_unit(const std::string& name) {
    if (name == "t") return Poly::variable("t");
    return std::nullopt;
  }
};

template <>
struct ScalarTraits<Trig> {
  static Trig from_rational(const Rational& r) { return Trig(r); }
  static bool is_zero(const Trig& s) { return s.is_zero(); }
  static std::string str(const Trig& s) { return s.str(); }
  static bool is_plain(const Trig& s) { return s.is_rational(); }
  static Rational plain(const Trig& s) { return s.to_rational(); }
  static std::optional<Trig> named_unit(const std::string& name) {
    if (name == "c") return Trig::cos();
    if (name == "s") return Trig::sin();
    return std::nullopt;
  }
};

}  // namespace wnf
