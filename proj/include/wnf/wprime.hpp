#pragma once

#include <map>
#include <utility>

#include "wnf/presentations.hpp"
#include "wnf/rewrite.hpp"
#include "wnf/upoly.hpp"

namespace wnf {

// Decomposition of a W' element in the unitized normal basis y'^k f^m x'^l:
//
//   p = sum_{k,l} y'^k P_kl(x'y') f x'^l  +  sum_{n,m} c_nm y'^n (1+f) x'^m
//
// The first sum is the ideal part in the canonical ideal basis (P_00 has zero
// constant term); the second runs over the splitting s(y^n x^m) =
// y'^n (1+f) x'^m of the quotient Weyl algebra.
struct WPrimeDecomp {
  std::map<std::pair<unsigned, unsigned>, Poly> i_part;
  std::map<std::pair<unsigned, unsigned>, Rational> w_part;

  bool ideal_only() const { return w_part.empty(); }
};

// Unique decomposition of an element of W' (not of the unitization: a stray
// unit component raises DomainError). The input is reduced first.
WPrimeDecomp wprime_decompose(const NCPoly<Rational>& p);

// Inverse of wprime_decompose up to reduction: rebuilds the element as free
// words over the W' alphabet.
NCPoly<Rational> wprime_reassemble(const WPrimeDecomp& d);

// y'^k P(x'y') f x'^l as free words (P expanded at the word level).
NCPoly<Rational> wprime_ideal_word(unsigned k, unsigned l, const Poly& P);

// s(y^n x^m) = y'^n (1+f) x'^m as free words.
NCPoly<Rational> wprime_splitting_word(unsigned n, unsigned m);

}  // namespace wnf
