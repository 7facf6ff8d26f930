#pragma once

#include <map>
#include <utility>

#include "wnf/ncpoly.hpp"
#include "wnf/radical.hpp"
#include "wnf/upoly.hpp"

namespace wnf {

// Sparse square matrix over the radical ring; the common carrier for the
// truncated Fock-space and coset-lattice representations.
class RadMatrix {
 public:
  explicit RadMatrix(unsigned dim) : dim_(dim) {}

  unsigned dim() const { return dim_; }
  const std::map<std::pair<unsigned, unsigned>, Radical>& entries() const { return entries_; }

  Radical at(unsigned i, unsigned j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Radical() : it->second;
  }
  void add(unsigned i, unsigned j, const Radical& v);

  static RadMatrix identity(unsigned dim);

  RadMatrix& operator+=(const RadMatrix& o);
  RadMatrix& operator-=(const RadMatrix& o);
  friend RadMatrix operator+(RadMatrix a, const RadMatrix& b) { return a += b; }
  friend RadMatrix operator-(RadMatrix a, const RadMatrix& b) { return a -= b; }
  friend RadMatrix operator*(const RadMatrix& a, const RadMatrix& b);
  RadMatrix operator*(const Radical& s) const;

  friend bool operator==(const RadMatrix& a, const RadMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  bool is_zero() const { return entries_.empty(); }

  // Equality of the top-left block of size `block`.
  static bool equal_on_block(const RadMatrix& a, const RadMatrix& b, unsigned block);
  bool zero_on_block(unsigned block) const;

 private:
  unsigned dim_;
  std::map<std::pair<unsigned, unsigned>, Radical> entries_;
};

// Truncated Fock representation of W: x acts as annihilation (sqrt(n+1) at
// (n, n+1)), y as creation. Words map to products of the truncated D x D
// generator matrices, extended linearly; truncation artifacts live near the
// top index only, so multiplicativity holds on interior blocks.
RadMatrix rep_W(const NCPoly<Rational>& p, unsigned D);

// Truncated representation of W' on the lattice t0, t0+1, ..., t0+D-1 with
// t0 in (0, 1]: x' has sqrt(t0+n) at (n, n+1), y' transposed, f is diagonal
// (t0-1, 0, ..., 0). The f -> t-1 convention is forced by
// f = x'y' - y'x' - 1 in this model (see README, Conventions).
RadMatrix rep_Wprime(const NCPoly<Rational>& p, const Rational& t0, unsigned D);

// Element of the ideal I in the canonical ideal basis: entries (k, l) -> P with
// the summand y'^k P(x'y') f x'^l. P_00 has zero constant term.
class IdealElem {
 public:
  IdealElem() = default;

  static IdealElem basis(unsigned k, unsigned l, Poly P);

  const std::map<std::pair<unsigned, unsigned>, Poly>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  void add(unsigned k, unsigned l, const Poly& P);

  IdealElem& operator+=(const IdealElem& o);
  friend IdealElem operator+(IdealElem a, const IdealElem& b) { return a += b; }
  IdealElem operator*(const Rational& c) const;

  friend bool operator==(const IdealElem& a, const IdealElem& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::map<std::pair<unsigned, unsigned>, Poly> entries_;
};

// Structure-constant product in the canonical ideal basis:
//   (k,l,P) * (i,j,Q) = delta_{li} (k, j, P Q f_l(t) (t-1))
// with f_l the rising factorial; the translation of the product formula
// from the f z basis, cross-checked against the rewrite engine.
IdealElem ideal_mul(const IdealElem& a, const IdealElem& b);

// True iff all polynomial entries vanish. Agrees with rep_Wprime vanishing
// at deg(P)+2 rational base points (faithfulness of the lattice representation); the randomized
// agreement check lives in the test suite.
bool faithful_zero_test(const IdealElem& a);

// Finitely supported N x N matrix over Q: the truncation of the smooth
// compact operators.
class KMatrix {
 public:
  KMatrix() = default;

  const std::map<std::pair<unsigned, unsigned>, Rational>& entries() const { return entries_; }
  Rational at(unsigned i, unsigned j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Rational() : it->second;
  }
  void add(unsigned i, unsigned j, const Rational& v);
  bool is_zero() const { return entries_.empty(); }

  static KMatrix unit(unsigned i, unsigned j) {
    KMatrix m;
    m.add(i, j, Rational(1));
    return m;
  }

  KMatrix& operator+=(const KMatrix& o);
  friend KMatrix operator+(KMatrix a, const KMatrix& b) { return a += b; }
  KMatrix operator*(const Rational& c) const;
  friend bool operator==(const KMatrix& a, const KMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::map<std::pair<unsigned, unsigned>, Rational> entries_;
};

KMatrix kmatrix_mul(const KMatrix& a, const KMatrix& b);

}  // namespace wnf
