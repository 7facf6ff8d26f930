#include "wnf/models.hpp"

#include "wnf/presentations.hpp"

namespace wnf {

void RadMatrix::add(unsigned i, unsigned j, const Radical& v) {
  if (v.is_zero()) return;
  if (i >= dim_ || j >= dim_) throw DomainError("RadMatrix: index out of range");
  auto [it, inserted] = entries_.try_emplace(std::make_pair(i, j), v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

RadMatrix RadMatrix::identity(unsigned dim) {
  RadMatrix m(dim);
  for (unsigned i = 0; i < dim; ++i) m.add(i, i, Radical(Rational(1)));
  return m;
}

RadMatrix& RadMatrix::operator+=(const RadMatrix& o) {
  if (dim_ != o.dim_) throw DomainError("RadMatrix: dimension mismatch");
  for (const auto& [ij, v] : o.entries_) add(ij.first, ij.second, v);
  return *this;
}

RadMatrix& RadMatrix::operator-=(const RadMatrix& o) {
  if (dim_ != o.dim_) throw DomainError("RadMatrix: dimension mismatch");
  for (const auto& [ij, v] : o.entries_) add(ij.first, ij.second, -v);
  return *this;
}

RadMatrix operator*(const RadMatrix& a, const RadMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("RadMatrix: dimension mismatch");
  RadMatrix out(a.dim_);
  for (const auto& [ij, va] : a.entries_) {
    auto it = b.entries_.lower_bound({ij.second, 0});
    for (; it != b.entries_.end() && it->first.first == ij.second; ++it) {
      out.add(ij.first, it->first.second, va * it->second);
    }
  }
  return out;
}

RadMatrix RadMatrix::operator*(const Radical& s) const {
  RadMatrix out(dim_);
  for (const auto& [ij, v] : entries_) out.add(ij.first, ij.second, v * s);
  return out;
}

bool RadMatrix::equal_on_block(const RadMatrix& a, const RadMatrix& b, unsigned block) {
  return (a - b).zero_on_block(block);
}

bool RadMatrix::zero_on_block(unsigned block) const {
  for (const auto& [ij, v] : entries_) {
    if (ij.first < block && ij.second < block && !v.is_zero()) return false;
  }
  return true;
}

namespace {

RadMatrix word_rep(const Word& w, const std::vector<RadMatrix>& gen_matrices, unsigned D) {
  RadMatrix acc = RadMatrix::identity(D);
  for (uint8_t g : w) acc = acc * gen_matrices[g];
  return acc;
}

RadMatrix rep_linear(const NCPoly<Rational>& p, const std::vector<RadMatrix>& gen_matrices,
                     unsigned D) {
  RadMatrix out(D);
  for (const auto& [w, c] : p.terms()) {
    out += word_rep(w, gen_matrices, D) * Radical(c);
  }
  return out;
}

}  // namespace

RadMatrix rep_W(const NCPoly<Rational>& p, unsigned D) {
  if (D < 1) throw DomainError("rep_W: dimension must be positive");
  const Alphabet* alph = weyl().alphabet();
  if (p.alphabet() != alph) throw DomainError("rep_W: element not over the W alphabet");
  RadMatrix X(D), Y(D);
  for (unsigned n = 0; n + 1 < D; ++n) {
    Radical r = Radical::sqrt_of(Rational(long(n + 1)));
    X.add(n, n + 1, r);
    Y.add(n + 1, n, r);
  }
  std::vector<RadMatrix> gens(alph->size(), RadMatrix(D));
  gens[alph->find("x")] = X;
  gens[alph->find("y")] = Y;
  return rep_linear(p, gens, D);
}

RadMatrix rep_Wprime(const NCPoly<Rational>& p, const Rational& t0, unsigned D) {
  if (D < 1) throw DomainError("rep_Wprime: dimension must be positive");
  if (t0.sign() <= 0 || Rational(1) < t0)
    throw DomainError("rep_Wprime: base point must lie in (0, 1]");
  const Alphabet* alph = wprime().alphabet();
  if (p.alphabet() != alph) throw DomainError("rep_Wprime: element not over the W' alphabet");
  RadMatrix X(D), Y(D), F(D);
  for (unsigned n = 0; n + 1 < D; ++n) {
    Radical r = Radical::sqrt_of(t0 + Rational(long(n)));
    X.add(n, n + 1, r);
    Y.add(n + 1, n, r);
  }
  F.add(0, 0, Radical(t0 - Rational(1)));  // f acts as t - 1, supported on t < 1
  std::vector<RadMatrix> gens(alph->size(), RadMatrix(D));
  gens[alph->find("x'")] = X;
  gens[alph->find("y'")] = Y;
  gens[alph->find("f")] = F;
  return rep_linear(p, gens, D);
}

void IdealElem::add(unsigned k, unsigned l, const Poly& P) {
  if (P.is_zero()) return;
  if (k == 0 && l == 0 && !P.coeff(0).is_zero())
    throw DomainError("IdealElem: P_00 must have zero constant term");
  auto [it, inserted] = entries_.try_emplace(std::make_pair(k, l), P);
  if (!inserted) {
    it->second += P;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

IdealElem IdealElem::basis(unsigned k, unsigned l, Poly P) {
  IdealElem e;
  e.add(k, l, P);
  return e;
}

IdealElem& IdealElem::operator+=(const IdealElem& o) {
  for (const auto& [kl, P] : o.entries_) add(kl.first, kl.second, P);
  return *this;
}

IdealElem IdealElem::operator*(const Rational& c) const {
  IdealElem out;
  if (c.is_zero()) return out;
  for (const auto& [kl, P] : entries_) out.add(kl.first, kl.second, P * Poly(c));
  return out;
}

IdealElem ideal_mul(const IdealElem& a, const IdealElem& b) {
  IdealElem out;
  Poly tm1 = Poly::variable("t") - Poly(Rational(1));
  for (const auto& [kl, P] : a.entries()) {
    for (const auto& [ij, Q] : b.entries()) {
      if (kl.second != ij.first) continue;
      unsigned l = kl.second;
      out.add(kl.first, ij.second, P * Q * rising_factorial(l) * tm1);
    }
  }
  return out;
}

bool faithful_zero_test(const IdealElem& a) { return a.is_zero(); }

void KMatrix::add(unsigned i, unsigned j, const Rational& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(std::make_pair(i, j), v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

KMatrix& KMatrix::operator+=(const KMatrix& o) {
  for (const auto& [ij, v] : o.entries_) add(ij.first, ij.second, v);
  return *this;
}

KMatrix KMatrix::operator*(const Rational& c) const {
  KMatrix out;
  if (c.is_zero()) return out;
  for (const auto& [ij, v] : entries_) out.add(ij.first, ij.second, v * c);
  return out;
}

KMatrix kmatrix_mul(const KMatrix& a, const KMatrix& b) {
  KMatrix out;
  for (const auto& [ij, va] : a.entries()) {
    auto it = b.entries().lower_bound({ij.second, 0});
    for (; it != b.entries().end() && it->first.first == ij.second; ++it) {
      out.add(ij.first, it->first.second, va * it->second);
    }
  }
  return out;
}

}  // namespace wnf
