#include "wnf/wprime.hpp"

namespace wnf {

namespace {

struct Shape {
  unsigned k;  // y' run
  unsigned m;  // f run
  unsigned l;  // x' run
};

// WPRIME normal words are y'^k f^m x'^l.
Shape shape_of(const Alphabet& alph, const Word& w) {
  int gf = alph.find("f");
  int gx = alph.find("x'");
  int gy = alph.find("y'");
  Shape s{0, 0, 0};
  size_t i = 0;
  while (i < w.size() && w[i] == gy) ++i, ++s.k;
  while (i < w.size() && w[i] == gf) ++i, ++s.m;
  while (i < w.size() && w[i] == gx) ++i, ++s.l;
  if (i != w.size())
    throw DomainError("wprime_decompose: word not in normal shape: " + alph.word_str(w));
  return s;
}

}  // namespace

WPrimeDecomp wprime_decompose(const NCPoly<Rational>& p) {
  const RewriteSystem& sys = wprime();
  NCPoly<Rational> nf = normal_form(p, sys);
  const Alphabet& alph = *sys.alphabet();

  // Coefficient of f^m collected per (k, l) slot.
  std::map<std::pair<unsigned, unsigned>, Poly> fpoly;
  for (const auto& [w, c] : nf.terms()) {
    Shape s = shape_of(alph, w);
    fpoly[{s.k, s.l}] += Poly::monomial(s.m, c, "f");
  }

  // Membership in W' itself: the augmentation of the unitization kills W',
  // and on the pure-f slot it evaluates f at -1.
  auto it00 = fpoly.find({0u, 0u});
  if (it00 != fpoly.end()) {
    if (!it00->second.eval(Rational(-1)).is_zero())
      throw DomainError("wprime_decompose: element has a unit component (not in W')");
  }

  WPrimeDecomp out;
  for (auto& [kl, g] : fpoly) {
    Rational c0 = g.coeff(0);
    if (!c0.is_zero()) out.w_part[kl] = c0;
    // Remaining f-polynomial of the ideal summand: G(f) = g(f) - c0*(1 + f).
    Poly G = g - Poly(c0, "f") - Poly::monomial(1, c0, "f");
    if (G.is_zero()) continue;
    // G(f) = f * H(f) and P(t) = H(t - 1), since (x'y')^j f = f (1+f)^j.
    Poly H = G.divide_by_variable();
    Poly tm1 = Poly::variable("t") - Poly(Rational(1), "t");
    Poly P = H.compose(tm1);
    if (!P.is_zero()) out.i_part[kl] = P;
  }
  if (auto p00 = out.i_part.find({0u, 0u}); p00 != out.i_part.end()) {
    // P_00 constraint; implied by the membership check above.
    if (!p00->second.coeff(0).is_zero())
      throw DomainError("wprime_decompose: internal error, P_00 has a constant term");
  }
  return out;
}

NCPoly<Rational> wprime_ideal_word(unsigned k, unsigned l, const Poly& P) {
  const Alphabet* alph = wprime().alphabet();
  NCPoly<Rational> xp = NCPoly<Rational>::generator(alph, "x'");
  NCPoly<Rational> yp = NCPoly<Rational>::generator(alph, "y'");
  NCPoly<Rational> f = NCPoly<Rational>::generator(alph, "f");
  NCPoly<Rational> xy = xp * yp;
  NCPoly<Rational> acc = NCPoly<Rational>::zero(alph);
  for (const auto& [d, c] : P.coeffs()) {
    NCPoly<Rational> mono = NCPoly<Rational>::unit(alph);
    for (unsigned i = 0; i < d; ++i) mono *= xy;
    acc += mono * c;
  }
  NCPoly<Rational> out = NCPoly<Rational>::unit(alph);
  for (unsigned i = 0; i < k; ++i) out *= yp;
  out *= acc;
  out *= f;
  for (unsigned i = 0; i < l; ++i) out *= xp;
  return out;
}

NCPoly<Rational> wprime_splitting_word(unsigned n, unsigned m) {
  const Alphabet* alph = wprime().alphabet();
  NCPoly<Rational> xp = NCPoly<Rational>::generator(alph, "x'");
  NCPoly<Rational> yp = NCPoly<Rational>::generator(alph, "y'");
  NCPoly<Rational> f = NCPoly<Rational>::generator(alph, "f");
  NCPoly<Rational> out = NCPoly<Rational>::unit(alph);
  for (unsigned i = 0; i < n; ++i) out *= yp;
  out *= NCPoly<Rational>::unit(alph) + f;
  for (unsigned i = 0; i < m; ++i) out *= xp;
  return out;
}

NCPoly<Rational> wprime_reassemble(const WPrimeDecomp& d) {
  const Alphabet* alph = wprime().alphabet();
  NCPoly<Rational> out = NCPoly<Rational>::zero(alph);
  for (const auto& [kl, P] : d.i_part) out += wprime_ideal_word(kl.first, kl.second, P);
  for (const auto& [nm, c] : d.w_part) out += wprime_splitting_word(nm.first, nm.second) * c;
  return out;
}

}  // namespace wnf
