#pragma once

#include <map>

#include "wnf/presentations.hpp"
#include "wnf/rewrite.hpp"

namespace wnf {

// T = K + C^inf(S^1) on normal forms: matrix part spans the e-containing
// words e_ij = v^i e (v*)^j, the Laurent part spans v^k, (v*)^k and 1.
template <class S>
struct ToeplitzSplit {
  std::map<std::pair<unsigned, unsigned>, S> matrix;
  std::map<int, S> laurent;
};

template <class S>
ToeplitzSplit<S> toeplitz_split(const NCPoly<S>& p) {
  const RewriteSystem& sys = toeplitz();
  NCPoly<S> nf = normal_form(p, sys);
  const Alphabet& alph = *sys.alphabet();
  int gv = alph.find("v");
  int gs = alph.find("vstar");
  int ge = alph.find("e");
  ToeplitzSplit<S> out;
  for (const auto& [w, c] : nf.terms()) {
    size_t i = 0;
    unsigned nv = 0, ns = 0;
    bool has_e = false;
    while (i < w.size() && w[i] == gv) ++i, ++nv;
    if (i < w.size() && w[i] == ge) ++i, has_e = true;
    while (i < w.size() && w[i] == gs) ++i, ++ns;
    if (i != w.size())
      throw DomainError("toeplitz_split: word not in normal shape: " + alph.word_str(w));
    if (has_e) {
      auto [it, inserted] = out.matrix.try_emplace({nv, ns}, c);
      if (!inserted) it->second += c;
    } else if (nv > 0 && ns > 0) {
      throw DomainError("toeplitz_split: mixed shift word escaped reduction");
    } else {
      int k = nv > 0 ? int(nv) : -int(ns);
      auto [it, inserted] = out.laurent.try_emplace(k, c);
      if (!inserted) it->second += c;
    }
  }
  return out;
}

// e_ij = v^i e (v*)^j as a monomial.
template <class S = Rational>
NCPoly<S> toeplitz_unit(unsigned i, unsigned j) {
  const Alphabet* alph = toeplitz().alphabet();
  Word w;
  for (unsigned a = 0; a < i; ++a) w.push_back(uint8_t(alph->find("v")));
  w.push_back(uint8_t(alph->find("e")));
  for (unsigned a = 0; a < j; ++a) w.push_back(uint8_t(alph->find("vstar")));
  return NCPoly<S>::monomial(alph, std::move(w), ScalarTraits<S>::from_rational(Rational(1)));
}

template <class S>
NCPoly<S> toeplitz_reassemble(const ToeplitzSplit<S>& split) {
  const Alphabet* alph = toeplitz().alphabet();
  NCPoly<S> out(alph);
  for (const auto& [ij, c] : split.matrix) {
    Word w;
    for (unsigned a = 0; a < ij.first; ++a) w.push_back(uint8_t(alph->find("v")));
    w.push_back(uint8_t(alph->find("e")));
    for (unsigned a = 0; a < ij.second; ++a) w.push_back(uint8_t(alph->find("vstar")));
    out.add(std::move(w), c);
  }
  for (const auto& [k, c] : split.laurent) {
    Word w;
    if (k > 0)
      for (int a = 0; a < k; ++a) w.push_back(uint8_t(alph->find("v")));
    else
      for (int a = 0; a < -k; ++a) w.push_back(uint8_t(alph->find("vstar")));
    out.add(std::move(w), c);
  }
  return out;
}

}  // namespace wnf
