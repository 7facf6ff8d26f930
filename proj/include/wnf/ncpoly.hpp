#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "wnf/errors.hpp"
#include "wnf/scalar.hpp"
#include "wnf/word.hpp"

namespace wnf {

inline constexpr size_t kMaxWordLength = 64;
inline constexpr size_t kMaxTermCount = 1000000;

// Finitely supported scalar combination of words over a fixed alphabet.
// This is the universal carrier for every algebra element in the artifact;
// relations are applied only by the rewrite engine.
template <class S>
class NCPoly {
 public:
  using Terms = std::map<Word, S, DeglexDescending>;

  NCPoly() : alph_(nullptr) {}
  explicit NCPoly(const Alphabet* alph) : alph_(alph) {}

  static NCPoly zero(const Alphabet* alph) { return NCPoly(alph); }
  static NCPoly unit(const Alphabet* alph) {
    return monomial(alph, Word{}, ScalarTraits<S>::from_rational(Rational(1)));
  }
  static NCPoly monomial(const Alphabet* alph, Word w, S coeff) {
    NCPoly p(alph);
    p.add(std::move(w), std::move(coeff));
    return p;
  }
  static NCPoly generator(const Alphabet* alph, const std::string& name) {
    int i = alph->find(name);
    if (i < 0) throw DomainError("no generator '" + name + "' in " + alph->name());
    return monomial(alph, Word{uint8_t(i)}, ScalarTraits<S>::from_rational(Rational(1)));
  }

  const Alphabet* alphabet() const { return alph_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  S coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S() : it->second;
  }

  // Maximal word length over the support (0 for the zero element).
  size_t degree() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }

  void add(Word w, const S& coeff) {
    if (ScalarTraits<S>::is_zero(coeff)) return;
    if (w.empty() && alph_ && !alph_->unitized())
      throw DomainError("unit term in non-unitized alphabet " + alph_->name());
    if (w.size() > kMaxWordLength)
      throw BudgetError("word length budget exceeded (" + std::to_string(w.size()) + ")");
    auto [it, inserted] = terms_.try_emplace(std::move(w), coeff);
    if (!inserted) {
      it->second += coeff;
      if (ScalarTraits<S>::is_zero(it->second)) terms_.erase(it);
    }
    if (terms_.size() > kMaxTermCount) throw BudgetError("term count budget exceeded");
  }

  NCPoly operator-() const {
    NCPoly out(alph_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
  }
  NCPoly& operator+=(const NCPoly& o) {
    require_same_alphabet(o);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    require_same_alphabet(o);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }

  NCPoly& operator*=(const S& s) {
    if (ScalarTraits<S>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    Terms out;
    for (const auto& [w, c] : terms_) {
      S v = c * s;
      if (!ScalarTraits<S>::is_zero(v)) out.emplace(w, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
  }
  friend NCPoly operator*(NCPoly a, const S& s) { return a *= s; }
  friend NCPoly operator*(const S& s, NCPoly a) {
    // Scalars are central; left and right actions agree.
    return a *= s;
  }

  // Bilinear extension of word concatenation. No relations are applied.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    a.require_same_alphabet(b);
    NCPoly out(a.alph_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) out.add(word_concat(wa, wb), ca * cb);
    return out;
  }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = a.terms_.begin();
    auto jt = b.terms_.begin();
    for (; it != a.terms_.end(); ++it, ++jt) {
      if (it->first != jt->first || !(it->second == jt->second)) return false;
    }
    return true;
  }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  template <class T, class Fn>
  NCPoly<T> map_scalars(Fn&& fn) const {
    NCPoly<T> out(alph_);
    for (const auto& [w, c] : terms_) out.add(w, fn(c));
    return out;
  }

 private:
  void require_same_alphabet(const NCPoly& o) const {
    if (alph_ != o.alph_)
      throw DomainError("alphabet mismatch between operands");
  }

  const Alphabet* alph_;
  Terms terms_;
};

// The unique multiplicative-linear extension of a generator assignment.
// Every generator occurring in p must have an image; in unitized alphabets
// the empty word maps to the target unit.
template <class S>
NCPoly<S> apply_hom(const std::vector<NCPoly<S>>& images, const Alphabet* target,
                    const NCPoly<S>& p) {
  NCPoly<S> out(target);
  for (const auto& [w, c] : p.terms()) {
    NCPoly<S> acc = NCPoly<S>::unit(target);
    for (uint8_t g : w) {
      if (g >= images.size() || images[g].alphabet() == nullptr)
        throw DomainError("apply_hom: no image for generator '" +
                          p.alphabet()->gen(g).name + "'");
      acc = acc * images[g];
    }
    out += acc * c;
  }
  return out;
}

}  // namespace wnf
