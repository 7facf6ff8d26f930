#include "wnf/tensor.hpp"

#include <algorithm>

#include "wnf/wprime.hpp"

namespace wnf {

namespace {

// Tensor generator names spell the base word with apostrophes mapped to 'p'
// ("x'" -> "xp"), prefixed by 'T'; the empty base word becomes "Tone".
std::string tensor_gen_name(const Alphabet& base, const Word& w) {
  if (w.empty()) return "Tone";
  std::string out = "T";
  for (uint8_t g : w) {
    for (char ch : base.gen(g).name) out += ch == '\'' ? 'p' : ch;
  }
  return out;
}

std::vector<Word> enumerate_basis(const RewriteSystem& base, unsigned basis_degree) {
  std::vector<Word> out;
  std::vector<Word> frontier{Word{}};
  if (base.alphabet()->unitized()) out.push_back(Word{});
  for (unsigned len = 1; len <= basis_degree; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (size_t g = 0; g < base.alphabet()->size(); ++g) {
        Word ext = w;
        ext.push_back(uint8_t(g));
        if (base.is_normal_word(ext)) {
          out.push_back(ext);
          next.push_back(ext);
        }
      }
    }
    frontier = std::move(next);
  }
  // Irreducibility is suffix-closed for our length-2 rules, but enumerate
  // defensively: a reducible word never extends to an irreducible one only
  // when every rule lhs has length <= 2, which holds for all builtins.
  return out;
}

}  // namespace

TensorAlgebra::TensorAlgebra(const RewriteSystem* base, unsigned truncation,
                             unsigned basis_degree)
    : base_(base), trunc_(truncation), basis_degree_(basis_degree),
      basis_(enumerate_basis(*base, basis_degree)) {
  std::vector<Generator> gens;
  gens.reserve(basis_.size());
  for (size_t i = 0; i < basis_.size(); ++i) {
    index_[basis_[i]] = int(i);
    gens.push_back({tensor_gen_name(*base->alphabet(), basis_[i]), ""});
  }
  alph_ = std::make_unique<Alphabet>("tensor(" + base->name() + ")", std::move(gens), false);
}

int TensorAlgebra::gen_of(const Word& base_word) const {
  auto it = index_.find(base_word);
  return it == index_.end() ? -1 : it->second;
}

NCPoly<Rational> TensorAlgebra::sigma_word(const Word& base_word) const {
  int g = gen_of(base_word);
  if (g < 0)
    throw DomainError("tensor: base word outside the enumerated basis: " +
                      base_->alphabet()->word_str(base_word));
  return NCPoly<Rational>::monomial(alph_.get(), Word{uint8_t(g)}, Rational(1));
}

NCPoly<Rational> TensorAlgebra::sigma(const NCPoly<Rational>& base_elem) const {
  NCPoly<Rational> nf = normal_form(base_elem, *base_);
  NCPoly<Rational> out(alph_.get());
  for (const auto& [w, c] : nf.terms()) out += sigma_word(w) * c;
  return out;
}

void TensorAlgebra::check_truncation(const NCPoly<Rational>& t) const {
  if (t.degree() > trunc_)
    throw BudgetError("tensor: truncation degree " + std::to_string(trunc_) + " exceeded");
}

NCPoly<Rational> TensorAlgebra::mul(const NCPoly<Rational>& a, const NCPoly<Rational>& b) const {
  NCPoly<Rational> out = a * b;
  check_truncation(out);
  return out;
}

NCPoly<Rational> TensorAlgebra::curvature(const Word& a, const Word& b) const {
  NCPoly<Rational> prod = NCPoly<Rational>::monomial(base_->alphabet(), word_concat(a, b),
                                                     Rational(1));
  return sigma(prod) - mul(sigma_word(a), sigma_word(b));
}

NCPoly<Rational> TensorAlgebra::pi_multiply(const NCPoly<Rational>& t) const {
  if (t.alphabet() != alph_.get()) throw DomainError("pi_multiply: not a tensor element");
  NCPoly<Rational> out(base_->alphabet());
  for (const auto& [w, c] : t.terms()) {
    Word collapsed;
    for (uint8_t g : w) {
      const Word& bw = basis_[g];
      collapsed.insert(collapsed.end(), bw.begin(), bw.end());
    }
    out.add(std::move(collapsed), c);
  }
  return normal_form(out, *base_);
}

const SplitExtension& fundamental_extension() {
  static SplitExtension ext = [] {
    SplitExtension e;
    e.total = &wprime();
    e.quotient = &weyl();
    const Alphabet* Wp = wprime().alphabet();
    const Alphabet* W = weyl().alphabet();
    e.projection.assign(Wp->size(), NCPoly<Rational>());
    e.projection[Wp->find("x'")] = NCPoly<Rational>::generator(W, "x");
    e.projection[Wp->find("y'")] = NCPoly<Rational>::generator(W, "y");
    e.projection[Wp->find("f")] = parse("x*y - y*x - 1", W);
    e.splitting = [](const Word& w) {
      // W basis words are y^n x^m; count the blocks.
      const Alphabet* base = weyl().alphabet();
      unsigned n = 0, m = 0;
      size_t i = 0;
      int gy = base->find("y"), gx = base->find("x");
      while (i < w.size() && w[i] == gy) ++i, ++n;
      while (i < w.size() && w[i] == gx) ++i, ++m;
      if (i != w.size()) throw DomainError("splitting: not a W basis word");
      return wprime_splitting_word(n, m);
    };
    return e;
  }();
  return ext;
}

const SplitExtension& toeplitz_extension() {
  static SplitExtension ext = [] {
    SplitExtension e;
    e.total = &toeplitz();
    e.quotient = &laurent();
    const Alphabet* T = toeplitz().alphabet();
    const Alphabet* L = laurent().alphabet();
    e.projection.assign(T->size(), NCPoly<Rational>());
    e.projection[T->find("v")] = NCPoly<Rational>::generator(L, "z");
    e.projection[T->find("vstar")] = NCPoly<Rational>::generator(L, "zinv");
    e.projection[T->find("e")] = parse("1 - z*zinv", L);
    e.splitting = [](const Word& w) {
      const Alphabet* base = laurent().alphabet();
      const Alphabet* tot = toeplitz().alphabet();
      unsigned k = 0, j = 0;
      size_t i = 0;
      int gz = base->find("z"), gzi = base->find("zinv");
      while (i < w.size() && w[i] == gz) ++i, ++k;
      while (i < w.size() && w[i] == gzi) ++i, ++j;
      if (i != w.size() || (k > 0 && j > 0))
        throw DomainError("splitting: not a Laurent basis word");
      Word img;
      for (unsigned a = 0; a < k; ++a) img.push_back(uint8_t(tot->find("v")));
      for (unsigned a = 0; a < j; ++a) img.push_back(uint8_t(tot->find("vstar")));
      return NCPoly<Rational>::monomial(tot, std::move(img), Rational(1));
    };
    return e;
  }();
  return ext;
}

NCPoly<Rational> tau_lift(const SplitExtension& ext, const TensorAlgebra& tensors,
                          const NCPoly<Rational>& t,
                          const std::optional<std::vector<NCPoly<Rational>>>& precompose) {
  if (t.alphabet() != tensors.alphabet()) throw DomainError("tau: not a tensor element");
  if (!precompose && tensors.base().alphabet() != ext.quotient->alphabet())
    throw DomainError("tau: tensor base does not match the extension quotient");
  tensors.check_truncation(t);
  NCPoly<Rational> out(ext.total->alphabet());
  for (const auto& [w, c] : t.terms()) {
    NCPoly<Rational> acc = NCPoly<Rational>::unit(ext.total->alphabet());
    for (uint8_t g : w) {
      NCPoly<Rational> base_elem = NCPoly<Rational>::monomial(
          tensors.base().alphabet(), tensors.word_of(g), Rational(1));
      if (precompose)
        base_elem = normal_form(apply_hom(*precompose, ext.quotient->alphabet(), base_elem),
                                *ext.quotient);
      // s extended linearly over the (reduced) image.
      NCPoly<Rational> split(ext.total->alphabet());
      for (const auto& [bw, bc] : base_elem.terms()) split += ext.splitting(bw) * bc;
      acc = acc * split;
    }
    out += acc * c;
  }
  return normal_form(out, *ext.total);
}

NCPoly<Rational> classifying_map(const SplitExtension& ext, const TensorAlgebra& tensors,
                                 const NCPoly<Rational>& t,
                                 const std::optional<std::vector<NCPoly<Rational>>>& precompose) {
  if (!tensors.pi_multiply(t).is_zero())
    throw DomainError("classifying_map: tensor is not in JB (pi(t) != 0)");
  NCPoly<Rational> image = tau_lift(ext, tensors, t, precompose);
  if (!ext.in_ideal(image))
    throw DomainError("classifying_map: image escaped the ideal (inconsistent extension)");
  return image;
}

}  // namespace wnf
