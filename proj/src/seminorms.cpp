#include "wnf/seminorms.hpp"

#include <random>

#include "wnf/parse.hpp"

namespace wnf {

namespace {

Rational pow_rational(const Rational& base, unsigned e) {
  Rational acc(1);
  for (unsigned i = 0; i < e; ++i) acc *= base;
  return acc;
}

// Deterministic bounded draw; the modulo bias is irrelevant for fuzzing and
// keeps reports byte-reproducible across platforms.
unsigned draw(std::mt19937_64& rng, unsigned bound) { return unsigned(rng() % bound); }

long draw_signed(std::mt19937_64& rng, unsigned magnitude) {
  return long(draw(rng, 2 * magnitude + 1)) - long(magnitude);
}

}  // namespace

PhiSeq PhiSeq::phi0() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kPhi0;
  impl->label = "phi0";
  impl->fn = [](unsigned k) {
    mpz_class bound = 2 * factorial(k + 2);
    return Rational(isqrt_ceil(bound));
  };
  return PhiSeq(std::move(impl));
}

PhiSeq PhiSeq::phi_prime(const PhiSeq& parent) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kPhiPrime;
  impl->label = "phi_prime(" + parent.label() + ")";
  impl->fn = [parent](unsigned k) {
    mpz_class c = 4 * factorial(k + 1);
    return Rational(c) * parent(2 * k);
  };
  return PhiSeq(std::move(impl));
}

PhiSeq PhiSeq::psi(const PhiSeq& parent) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kPsi;
  impl->label = "psi(" + parent.label() + ")";
  impl->fn = [parent](unsigned j) {
    // Certified crossover at l = j: beyond it, monotonicity bounds the
    // ratio by 1. Verify monotonicity on the touched range first.
    for (unsigned i = 0; i + 1 <= 2 * j; ++i) {
      if (parent(i + 1) < parent(i))
        throw DomainError("psi: parent sequence is not monotone, no certified crossover");
    }
    Rational best(1);
    for (unsigned l = 0; l < j; ++l) {
      Rational ratio = parent(l + j) / parent(2 * l);
      if (ratio > best) best = ratio;
    }
    return best;
  };
  return PhiSeq(std::move(impl));
}

PhiSeq PhiSeq::constant(const Rational& value, std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kCustom;
  impl->label = std::move(label);
  Rational v = value;
  impl->fn = [v](unsigned) { return v; };
  return PhiSeq(std::move(impl));
}

PhiSeq PhiSeq::custom(std::function<Rational(unsigned)> fn, std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kCustom;
  impl->label = std::move(label);
  impl->fn = std::move(fn);
  return PhiSeq(std::move(impl));
}

Rational PhiSeq::operator()(unsigned k) const {
  auto it = impl_->memo.find(k);
  if (it != impl_->memo.end()) return it->second;
  Rational v = impl_->fn(k);
  if (v.sign() <= 0) throw DomainError("PhiSeq: weights must be positive");
  impl_->memo.emplace(k, v);
  return v;
}

Rational eval_pn(unsigned n, const KMatrix& a) {
  Rational acc;
  for (const auto& [ij, v] : a.entries()) {
    Rational wi = pow_rational(Rational(long(1 + ij.first)), n);
    Rational wj = pow_rational(Rational(long(1 + ij.second)), n);
    acc += wi * wj * v.abs();
  }
  return acc;
}

Rational eval_qn(unsigned n, const std::map<int, Rational>& laurent) {
  Rational acc;
  for (const auto& [k, v] : laurent) {
    long w = 1 + k;
    acc += pow_rational(Rational(w < 0 ? -w : w), n) * v.abs();
  }
  return acc;
}

Rational eval_beta_phi(const PhiSeq& phi, const IdealElem& a) {
  Poly tm1 = Poly::variable("t") - Poly(Rational(1));
  Rational acc;
  for (const auto& [kl, P] : a.entries()) {
    acc += phi(kl.first) * phi(kl.second) * (P * tm1).l1_norm();
  }
  return acc;
}

Rational eval_alpha_psi(const PhiSeq& psi,
                        const std::map<std::pair<unsigned, unsigned>, Rational>& w_part) {
  Rational acc;
  for (const auto& [nm, c] : w_part) acc += psi(nm.first) * psi(nm.second) * c.abs();
  return acc;
}

Rational eval_wprime_seminorm(const PhiSeq& phi, const PhiSeq& psi, const NCPoly<Rational>& p) {
  WPrimeDecomp d = wprime_decompose(p);
  IdealElem ideal;
  for (const auto& [kl, P] : d.i_part) ideal.add(kl.first, kl.second, P);
  return eval_beta_phi(phi, ideal) + eval_alpha_psi(psi, d.w_part);
}

Rational eval_hat(const TensorAlgebra& tensors,
                  const std::function<Rational(const Word&)>& base, const NCPoly<Rational>& t) {
  if (t.alphabet() != tensors.alphabet()) throw DomainError("eval_hat: not a tensor element");
  Rational acc;
  for (const auto& [w, c] : t.terms()) {
    Rational weight(1);
    for (uint8_t g : w) weight *= base(tensors.word_of(g));
    acc += weight * c.abs();
  }
  return acc;
}

Rational eval_bar_beta(const FormAlgebra& forms,
                       const std::function<Rational(const Word&)>& beta,
                       const NCPoly<Rational>& t) {
  const TensorAlgebra& T = forms.tensors();
  FormElem decomp = forms.alpha_inverse(t);
  Rational acc;
  for (const auto& [fw, c] : decomp.terms()) {
    Rational weight(1);
    if (fw.head >= 0) weight *= beta(T.word_of(fw.head));
    for (int g : fw.dslots) weight *= beta(T.word_of(g));
    acc += weight * c.abs();
  }
  return acc;
}

SubmultReport submult_check_pn(unsigned n_max, const SamplerConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  SubmultReport rep;
  auto sample = [&]() {
    KMatrix m;
    unsigned fills = cfg.matrix_dim * cfg.matrix_dim / 4 + 1;
    for (unsigned i = 0; i < fills; ++i) {
      unsigned r = draw(rng, cfg.matrix_dim), c = draw(rng, cfg.matrix_dim);
      long num = draw_signed(rng, cfg.max_entry);
      long den = long(draw(rng, cfg.max_entry)) + 1;
      m.add(r, c, Rational(num, den));
    }
    return m;
  };
  for (unsigned trial = 0; trial < cfg.trials; ++trial) {
    KMatrix a = sample(), b = sample();
    KMatrix ab = kmatrix_mul(a, b);
    for (unsigned n = 0; n <= n_max; ++n) {
      Rational lhs = eval_pn(n, ab);
      Rational rhs = eval_pn(n, a) * eval_pn(n, b);
      if (lhs > rhs) {
        rep.violations.push_back({"p_" + std::to_string(n) + " matrix trial " +
                                      std::to_string(trial),
                                  "", lhs, rhs});
      }
    }
    ++rep.trials;
  }
  return rep;
}

namespace {

IdealElem sample_ideal(std::mt19937_64& rng, const SamplerConfig& cfg) {
  IdealElem e;
  unsigned terms = draw(rng, 3) + 1;
  for (unsigned i = 0; i < terms; ++i) {
    unsigned k = draw(rng, cfg.max_kl + 1), l = draw(rng, cfg.max_kl + 1);
    Poly P;
    for (unsigned d = (k == 0 && l == 0) ? 1 : 0; d <= cfg.max_degree; ++d) {
      P += Poly::monomial(d, Rational(draw_signed(rng, cfg.max_entry)));
    }
    e.add(k, l, P);
  }
  return e;
}

std::string ideal_str(const IdealElem& e) {
  std::string out;
  for (const auto& [kl, P] : e.entries()) {
    if (!out.empty()) out += " + ";
    out += "y'^" + std::to_string(kl.first) + " (" + P.str() + ") f x'^" +
           std::to_string(kl.second);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

SubmultReport submult_check_beta_phi(const PhiSeq& phi, const SamplerConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  SubmultReport rep;
  for (unsigned trial = 0; trial < cfg.trials; ++trial) {
    IdealElem a = sample_ideal(rng, cfg), b = sample_ideal(rng, cfg);
    Rational lhs = eval_beta_phi(phi, ideal_mul(a, b));
    Rational rhs = eval_beta_phi(phi, a) * eval_beta_phi(phi, b);
    if (lhs > rhs) rep.violations.push_back({ideal_str(a), ideal_str(b), lhs, rhs});
    ++rep.trials;
  }
  return rep;
}

SubmultReport mixed_check(const PhiSeq& phi, const PhiSeq& phi_prime, const PhiSeq& psi,
                          const SamplerConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  SubmultReport rep;
  const RewriteSystem& sys = wprime();
  for (unsigned trial = 0; trial < cfg.trials; ++trial) {
    IdealElem a = sample_ideal(rng, cfg);
    // b in s(W): random splitting-image combination
    std::map<std::pair<unsigned, unsigned>, Rational> b_part;
    unsigned terms = draw(rng, 3) + 1;
    NCPoly<Rational> b(sys.alphabet());
    for (unsigned i = 0; i < terms; ++i) {
      unsigned n = draw(rng, cfg.max_kl + 1), m = draw(rng, cfg.max_kl + 1);
      Rational c(draw_signed(rng, cfg.max_entry));
      if (c.is_zero()) continue;
      auto [it, inserted] = b_part.try_emplace({n, m}, c);
      if (!inserted) it->second += c;
      if (it != b_part.end() && it->second.is_zero()) b_part.erase(it);
      b += wprime_splitting_word(n, m) * c;
    }
    NCPoly<Rational> a_words(sys.alphabet());
    for (const auto& [kl, P] : a.entries())
      a_words += wprime_ideal_word(kl.first, kl.second, P);

    Rational beta_a_prime = eval_beta_phi(phi_prime, a);
    Rational alpha_b = eval_alpha_psi(psi, b_part);

    for (bool left : {true, false}) {
      NCPoly<Rational> prod = left ? a_words * b : b * a_words;
      WPrimeDecomp d = wprime_decompose(prod);
      if (!d.w_part.empty())
        throw DomainError("mixed_check: product of I with s(W) left the ideal");
      IdealElem prod_ideal;
      for (const auto& [kl, P] : d.i_part) prod_ideal.add(kl.first, kl.second, P);
      Rational lhs = eval_beta_phi(phi, prod_ideal);
      Rational rhs = beta_a_prime * alpha_b;
      if (lhs > rhs)
        rep.violations.push_back(
            {ideal_str(a) + (left ? " * b" : ""), (left ? "b" : "b * a"), lhs, rhs});
    }
    ++rep.trials;
  }
  return rep;
}

HatReport hat_compare(const TensorAlgebra& tensors, const FormAlgebra& forms,
                      const Rational& weight_base, const SamplerConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  HatReport rep;
  auto beta = [&](const Word& w) { return pow_rational(weight_base, unsigned(w.size())); };
  auto two_beta = [&](const Word& w) { return Rational(2) * beta(w); };

  // Hypotheses checked on sampled basis data: alpha(sigma x) <= beta(x),
  // alpha(omega(x,y)) <= beta(x) beta(y), alpha(sigma(x) omega(y,z)) <=
  // beta(x) beta(y) beta(z), with alpha = bar-beta.
  const auto& basis = tensors.basis_words();
  std::vector<size_t> letters;
  for (size_t g = 0; g < basis.size(); ++g)
    if (basis[g].size() <= 1) letters.push_back(g);
  for (size_t xi : letters) {
    const Word& xw = basis[xi];
    NCPoly<Rational> sx = tensors.sigma_word(xw);
    if (eval_bar_beta(forms, beta, sx) > beta(xw)) {
      rep.hypotheses_ok = false;
      rep.hypothesis_failure = "alpha(sigma x) > beta(x)";
      return rep;
    }
    for (size_t yi : letters) {
      const Word& yw = basis[yi];
      NCPoly<Rational> om = tensors.curvature(xw, yw);
      if (eval_bar_beta(forms, beta, om) > beta(xw) * beta(yw)) {
        rep.hypotheses_ok = false;
        rep.hypothesis_failure = "alpha(omega(x,y)) > beta(x) beta(y)";
        return rep;
      }
      for (size_t zi : letters) {
        const Word& zw = basis[zi];
        NCPoly<Rational> som = tensors.mul(sx, tensors.curvature(yw, zw));
        if (eval_bar_beta(forms, beta, som) > beta(xw) * beta(yw) * beta(zw)) {
          rep.hypotheses_ok = false;
          rep.hypothesis_failure = "alpha(sigma(x) omega(y,z)) > beta(x) beta(y) beta(z)";
          return rep;
        }
      }
    }
  }

  for (unsigned trial = 0; trial < cfg.trials; ++trial) {
    NCPoly<Rational> t(tensors.alphabet());
    unsigned terms = draw(rng, 3) + 1;
    for (unsigned i = 0; i < terms; ++i) {
      Word w;
      unsigned len = draw(rng, cfg.max_degree) + 1;
      for (unsigned j = 0; j < len; ++j) w.push_back(uint8_t(letters[draw(rng, unsigned(letters.size()))]));
      t.add(w, Rational(draw_signed(rng, cfg.max_entry)));
    }
    Rational lhs = eval_bar_beta(forms, beta, t);
    Rational rhs = eval_hat(tensors, two_beta, t);
    if (lhs > rhs) rep.violations.push_back({print(t), "", lhs, rhs});
    ++rep.trials;
  }
  return rep;
}

}  // namespace wnf
