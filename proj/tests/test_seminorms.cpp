#include "doctest.h"

#include <random>

#include "wnf/seminorms.hpp"

using namespace wnf;

TEST_CASE("phi0 values and certificate") {
  PhiSeq phi0 = PhiSeq::phi0();
  // phi0(0) = least integer >= sqrt(2*2!) = 2
  CHECK(phi0(0) == Rational(2));
  // certificate: phi0(l)^2 >= 2 (l+2)! for l <= 64, exactly
  for (unsigned l = 0; l <= 64; ++l) {
    Rational v = phi0(l);
    CHECK(v.is_integer());
    mpz_class bound = 2 * factorial(l + 2);
    CHECK(v * v >= Rational(bound));
    if (l > 0) CHECK(phi0(l) >= phi0(l - 1));
  }
}

TEST_CASE("phi_prime recursion") {
  PhiSeq phi0 = PhiSeq::phi0();
  PhiSeq phip = PhiSeq::phi_prime(phi0);
  // phi'(1) = 4 * 2! * phi(2)
  CHECK(phip(1) == Rational(8) * phi0(2));
  CHECK(phip(0) == Rational(4) * phi0(0));
  for (unsigned l = 0; l < 8; ++l) CHECK(phip(l + 1) >= phip(l));
}

TEST_CASE("psi certified sup") {
  PhiSeq phi0 = PhiSeq::phi0();
  PhiSeq psi = PhiSeq::psi(phi0);
  // at j = 0 the prefix is empty and the tail bound gives 1
  CHECK(psi(0) == Rational(1));
  // psi(j) dominates the defining ratios on a sampled range
  for (unsigned j = 0; j <= 6; ++j) {
    for (unsigned l = 0; l <= 12; ++l) {
      CHECK(psi(j) >= phi0(l + j) / phi0(2 * l));
    }
  }
  // non-monotone custom parent is rejected
  PhiSeq bad = PhiSeq::custom(
      [](unsigned k) { return k == 1 ? Rational(1, 2) : Rational(long(k) + 1); }, "bad");
  PhiSeq psi_bad = PhiSeq::psi(bad);
  CHECK_THROWS_AS(psi_bad(2), DomainError);
}

TEST_CASE("p_n and q_n evaluation") {
  // p_1 of e_12 -> (1+1)(1+2) = 6
  CHECK(eval_pn(1, KMatrix::unit(1, 2)) == Rational(6));
  CHECK(eval_pn(0, KMatrix::unit(1, 2)) == Rational(1));
  std::map<int, Rational> lp{{1, Rational(1)}, {-1, Rational(1)}};
  CHECK(eval_qn(0, lp) == Rational(2));
  // |1 + (-1)|^n kills the z^{-1} coefficient for n >= 1
  CHECK(eval_qn(1, lp) == Rational(2));
  std::map<int, Rational> lm{{-1, Rational(5)}};
  CHECK(eval_qn(1, lm) == Rational(0));
  std::map<int, Rational> l2{{2, Rational(1, 3)}};
  CHECK(eval_qn(2, l2) == Rational(3));
}

TEST_CASE("beta_phi single basis element") {
  PhiSeq one = PhiSeq::constant(Rational(1), "one");
  // y' f x' has z = t - 1 and beta(t-1) = 2
  IdealElem e = IdealElem::basis(1, 1, Poly(Rational(1)));
  CHECK(eval_beta_phi(one, e) == Rational(2));
  PhiSeq phi0 = PhiSeq::phi0();
  CHECK(eval_beta_phi(phi0, e) == phi0(1) * phi0(1) * Rational(2));
}

TEST_CASE("seminorm axioms on random elements") {
  std::mt19937_64 rng(64);
  PhiSeq phi0 = PhiSeq::phi0();
  auto rand_ideal = [&]() {
    IdealElem e;
    for (int i = 0; i < 3; ++i) {
      unsigned k = unsigned(rng() % 4), l = unsigned(rng() % 4);
      Poly P;
      for (unsigned d = (k == 0 && l == 0) ? 1 : 0; d <= 3; ++d)
        P += Poly::monomial(d, Rational(long(rng() % 9) - 4));
      e.add(k, l, P);
    }
    return e;
  };
  for (int i = 0; i < 60; ++i) {
    IdealElem a = rand_ideal(), b = rand_ideal();
    Rational na = eval_beta_phi(phi0, a);
    CHECK(na >= Rational(0));
    CHECK(eval_beta_phi(phi0, a * Rational(-7, 3)) == Rational(7, 3) * na);
    CHECK(eval_beta_phi(phi0, a + b) <= na + eval_beta_phi(phi0, b));
  }
  for (int i = 0; i < 60; ++i) {
    KMatrix a, b;
    for (int f = 0; f < 6; ++f) {
      a.add(unsigned(rng() % 6), unsigned(rng() % 6), Rational(long(rng() % 9) - 4, 3));
      b.add(unsigned(rng() % 6), unsigned(rng() % 6), Rational(long(rng() % 9) - 4, 3));
    }
    CHECK(eval_pn(2, a + b) <= eval_pn(2, a) + eval_pn(2, b));
    CHECK(eval_pn(2, a * Rational(-2)) == Rational(2) * eval_pn(2, a));
  }
}

TEST_CASE("p_n submultiplicative on samples") {
  SamplerConfig cfg;
  cfg.trials = 200;
  cfg.matrix_dim = 8;
  cfg.seed = 11;
  SubmultReport rep = submult_check_pn(3, cfg);
  CHECK(rep.trials == 200);
  CHECK(rep.clean());
}

TEST_CASE("beta_phi submultiplicative for phi0, violated for phi == 1") {
  SamplerConfig cfg;
  cfg.trials = 300;
  cfg.seed = 5;
  cfg.max_kl = 4;
  cfg.max_degree = 4;
  SubmultReport good = submult_check_beta_phi(PhiSeq::phi0(), cfg);
  CHECK(good.clean());

  SubmultReport bad = submult_check_beta_phi(PhiSeq::constant(Rational(1), "one"), cfg);
  CHECK(!bad.clean());
  CHECK(bad.violations.front().lhs > bad.violations.front().rhs);
}

TEST_CASE("hand witness for the factorial inflation") {
  // a = f x'^4, b = y'^4 f: beta_phi(ab) = l1(f_4 (t-1)^2) = 22 > 4
  PhiSeq one = PhiSeq::constant(Rational(1), "one");
  IdealElem a = IdealElem::basis(0, 4, Poly(Rational(1)));
  IdealElem b = IdealElem::basis(4, 0, Poly(Rational(1)));
  Rational lhs = eval_beta_phi(one, ideal_mul(a, b));
  Rational rhs = eval_beta_phi(one, a) * eval_beta_phi(one, b);
  CHECK(lhs == Rational(22));
  CHECK(rhs == Rational(4));
}

TEST_CASE("mixed inequalities") {
  PhiSeq phi = PhiSeq::phi0();
  PhiSeq phip = PhiSeq::phi_prime(phi);
  PhiSeq psi = PhiSeq::psi(phi);

  // hand example: a = f x', b = (1+f)
  IdealElem a = IdealElem::basis(0, 1, Poly(Rational(1)));
  NCPoly<Rational> aw = wprime_ideal_word(0, 1, Poly(Rational(1)));
  NCPoly<Rational> bw = wprime_splitting_word(0, 0);
  WPrimeDecomp d = wprime_decompose(aw * bw);
  CHECK(d.w_part.empty());
  IdealElem ab;
  for (const auto& [kl, P] : d.i_part) ab.add(kl.first, kl.second, P);
  std::map<std::pair<unsigned, unsigned>, Rational> b_part{{{0u, 0u}, Rational(1)}};
  CHECK(eval_beta_phi(phi, ab) <= eval_beta_phi(phip, a) * eval_alpha_psi(psi, b_part));

  // zero b gives 0 <= 0
  CHECK(eval_alpha_psi(psi, {}) == Rational(0));

  SamplerConfig cfg;
  cfg.trials = 250;
  cfg.seed = 17;
  cfg.max_kl = 3;
  cfg.max_degree = 3;
  cfg.max_entry = 3;
  SubmultReport rep = mixed_check(phi, phip, psi, cfg);
  CHECK(rep.trials == 250);
  CHECK(rep.clean());
}

TEST_CASE("hat seminorm on pure tensors") {
  auto base = make_free({"a", "b", "g"}, false, "free3");
  TensorAlgebra T(base.get(), 6, 4);
  auto p = [&](const Word&) { return Rational(3); };
  NCPoly<Rational> t = T.mul(T.sigma_word(base->alphabet()->word_of({"a"})),
                             T.sigma_word(base->alphabet()->word_of({"b"})));
  CHECK(eval_hat(T, p, t) == Rational(9));
}

TEST_CASE("hat seminorm bound") {
  auto base = make_free({"a", "b", "g"}, false, "free3");
  TensorAlgebra T(base.get(), 6, 4);
  FormAlgebra F(&T);

  SamplerConfig cfg;
  cfg.trials = 120;
  cfg.seed = 23;
  cfg.max_degree = 4;
  cfg.max_entry = 4;
  HatReport rep = hat_compare(T, F, Rational(1), cfg);
  CHECK(rep.hypotheses_ok);
  CHECK(rep.clean());

  // the proof's concluding display: bar-beta(sigma(x0)...sigma(xn)) <=
  // 2^n beta(x0)...beta(xn)
  auto beta = [](const Word&) { return Rational(1); };
  const Alphabet* A = base->alphabet();
  NCPoly<Rational> word = T.sigma_word(A->word_of({"a"}));
  Rational bound(1);
  for (const char* g : {"b", "g", "a"}) {
    word = T.mul(word, T.sigma_word(A->word_of({g})));
    bound *= Rational(2);
    CHECK(eval_bar_beta(F, beta, word) <= bound);
  }
}

TEST_CASE("projective weight compatibility") {
  // the product-weight l1 dominates the decomposition bound sum p(a_i) q(b_i)
  std::mt19937_64 rng(3);
  auto pw = [](unsigned i) { return Rational(long(i) + 1); };
  auto qw = [](unsigned j) { return Rational(2 * long(j) + 1); };
  for (int trial = 0; trial < 50; ++trial) {
    std::map<std::pair<unsigned, unsigned>, Rational> z;
    Rational bound;
    for (int i = 0; i < 3; ++i) {
      std::map<unsigned, Rational> a, b;
      for (int k = 0; k < 3; ++k) {
        a[unsigned(rng() % 4)] += Rational(long(rng() % 7) - 3);
        b[unsigned(rng() % 4)] += Rational(long(rng() % 7) - 3);
      }
      Rational pa, qb;
      for (const auto& [k, c] : a) pa += pw(k) * c.abs();
      for (const auto& [k, c] : b) qb += qw(k) * c.abs();
      bound += pa * qb;
      for (const auto& [k1, c1] : a)
        for (const auto& [k2, c2] : b) z[{k1, k2}] += c1 * c2;
    }
    Rational value;
    for (const auto& [kk, c] : z) value += pw(kk.first) * qw(kk.second) * c.abs();
    CHECK(value <= bound);
  }
}
