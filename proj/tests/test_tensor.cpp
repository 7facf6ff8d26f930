#include "doctest.h"

#include <random>

#include "wnf/forms.hpp"
#include "wnf/parse.hpp"
#include "wnf/tensor.hpp"
#include "wnf/wprime.hpp"

using namespace wnf;

namespace {

const TensorAlgebra& tw() {
  static TensorAlgebra T(&weyl(), 8, 6);
  return T;
}

NCPoly<Rational> rand_tensor(const TensorAlgebra& T, std::mt19937_64& rng, int max_terms,
                             unsigned max_deg, unsigned max_entry_len) {
  std::vector<int> small;
  for (size_t g = 0; g < T.basis_words().size(); ++g)
    if (T.basis_words()[g].size() <= max_entry_len) small.push_back(int(g));
  NCPoly<Rational> t(T.alphabet());
  int terms = int(rng() % max_terms) + 1;
  for (int i = 0; i < terms; ++i) {
    Word w;
    unsigned len = unsigned(rng() % max_deg) + 1;
    for (unsigned j = 0; j < len; ++j) w.push_back(uint8_t(small[rng() % small.size()]));
    t.add(w, Rational(long(rng() % 9) - 4));
  }
  return t;
}

}  // namespace

TEST_CASE("sigma and curvature in TW") {
  const TensorAlgebra& T = tw();
  const Alphabet* W = weyl().alphabet();
  Word x = W->word_of({"x"}), y = W->word_of({"y"}), yx = W->word_of({"y", "x"});
  // curvature(x, y) = sigma(yx) + sigma(1) - sigma(x) sigma(y)
  NCPoly<Rational> c = T.curvature(x, y);
  NCPoly<Rational> expect =
      T.sigma_word(yx) + T.sigma_word(Word{}) - T.mul(T.sigma_word(x), T.sigma_word(y));
  CHECK(c == expect);
  // curvature at the unit
  NCPoly<Rational> cu = T.curvature(Word{}, Word{});
  CHECK(cu == T.sigma_word(Word{}) - T.mul(T.sigma_word(Word{}), T.sigma_word(Word{})));
  // pi kills curvature
  CHECK(T.pi_multiply(c).is_zero());
  CHECK(T.pi_multiply(cu).is_zero());
}

TEST_CASE("pi_multiply collapses and reduces") {
  const TensorAlgebra& T = tw();
  const Alphabet* W = weyl().alphabet();
  NCPoly<Rational> t = T.mul(T.sigma_word(W->word_of({"x"})), T.sigma_word(W->word_of({"y"})));
  CHECK(T.pi_multiply(t) == parse("y*x + 1", W));
  CHECK(T.pi_multiply(T.sigma_word(W->word_of({"x"}))) == parse("x", W));
}

TEST_CASE("pi o tau commutes with projection on random tensors") {
  std::mt19937_64 rng(42);
  const TensorAlgebra& T = tw();
  const SplitExtension& ext = fundamental_extension();
  for (int i = 0; i < 60; ++i) {
    NCPoly<Rational> t = rand_tensor(T, rng, 3, 3, 2);
    NCPoly<Rational> lifted = tau_lift(ext, T, t);
    CHECK(ext.project(lifted) == T.pi_multiply(t));
  }
}

TEST_CASE("classifying map of the fundamental extension") {
  const TensorAlgebra& T = tw();
  const Alphabet* W = weyl().alphabet();
  const Alphabet* Wp = wprime().alphabet();
  const SplitExtension& ext = fundamental_extension();

  NCPoly<Rational> curv = T.curvature(W->word_of({"x"}), W->word_of({"y"}));
  NCPoly<Rational> gamma = classifying_map(ext, T, curv);
  CHECK(gamma == normal_form(parse("y'*f*x' - 2*f - 3*f^2 - f^3", Wp), wprime()));

  // the image lies in I and its decomposition obeys the P_00 constraint
  CHECK(ext.in_ideal(gamma));
  WPrimeDecomp d = wprime_decompose(gamma);
  CHECK(d.w_part.empty());
  auto p00 = d.i_part.find({0u, 0u});
  REQUIRE(p00 != d.i_part.end());
  CHECK(p00->second.coeff(0).is_zero());
  // P_00(t) = -t^2 - t from the hand expansion of s(xy) - s(x)s(y)
  Poly t_var = Poly::variable("t");
  CHECK(p00->second == -(t_var * t_var) - t_var);

  // tau on degree-1 tensors is the splitting itself
  NCPoly<Rational> s_y2x = tau_lift(ext, T, T.sigma_word(W->word_of({"y", "y", "x"})));
  CHECK(s_y2x == normal_form(wprime_splitting_word(2, 1), wprime()));

  // precondition: pi(t) != 0 is rejected
  CHECK_THROWS_AS(classifying_map(ext, T, T.sigma_word(W->word_of({"x"}))), DomainError);
}

TEST_CASE("classifying map of the Toeplitz extension") {
  TensorAlgebra TL(&laurent(), 6, 4);
  const Alphabet* L = laurent().alphabet();
  const SplitExtension& ext = toeplitz_extension();
  NCPoly<Rational> curv = TL.curvature(L->word_of({"z"}), L->word_of({"zinv"}));
  // sigma(1) - sigma(z) sigma(z^{-1}) maps to 1 - v v* = e.
  NCPoly<Rational> gamma = classifying_map(ext, TL, curv);
  CHECK(gamma == parse("e", toeplitz().alphabet()));
  CHECK(ext.in_ideal(gamma));
}

TEST_CASE("random JB tensors stay in the ideal") {
  std::mt19937_64 rng(7);
  const TensorAlgebra& T = tw();
  const SplitExtension& ext = fundamental_extension();
  for (int i = 0; i < 40; ++i) {
    NCPoly<Rational> t = rand_tensor(T, rng, 3, 3, 2);
    // project into JW: t - sigma(pi(t))
    NCPoly<Rational> j = t - T.sigma(T.pi_multiply(t));
    CHECK(T.pi_multiply(j).is_zero());
    NCPoly<Rational> gamma = classifying_map(ext, T, j);
    CHECK(ext.in_ideal(gamma));
    if (!gamma.is_zero()) {
      WPrimeDecomp d = wprime_decompose(gamma);
      auto p00 = d.i_part.find({0u, 0u});
      if (p00 != d.i_part.end()) CHECK(p00->second.coeff(0).is_zero());
    }
  }
}

TEST_CASE("fedosov calibration singles out one sign") {
  std::string witness;
  bool plus = FormAlgebra::sign_is_multiplicative(+1, &witness);
  bool minus = FormAlgebra::sign_is_multiplicative(-1);
  CHECK(minus);
  CHECK(!plus);
  CHECK(!witness.empty());
  CHECK(FormAlgebra::calibrate() == -1);
}

TEST_CASE("fedosov product basics") {
  auto base = make_free({"a", "b", "g"}, false, "free3");
  TensorAlgebra T(base.get(), 6, 4);
  FormAlgebra F(&T);
  int ga = 0, gb = 1;
  REQUIRE(T.word_of(ga) == base->alphabet()->word_of({"a"}));

  // x o y = xy + sign * dx dy at degree 0
  FormElem xy = F.fedosov_mul(F.form(ga, {}), F.form(gb, {}));
  FormElem expect;
  int gab = T.gen_of(base->alphabet()->word_of({"a", "b"}));
  REQUIRE(gab >= 0);
  expect.add(FormWord{gab, {}}, Rational(1));
  expect.add(FormWord{-1, {ga, gb}}, Rational(F.fedosov_sign()));
  CHECK(xy == expect);

  // (dx dy) o (dz dw) = dx dy dz dw
  FormElem dd = F.fedosov_mul(F.form(-1, {ga, gb}), F.form(-1, {gb, ga}));
  FormElem dd_expect;
  dd_expect.add(FormWord{-1, {ga, gb, gb, ga}}, Rational(1));
  CHECK(dd == dd_expect);

  // scalar multiples pass through
  FormElem sc = F.fedosov_mul(F.form(ga, {}), F.form(gb, {}) * Rational(3));
  CHECK(sc == xy * Rational(3));
}

TEST_CASE("alpha on basis forms") {
  auto base = make_free({"a", "b", "g"}, false, "free3");
  TensorAlgebra T(base.get(), 6, 4);
  FormAlgebra F(&T);
  // degree 0: alpha(x0) = sigma(x0)
  CHECK(F.alpha(F.form(0, {})) == T.sigma_word(base->alphabet()->word_of({"a"})));
  // degree 2 headless: alpha(dx dy) = omega(x, y)
  CHECK(F.alpha(F.form(-1, {0, 1})) ==
        T.curvature(base->alphabet()->word_of({"a"}), base->alphabet()->word_of({"b"})));
  // odd forms rejected
  CHECK_THROWS_AS(F.alpha(F.form(-1, {0})), DomainError);
}

TEST_CASE("alpha is multiplicative for the calibrated sign") {
  auto base = make_free({"a", "b", "g"}, false, "free3");
  TensorAlgebra T(base.get(), 6, 4);
  FormAlgebra F(&T);
  std::mt19937_64 rng(17);
  auto rand_form = [&](unsigned deg) {
    FormElem w;
    for (int terms = 0; terms < 2; ++terms) {
      FormWord fw;
      fw.head = rng() % 2 == 0 ? int(rng() % 3) : -1;
      for (unsigned i = 0; i < deg; ++i) fw.dslots.push_back(int(rng() % 3));
      if (fw.head < 0 && fw.dslots.empty()) fw.head = int(rng() % 3);
      w.add(fw, Rational(long(rng() % 7) - 3));
    }
    return w;
  };
  for (int i = 0; i < 60; ++i) {
    unsigned d1 = 2 * unsigned(rng() % 2), d2 = 2 * unsigned(rng() % 2);
    FormElem w1 = rand_form(d1), w2 = rand_form(d2);
    CHECK(F.alpha(F.fedosov_mul(w1, w2)) == T.mul(F.alpha(w1), F.alpha(w2)));
  }
}

TEST_CASE("fedosov product is associative on even forms") {
  auto base = make_free({"a", "b", "g"}, false, "free3");
  TensorAlgebra T(base.get(), 8, 4);
  FormAlgebra F(&T);
  std::mt19937_64 rng(23);
  auto rand_even = [&]() {
    FormElem w;
    unsigned deg = 2 * unsigned(rng() % 2);
    FormWord fw;
    fw.head = rng() % 2 == 0 ? int(rng() % 3) : -1;
    for (unsigned i = 0; i < deg; ++i) fw.dslots.push_back(int(rng() % 3));
    if (fw.head < 0 && fw.dslots.empty()) fw.head = int(rng() % 3);
    w.add(fw, Rational(long(rng() % 5) - 2));
    return w;
  };
  for (int i = 0; i < 50; ++i) {
    FormElem a = rand_even(), b = rand_even(), c = rand_even();
    CHECK(F.fedosov_mul(F.fedosov_mul(a, b), c) == F.fedosov_mul(a, F.fedosov_mul(b, c)));
  }
}

TEST_CASE("alpha is a linear bijection at each truncation") {
  auto base = make_free({"a", "b"}, false, "free2");
  TensorAlgebra T(base.get(), 6, 4);
  FormAlgebra F(&T);
  std::mt19937_64 rng(29);
  auto rand_even = [&]() {
    FormElem w;
    for (int terms = 0; terms < 3; ++terms) {
      unsigned deg = 2 * unsigned(rng() % 3);
      FormWord fw;
      fw.head = rng() % 2 == 0 ? int(rng() % 2) : -1;
      for (unsigned i = 0; i < deg; ++i) fw.dslots.push_back(int(rng() % 2));
      if (fw.head < 0 && fw.dslots.empty()) fw.head = int(rng() % 2);
      w.add(fw, Rational(long(rng() % 7) - 3));
    }
    return w;
  };
  for (int i = 0; i < 40; ++i) {
    FormElem w = rand_even();
    CHECK(F.alpha_inverse(F.alpha(w)) == w);
  }
  for (int i = 0; i < 40; ++i) {
    NCPoly<Rational> t = rand_tensor(T, rng, 3, 4, 1);
    CHECK(F.alpha(F.alpha_inverse(t)) == t);
  }
}

TEST_CASE("truncation is a hard error") {
  auto base = make_free({"a", "b"}, false, "free2");
  TensorAlgebra T(base.get(), 3, 2);
  NCPoly<Rational> s = T.sigma_word(base->alphabet()->word_of({"a"}));
  NCPoly<Rational> s2 = T.mul(s, s);
  NCPoly<Rational> s3 = T.mul(s2, s);
  CHECK_THROWS_AS(T.mul(s3, s), BudgetError);
}
