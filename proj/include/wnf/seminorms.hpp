#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wnf/forms.hpp"
#include "wnf/models.hpp"
#include "wnf/wprime.hpp"

namespace wnf {

// Weight sequence phi: N -> Q_+ with lazy memoized evaluation. Builtins:
//   phi0       phi0(k) = least integer >= sqrt(2 (k+2)!)
//   phi_prime  phi'(k) = 4 (k+1)! phi(2k)
//   psi        certified rational upper bound for sup_l phi(l+j) / phi(2l)
// The psi certificate: for monotone phi and l >= j, l+j <= 2l forces the
// ratio below 1, so the sup is max(1, prefix over l < j); monotonicity of
// the parent is verified on the touched range and failure is an error.
class PhiSeq {
 public:
  enum class Kind { kPhi0, kPhiPrime, kPsi, kCustom };

  static PhiSeq phi0();
  static PhiSeq phi_prime(const PhiSeq& parent);
  static PhiSeq psi(const PhiSeq& parent);
  static PhiSeq constant(const Rational& value, std::string label);
  static PhiSeq custom(std::function<Rational(unsigned)> fn, std::string label);

  Rational operator()(unsigned k) const;
  Kind kind() const { return impl_->kind; }
  const std::string& label() const { return impl_->label; }

 private:
  struct Impl {
    Kind kind;
    std::string label;
    std::function<Rational(unsigned)> fn;
    std::map<unsigned, Rational> memo;
  };
  explicit PhiSeq(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

// p_n((a_ij)) = sum (1+i)^n (1+j)^n |a_ij| on the truncated smooth compacts.
Rational eval_pn(unsigned n, const KMatrix& a);

// q_n(sum a_k z^k) = sum |1+k|^n |a_k| on Laurent parts.
Rational eval_qn(unsigned n, const std::map<int, Rational>& laurent);

// beta_phi on the ideal in the canonical ideal basis: sum phi(k) phi(l) beta(z_kl)
// with z_kl = P_kl(t) (t-1) under f -> t-1 and beta the l1 coefficient
// norm on polynomials.
Rational eval_beta_phi(const PhiSeq& phi, const IdealElem& a);

// alpha_psi on the splitting image: sum psi(n) psi(m) |c_nm|.
Rational eval_alpha_psi(const PhiSeq& psi,
                        const std::map<std::pair<unsigned, unsigned>, Rational>& w_part);

// beta_phi + alpha_psi through the unique decomposition of a W' element.
Rational eval_wprime_seminorm(const PhiSeq& phi, const PhiSeq& psi, const NCPoly<Rational>& p);

// Weighted l1 on a tensor element with multiplicative word weights:
// sum |c_w| prod_i base(letter_i). With base = 2*beta this is the hat
// seminorm 2beta + (2beta)ox(2beta) + ... evaluated exactly.
Rational eval_hat(const TensorAlgebra& tensors,
                  const std::function<Rational(const Word&)>& base, const NCPoly<Rational>& t);

// The curvature-decomposition seminorm bar-beta: decompose through
// alpha_inverse and charge beta(head) prod beta(slots) per symbol.
Rational eval_bar_beta(const FormAlgebra& forms,
                       const std::function<Rational(const Word&)>& beta,
                       const NCPoly<Rational>& t);

struct SubmultViolation {
  std::string witness_a;
  std::string witness_b;
  Rational lhs;   // value on the product
  Rational rhs;   // product of values
};

struct SubmultReport {
  unsigned trials = 0;
  std::vector<SubmultViolation> violations;
  bool clean() const { return violations.empty(); }
};

struct SamplerConfig {
  unsigned trials = 1000;
  uint64_t seed = 1;
  unsigned max_degree = 4;  // polynomial degree bound for ideal entries
  unsigned max_kl = 4;      // index bound for y'/x' powers
  unsigned max_entry = 4;   // magnitude bound for numerators
  unsigned matrix_dim = 16; // KMatrix sampling dimension
};

// p_n submultiplicativity on random finitely supported matrices, n <= n_max.
SubmultReport submult_check_pn(unsigned n_max, const SamplerConfig& cfg);

// beta_phi submultiplicativity on random canonical-basis ideal elements;
// products go through the structure constants.
SubmultReport submult_check_beta_phi(const PhiSeq& phi, const SamplerConfig& cfg);

// The two mixed inequalities beta_phi(ab) <= beta_phi'(a) alpha_psi(b) and
// beta_phi(ba) <= alpha_psi(b) beta_phi'(a) for a in I, b in s(W); products
// reduced by the rewrite engine.
SubmultReport mixed_check(const PhiSeq& phi, const PhiSeq& phi_prime, const PhiSeq& psi,
                          const SamplerConfig& cfg);

struct HatReport {
  unsigned trials = 0;
  bool hypotheses_ok = true;
  std::string hypothesis_failure;
  std::vector<SubmultViolation> violations;  // alpha(elem) > hat(2 beta)(elem)
  bool clean() const { return hypotheses_ok && violations.empty(); }
};

// Hat-bound comparison over a free base: bar-beta against the hat of
// 2*beta on random tensors, after verifying the three hypothesis
// inequalities on sampled basis data.
HatReport hat_compare(const TensorAlgebra& tensors, const FormAlgebra& forms,
                      const Rational& weight_base, const SamplerConfig& cfg);

}  // namespace wnf
