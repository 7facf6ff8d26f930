#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wnf/presentations.hpp"
#include "wnf/rewrite.hpp"

namespace wnf {

// Truncated tensor algebra T_alg A over a base presentation. Generators of
// the tensor alphabet are the irreducible base words up to a basis degree;
// sigma is the degree-1 inclusion. Tensor elements are NCPolys over this
// alphabet (non-unitized: T_alg A has no empty tensor), and every operation
// fails loudly past the truncation degree.
class TensorAlgebra {
 public:
  TensorAlgebra(const RewriteSystem* base, unsigned truncation, unsigned basis_degree);

  const RewriteSystem& base() const { return *base_; }
  const Alphabet* alphabet() const { return alph_.get(); }
  unsigned truncation() const { return trunc_; }
  unsigned basis_degree() const { return basis_degree_; }

  const std::vector<Word>& basis_words() const { return basis_; }
  // Generator index of a base basis word; < 0 when out of range.
  int gen_of(const Word& base_word) const;
  const Word& word_of(size_t gen) const { return basis_[gen]; }

  // sigma on a single basis word.
  NCPoly<Rational> sigma_word(const Word& base_word) const;
  // sigma extended linearly to a base element (reduced first).
  NCPoly<Rational> sigma(const NCPoly<Rational>& base_elem) const;

  // Product with the truncation guard.
  NCPoly<Rational> mul(const NCPoly<Rational>& a, const NCPoly<Rational>& b) const;

  // omega(a, b) = sigma(ab) - sigma(a) sigma(b); lands in JA.
  NCPoly<Rational> curvature(const Word& a, const Word& b) const;

  // pi: collapse tensors multiplicatively into the base and reduce.
  NCPoly<Rational> pi_multiply(const NCPoly<Rational>& t) const;

  void check_truncation(const NCPoly<Rational>& t) const;

 private:
  const RewriteSystem* base_;
  unsigned trunc_;
  unsigned basis_degree_;
  std::vector<Word> basis_;
  std::map<Word, int> index_;
  std::unique_ptr<Alphabet> alph_;
};

// A linearly split extension 0 -> I -> E -> B -> 0 presented by rewrite
// systems, a projection on generators, and a splitting defined on B's
// normal-form basis words.
struct SplitExtension {
  const RewriteSystem* total;
  const RewriteSystem* quotient;
  std::vector<NCPoly<Rational>> projection;  // image in B per E-generator
  std::function<NCPoly<Rational>(const Word&)> splitting;

  NCPoly<Rational> project(const NCPoly<Rational>& e) const {
    return normal_form(apply_hom(projection, quotient->alphabet(), e), *quotient);
  }
  bool in_ideal(const NCPoly<Rational>& e) const { return project(e).is_zero(); }
};

// The fundamental extension 0 -> I -> W' -> W -> 0 with the splitting
// s(y^n x^m) = y'^n (1+f) x'^m.
const SplitExtension& fundamental_extension();

// The Toeplitz extension 0 -> K -> T -> C^inf(S^1) -> 0 with the splitting
// z^k -> v^k, z^-k -> (v*)^k.
const SplitExtension& toeplitz_extension();

// tau(x_1 (x) ... (x) x_n) = s(x_1) ... s(x_n) reduced in E, restricted to
// tensors in JB (checked); the result is verified to land in the ideal.
// `precompose` optionally applies a homomorphism of B before the splitting
// (the diagram's alpha, giving s' = s o alpha on basis words).
NCPoly<Rational> classifying_map(
    const SplitExtension& ext, const TensorAlgebra& tensors, const NCPoly<Rational>& t,
    const std::optional<std::vector<NCPoly<Rational>>>& precompose = std::nullopt);

// tau without the JB precondition (the middle arrow of the diagram).
NCPoly<Rational> tau_lift(
    const SplitExtension& ext, const TensorAlgebra& tensors, const NCPoly<Rational>& t,
    const std::optional<std::vector<NCPoly<Rational>>>& precompose = std::nullopt);

}  // namespace wnf
