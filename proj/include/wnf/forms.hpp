#pragma once

#include <map>
#include <vector>

#include "wnf/tensor.hpp"

namespace wnf {

// Basis symbol of Omega B: head d a_1 ... d a_n with head and slots indexing
// basis words of the underlying tensor algebra; head -1 is the adjoined
// unit (the symbol d a_1 ... d a_n with no head). Degree-0 symbols must
// carry a head.
struct FormWord {
  int head = -1;
  std::vector<int> dslots;

  unsigned degree() const { return unsigned(dslots.size()); }
  friend bool operator<(const FormWord& a, const FormWord& b) {
    if (a.head != b.head) return a.head < b.head;
    return a.dslots < b.dslots;
  }
  friend bool operator==(const FormWord& a, const FormWord& b) {
    return a.head == b.head && a.dslots == b.dslots;
  }
};

// Finitely supported combination of form symbols.
class FormElem {
 public:
  FormElem() = default;

  const std::map<FormWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(FormWord w, const Rational& c);

  FormElem& operator+=(const FormElem& o);
  FormElem& operator-=(const FormElem& o);
  friend FormElem operator+(FormElem a, const FormElem& b) { return a += b; }
  friend FormElem operator-(FormElem a, const FormElem& b) { return a -= b; }
  FormElem operator*(const Rational& c) const;
  friend bool operator==(const FormElem& a, const FormElem& b) { return a.terms_ == b.terms_; }

  // Largest form degree in the support (0 for zero).
  unsigned degree() const;
  bool is_even() const;

 private:
  std::map<FormWord, Rational> terms_;
};

// Differential forms over the base of a tensor algebra, with the Fedosov
// product and the curvature-form isomorphism alpha onto the tensor algebra.
// The relative sign between the displayed formulas for omega, the Fedosov
// product and alpha does not compose to an algebra map as printed; the
// working sign is calibrated at construction (see calibrate()).
class FormAlgebra {
 public:
  explicit FormAlgebra(const TensorAlgebra* tensors);
  // Explicit sign, bypassing calibration (used by the calibration itself
  // and by tests that exercise the rejected convention).
  FormAlgebra(const TensorAlgebra* tensors, int sign);

  const TensorAlgebra& tensors() const { return *tensors_; }
  unsigned truncation() const { return trunc_; }
  int fedosov_sign() const { return sign_; }

  FormElem d(const FormElem& w) const;
  // Ordinary product of Omega B (Leibniz expansion of d-slot times head).
  FormElem mul(const FormElem& a, const FormElem& b) const;
  // w1 o w2 = w1 w2 + sign * (-1)^{deg w1} d(w1) d(w2).
  FormElem fedosov_mul(const FormElem& a, const FormElem& b) const {
    return fedosov_mul_signed(a, b, sign_);
  }
  FormElem fedosov_mul_signed(const FormElem& a, const FormElem& b, int sign) const;

  // alpha: x0 dx1 ... dx2n -> sigma(x0) omega(x1,x2) ... omega(x2n-1, x2n);
  // defined on even forms.
  NCPoly<Rational> alpha(const FormElem& w) const;
  // Inverse on even-degree-decomposable tensors (every tensor at our
  // truncations), by peeling top tensor degree.
  FormElem alpha_inverse(const NCPoly<Rational>& t) const;

  // Decides the Fedosov sign by testing multiplicativity of alpha on a
  // 2-generator free algebra at degree <= 2. Returns +1 or -1; throws if
  // neither or both choices work.
  static int calibrate();

  // True iff alpha is multiplicative for w1 o w2 under the given sign on
  // the degree <= 2 probe set over a 2-generator free algebra. On failure,
  // *counterexample (when non-null) receives a printable witness.
  static bool sign_is_multiplicative(int sign, std::string* counterexample = nullptr);

  // Convenience constructors for symbols.
  FormElem form(int head, std::vector<int> dslots) const;

 private:
  // (head d a_1 .. d a_n) * b0 via d(x) b = d(x b) - x d(b).
  FormElem right_mult(const FormWord& w, int b0) const;
  void check_degree(unsigned deg) const;

  const TensorAlgebra* tensors_;
  unsigned trunc_;
  int sign_;
};

}  // namespace wnf
