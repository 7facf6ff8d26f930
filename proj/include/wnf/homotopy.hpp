#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wnf/models.hpp"
#include "wnf/presentations.hpp"
#include "wnf/trig.hpp"
#include "wnf/wprime.hpp"

namespace wnf {

using TrigPoly = NCPoly<Trig>;

// One-parameter families of homomorphisms with cos t / sin t coefficients.
//
//   kPairPhi / kPairPhiPrime   the two homomorphisms T -> T (x) T
//   kPairPsi                   the interpolating family (phi at t=0, phi'
//                              at t=pi/2), built from the invertibles u_t
//                              and u'_t as psi_t = Ad-composition
//   kPairUt / kPairUtPrime     v -> u_t (v(x)1), v* -> (v*(x)1) u_t^{-1}
//   kWprimePhiT                x' -> x' (x) v* u_t^{-1}, y' -> y' (x) u_t v
//   kWprimePhiBar              x' -> x' (x) (1-e)v*, y' -> y' (x) v(1-e)
//   kBilinearRotation           cos/sin rotation of two orthogonal
//                              form-preserving maps (vector-space family)
enum class FamilyName {
  kPairPhi,
  kPairPhiPrime,
  kPairPsi,
  kPairUt,
  kPairUtPrime,
  kWprimePhiT,
  kWprimePhiBar,
  kBilinearRotation,
};

struct HomFamily {
  FamilyName name;
  std::string label;
  const RewriteSystem* source;  // null for the rotation family
  const RewriteSystem* target;
  // Images per source generator; entries for derived generators (f, e) are
  // filled in by apply_family.
  std::vector<TrigPoly> images;
};

HomFamily build_family(FamilyName name);
const char* family_cli_name(FamilyName name);
std::optional<FamilyName> family_from_cli_name(const std::string& name);
std::vector<FamilyName> all_families();

// Multiplicative extension with derived images: one -> 1, f -> the image of
// x'y' - y'x' - 1, e -> 1 - (image of v v*).
TrigPoly apply_family(const HomFamily& fam, const TrigPoly& p);

// Substitute an endpoint (c0, s0) on the circle into all coefficients.
NCPoly<Rational> at_parameter(const TrigPoly& p, const Rational& c0, const Rational& s0);
TrigPoly lift_rational(const NCPoly<Rational>& p);

// The invertibles:
//   pair_ut / pair_ut_prime    in T (x) T (factor suffixes 1, 2)
//   wprime_ut                  the single-Toeplitz u_t of the W' section,
//                              realized inside W~' (x) T
TrigPoly pair_ut();
TrigPoly pair_ut_prime();
TrigPoly wprime_ut();

// u_{-t}: negate the parameter in every coefficient.
TrigPoly parameter_negate(const TrigPoly& p);
// t -> pi/2 - t.
TrigPoly parameter_swap(const TrigPoly& p);
// Inverse member of a rotation family u_s at s = pi/2 - t.
TrigPoly quarter_turn_inverse(const TrigPoly& p);

struct InvertReport {
  bool pass;
  TrigPoly residual_left;   // u c - 1
  TrigPoly residual_right;  // c u - 1
};
InvertReport invert_check(const TrigPoly& u, const TrigPoly& candidate,
                          const RewriteSystem& sys);

struct RelationCheck {
  std::string relation;
  bool pass;
  TrigPoly residual;
};
struct FamilyReport {
  std::string family;
  std::vector<RelationCheck> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};
// Every rule of the source presentation maps to zero in the target, with t
// symbolic. The rotation family instead checks preservation of the
// bilinear form on a finite test basis.
FamilyReport hom_relations_check(const HomFamily& fam);

struct QuasiHomSpec {
  std::string label;
  const RewriteSystem* source;
  const RewriteSystem* target;
  std::vector<NCPoly<Rational>> alpha;
  std::vector<NCPoly<Rational>> alpha_bar;
  std::function<bool(const NCPoly<Rational>&)> in_B;  // on normal forms
  std::vector<NCPoly<Rational>> b_family;             // monomial generating family
  std::vector<std::string> gens;                      // the generating set G
};

struct CheckLine {
  std::string what;
  bool pass;
};
struct QuasiHomReport {
  std::string label;
  std::vector<CheckLine> items;
  bool pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};
QuasiHomReport quasihom_check(const QuasiHomSpec& spec);

// apply_hom with derived f/e images, rational coefficients.
NCPoly<Rational> apply_assignment(const std::vector<NCPoly<Rational>>& images,
                                  const RewriteSystem& source, const RewriteSystem& target,
                                  const NCPoly<Rational>& p);

// Builtin quasihomomorphism data on W': (phi_0, phi-bar) against the
// y'^n c x'^m (x) e_nm subalgebra, and (phi_{pi/2}, phi-bar) against the
// e-span, whose difference is the corner embedding.
QuasiHomSpec quasihom_phi0_spec();
QuasiHomSpec quasihom_phi_half_spec();

// Difference-homomorphism criterion: orthogonality on generators plus multiplicativity of the
// difference on sampled products.
QuasiHomReport difference_hom_check(const QuasiHomSpec& spec, unsigned trials, uint64_t seed);

// Membership tests used across the homotopy checks: does every word of the
// normal form contain the generator named `gen` (factor membership in the
// e-span / smooth compacts)?
bool every_word_contains(const NCPoly<Rational>& nf, const RewriteSystem& sys,
                         const std::string& gen);
bool every_word_contains_trig(const TrigPoly& nf, const RewriteSystem& sys,
                              const std::string& gen);

// Element of the subalgebra B spanned by y'^n c(x'y') x'^m (x) e_nm inside
// W~' (x) T (c in tC[t] when n = m = 0).
struct BElem {
  std::map<std::pair<unsigned, unsigned>, Poly> entries;  // (n, m) -> c
};
// Coordinates of p in the B-span; DomainError when p is not in the span.
BElem b_membership(const NCPoly<Rational>& p);
// The injection B -> C[t] (x) K_0, y'^n c x'^m (x) e_nm -> c f_m (x) e_nm.
std::map<std::pair<unsigned, unsigned>, Poly> b_injection(const BElem& b);
// Product in C[t] (x) K_0 for the multiplicativity cross-check.
std::map<std::pair<unsigned, unsigned>, Poly> b_image_mul(
    const std::map<std::pair<unsigned, unsigned>, Poly>& a,
    const std::map<std::pair<unsigned, unsigned>, Poly>& b);

struct MoritaReport {
  std::string label;
  std::vector<CheckLine> items;
  bool pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

// Corner context (xi_0 = eta_0 = e_00 (x) 1, dual families e_l0, e_0k)
// realized in the Toeplitz presentation with polynomial scalars.
MoritaReport morita_corner_check(unsigned truncation, unsigned trials, uint64_t seed);

// interval-projection context (xi_i = U_1^i chi, eta_j = chi U_-1^j) in the coset model.
MoritaReport morita_interval_check(const Rational& t0, unsigned D, unsigned trials,
                                  uint64_t seed);

// Degenerate context with empty families and A = 0.
MoritaReport morita_empty_check();

}  // namespace wnf
