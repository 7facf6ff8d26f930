#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wnf/rewrite.hpp"

namespace wnf {

// Builtin presentations. References stay valid for the program lifetime.
//
//   weyl(n)    W_n, generators x_i, y_i, [x_i, y_j] = delta_ij; basis y^a x^b.
//   wprime()   unitization of W' with f = x'y' - y'x' - 1 as a generator;
//              rules f*y' -> 0, x'*f -> 0, x'*y' -> y'*x' + 1 + f;
//              basis y'^k f^m x'^l.
//   toeplitz() smooth Toeplitz algebra on v, v* with v*v = 1, e = 1 - vv*;
//              basis v^k, (v*)^k, v^i e (v*)^j.
//   skew(a,b)  crossed product C[D] x_alpha Z for alpha(D) = a*D + b, with
//              u, u^{-1}; basis D^n u^m, D^n (u^{-1})^m. Default alpha(D)=D-1.
//   laurent()  C[z, z^{-1}], the Toeplitz quotient.
const RewriteSystem& weyl(unsigned n = 1);
const RewriteSystem& wprime();
const RewriteSystem& toeplitz();
const RewriteSystem& skew();
const RewriteSystem& laurent();

std::unique_ptr<RewriteSystem> make_skew(const Rational& a, const Rational& b);
std::unique_ptr<RewriteSystem> make_free(const std::vector<std::string>& gens, bool unitized,
                                         const std::string& name = "free");

// Tensor product A (x) B presented on the disjoint union of the alphabets
// plus cross-commutation rules; B's generators get higher precedence so
// normal words carry the A-factor on the left. Optional suffixes rename
// generators (inserted before trailing apostrophes); aliases are dropped
// from renamed copies.
std::unique_ptr<RewriteSystem> tensor_product(const RewriteSystem& a, const RewriteSystem& b,
                                              const std::string& name,
                                              const std::string& suffix_a = "",
                                              const std::string& suffix_b = "");

// Shared tensor-square and W'-Toeplitz presentations used by the homotopy
// checks: wprime_toeplitz() is W~' (x) T, toeplitz_sq() is T (x) T with
// factor copies suffixed 1 and 2.
const RewriteSystem& wprime_toeplitz();
const RewriteSystem& toeplitz_sq();

// Look up a builtin by CLI name (weyl, weyl2, wprime, toeplitz, skew,
// laurent, wprime_toeplitz, toeplitz_sq); null when unknown.
const RewriteSystem* find_system(const std::string& name);

// Presentation file format (line oriented):
//   alphabet: x y
//   unitized: true
//   order: deglex x > y        (precedence; optional, defaults to alphabet)
//   rule: x*y -> y*x + 1
// '#' starts a comment.
std::unique_ptr<RewriteSystem> load_presentation(const std::string& text,
                                                 const std::string& name = "user");

}  // namespace wnf
