#include "wnf/homotopy.hpp"

#include <random>

#include "wnf/parse.hpp"
#include "wnf/toeplitz_split.hpp"

namespace wnf {

namespace {

TrigPoly tparse(const std::string& text, const RewriteSystem& sys) {
  return parse<Trig>(text, sys.alphabet());
}

// Images of the derived generators: one -> 1; f -> image of x'y' - y'x' - 1;
// e -> 1 - image of v v*. Returns a full image table aligned with the
// source alphabet.
template <class S>
std::vector<NCPoly<S>> derive_images(const std::vector<NCPoly<S>>& images,
                                     const RewriteSystem& source,
                                     const RewriteSystem& target) {
  const Alphabet& src = *source.alphabet();
  std::vector<NCPoly<S>> full(src.size());
  for (size_t g = 0; g < src.size() && g < images.size(); ++g) full[g] = images[g];
  int gf = src.find("f");
  if (gf >= 0 && full[gf].alphabet() == nullptr) {
    int gx = src.find("x'"), gy = src.find("y'");
    if (gx < 0 || gy < 0) throw DomainError("derive_images: no x'/y' for f");
    full[gf] = full[gx] * full[gy] - full[gy] * full[gx] - NCPoly<S>::unit(target.alphabet());
  }
  int ge = src.find("e");
  if (ge >= 0 && full[ge].alphabet() == nullptr) {
    int gv = src.find("v"), gs = src.find("vstar");
    if (gv < 0 || gs < 0) throw DomainError("derive_images: no v/v* for e");
    full[ge] = NCPoly<S>::unit(target.alphabet()) - full[gv] * full[gs];
  }
  return full;
}

}  // namespace

TrigPoly pair_ut() {
  // v^2 v*^2 (x) 1 + e_00 (x) (e_00 + cos t v v*) + e_01 (x) sin t v
  //                + e_10 (x) (-sin t v*) + e_11 (x) cos t 1
  return tparse(
      "v1^2*vstar1^2 + e1*e2 + c*e1*v2*vstar2 + s*e1*vstar1*v2 - s*v1*e1*vstar2"
      " + c*v1*e1*vstar1",
      toeplitz_sq());
}

TrigPoly pair_ut_prime() {
  return tparse("v1^2*vstar1^2 + c*e1 + s*e1*vstar1 - s*v1*e1 + c*v1*e1*vstar1",
                toeplitz_sq());
}

TrigPoly wprime_ut() {
  // u_t = v^2 v*^2 + cos t (e_00 + e_11) + sin t (e_01 - e_10), in the
  // Toeplitz factor of W~' (x) T.
  return tparse("v^2*vstar^2 + c*e + s*e*vstar - s*v*e + c*v*e*vstar", wprime_toeplitz());
}

TrigPoly parameter_negate(const TrigPoly& p) {
  return p.map_scalars<Trig>([](const Trig& t) { return t.negate_parameter(); });
}

TrigPoly parameter_swap(const TrigPoly& p) {
  return p.map_scalars<Trig>([](const Trig& t) { return t.swap_cos_sin(); });
}

TrigPoly quarter_turn_inverse(const TrigPoly& p) {
  // Inverse of the rotation member at angle pi/2 - t: substitute
  // (c, s) -> (sin t, -cos t).
  return p.map_scalars<Trig>(
      [](const Trig& t) { return t.substitute(Trig::sin(), -Trig::cos()); });
}

NCPoly<Rational> at_parameter(const TrigPoly& p, const Rational& c0, const Rational& s0) {
  NCPoly<Rational> out(p.alphabet());
  for (const auto& [w, c] : p.terms()) out.add(w, c.eval(c0, s0));
  return out;
}

TrigPoly lift_rational(const NCPoly<Rational>& p) {
  return p.map_scalars<Trig>([](const Rational& c) { return Trig(c); });
}

HomFamily build_family(FamilyName name) {
  HomFamily fam;
  fam.name = name;
  fam.label = family_cli_name(name);
  switch (name) {
    case FamilyName::kPairPhi: {
      fam.source = &toeplitz();
      fam.target = &toeplitz_sq();
      fam.images.resize(toeplitz().alphabet()->size());
      fam.images[toeplitz().alphabet()->find("v")] =
          tparse("v1 - v1*e1 + e1*v2", toeplitz_sq());
      fam.images[toeplitz().alphabet()->find("vstar")] =
          tparse("vstar1 - e1*vstar1 + e1*vstar2", toeplitz_sq());
      break;
    }
    case FamilyName::kPairPhiPrime: {
      fam.source = &toeplitz();
      fam.target = &toeplitz_sq();
      fam.images.resize(toeplitz().alphabet()->size());
      fam.images[toeplitz().alphabet()->find("v")] =
          tparse("v1 - v1*e1 + e1", toeplitz_sq());
      fam.images[toeplitz().alphabet()->find("vstar")] =
          tparse("vstar1 - e1*vstar1 + e1", toeplitz_sq());
      break;
    }
    case FamilyName::kPairPsi: {
      // psi_t = u'_t u_{pi/2 - t} (v (x) 1) interpolates phi (t = 0) to
      // phi' (t = pi/2) with psi_t - phi valued in K (x) T.
      fam.source = &toeplitz();
      fam.target = &toeplitz_sq();
      fam.images.resize(toeplitz().alphabet()->size());
      TrigPoly u = parameter_swap(pair_ut());            // u_{pi/2 - t}
      TrigPoly uinv = quarter_turn_inverse(pair_ut());   // its inverse
      TrigPoly up = pair_ut_prime();
      TrigPoly upinv = parameter_negate(pair_ut_prime());
      TrigPoly v1 = tparse("v1", toeplitz_sq());
      TrigPoly vstar1 = tparse("vstar1", toeplitz_sq());
      fam.images[toeplitz().alphabet()->find("v")] =
          normal_form(up * u * v1, toeplitz_sq());
      fam.images[toeplitz().alphabet()->find("vstar")] =
          normal_form(vstar1 * uinv * upinv, toeplitz_sq());
      break;
    }
    case FamilyName::kPairUt:
    case FamilyName::kPairUtPrime: {
      fam.source = &toeplitz();
      fam.target = &toeplitz_sq();
      fam.images.resize(toeplitz().alphabet()->size());
      TrigPoly u = name == FamilyName::kPairUt ? pair_ut() : pair_ut_prime();
      TrigPoly uinv = parameter_negate(u);
      fam.images[toeplitz().alphabet()->find("v")] =
          normal_form(u * tparse("v1", toeplitz_sq()), toeplitz_sq());
      fam.images[toeplitz().alphabet()->find("vstar")] =
          normal_form(tparse("vstar1", toeplitz_sq()) * uinv, toeplitz_sq());
      break;
    }
    case FamilyName::kWprimePhiT: {
      fam.source = &wprime();
      fam.target = &wprime_toeplitz();
      fam.images.resize(wprime().alphabet()->size());
      TrigPoly u = wprime_ut();
      TrigPoly uinv = parameter_negate(u);
      fam.images[wprime().alphabet()->find("x'")] =
          normal_form(tparse("x'*vstar", wprime_toeplitz()) * uinv, wprime_toeplitz());
      fam.images[wprime().alphabet()->find("y'")] =
          normal_form(tparse("y'", wprime_toeplitz()) * u * tparse("v", wprime_toeplitz()),
                      wprime_toeplitz());
      break;
    }
    case FamilyName::kWprimePhiBar: {
      fam.source = &wprime();
      fam.target = &wprime_toeplitz();
      fam.images.resize(wprime().alphabet()->size());
      fam.images[wprime().alphabet()->find("x'")] =
          tparse("x'*vstar - x'*e*vstar", wprime_toeplitz());
      fam.images[wprime().alphabet()->find("y'")] =
          tparse("y'*v - y'*v*e", wprime_toeplitz());
      break;
    }
    case FamilyName::kBilinearRotation: {
      fam.source = nullptr;
      fam.target = nullptr;
      break;
    }
  }
  return fam;
}

const char* family_cli_name(FamilyName name) {
  switch (name) {
    case FamilyName::kPairPhi: return "pair_phi";
    case FamilyName::kPairPhiPrime: return "pair_phi_prime";
    case FamilyName::kPairPsi: return "pair_psi";
    case FamilyName::kPairUt: return "pair_ut";
    case FamilyName::kPairUtPrime: return "pair_ut_prime";
    case FamilyName::kWprimePhiT: return "wprime_phi_t";
    case FamilyName::kWprimePhiBar: return "wprime_phibar";
    case FamilyName::kBilinearRotation: return "bilinear_rotation";
  }
  return "?";
}

std::optional<FamilyName> family_from_cli_name(const std::string& name) {
  for (FamilyName f : all_families())
    if (name == family_cli_name(f)) return f;
  return std::nullopt;
}

std::vector<FamilyName> all_families() {
  return {FamilyName::kPairPhi,    FamilyName::kPairPhiPrime, FamilyName::kPairPsi,
          FamilyName::kPairUt,     FamilyName::kPairUtPrime,  FamilyName::kWprimePhiT,
          FamilyName::kWprimePhiBar, FamilyName::kBilinearRotation};
}

TrigPoly apply_family(const HomFamily& fam, const TrigPoly& p) {
  if (!fam.source) throw DomainError("apply_family: not an algebra family");
  auto full = derive_images<Trig>(fam.images, *fam.source, *fam.target);
  return apply_hom(full, fam.target->alphabet(), p);
}

InvertReport invert_check(const TrigPoly& u, const TrigPoly& candidate,
                          const RewriteSystem& sys) {
  TrigPoly one = TrigPoly::unit(sys.alphabet());
  TrigPoly left = normal_form<Trig>(u * candidate - one, sys);
  TrigPoly right = normal_form<Trig>(candidate * u - one, sys);
  return {left.is_zero() && right.is_zero(), std::move(left), std::move(right)};
}

namespace {

FamilyReport rotation_report() {
  // phi_t = cos t beta_1 + sin t beta_2 with <beta_1 x | beta_2 y> = 0:
  // beta_1, beta_2 interleave a finite basis into even/odd slots. The Gram
  // matrix of phi_t must reduce to the identity with t symbolic.
  FamilyReport rep;
  rep.family = family_cli_name(FamilyName::kBilinearRotation);
  const unsigned n = 6;
  auto image = [&](unsigned i) {
    // phi_t(e_i) as a vector of Trig entries over 2n slots
    std::vector<Trig> v(2 * n);
    v[2 * i] = Trig::cos();
    v[2 * i + 1] = Trig::sin();
    return v;
  };
  // orthogonality of the two interleaved branches
  bool ortho = true;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Rational ip;
      for (unsigned k = 0; k < 2 * n; ++k) {
        Rational b1 = k == 2 * i ? Rational(1) : Rational(0);
        Rational b2 = k == 2 * j + 1 ? Rational(1) : Rational(0);
        ip += b1 * b2;
      }
      ortho = ortho && ip.is_zero();
    }
  rep.checks.push_back({"<beta1 x | beta2 y> = 0", ortho, TrigPoly()});
  bool gram = true;
  for (unsigned i = 0; i < n && gram; ++i) {
    for (unsigned j = 0; j < n && gram; ++j) {
      std::vector<Trig> vi = image(i), vj = image(j);
      Trig ip;
      for (unsigned k = 0; k < 2 * n; ++k) ip += vi[k] * vj[k];
      Trig expect = i == j ? Trig(Rational(1)) : Trig();
      gram = ip == expect;
    }
  }
  rep.checks.push_back({"<phi_t x | phi_t y> = <x | y>", gram, TrigPoly()});
  return rep;
}

}  // namespace

FamilyReport hom_relations_check(const HomFamily& fam) {
  if (fam.name == FamilyName::kBilinearRotation) return rotation_report();
  FamilyReport rep;
  rep.family = fam.label;
  auto full = derive_images<Trig>(fam.images, *fam.source, *fam.target);
  for (const auto& rule : fam.source->rules()) {
    TrigPoly rel = TrigPoly::monomial(fam.source->alphabet(), rule.lhs, Trig(Rational(1)));
    rel -= rule.rhs.map_scalars<Trig>([](const Rational& c) { return Trig(c); });
    TrigPoly image = apply_hom(full, fam.target->alphabet(), rel);
    TrigPoly nf = normal_form(image, *fam.target);
    std::string label = fam.source->alphabet()->word_str(rule.lhs) + " -> " +
                        print(rule.rhs);
    bool ok = nf.is_zero();
    rep.checks.push_back({std::move(label), ok, std::move(nf)});
  }
  return rep;
}

NCPoly<Rational> apply_assignment(const std::vector<NCPoly<Rational>>& images,
                                  const RewriteSystem& source, const RewriteSystem& target,
                                  const NCPoly<Rational>& p) {
  auto full = derive_images<Rational>(images, source, target);
  return normal_form(apply_hom(full, target.alphabet(), p), target);
}

bool every_word_contains(const NCPoly<Rational>& nf, const RewriteSystem& sys,
                         const std::string& gen) {
  int g = sys.alphabet()->find(gen);
  if (g < 0) throw DomainError("every_word_contains: no generator " + gen);
  for (const auto& [w, c] : nf.terms()) {
    bool found = false;
    for (uint8_t l : w) found = found || l == g;
    if (!found) return false;
  }
  return true;
}

bool every_word_contains_trig(const TrigPoly& nf, const RewriteSystem& sys,
                              const std::string& gen) {
  int g = sys.alphabet()->find(gen);
  if (g < 0) throw DomainError("every_word_contains: no generator " + gen);
  for (const auto& [w, c] : nf.terms()) {
    bool found = false;
    for (uint8_t l : w) found = found || l == g;
    if (!found) return false;
  }
  return true;
}

QuasiHomReport quasihom_check(const QuasiHomSpec& spec) {
  QuasiHomReport rep;
  rep.label = spec.label;
  auto alpha = derive_images<Rational>(spec.alpha, *spec.source, *spec.target);
  auto alpha_bar = derive_images<Rational>(spec.alpha_bar, *spec.source, *spec.target);
  for (const std::string& g : spec.gens) {
    int gi = spec.source->alphabet()->find(g);
    if (gi < 0) throw DomainError("quasihom: unknown generator " + g);
    NCPoly<Rational> ag = alpha[gi], abg = alpha_bar[gi];
    NCPoly<Rational> diff = normal_form(ag - abg, *spec.target);
    rep.items.push_back({"alpha(" + g + ") - alphabar(" + g + ") in B", spec.in_B(diff)});
    for (size_t bi = 0; bi < spec.b_family.size(); ++bi) {
      NCPoly<Rational> left = normal_form(ag * spec.b_family[bi], *spec.target);
      NCPoly<Rational> right = normal_form(spec.b_family[bi] * ag, *spec.target);
      rep.items.push_back(
          {"alpha(" + g + ") b" + std::to_string(bi) + " in B", spec.in_B(left)});
      rep.items.push_back(
          {"b" + std::to_string(bi) + " alpha(" + g + ") in B", spec.in_B(right)});
    }
  }
  return rep;
}

namespace {

// y'^n (x'y')^p x'^m (x) e_nm as free words over W~' (x) T.
NCPoly<Rational> b_monomial(unsigned n, unsigned p, unsigned m) {
  const RewriteSystem& sys = wprime_toeplitz();
  const Alphabet* A = sys.alphabet();
  NCPoly<Rational> out = NCPoly<Rational>::unit(A);
  NCPoly<Rational> xp = NCPoly<Rational>::generator(A, "x'");
  NCPoly<Rational> yp = NCPoly<Rational>::generator(A, "y'");
  for (unsigned i = 0; i < n; ++i) out *= yp;
  for (unsigned i = 0; i < p; ++i) out *= xp * yp;
  for (unsigned i = 0; i < m; ++i) out *= xp;
  NCPoly<Rational> v = NCPoly<Rational>::generator(A, "v");
  NCPoly<Rational> e = NCPoly<Rational>::generator(A, "e");
  NCPoly<Rational> vs = NCPoly<Rational>::generator(A, "vstar");
  for (unsigned i = 0; i < n; ++i) out *= v;
  out *= e;
  for (unsigned i = 0; i < m; ++i) out *= vs;
  return out;
}

}  // namespace

QuasiHomSpec quasihom_phi0_spec() {
  QuasiHomSpec spec;
  spec.label = "(phi_0, phibar) against B = span(y'^n c x'^m (x) e_nm)";
  spec.source = &wprime();
  spec.target = &wprime_toeplitz();
  const Alphabet* A = wprime_toeplitz().alphabet();
  spec.alpha.resize(wprime().alphabet()->size());
  spec.alpha[wprime().alphabet()->find("x'")] = parse("x'*vstar", A);
  spec.alpha[wprime().alphabet()->find("y'")] = parse("y'*v", A);
  spec.alpha_bar.resize(wprime().alphabet()->size());
  spec.alpha_bar[wprime().alphabet()->find("x'")] = parse("x'*vstar - x'*e*vstar", A);
  spec.alpha_bar[wprime().alphabet()->find("y'")] = parse("y'*v - y'*v*e", A);
  spec.in_B = [](const NCPoly<Rational>& p) {
    try {
      b_membership(p);
      return true;
    } catch (const DomainError&) {
      return false;
    }
  };
  for (unsigned n = 0; n <= 2; ++n)
    for (unsigned m = 0; m <= 2; ++m)
      for (unsigned p = 0; p <= 1; ++p) {
        if (n == 0 && m == 0 && p == 0) continue;
        spec.b_family.push_back(b_monomial(n, p, m));
      }
  spec.gens = {"x'", "y'"};
  return spec;
}

QuasiHomSpec quasihom_phi_half_spec() {
  QuasiHomSpec spec;
  spec.label = "(phi_{pi/2}, phibar) against K-span membership";
  spec.source = &wprime();
  spec.target = &wprime_toeplitz();
  const Alphabet* A = wprime_toeplitz().alphabet();
  spec.alpha.resize(wprime().alphabet()->size());
  // v* u_{-pi/2} = (1-e)v* + e and u_{pi/2} v = v(1-e) + e
  spec.alpha[wprime().alphabet()->find("x'")] =
      parse("x'*vstar - x'*e*vstar + x'*e", A);
  spec.alpha[wprime().alphabet()->find("y'")] = parse("y'*v - y'*v*e + y'*e", A);
  spec.alpha_bar.resize(wprime().alphabet()->size());
  spec.alpha_bar[wprime().alphabet()->find("x'")] = parse("x'*vstar - x'*e*vstar", A);
  spec.alpha_bar[wprime().alphabet()->find("y'")] = parse("y'*v - y'*v*e", A);
  spec.in_B = [](const NCPoly<Rational>& p) {
    return every_word_contains(p, wprime_toeplitz(), "e");
  };
  const char* words[] = {"e", "v*e", "e*vstar", "v*e*vstar", "x'*e", "y'*e", "x'*v*e*vstar",
                         "y'*e*vstar"};
  for (const char* w : words) spec.b_family.push_back(parse(w, A));
  spec.gens = {"x'", "y'"};
  return spec;
}

QuasiHomReport difference_hom_check(const QuasiHomSpec& spec, unsigned trials, uint64_t seed) {
  QuasiHomReport rep;
  rep.label = "difference hom: " + spec.label;
  auto alpha = derive_images<Rational>(spec.alpha, *spec.source, *spec.target);
  auto alpha_bar = derive_images<Rational>(spec.alpha_bar, *spec.source, *spec.target);
  // orthogonality on generators
  for (const std::string& g : spec.gens) {
    for (const std::string& h : spec.gens) {
      int gi = spec.source->alphabet()->find(g);
      int hi = spec.source->alphabet()->find(h);
      NCPoly<Rational> phi_g = alpha[gi] - alpha_bar[gi];
      bool ok1 = normal_form(phi_g * alpha_bar[hi], *spec.target).is_zero();
      bool ok2 = normal_form(alpha_bar[hi] * phi_g, *spec.target).is_zero();
      rep.items.push_back({"phi(" + g + ") alphabar(" + h + ") = 0", ok1});
      rep.items.push_back({"alphabar(" + h + ") phi(" + g + ") = 0", ok2});
    }
  }
  // multiplicativity of the difference on sampled products
  std::mt19937_64 rng(seed);
  auto rand_word = [&]() {
    NCPoly<Rational> p = NCPoly<Rational>::unit(spec.source->alphabet());
    unsigned len = unsigned(rng() % 3) + 1;
    for (unsigned i = 0; i < len; ++i) {
      const std::string& g = spec.gens[rng() % spec.gens.size()];
      p *= NCPoly<Rational>::generator(spec.source->alphabet(), g);
    }
    return p;
  };
  auto phi_lin = [&](const NCPoly<Rational>& p) {
    return normal_form(apply_hom(alpha, spec.target->alphabet(), p) -
                           apply_hom(alpha_bar, spec.target->alphabet(), p),
                       *spec.target);
  };
  bool mult = true;
  for (unsigned trial = 0; trial < trials; ++trial) {
    NCPoly<Rational> p = rand_word(), q = rand_word();
    NCPoly<Rational> lhs = phi_lin(p * q);
    NCPoly<Rational> rhs = normal_form(phi_lin(p) * phi_lin(q), *spec.target);
    mult = mult && lhs == rhs;
  }
  rep.items.push_back({"phi = alpha - alphabar multiplicative on sampled products", mult});
  return rep;
}

BElem b_membership(const NCPoly<Rational>& p) {
  const RewriteSystem& sys = wprime_toeplitz();
  const Alphabet& A = *sys.alphabet();
  NCPoly<Rational> nf = normal_form(p, sys);
  int gv = A.find("v"), gvs = A.find("vstar"), ge = A.find("e");
  int gf = A.find("f"), gx = A.find("x'"), gy = A.find("y'");

  // Split each normal word into its W' prefix and Toeplitz suffix; group
  // the W' parts by the e_nm suffix.
  std::map<std::pair<unsigned, unsigned>, NCPoly<Rational>> groups;
  for (const auto& [w, c] : nf.terms()) {
    size_t i = 0;
    Word wprime_part;
    while (i < w.size() && (w[i] == gf || w[i] == gx || w[i] == gy)) {
      wprime_part.push_back(w[i]);
      ++i;
    }
    unsigned n = 0, m = 0;
    bool has_e = false;
    while (i < w.size() && w[i] == gv) ++i, ++n;
    if (i < w.size() && w[i] == ge) ++i, has_e = true;
    while (i < w.size() && w[i] == gvs) ++i, ++m;
    if (i != w.size() || !has_e)
      throw DomainError("b_membership: Toeplitz factor is not a matrix unit");
    // re-index the W' part into the standalone W' alphabet
    const Alphabet& WP = *wprime().alphabet();
    Word translated;
    for (uint8_t l : wprime_part) {
      const std::string& name = A.gen(l).name;
      translated.push_back(uint8_t(WP.find(name)));
    }
    auto it = groups.try_emplace(std::make_pair(n, m),
                                 NCPoly<Rational>(wprime().alphabet())).first;
    it->second.add(std::move(translated), c);
  }

  // Peel each group against the normal forms of y'^n (x'y')^d x'^m.
  BElem out;
  const Alphabet& WP = *wprime().alphabet();
  int wgx = WP.find("x'"), wgy = WP.find("y'");
  for (auto& [nm, w] : groups) {
    auto [n, m] = nm;
    Poly c;
    NCPoly<Rational> rem = w;
    while (!rem.is_zero()) {
      const auto& [top, coef] = *rem.terms().begin();
      // shape y'^{n+d} x'^{m+d} without f
      unsigned a = 0, b = 0;
      size_t i = 0;
      while (i < top.size() && top[i] == wgy) ++i, ++a;
      while (i < top.size() && top[i] == wgx) ++i, ++b;
      if (i != top.size() || a < n || b < m || (a - n) != (b - m))
        throw DomainError("b_membership: W' part is not of the form y'^n c(x'y') x'^m");
      unsigned d = a - n;
      if (n == 0 && m == 0 && d == 0)
        throw DomainError("b_membership: constant term in the (0,0) slot");
      c += Poly::monomial(d, coef);
      // subtract coef * NF(y'^n (x'y')^d x'^m)
      NCPoly<Rational> basis = NCPoly<Rational>::unit(&WP);
      NCPoly<Rational> xp = NCPoly<Rational>::generator(&WP, "x'");
      NCPoly<Rational> yp = NCPoly<Rational>::generator(&WP, "y'");
      for (unsigned q = 0; q < n; ++q) basis *= yp;
      for (unsigned q = 0; q < d; ++q) basis *= xp * yp;
      for (unsigned q = 0; q < m; ++q) basis *= xp;
      rem -= normal_form(basis, wprime()) * coef;
    }
    if (!c.is_zero()) out.entries[{n, m}] = c;
  }
  return out;
}

std::map<std::pair<unsigned, unsigned>, Poly> b_injection(const BElem& b) {
  std::map<std::pair<unsigned, unsigned>, Poly> out;
  for (const auto& [nm, c] : b.entries) {
    Poly img = c * rising_factorial(nm.second);
    if (!img.is_zero()) out[nm] = img;
  }
  return out;
}

std::map<std::pair<unsigned, unsigned>, Poly> b_image_mul(
    const std::map<std::pair<unsigned, unsigned>, Poly>& a,
    const std::map<std::pair<unsigned, unsigned>, Poly>& b) {
  std::map<std::pair<unsigned, unsigned>, Poly> out;
  for (const auto& [nm, p] : a) {
    for (const auto& [kl, q] : b) {
      if (nm.second != kl.first) continue;
      Poly prod = p * q;
      if (prod.is_zero()) continue;
      auto [it, inserted] = out.try_emplace({nm.first, kl.second}, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

MoritaReport morita_corner_check(unsigned truncation, unsigned trials, uint64_t seed) {
  MoritaReport rep;
  rep.label = "corner context in K (x) C[t] via the Toeplitz presentation";
  const RewriteSystem& T = toeplitz();
  const Alphabet* A = T.alphabet();
  using P = NCPoly<Poly>;
  auto unit_p = [&](unsigned i, unsigned j) { return toeplitz_unit<Poly>(i, j); };
  P xi0 = unit_p(0, 0);  // e_00 (x) 1 with A realized on the (0,0) slot
  std::mt19937_64 rng(seed);
  auto rand_poly_t = [&]() {
    Poly p;
    for (unsigned d = 0; d <= 2; ++d) p += Poly::monomial(d, Rational(long(rng() % 7) - 3));
    return p;
  };
  auto in_A = [&](const P& p) {
    P nf = normal_form(p, T);
    for (const auto& [w, c] : nf.terms()) {
      if (w != A->word_of({"e"})) return false;
    }
    return true;
  };
  auto in_B = [&](const P& p) {
    P nf = normal_form(p, T);
    int ge = A->find("e");
    for (const auto& [w, c] : nf.terms()) {
      bool has = false;
      for (uint8_t l : w) has = has || l == ge;
      if (!has) return false;
    }
    return true;
  };

  bool bullets = true, reproducing = true, dual_bullets = true, dual_reproducing = true,
       side = true;
  for (unsigned trial = 0; trial < trials; ++trial) {
    P a = unit_p(0, 0) * rand_poly_t();
    // eta_0 a xi_0 in B
    bullets = bullets && in_B(normal_form(xi0 * a * xi0, T));
    // (xi_0 eta_0) a = a
    reproducing = reproducing && normal_form(xi0 * xi0 * a, T) == normal_form(a, T);
    // dual families xi'_l = e_l0, eta'_k = e_0k
    for (unsigned l = 0; l < truncation && dual_bullets; ++l)
      for (unsigned k = 0; k < truncation; ++k) {
        P b = unit_p(unsigned(rng() % truncation), unsigned(rng() % truncation)) *
              rand_poly_t();
        if (!in_A(normal_form(unit_p(0, k) * b * unit_p(l, 0), T))) {
          dual_bullets = false;
          break;
        }
      }
    // sum_l xi'_l eta'_l reproduces corner-supported b
    P corner(A);
    for (unsigned l = 0; l < truncation; ++l) corner += unit_p(l, 0) * unit_p(0, l);
    P b = unit_p(unsigned(rng() % truncation), unsigned(rng() % truncation)) * rand_poly_t();
    dual_reproducing =
        dual_reproducing && normal_form(corner * b, T) == normal_form(b, T);
    // side conditions: A xi_0 xi'_l in A and eta'_k eta_0 A in A
    for (unsigned l = 0; l < truncation; ++l) {
      side = side && in_A(normal_form(a * xi0 * unit_p(l, 0), T));
      side = side && in_A(normal_form(unit_p(0, l) * xi0 * a, T));
    }
  }
  rep.items.push_back({"eta_0 A xi_0 in B", bullets});
  rep.items.push_back({"(xi_0 eta_0) a = a on A", reproducing});
  rep.items.push_back({"eta'_k B xi'_l in A", dual_bullets});
  rep.items.push_back({"sum_l xi'_l eta'_l reproduces the truncated corner", dual_reproducing});
  rep.items.push_back({"A xi_0 xi'_l in A and eta'_k eta_0 A in A", side});
  return rep;
}

MoritaReport morita_interval_check(const Rational& t0, unsigned D, unsigned trials,
                                  uint64_t seed) {
  MoritaReport rep;
  rep.label = "interval-projection context in the coset model";
  std::mt19937_64 rng(seed);
  const unsigned max_kl = 2, max_deg = 2, fam = 3;

  auto xi = [&](unsigned i) {
    RadMatrix m(D);
    m.add(i, 0, Radical(Rational(1)));
    return m;
  };
  auto eta = [&](unsigned j) {
    RadMatrix m(D);
    m.add(0, j, Radical(Rational(1)));
    return m;
  };
  auto rising_at = [&](unsigned k) {
    // f_k(t0) as an exact rational
    return rising_factorial(k).eval(t0);
  };

  bool bullets = true, reproducing = true, side = true;
  for (unsigned trial = 0; trial < trials; ++trial) {
    // random ideal element, realized in the coset model
    NCPoly<Rational> words(wprime().alphabet());
    IdealElem ideal;
    for (int i = 0; i < 2; ++i) {
      unsigned k = unsigned(rng() % (max_kl + 1)), l = unsigned(rng() % (max_kl + 1));
      Poly P;
      for (unsigned d = (k == 0 && l == 0) ? 1 : 0; d <= max_deg; ++d)
        P += Poly::monomial(d, Rational(long(rng() % 7) - 3));
      ideal.add(k, l, P);
    }
    for (const auto& [kl, P] : ideal.entries())
      words += wprime_ideal_word(kl.first, kl.second, P);
    RadMatrix a = rep_Wprime(words, t0, D);

    // eta_j a xi_i lands in the t(1-t)C[t] model: supported at (0,0) with
    // the chi-conjugation value sqrt(f_j f_i)(t0) P_ji(t0) (t0 - 1).
    for (unsigned j = 0; j <= fam && bullets; ++j) {
      for (unsigned i = 0; i <= fam; ++i) {
        RadMatrix m = eta(j) * a * xi(i);
        for (const auto& [pos, v] : m.entries()) {
          if (pos != std::make_pair(0u, 0u)) {
            bullets = false;
            break;
          }
          Radical expected = Radical::sqrt_of(rising_at(j)) *
                             Radical::sqrt_of(rising_at(i)) * Radical(t0 - Rational(1));
          if (!v.is_rational_multiple_of(expected)) bullets = false;
        }
      }
    }
    // (sum_i xi_i eta_i) a = a once the family covers the support
    RadMatrix proj(D);
    for (unsigned i = 0; i <= max_kl; ++i) proj += xi(i) * eta(i);
    reproducing = reproducing && (proj * a) == a;
    // side conditions: chi-orthogonality gives xi_i xi'_l = 0 for l >= 1,
    // and A xi_i xi'_0 stays supported in column 0 (the y'^k Q f shape).
    for (unsigned i = 0; i <= fam; ++i) {
      for (unsigned l = 1; l <= fam; ++l) side = side && (a * (xi(i) * xi(l))).is_zero();
      RadMatrix m = a * (xi(i) * xi(0));
      for (const auto& [pos, v] : m.entries()) side = side && pos.second == 0;
    }
  }
  rep.items.push_back({"eta_j a xi_i lands in the t(1-t)C[t] model", bullets});
  rep.items.push_back({"(sum xi_i eta_i) a = a on the truncated family", reproducing});
  rep.items.push_back({"chi-orthogonality collapses mismatched shifts", side});
  return rep;
}

MoritaReport morita_empty_check() {
  MoritaReport rep;
  rep.label = "empty families with A = 0";
  // no families, no elements: all bullets are vacuously true
  rep.items.push_back({"vacuous bullets", true});
  rep.items.push_back({"vacuous reproducing identity", true});
  return rep;
}

}  // namespace wnf
