#include "wnf/presentations.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace wnf {

namespace {

RewriteRule rule_of(const Alphabet& alph, const std::string& lhs, const std::string& rhs) {
  NCPoly<Rational> l = parse(lhs, &alph);
  if (l.term_count() != 1 || !l.terms().begin()->second.is_one())
    throw DomainError("rule lhs must be a single monic word: " + lhs);
  return {l.terms().begin()->first, parse(rhs, &alph)};
}

std::unique_ptr<RewriteSystem> build(const std::string& name, std::vector<Generator> gens,
                                     bool unitized,
                                     const std::vector<std::pair<std::string, std::string>>& rules) {
  auto alph = std::make_unique<Alphabet>(name, std::move(gens), unitized);
  std::vector<RewriteRule> rr;
  rr.reserve(rules.size());
  for (const auto& [l, r] : rules) rr.push_back(rule_of(*alph, l, r));
  return std::make_unique<RewriteSystem>(std::move(alph), std::move(rr));
}

std::unique_ptr<RewriteSystem> make_weyl(unsigned n) {
  if (n == 0 || n > 26) throw DomainError("weyl(n): n out of range");
  if (n == 1) {
    return build("weyl", {{"x", ""}, {"y", ""}}, true, {{"x*y", "y*x + 1"}});
  }
  // Precedence x_n > ... > x_1 > y_n > ... > y_1; basis y^a x^b with
  // ascending indices inside each block.
  std::vector<Generator> gens;
  for (unsigned i = n; i >= 1; --i) gens.push_back({"x" + std::to_string(i), ""});
  for (unsigned i = n; i >= 1; --i) gens.push_back({"y" + std::to_string(i), ""});
  std::vector<std::pair<std::string, std::string>> rules;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      std::string xi = "x" + std::to_string(i), yj = "y" + std::to_string(j);
      rules.push_back({xi + "*" + yj, yj + "*" + xi + (i == j ? " + 1" : "")});
    }
  }
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j < i; ++j) {
      std::string xi = "x" + std::to_string(i), xj = "x" + std::to_string(j);
      rules.push_back({xi + "*" + xj, xj + "*" + xi});
      std::string yi = "y" + std::to_string(i), yj = "y" + std::to_string(j);
      rules.push_back({yi + "*" + yj, yj + "*" + yi});
    }
  }
  return build("weyl" + std::to_string(n), std::move(gens), true, rules);
}

std::string insert_suffix(const std::string& name, const std::string& suffix) {
  if (suffix.empty()) return name;
  size_t cut = name.size();
  while (cut > 0 && name[cut - 1] == '\'') --cut;
  return name.substr(0, cut) + suffix + name.substr(cut);
}

}  // namespace

const RewriteSystem& weyl(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<RewriteSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = make_weyl(n);
  return *slot;
}

const RewriteSystem& wprime() {
  static auto sys = build("wprime", {{"f", ""}, {"x'", ""}, {"y'", ""}}, true,
                          {{"f*y'", "0"}, {"x'*f", "0"}, {"x'*y'", "y'*x' + 1 + f"}});
  return *sys;
}

const RewriteSystem& toeplitz() {
  static auto sys = build("toeplitz", {{"v", ""}, {"vstar", "v*"}, {"e", ""}}, true,
                          {{"vstar*v", "1"},
                           {"v*vstar", "1 - e"},
                           {"e*v", "0"},
                           {"vstar*e", "0"},
                           {"e*e", "e"}});
  return *sys;
}

std::unique_ptr<RewriteSystem> make_skew(const Rational& a, const Rational& b) {
  if (a.is_zero()) throw DomainError("skew: alpha must be invertible (a != 0)");
  auto alph = std::make_unique<Alphabet>(
      "skew", std::vector<Generator>{{"u", ""}, {"uinv", ""}, {"D", ""}}, true);
  // u D = alpha(D) u and u^{-1} D = alpha^{-1}(D) u^{-1}.
  auto mono = [&](const std::string& g, const Rational& c) {
    return NCPoly<Rational>::generator(alph.get(), g) * c;
  };
  NCPoly<Rational> du = parse("D*u", alph.get()) * a + mono("u", b);
  Rational inv_a = Rational(1) / a;
  NCPoly<Rational> duinv = parse("D*uinv", alph.get()) * inv_a + mono("uinv", -(b / a));
  std::vector<RewriteRule> rules;
  rules.push_back(rule_of(*alph, "u*uinv", "1"));
  rules.push_back(rule_of(*alph, "uinv*u", "1"));
  rules.push_back({alph->word_of({"u", "D"}), std::move(du)});
  rules.push_back({alph->word_of({"uinv", "D"}), std::move(duinv)});
  return std::make_unique<RewriteSystem>(std::move(alph), std::move(rules));
}

const RewriteSystem& skew() {
  static auto sys = make_skew(Rational(1), Rational(-1));
  return *sys;
}

const RewriteSystem& laurent() {
  static auto sys = build("laurent", {{"z", ""}, {"zinv", ""}}, true,
                          {{"z*zinv", "1"}, {"zinv*z", "1"}});
  return *sys;
}

std::unique_ptr<RewriteSystem> make_free(const std::vector<std::string>& gens, bool unitized,
                                         const std::string& name) {
  std::vector<Generator> gg;
  for (const auto& g : gens) gg.push_back({g, ""});
  auto alph = std::make_unique<Alphabet>(name, std::move(gg), unitized);
  return std::make_unique<RewriteSystem>(std::move(alph), std::vector<RewriteRule>{});
}

std::unique_ptr<RewriteSystem> tensor_product(const RewriteSystem& a, const RewriteSystem& b,
                                              const std::string& name,
                                              const std::string& suffix_a,
                                              const std::string& suffix_b) {
  if (!a.alphabet()->unitized() || !b.alphabet()->unitized())
    throw DomainError("tensor_product: factors must be unitized presentations");
  const Alphabet& aa = *a.alphabet();
  const Alphabet& ab = *b.alphabet();
  std::vector<Generator> gens;
  // Second factor first: higher precedence makes the cross-commutation rules
  // order-decreasing, so normal words carry the first factor on the left.
  bool renamed_b = !suffix_b.empty();
  bool renamed_a = !suffix_a.empty();
  for (size_t i = 0; i < ab.size(); ++i)
    gens.push_back({insert_suffix(ab.gen(i).name, suffix_b), renamed_b ? "" : ab.gen(i).alias});
  for (size_t i = 0; i < aa.size(); ++i)
    gens.push_back({insert_suffix(aa.gen(i).name, suffix_a), renamed_a ? "" : aa.gen(i).alias});
  auto alph = std::make_unique<Alphabet>(name, std::move(gens), true);

  size_t nb = ab.size();
  auto remap_word = [&](const Word& w, size_t offset) {
    Word out;
    out.reserve(w.size());
    for (uint8_t g : w) out.push_back(uint8_t(g + offset));
    return out;
  };
  auto remap_poly = [&](const NCPoly<Rational>& p, size_t offset) {
    NCPoly<Rational> out(alph.get());
    for (const auto& [w, c] : p.terms()) out.add(remap_word(w, offset), c);
    return out;
  };

  std::vector<RewriteRule> rules;
  for (const auto& r : b.rules()) rules.push_back({remap_word(r.lhs, 0), remap_poly(r.rhs, 0)});
  for (const auto& r : a.rules()) rules.push_back({remap_word(r.lhs, nb), remap_poly(r.rhs, nb)});
  for (size_t gb = 0; gb < nb; ++gb) {
    for (size_t ga = 0; ga < aa.size(); ++ga) {
      Word lhs{uint8_t(gb), uint8_t(nb + ga)};
      Word rhs{uint8_t(nb + ga), uint8_t(gb)};
      rules.push_back({lhs, NCPoly<Rational>::monomial(alph.get(), rhs, Rational(1))});
    }
  }
  return std::make_unique<RewriteSystem>(std::move(alph), std::move(rules));
}

const RewriteSystem& wprime_toeplitz() {
  static auto sys = tensor_product(wprime(), toeplitz(), "wprime_toeplitz");
  return *sys;
}

const RewriteSystem& toeplitz_sq() {
  static auto sys = tensor_product(toeplitz(), toeplitz(), "toeplitz_sq", "1", "2");
  return *sys;
}

const RewriteSystem* find_system(const std::string& name) {
  if (name == "weyl") return &weyl(1);
  if (name.rfind("weyl", 0) == 0 && name.size() > 4) {
    try {
      unsigned n = std::stoul(name.substr(4));
      return &weyl(n);
    } catch (const std::exception&) {
      return nullptr;
    }
  }
  if (name == "wprime") return &wprime();
  if (name == "toeplitz") return &toeplitz();
  if (name == "skew") return &skew();
  if (name == "laurent") return &laurent();
  if (name == "wprime_toeplitz") return &wprime_toeplitz();
  if (name == "toeplitz_sq") return &toeplitz_sq();
  return nullptr;
}

std::unique_ptr<RewriteSystem> load_presentation(const std::string& text,
                                                 const std::string& name) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> gen_names;
  std::vector<std::string> order_names;
  bool unitized = false;
  std::vector<std::pair<std::string, std::string>> rules;
  auto trim = [](std::string s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw DomainError("presentation line " + std::to_string(lineno) + ": missing ':'");
    std::string key = trim(line.substr(0, colon));
    std::string val = trim(line.substr(colon + 1));
    if (key == "alphabet") {
      std::istringstream vs(val);
      std::string g;
      while (vs >> g) gen_names.push_back(g);
    } else if (key == "unitized") {
      unitized = (val == "true" || val == "1" || val == "yes");
    } else if (key == "order") {
      // "deglex a > b > c"
      if (val.rfind("deglex", 0) != 0)
        throw DomainError("presentation: only deglex orders are supported");
      std::string rest = val.substr(6);
      std::string tok;
      std::istringstream vs(rest);
      while (vs >> tok)
        if (tok != ">") order_names.push_back(tok);
    } else if (key == "rule") {
      auto arrow = val.find("->");
      if (arrow == std::string::npos)
        throw DomainError("presentation line " + std::to_string(lineno) + ": missing '->'");
      rules.push_back({trim(val.substr(0, arrow)), trim(val.substr(arrow + 2))});
    } else {
      throw DomainError("presentation: unknown key '" + key + "'");
    }
  }
  if (gen_names.empty()) throw DomainError("presentation: no alphabet");
  if (!order_names.empty()) {
    if (order_names.size() != gen_names.size())
      throw DomainError("presentation: order must list every generator");
    for (const auto& g : order_names) {
      bool known = false;
      for (const auto& h : gen_names) known = known || g == h;
      if (!known) throw DomainError("presentation: order names unknown generator '" + g + "'");
    }
    gen_names = order_names;
  }
  std::vector<Generator> gens;
  for (const auto& g : gen_names) gens.push_back({g, ""});
  return build(name, std::move(gens), unitized, rules);
}

}  // namespace wnf
