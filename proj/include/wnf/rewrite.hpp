#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wnf/ncpoly.hpp"
#include "wnf/parse.hpp"

namespace wnf {

// One oriented rule lhs -> rhs. The system's constructor checks that lhs is
// strictly greater than every rhs word in the deglex order, which makes
// reduction terminating (deglex is compatible with concatenation).
struct RewriteRule {
  Word lhs;
  NCPoly<Rational> rhs;
};

class RewriteSystem {
 public:
  // The alphabet is owned through a unique_ptr so its address is stable;
  // rule polynomials must have been built against exactly this instance.
  RewriteSystem(std::unique_ptr<Alphabet> alphabet, std::vector<RewriteRule> rules)
      : alph_(std::move(alphabet)), rules_(std::move(rules)) {
    for (const auto& r : rules_) {
      if (r.lhs.empty()) throw DomainError("rewrite rule with empty lhs");
      for (const auto& [w, c] : r.rhs.terms()) {
        if (!deglex_greater(r.lhs, w))
          throw DomainError("rewrite rule is not order-decreasing: " +
                            alph_->word_str(r.lhs) + " -> " + alph_->word_str(w));
      }
      max_lhs_ = std::max(max_lhs_, r.lhs.size());
    }
  }

  RewriteSystem(const RewriteSystem&) = delete;
  RewriteSystem& operator=(const RewriteSystem&) = delete;

  const Alphabet* alphabet() const { return alph_.get(); }
  const std::string& name() const { return alph_->name(); }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  size_t max_lhs_length() const { return max_lhs_; }

  // First (rule, position) whose lhs occurs as a subword, scanning positions
  // left to right; nullopt when w is irreducible.
  std::optional<std::pair<size_t, size_t>> find_redex(const Word& w) const {
    for (size_t pos = 0; pos < w.size(); ++pos) {
      for (size_t r = 0; r < rules_.size(); ++r) {
        const Word& lhs = rules_[r].lhs;
        if (pos + lhs.size() > w.size()) continue;
        bool match = true;
        for (size_t i = 0; i < lhs.size(); ++i) {
          if (w[pos + i] != lhs[i]) {
            match = false;
            break;
          }
        }
        if (match) return std::make_pair(r, pos);
      }
    }
    return std::nullopt;
  }

  bool is_normal_word(const Word& w) const { return !find_redex(w).has_value(); }

 private:
  std::unique_ptr<Alphabet> alph_;
  std::vector<RewriteRule> rules_;
  size_t max_lhs_ = 0;
};

// Reduce p to its unique irreducible representative. Worklist reduction,
// always expanding the currently largest word; deglex keeps this terminating
// and the critical-pair audit backs uniqueness for the shipped systems.
template <class S>
NCPoly<S> normal_form(const NCPoly<S>& p, const RewriteSystem& sys) {
  if (p.alphabet() != sys.alphabet())
    throw DomainError("normal_form: element is not over the system's alphabet");
  std::map<Word, S, DeglexDescending> work;
  for (const auto& [w, c] : p.terms()) work.emplace(w, c);
  NCPoly<S> result(sys.alphabet());

  auto add_into = [](std::map<Word, S, DeglexDescending>& m, Word w, const S& c) {
    if (ScalarTraits<S>::is_zero(c)) return;
    auto [it, inserted] = m.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (ScalarTraits<S>::is_zero(it->second)) m.erase(it);
    }
  };

  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word& w = node.key();
    const S& c = node.mapped();
    auto redex = sys.find_redex(w);
    if (!redex) {
      result.add(w, c);
      continue;
    }
    const auto& [ri, pos] = *redex;
    const RewriteRule& rule = sys.rules()[ri];
    Word prefix(w.begin(), w.begin() + pos);
    Word suffix(w.begin() + pos + rule.lhs.size(), w.end());
    for (const auto& [rw, rc] : rule.rhs.terms()) {
      Word nw;
      nw.reserve(prefix.size() + rw.size() + suffix.size());
      nw.insert(nw.end(), prefix.begin(), prefix.end());
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), suffix.begin(), suffix.end());
      add_into(work, std::move(nw), c * ScalarTraits<S>::from_rational(rc));
    }
    if (work.size() + result.term_count() > kMaxTermCount)
      throw BudgetError("normal_form: term count budget exceeded");
  }
  return result;
}

template <class S>
struct IdentityReport {
  bool pass;
  NCPoly<S> residual;  // normal form of lhs - rhs; zero iff pass
};

template <class S>
IdentityReport<S> verify_identity(const NCPoly<S>& lhs, const NCPoly<S>& rhs,
                                  const RewriteSystem& sys) {
  NCPoly<S> diff = normal_form<S>(lhs - rhs, sys);
  return {diff.is_zero(), std::move(diff)};
}

// One overlap of two rule left-hand sides together with both one-step
// reductions taken to full normal form.
struct Overlap {
  size_t rule_a;
  size_t rule_b;
  Word word;
  bool joinable;
  NCPoly<Rational> nf_a;
  NCPoly<Rational> nf_b;
};

struct ConfluenceReport {
  std::vector<Overlap> overlaps;
  bool all_joinable() const {
    for (const auto& o : overlaps)
      if (!o.joinable) return false;
    return true;
  }
};

// Critical-pair audit up to the given overlap-word degree. Covers proper
// overlaps (a suffix of one lhs is a prefix of the other) and containments.
ConfluenceReport critical_pairs(const RewriteSystem& sys, size_t degree_bound);

// Product of two skew-Laurent elements in normal form sum p_n(D) u^n; the
// commutation u p(D) = p(alpha(D)) u is exactly what the SKEW rules encode.
template <class S>
NCPoly<S> skew_mul(const NCPoly<S>& a, const NCPoly<S>& b, const RewriteSystem& sys) {
  return normal_form(a * b, sys);
}

}  // namespace wnf
