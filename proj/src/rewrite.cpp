#include "wnf/rewrite.hpp"

namespace wnf {

namespace {

NCPoly<Rational> one_step(const RewriteSystem& sys, const Word& w, size_t rule_index,
                          size_t pos) {
  const RewriteRule& rule = sys.rules()[rule_index];
  NCPoly<Rational> out(sys.alphabet());
  Word prefix(w.begin(), w.begin() + pos);
  Word suffix(w.begin() + pos + rule.lhs.size(), w.end());
  for (const auto& [rw, rc] : rule.rhs.terms()) {
    Word nw;
    nw.reserve(prefix.size() + rw.size() + suffix.size());
    nw.insert(nw.end(), prefix.begin(), prefix.end());
    nw.insert(nw.end(), rw.begin(), rw.end());
    nw.insert(nw.end(), suffix.begin(), suffix.end());
    out.add(std::move(nw), rc);
  }
  return out;
}

bool subword_at(const Word& hay, const Word& needle, size_t pos) {
  if (pos + needle.size() > hay.size()) return false;
  for (size_t i = 0; i < needle.size(); ++i)
    if (hay[pos + i] != needle[i]) return false;
  return true;
}

}  // namespace

ConfluenceReport critical_pairs(const RewriteSystem& sys, size_t degree_bound) {
  if (degree_bound < sys.max_lhs_length())
    throw DomainError("critical_pairs: degree bound below max lhs length");
  ConfluenceReport report;
  const auto& rules = sys.rules();
  auto record = [&](size_t a, size_t b, Word w, size_t pos_a, size_t pos_b) {
    NCPoly<Rational> nf_a = normal_form(one_step(sys, w, a, pos_a), sys);
    NCPoly<Rational> nf_b = normal_form(one_step(sys, w, b, pos_b), sys);
    bool joinable = nf_a == nf_b;
    report.overlaps.push_back({a, b, std::move(w), joinable, std::move(nf_a), std::move(nf_b)});
  };

  for (size_t a = 0; a < rules.size(); ++a) {
    const Word& la = rules[a].lhs;
    for (size_t b = 0; b < rules.size(); ++b) {
      const Word& lb = rules[b].lhs;
      // Proper overlaps: a strict suffix of la equals a strict prefix of lb.
      for (size_t o = 1; o < la.size() && o < lb.size(); ++o) {
        bool match = true;
        for (size_t i = 0; i < o; ++i) {
          if (la[la.size() - o + i] != lb[i]) {
            match = false;
            break;
          }
        }
        if (!match) continue;
        Word w = la;
        w.insert(w.end(), lb.begin() + o, lb.end());
        if (w.size() > degree_bound) continue;
        record(a, b, std::move(w), 0, la.size() - o);
      }
      // Containments: lb occurs strictly inside la (or la = lb for b != a).
      if (lb.size() < la.size() || (b != a && lb.size() == la.size())) {
        for (size_t pos = 0; pos + lb.size() <= la.size(); ++pos) {
          if (b == a && pos == 0) continue;
          if (!subword_at(la, lb, pos)) continue;
          if (la.size() > degree_bound) continue;
          record(a, b, la, 0, pos);
        }
      }
    }
  }
  return report;
}

}  // namespace wnf
