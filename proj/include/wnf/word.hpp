#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wnf/errors.hpp"

namespace wnf {

// One generator of a free algebra. The name is the parseable identifier
// (letters/digits with optional trailing apostrophes); alias, when nonempty,
// is the printed form (e.g. vstar prints as "v*").
struct Generator {
  std::string name;
  std::string alias;

  const std::string& display() const { return alias.empty() ? name : alias; }
};

// A word over an alphabet, stored as generator indices. The empty word is
// the adjoined unit and is only valid in unitized alphabets.
using Word = std::vector<uint8_t>;

inline Word word_concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Generator set with a fixed precedence: declaration order, highest first.
// The induced monomial order is degree-lexicographic (longer words are
// larger; ties break lexicographically with earlier-declared generators
// larger). Every rewrite system built on the alphabet uses this order.
class Alphabet {
 public:
  Alphabet(std::string name, std::vector<Generator> gens, bool unitized)
      : name_(std::move(name)), gens_(std::move(gens)), unitized_(unitized) {
    if (gens_.size() > 200) throw DomainError("Alphabet: too many generators");
    for (size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].name == "one")
        throw DomainError("Alphabet: 'one' is reserved for the adjoined unit");
      if (!index_.emplace(gens_[i].name, i).second)
        throw DomainError("Alphabet: duplicate generator '" + gens_[i].name + "'");
      if (!gens_[i].alias.empty()) alias_index_.emplace(gens_[i].alias, i);
    }
  }

  const std::string& name() const { return name_; }
  bool unitized() const { return unitized_; }
  size_t size() const { return gens_.size(); }
  const Generator& gen(size_t i) const { return gens_[i]; }

  int find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : int(it->second);
  }
  int find_alias(const std::string& alias) const {
    auto it = alias_index_.find(alias);
    return it == alias_index_.end() ? -1 : int(it->second);
  }

  Word word_of(std::initializer_list<const char*> names) const {
    Word w;
    for (const char* n : names) {
      int i = find(n);
      if (i < 0) throw DomainError("Alphabet: no generator '" + std::string(n) + "'");
      w.push_back(uint8_t(i));
    }
    return w;
  }

  std::string word_str(const Word& w) const {
    if (w.empty()) return "one";
    std::string out;
    for (size_t i = 0; i < w.size();) {
      size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!out.empty()) out += "*";
      out += gens_[w[i]].display();
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  }

 private:
  std::string name_;
  std::vector<Generator> gens_;
  bool unitized_;
  std::map<std::string, size_t> index_;
  std::map<std::string, size_t> alias_index_;
};

// True iff a > b in the deglex order (smaller generator index = higher
// precedence = larger letter).
inline bool deglex_greater(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// Strict order for containers iterating from the largest monomial down.
struct DeglexDescending {
  bool operator()(const Word& a, const Word& b) const { return deglex_greater(a, b); }
};

}  // namespace wnf
