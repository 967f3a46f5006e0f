#ifndef BGG_POSET_HPP
#define BGG_POSET_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgg/errors.hpp"
#include "bgg/weyl.hpp"

namespace bgg {

/// Finite graded poset of weights. Built from covering pairs; lengths
/// must strictly increase along covers, which also rules out cycles.
class WeightPoset {
 public:
  WeightPoset() = default;

  static WeightPoset from_covers(std::vector<std::string> names, std::vector<int> lengths,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
    WeightPoset p;
    p.names_ = std::move(names);
    p.lengths_ = std::move(lengths);
    std::size_t n = p.names_.size();
    if (p.lengths_.size() != n) throw InputError("poset: names and lengths differ in size");
    if (std::set<std::string>(p.names_.begin(), p.names_.end()).size() != n)
      throw InputError("poset: duplicate vertex name");
    std::vector<std::vector<std::size_t>> up(n);
    for (auto [a, b] : covers) {
      if (a >= n || b >= n) throw InputError("poset: cover index out of range");
      if (p.lengths_[a] >= p.lengths_[b])
        throw InputError("poset: cover " + p.names_[a] + " -> " + p.names_[b] +
                         " does not increase length (order has no valid grading)");
      up[a].push_back(b);
    }
    p.leq_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      // reflexive-transitive closure by depth first search
      std::vector<std::size_t> stack{a};
      while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        if (p.leq_[a * n + x]) continue;
        p.leq_[a * n + x] = 1;
        for (std::size_t y : up[x]) stack.push_back(y);
      }
    }
    return p;
  }

  static WeightPoset from_weyl(const WeylGroup& w) {
    WeightPoset p;
    std::size_t n = w.size();
    p.names_.resize(n);
    p.lengths_.resize(n);
    p.leq_.assign(n * n, 0);
    for (WeylGroup::Elt x = 0; x < n; ++x) {
      p.names_[x] = w.word(x);
      p.lengths_[x] = w.length(x);
      for (WeylGroup::Elt y = 0; y < n; ++y) p.leq_[x * n + y] = w.bruhat_leq(x, y);
    }
    return p;
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int length(std::size_t i) const { return lengths_[i]; }
  bool le(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
  bool lt(std::size_t a, std::size_t b) const { return a != b && le(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return le(a, b) || le(b, a); }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    throw InputError("poset: unknown vertex " + name);
  }

  int max_length() const {
    int m = 0;
    for (int l : lengths_) m = std::max(m, l);
    return m;
  }

  std::vector<std::size_t> at_length(int l) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (lengths_[i] == l) out.push_back(i);
    return out;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> lengths_;
  std::vector<char> leq_;
};

}  // namespace bgg

#endif
