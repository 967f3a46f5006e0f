#ifndef BGG_WEYL_HPP
#define BGG_WEYL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bgg {

/// Integer Cartan matrix of a finite crystallographic root system.
struct CartanMatrix {
  std::size_t rank = 0;
  std::vector<int> entries;  // row-major

  int at(std::size_t i, std::size_t j) const { return entries[i * rank + j]; }

  void validate() const {
    if (entries.size() != rank * rank)
      throw std::invalid_argument("CartanMatrix: wrong entry count");
    for (std::size_t i = 0; i < rank; ++i) {
      if (at(i, i) != 2) throw std::invalid_argument("CartanMatrix: diagonal must be 2");
      for (std::size_t j = 0; j < rank; ++j) {
        if (i == j) continue;
        if (at(i, j) > 0) throw std::invalid_argument("CartanMatrix: positive off-diagonal");
        if ((at(i, j) == 0) != (at(j, i) == 0))
          throw std::invalid_argument("CartanMatrix: zero pattern not symmetric");
      }
    }
  }

  /// Standard Cartan matrix of a simple type, e.g. of_type("A3").
  static CartanMatrix of_type(const std::string& type) {
    if (type.size() < 2) throw std::invalid_argument("CartanMatrix: bad type string");
    char letter = type[0];
    int n = 0;
    for (std::size_t i = 1; i < type.size(); ++i) {
      if (type[i] < '0' || type[i] > '9')
        throw std::invalid_argument("CartanMatrix: bad type string");
      n = 10 * n + (type[i] - '0');
    }
    auto chain = [](int m) {
      CartanMatrix c;
      c.rank = static_cast<std::size_t>(m);
      c.entries.assign(c.rank * c.rank, 0);
      for (int i = 0; i < m; ++i) {
        c.entries[i * m + i] = 2;
        if (i + 1 < m) {
          c.entries[i * m + i + 1] = -1;
          c.entries[(i + 1) * m + i] = -1;
        }
      }
      return c;
    };
    CartanMatrix c;
    switch (letter) {
      case 'A':
        if (n < 1) throw std::invalid_argument("type A needs rank >= 1");
        return chain(n);
      case 'B':
      case 'C':
        if (n < 2) throw std::invalid_argument("type B/C needs rank >= 2");
        c = chain(n);
        if (letter == 'B')
          c.entries[(n - 1) * n + (n - 2)] = -2;
        else
          c.entries[(n - 2) * n + (n - 1)] = -2;
        return c;
      case 'D':
        if (n < 4) throw std::invalid_argument("type D needs rank >= 4");
        c = chain(n);
        c.entries[(n - 1) * n + (n - 2)] = 0;
        c.entries[(n - 2) * n + (n - 1)] = 0;
        c.entries[(n - 1) * n + (n - 3)] = -1;
        c.entries[(n - 3) * n + (n - 1)] = -1;
        return c;
      case 'E':
        if (n < 6 || n > 8) throw std::invalid_argument("type E needs rank 6..8");
        c = chain(n);
        c.entries[(n - 1) * n + (n - 2)] = 0;
        c.entries[(n - 2) * n + (n - 1)] = 0;
        c.entries[(n - 1) * n + 2] = -1;
        c.entries[2 * n + (n - 1)] = -1;
        return c;
      case 'F':
        if (n != 4) throw std::invalid_argument("type F needs rank 4");
        c = chain(4);
        c.entries[1 * 4 + 2] = -2;
        return c;
      case 'G':
        if (n != 2) throw std::invalid_argument("type G needs rank 2");
        c = chain(2);
        c.entries[1 * 2 + 0] = -3;
        return c;
      default:
        throw std::invalid_argument("CartanMatrix: unknown type letter");
    }
  }
};

/// A finite Weyl group realized by its permutation action on the roots.
///
/// Elements are dense indices (identity is 0), enumerated by breadth
/// first search so indices are sorted by length. Generator i is written
/// with the letter 's' + i, so the rank-3 generators read s, t, u and
/// reduced words look like "tsut". Bruhat order is tabulated once via
/// the descent recursion
///   y <= w  iff  (sy < y ? sy <= sw : y <= sw)   for a left descent s of w.
class WeylGroup {
 public:
  using Elt = std::uint32_t;
  static constexpr std::size_t kMaxSize = 20000;

  explicit WeylGroup(const CartanMatrix& cartan) : cartan_(cartan) {
    cartan_.validate();
    build_roots();
    build_elements();
    build_bruhat();
  }

  static WeylGroup of_type(const std::string& type) {
    return WeylGroup(CartanMatrix::of_type(type));
  }

  std::size_t rank() const { return cartan_.rank; }
  std::size_t size() const { return length_.size(); }
  std::size_t positive_root_count() const { return n_pos_; }

  Elt identity() const { return 0; }
  Elt simple(std::size_t i) const { return simple_[i]; }
  Elt longest() const { return longest_; }

  int length(Elt w) const { return length_[w]; }
  Elt left_mult(std::size_t i, Elt w) const { return left_[w * rank() + i]; }
  Elt right_mult(Elt w, std::size_t i) const { return right_[w * rank() + i]; }

  Elt mult(Elt u, Elt v) const {
    // u v acts by r -> u(v(r)).
    std::vector<std::uint16_t> p(perm_size());
    for (std::size_t r = 0; r < perm_size(); ++r) p[r] = perm_at(u, perm_at(v, r));
    return index_of(p);
  }

  Elt inv(Elt w) const {
    std::vector<std::uint16_t> p(perm_size());
    for (std::size_t r = 0; r < perm_size(); ++r) p[perm_at(w, r)] = static_cast<std::uint16_t>(r);
    return index_of(p);
  }

  std::vector<std::size_t> left_descents(Elt w) const {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < rank(); ++i)
      if (length(left_mult(i, w)) < length(w)) d.push_back(i);
    return d;
  }

  std::vector<std::size_t> right_descents(Elt w) const {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < rank(); ++i)
      if (length(right_mult(w, i)) < length(w)) d.push_back(i);
    return d;
  }

  bool bruhat_leq(Elt y, Elt w) const { return leq_[y * size() + w]; }

  /// Elements covered by w in Bruhat order.
  std::vector<Elt> covers_below(Elt w) const {
    std::vector<Elt> out;
    for (Elt y = 0; y < size(); ++y)
      if (length_[y] + 1 == length_[w] && bruhat_leq(y, w)) out.push_back(y);
    return out;
  }

  std::vector<Elt> lower_interval(Elt w) const {
    std::vector<Elt> out;
    for (Elt y = 0; y < size(); ++y)
      if (bruhat_leq(y, w)) out.push_back(y);
    return out;
  }

  /// Lexicographically least reduced word, or "e" for the identity.
  std::string word(Elt w) const {
    if (w == identity()) return "e";
    std::string s;
    while (w != identity()) {
      auto d = left_descents(w);
      s.push_back(static_cast<char>('s' + d.front()));
      w = left_mult(d.front(), w);
    }
    return s;
  }

  /// Parse "e" or a word in the generator letters; rejects non-reduced
  /// words so element names stay canonical in interfaces.
  std::optional<Elt> parse(const std::string& s, bool require_reduced = false) const {
    if (s == "e") return identity();
    Elt w = identity();
    int steps = 0;
    for (char ch : s) {
      std::size_t i = static_cast<std::size_t>(ch - 's');
      if (ch < 's' || i >= rank()) return std::nullopt;
      w = right_mult(w, i);
      ++steps;
    }
    if (require_reduced && length(w) != steps) return std::nullopt;
    return w;
  }

 private:
  std::size_t perm_size() const { return roots_.size(); }
  std::uint16_t perm_at(Elt w, std::size_t r) const { return perms_[w * perm_size() + r]; }

  Elt index_of(const std::vector<std::uint16_t>& p) const {
    auto it = index_.find(key_of(p));
    if (it == index_.end()) throw std::logic_error("WeylGroup: permutation not found");
    return it->second;
  }

  static std::string key_of(const std::vector<std::uint16_t>& p) {
    return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(std::uint16_t));
  }

  std::vector<int> reflect(std::size_t i, const std::vector<int>& v) const {
    // s_i(v) = v - <v, alpha_i^vee> alpha_i with pairing from row i.
    int pairing = 0;
    for (std::size_t j = 0; j < rank(); ++j) pairing += cartan_.at(i, j) * v[j];
    std::vector<int> r = v;
    r[i] -= pairing;
    return r;
  }

  void build_roots() {
    std::vector<std::vector<int>> roots;
    std::unordered_map<std::string, std::size_t> seen;
    auto key = [&](const std::vector<int>& v) {
      std::string k;
      for (int x : v) k += std::to_string(x) + ",";
      return k;
    };
    for (std::size_t i = 0; i < rank(); ++i) {
      std::vector<int> e(rank(), 0);
      e[i] = 1;
      seen[key(e)] = roots.size();
      roots.push_back(e);
    }
    for (std::size_t head = 0; head < roots.size(); ++head) {
      if (roots.size() > 4 * kMaxSize)
        throw std::invalid_argument("WeylGroup: root system too large");
      for (std::size_t i = 0; i < rank(); ++i) {
        auto r = reflect(i, roots[head]);
        if (!seen.count(key(r))) {
          seen[key(r)] = roots.size();
          roots.push_back(r);
        }
      }
    }
    std::vector<std::vector<int>> pos, neg;
    for (auto& r : roots) {
      bool nonneg = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
      (nonneg ? pos : neg).push_back(r);
    }
    auto height_lex = [](const std::vector<int>& a, const std::vector<int>& b) {
      int ha = 0, hb = 0;
      for (int x : a) ha += x;
      for (int x : b) hb += x;
      if (ha != hb) return ha < hb;
      return a < b;
    };
    std::sort(pos.begin(), pos.end(), height_lex);
    if (pos.size() != neg.size())
      throw std::logic_error("WeylGroup: root system is not symmetric");
    n_pos_ = pos.size();
    roots_ = pos;
    for (auto& r : pos) {
      std::vector<int> m(r);
      for (int& x : m) x = -x;
      roots_.push_back(m);
    }
    root_index_.clear();
    for (std::size_t r = 0; r < roots_.size(); ++r) root_index_[key(roots_[r])] = r;
  }

  std::size_t root_index(const std::vector<int>& v) const {
    std::string k;
    for (int x : v) k += std::to_string(x) + ",";
    return root_index_.at(k);
  }

  void build_elements() {
    std::vector<std::vector<std::uint16_t>> gen_perm(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      gen_perm[i].resize(perm_size());
      for (std::size_t r = 0; r < perm_size(); ++r)
        gen_perm[i][r] = static_cast<std::uint16_t>(root_index(reflect(i, roots_[r])));
    }
    std::vector<std::uint16_t> id(perm_size());
    for (std::size_t r = 0; r < perm_size(); ++r) id[r] = static_cast<std::uint16_t>(r);

    perms_.clear();
    index_.clear();
    auto push = [&](const std::vector<std::uint16_t>& p) {
      index_[key_of(p)] = static_cast<Elt>(perms_.size() / perm_size());
      perms_.insert(perms_.end(), p.begin(), p.end());
    };
    push(id);
    for (std::size_t head = 0; head * perm_size() < perms_.size(); ++head) {
      for (std::size_t i = 0; i < rank(); ++i) {
        // w s_i acts by r -> w(s_i(r)).
        std::vector<std::uint16_t> p(perm_size());
        for (std::size_t r = 0; r < perm_size(); ++r)
          p[r] = perms_[head * perm_size() + gen_perm[i][r]];
        if (!index_.count(key_of(p))) {
          if (perms_.size() / perm_size() >= kMaxSize)
            throw std::invalid_argument("WeylGroup: group too large");
          push(p);
        }
      }
    }
    std::size_t n = perms_.size() / perm_size();
    length_.resize(n);
    for (Elt w = 0; w < n; ++w) {
      int neg = 0;
      for (std::size_t r = 0; r < n_pos_; ++r)
        if (perm_at(w, r) >= n_pos_) ++neg;
      length_[w] = neg;
    }
    left_.resize(n * rank());
    right_.resize(n * rank());
    simple_.resize(rank());
    for (std::size_t i = 0; i < rank(); ++i) simple_[i] = index_of(gen_perm[i]);
    for (Elt w = 0; w < n; ++w)
      for (std::size_t i = 0; i < rank(); ++i) {
        std::vector<std::uint16_t> lp(perm_size()), rp(perm_size());
        for (std::size_t r = 0; r < perm_size(); ++r) {
          lp[r] = gen_perm[i][perm_at(w, r)];
          rp[r] = perm_at(w, gen_perm[i][r]);
        }
        left_[w * rank() + i] = index_of(lp);
        right_[w * rank() + i] = index_of(rp);
      }
    longest_ = 0;
    for (Elt w = 0; w < n; ++w)
      if (length_[w] > length_[longest_]) longest_ = w;
    std::vector<Elt> order(n);
    for (Elt w = 0; w < n; ++w) order[w] = w;
    std::stable_sort(order.begin(), order.end(),
                     [&](Elt a, Elt b) { return length_[a] < length_[b]; });
    by_length_ = order;
  }

  void build_bruhat() {
    std::size_t n = size();
    leq_.assign(n * n, false);
    leq_[identity() * n + identity()] = true;
    for (Elt w : by_length_) {
      if (w == identity()) continue;
      std::size_t s = left_descents(w).front();
      Elt sw = left_mult(s, w);
      for (Elt y = 0; y < n; ++y) {
        Elt sy = left_mult(s, y);
        bool le = (length_[sy] < length_[y]) ? leq_[sy * n + sw] : leq_[y * n + sw];
        leq_[y * n + w] = le;
      }
    }
  }

  CartanMatrix cartan_;
  std::vector<std::vector<int>> roots_;
  std::unordered_map<std::string, std::size_t> root_index_;
  std::size_t n_pos_ = 0;
  std::vector<std::uint16_t> perms_;
  std::unordered_map<std::string, Elt> index_;
  std::vector<int> length_;
  std::vector<Elt> left_, right_, simple_;
  std::vector<Elt> by_length_;
  Elt longest_ = 0;
  std::vector<char> leq_;

 public:
  /// Elements sorted by length (ties in enumeration order).
  const std::vector<Elt>& by_length() const { return by_length_; }
};

}  // namespace bgg

#endif
