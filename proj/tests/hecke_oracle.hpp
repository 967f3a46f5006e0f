#ifndef BGG_TESTS_HECKE_ORACLE_HPP
#define BGG_TESTS_HECKE_ORACLE_HPP

// Independent Kazhdan-Lusztig oracle used only by tests: computes the
// canonical basis of the Hecke algebra in Soergel's normalization
// (H_s^2 = (v^{-1} - v) H_s + 1, b_s = H_s + v) and reads polynomials
// off from b_w = sum_y v^{l(w)-l(y)} P_{y,w}(v^{-2}) H_y. This shares
// no code with the engine's descent recursion.

#include <map>
#include <vector>

#include "bgg/klpoly.hpp"
#include "bgg/weyl.hpp"

namespace bgg_tests {

struct LaurentPoly {
  std::map<int, long long> t;  // exponent of v -> coefficient

  long long coeff(int e) const {
    auto it = t.find(e);
    return it == t.end() ? 0 : it->second;
  }
  void add(int e, long long c) {
    if (c == 0) return;
    t[e] += c;
    if (t[e] == 0) t.erase(e);
  }
  bool empty() const { return t.empty(); }
};

class HeckeOracle {
 public:
  explicit HeckeOracle(const bgg::WeylGroup& w) : w_(w) {}

  using Element = std::map<bgg::WeylGroup::Elt, LaurentPoly>;  // standard basis

  const Element& canonical(bgg::WeylGroup::Elt w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Element b;
    if (w == w_.identity()) {
      b[w].add(0, 1);
    } else {
      std::size_t s = w_.right_descents(w).front();
      bgg::WeylGroup::Elt wp = w_.right_mult(w, s);
      b = mult_bs(canonical(wp), s);
      // Strip lower canonical terms; the corrections are the integers
      // mu(x, wp), read off as constant coefficients.
      for (auto x : by_length_desc()) {
        if (x == w) continue;
        auto cx = b.find(x);
        if (cx == b.end()) continue;
        long long m = cx->second.coeff(0);
        if (m == 0) continue;
        const Element& bx = canonical(x);
        for (const auto& [y, p] : bx)
          for (const auto& [e, c] : p.t) add_term(b, y, e, -m * c);
      }
    }
    return memo_.emplace(w, std::move(b)).first->second;
  }

  bgg::KLPolynomial kl(bgg::WeylGroup::Elt y, bgg::WeylGroup::Elt w) {
    const Element& b = canonical(w);
    bgg::KLPolynomial p;
    auto it = b.find(y);
    if (it == b.end()) return p;
    int base = w_.length(w) - w_.length(y);
    for (const auto& [e, c] : it->second.t) {
      int i = (base - e) / 2;
      if ((base - e) % 2 != 0 || i < 0) throw std::logic_error("oracle: bad exponent");
      if (static_cast<std::size_t>(i) >= p.c.size()) p.c.resize(i + 1, 0);
      p.c[i] += c;
    }
    p.trim();
    return p;
  }

 private:
  static void add_term(Element& x, bgg::WeylGroup::Elt w, int e, long long c) {
    x[w].add(e, c);
    if (x[w].empty()) x.erase(w);
  }

  Element mult_bs(const Element& x, std::size_t s) {
    Element out;
    for (const auto& [w, p] : x) {
      bgg::WeylGroup::Elt ws = w_.right_mult(w, s);
      for (const auto& [e, c] : p.t) {
        // X H_s term by term, then + v X.
        if (w_.length(ws) > w_.length(w)) {
          add_term(out, ws, e, c);
        } else {
          add_term(out, w, e - 1, c);
          add_term(out, w, e + 1, -c);
          add_term(out, ws, e, c);
        }
        add_term(out, w, e + 1, c);
      }
    }
    return out;
  }

  std::vector<bgg::WeylGroup::Elt> by_length_desc() const {
    auto v = w_.by_length();
    return {v.rbegin(), v.rend()};
  }

  const bgg::WeylGroup& w_;
  std::map<bgg::WeylGroup::Elt, Element> memo_;
};

}  // namespace bgg_tests

#endif
