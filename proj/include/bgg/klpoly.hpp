#ifndef BGG_KLPOLY_HPP
#define BGG_KLPOLY_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bgg/weyl.hpp"

namespace bgg {

/// Polynomial in q with integer coefficients.
struct KLPolynomial {
  std::vector<long long> c;  // c[i] is the coefficient of q^i

  static KLPolynomial zero() { return {}; }
  static KLPolynomial one() { return {{1}}; }

  int degree() const {
    for (std::size_t i = c.size(); i > 0; --i)
      if (c[i - 1] != 0) return static_cast<int>(i - 1);
    return -1;
  }
  long long coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return 0;
    return c[i];
  }
  bool is_zero() const { return degree() < 0; }
  bool is_one() const { return degree() == 0 && c[0] == 1; }
  long long eval_at_one() const {
    long long s = 0;
    for (long long x : c) s += x;
    return s;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  friend KLPolynomial operator+(const KLPolynomial& a, const KLPolynomial& b) {
    KLPolynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend KLPolynomial operator-(const KLPolynomial& a, const KLPolynomial& b) {
    KLPolynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  /// a * c q^k
  KLPolynomial shifted_scaled(int k, long long s) const {
    KLPolynomial r;
    if (is_zero() || s == 0) return r;
    r.c.assign(c.size() + static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i + static_cast<std::size_t>(k)] = s * c[i];
    return r;
  }
  friend bool operator==(const KLPolynomial& a, const KLPolynomial& b) {
    KLPolynomial x = a, y = b;
    x.trim();
    y.trim();
    return x.c == y.c;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      if (!s.empty()) s += c[i] > 0 ? "+" : "-";
      else if (c[i] < 0) s += "-";
      long long a = c[i] > 0 ? c[i] : -c[i];
      std::string term;
      if (i == 0) term = std::to_string(a);
      else {
        if (a != 1) term = std::to_string(a) + "*";
        term += i == 1 ? "q" : "q^" + std::to_string(i);
      }
      s += term;
    }
    return s;
  }
};

/// Kazhdan-Lusztig polynomials P_{y,w}, memoized over one Weyl group.
///
/// Uses the classical descent recursion: for a left descent s of w with
/// v = sw,
///   P_{y,w} = P_{sy,w}                                  if sy > y,
///   P_{y,w} = P_{sy,v} + q P_{y,v}
///             - sum_{y <= z <= v, sz < z} mu(z,v) q^{(l(w)-l(z))/2} P_{y,z}
///                                                       if sy < y,
/// with mu(z,v) the coefficient of q^{(l(v)-l(z)-1)/2} in P_{z,v}.
class KLTable {
 public:
  explicit KLTable(const WeylGroup& w) : w_(w) {}

  const WeylGroup& group() const { return w_; }

  const KLPolynomial& kl(WeylGroup::Elt y, WeylGroup::Elt w) {
    std::uint64_t key = static_cast<std::uint64_t>(y) * w_.size() + w;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    KLPolynomial p = compute(y, w);
    return memo_.emplace(key, std::move(p)).first->second;
  }

  long long mu(WeylGroup::Elt y, WeylGroup::Elt w) {
    int d = w_.length(w) - w_.length(y) - 1;
    if (d < 0 || d % 2 != 0) return 0;
    return kl(y, w).coeff(d / 2);
  }

  /// A Schubert cell is rationally smooth iff every P_{y,w} is trivial.
  bool rationally_smooth(WeylGroup::Elt w) {
    for (WeylGroup::Elt y = 0; y < w_.size(); ++y)
      if (w_.bruhat_leq(y, w) && !kl(y, w).is_one()) return false;
    return true;
  }

  std::vector<WeylGroup::Elt> rationally_smooth_elements() {
    std::vector<WeylGroup::Elt> out;
    for (WeylGroup::Elt w = 0; w < w_.size(); ++w)
      if (rationally_smooth(w)) out.push_back(w);
    return out;
  }

 private:
  KLPolynomial compute(WeylGroup::Elt y, WeylGroup::Elt w) {
    if (!w_.bruhat_leq(y, w)) return KLPolynomial::zero();
    if (y == w) return KLPolynomial::one();
    std::size_t s = w_.left_descents(w).front();
    WeylGroup::Elt v = w_.left_mult(s, w);
    WeylGroup::Elt sy = w_.left_mult(s, y);
    if (w_.length(sy) > w_.length(y)) return kl(sy, w);
    KLPolynomial p = kl(sy, v) + kl(y, v).shifted_scaled(1, 1);
    for (WeylGroup::Elt z = 0; z < w_.size(); ++z) {
      if (!w_.bruhat_leq(y, z) || !w_.bruhat_leq(z, v)) continue;
      WeylGroup::Elt sz = w_.left_mult(s, z);
      if (w_.length(sz) >= w_.length(z)) continue;
      long long m = mu(z, v);
      if (m == 0) continue;
      int shift = (w_.length(w) - w_.length(z)) / 2;
      p = p - kl(y, z).shifted_scaled(shift, m);
    }
    return p;
  }

  const WeylGroup& w_;
  std::unordered_map<std::uint64_t, KLPolynomial> memo_;
};

/// Graded dimensions of Ext^*(L_y, A_w) predicted by Kazhdan-Lusztig
/// combinatorics: nonzero only for w <= y, where the coefficient of q^i
/// in P_{w,y} lands in Ext degree l(y) - l(w) - 2i.
inline std::map<int, long long> kl_ext_dims(KLTable& kl, WeylGroup::Elt y,
                                            WeylGroup::Elt w) {
  std::map<int, long long> out;
  const WeylGroup& g = kl.group();
  if (!g.bruhat_leq(w, y)) return out;
  const KLPolynomial& p = kl.kl(w, y);
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) out[g.length(y) - g.length(w) - 2 * i] += p.coeff(i);
  return out;
}

}  // namespace bgg

#endif
