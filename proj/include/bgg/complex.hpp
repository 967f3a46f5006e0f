#pragma once

/// Bounded cochain complexes of quiver representations, with shifts, cones,
/// canonical truncations, duality, and cohomology.  Terms are indexed by
/// ascending cohomological degree starting at min_deg, and (X[k])^i = X^{i+k}
/// with the differential of X[k] carrying the sign (-1)^k.

#include <map>
#include <vector>

#include "bgg/module.hpp"

namespace bgg {

template <class F>
struct Summand2 {
  Module<F> sum;
  ModuleMap<F> in_a, in_b, pr_a, pr_b;
};

/// Direct sum of two modules with its four structure maps.
template <class F>
Summand2<F> dsum2(const Module<F>& a, const Module<F>& b) {
  const QuiverAlgebra<F>& alg = *a.alg;
  Summand2<F> out;
  out.sum.alg = a.alg;
  for (std::size_t x = 0; x < a.dims.size(); ++x)
    out.sum.dims.push_back(a.dims[x] + b.dims[x]);
  for (std::size_t i = 0; i < alg.arrow_count(); ++i)
    out.sum.action.push_back(Matrix<F>::dsum(a.action[i], b.action[i]));
  out.in_a = ModuleMap<F>::zero(a, out.sum);
  out.in_b = ModuleMap<F>::zero(b, out.sum);
  out.pr_a = ModuleMap<F>::zero(out.sum, a);
  out.pr_b = ModuleMap<F>::zero(out.sum, b);
  for (std::size_t x = 0; x < a.dims.size(); ++x) {
    for (std::size_t j = 0; j < a.dims[x]; ++j) {
      out.in_a.mats[x].at(j, j) = F(1);
      out.pr_a.mats[x].at(j, j) = F(1);
    }
    for (std::size_t j = 0; j < b.dims[x]; ++j) {
      out.in_b.mats[x].at(a.dims[x] + j, j) = F(1);
      out.pr_b.mats[x].at(j, a.dims[x] + j) = F(1);
    }
  }
  return out;
}

template <class F>
ModuleMap<F> transpose_map(const ModuleMap<F>& f) {
  ModuleMap<F> t;
  for (const auto& m : f.mats) t.mats.push_back(m.transpose());
  return t;
}

template <class F>
struct ChainComplex {
  const QuiverAlgebra<F>* alg = nullptr;
  int min_deg = 0;
  std::vector<Module<F>> terms;     // ascending degree
  std::vector<ModuleMap<F>> diffs;  // diffs[k] : terms[k] -> terms[k+1]

  static ChainComplex zero(const QuiverAlgebra<F>& a) {
    ChainComplex c;
    c.alg = &a;
    return c;
  }

  static ChainComplex from_module(const Module<F>& m, int deg = 0) {
    ChainComplex c;
    c.alg = m.alg;
    c.min_deg = deg;
    if (!m.is_zero()) c.terms.push_back(m);
    return c;
  }

  bool is_zero() const { return terms.empty(); }
  int max_deg() const { return min_deg + static_cast<int>(terms.size()) - 1; }
  bool has(int d) const { return d >= min_deg && d <= max_deg(); }

  Module<F> term(int d) const {
    return has(d) ? terms[d - min_deg] : Module<F>::zero(*alg);
  }

  /// The differential out of degree d (a zero map when either end is absent).
  ModuleMap<F> diff(int d) const {
    if (has(d) && has(d + 1)) return diffs[d - min_deg];
    return ModuleMap<F>::zero(term(d), term(d + 1));
  }

  void check() const {
    for (std::size_t k = 0; k < diffs.size(); ++k)
      check_map(terms[k], terms[k + 1], diffs[k]);
    for (std::size_t k = 0; k + 1 < diffs.size(); ++k)
      if (!compose(diffs[k + 1], diffs[k]).is_zero())
        throw std::logic_error("chain complex: differential does not square to zero");
  }

  ChainComplex shifted(int k) const {
    ChainComplex c = *this;
    c.min_deg -= k;
    if (k % 2 != 0)
      for (auto& d : c.diffs) d = F(-1) * d;
    return c;
  }

  /// Drop zero modules at both ends (interior zero terms stay).
  void normalize() {
    while (!terms.empty() && terms.front().is_zero()) {
      terms.erase(terms.begin());
      if (!diffs.empty()) diffs.erase(diffs.begin());
      ++min_deg;
    }
    while (!terms.empty() && terms.back().is_zero()) {
      terms.pop_back();
      if (!diffs.empty()) diffs.pop_back();
    }
  }

  std::map<int, std::vector<std::size_t>> cohomology_vertex_dims() const {
    std::map<int, std::vector<std::size_t>> out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      std::vector<std::size_t> dims;
      bool any = false;
      for (std::size_t x = 0; x < terms[k].dims.size(); ++x) {
        std::size_t z = k + 1 < terms.size()
                            ? kernel_basis(diffs[k].mats[x]).cols()
                            : terms[k].dims[x];
        std::size_t b = k > 0 ? image_basis(diffs[k - 1].mats[x]).cols() : 0;
        dims.push_back(z - b);
        any = any || z > b;
      }
      if (any) out[min_deg + static_cast<int>(k)] = dims;
    }
    return out;
  }

  std::map<int, std::size_t> cohomology_dims() const {
    std::map<int, std::size_t> out;
    for (const auto& [d, v] : cohomology_vertex_dims()) {
      std::size_t t = 0;
      for (std::size_t x : v) t += x;
      if (t > 0) out[d] = t;
    }
    return out;
  }

  bool is_acyclic() const { return cohomology_dims().empty(); }
};

/// Degreewise components of a chain map; comps[k] maps src.term(src_min + k)
/// to dst.term(src_min + k).  Missing degrees are zero.
template <class F>
struct ChainMap {
  int src_min = 0;
  std::vector<ModuleMap<F>> comps;

  static ChainMap from_module_map(const ModuleMap<F>& f, int deg = 0) {
    ChainMap cm;
    cm.src_min = deg;
    cm.comps.push_back(f);
    return cm;
  }

  bool has(int d) const {
    return d >= src_min && d < src_min + static_cast<int>(comps.size());
  }

  ModuleMap<F> component(const ChainComplex<F>& x, const ChainComplex<F>& y,
                         int d) const {
    if (has(d)) return comps[d - src_min];
    return ModuleMap<F>::zero(x.term(d), y.term(d));
  }
};

template <class F>
void check_chain_map(const ChainComplex<F>& x, const ChainComplex<F>& y,
                     const ChainMap<F>& f) {
  int lo = std::min(x.min_deg, y.min_deg) - 1;
  int hi = std::max(x.max_deg(), y.max_deg()) + 1;
  for (int d = lo; d <= hi; ++d) {
    check_map(x.term(d), y.term(d), f.component(x, y, d));
    ModuleMap<F> lhs = compose(y.diff(d), f.component(x, y, d));
    ModuleMap<F> rhs = compose(f.component(x, y, d + 1), x.diff(d));
    if (!(lhs - rhs).is_zero())
      throw std::logic_error("chain map does not intertwine the differentials");
  }
}

template <class F>
struct Cone {
  ChainComplex<F> cx;
  std::map<int, Summand2<F>> parts;  // per degree: X^{i+1} (a) and Y^i (b)
};

/// Mapping cone of f : X -> Y, with term X^{i+1} + Y^i in degree i and
/// differential (x, y) |-> (-dx, f x + dy).
template <class F>
Cone<F> cone(const ChainComplex<F>& x, const ChainComplex<F>& y,
             const ChainMap<F>& f) {
  Cone<F> out;
  out.cx.alg = x.alg;
  if (x.is_zero() && y.is_zero()) return out;
  int lo = std::min(x.is_zero() ? y.min_deg : x.min_deg - 1,
                    y.is_zero() ? x.min_deg - 1 : y.min_deg);
  int hi = std::max(x.max_deg() - 1, y.max_deg());
  out.cx.min_deg = lo;
  for (int i = lo; i <= hi; ++i) {
    out.parts.emplace(i, dsum2(x.term(i + 1), y.term(i)));
    out.cx.terms.push_back(out.parts.at(i).sum);
  }
  for (int i = lo; i < hi; ++i) {
    const Summand2<F>& s = out.parts.at(i);
    const Summand2<F>& t = out.parts.at(i + 1);
    ModuleMap<F> d =
        compose(t.in_a, compose(F(-1) * x.diff(i + 1), s.pr_a)) +
        compose(t.in_b, compose(f.component(x, y, i + 1), s.pr_a)) +
        compose(t.in_b, compose(y.diff(i), s.pr_b));
    out.cx.diffs.push_back(std::move(d));
  }
  out.cx.normalize();
  return out;
}

/// Canonical truncation tau^{<= n} together with its inclusion into x.
template <class F>
struct TruncationBelow {
  ChainComplex<F> cx;
  ChainMap<F> incl;
};

template <class F>
TruncationBelow<F> truncate_le(const ChainComplex<F>& x, int n) {
  TruncationBelow<F> out;
  out.cx.alg = x.alg;
  out.cx.min_deg = x.min_deg;
  out.incl.src_min = x.min_deg;
  if (x.is_zero() || n < x.min_deg) {
    out.cx = ChainComplex<F>::zero(*x.alg);
    return out;
  }
  if (n >= x.max_deg()) {
    out.cx = x;
    for (std::size_t k = 0; k < x.terms.size(); ++k)
      out.incl.comps.push_back(ModuleMap<F>::identity(x.terms[k]));
    return out;
  }
  for (int d = x.min_deg; d < n; ++d) {
    out.cx.terms.push_back(x.term(d));
    out.incl.comps.push_back(ModuleMap<F>::identity(out.cx.terms.back()));
  }
  auto sq = split_by_spaces(x.term(n), kernel_spaces(x.diff(n)));
  out.cx.terms.push_back(sq.sub);
  out.incl.comps.push_back(sq.incl);
  for (int d = x.min_deg; d + 1 < n; ++d) out.cx.diffs.push_back(x.diff(d));
  if (n > x.min_deg) {
    // Factor d^{n-1} through the kernel inclusion, vertex by vertex.
    ModuleMap<F> g;
    ModuleMap<F> d = x.diff(n - 1);
    for (std::size_t v = 0; v < sq.incl.mats.size(); ++v)
      g.mats.push_back(solve_matrix(sq.incl.mats[v], d.mats[v]).value());
    out.cx.diffs.push_back(std::move(g));
  }
  out.cx.normalize();
  if (out.cx.is_zero()) out.incl.comps.clear();
  return out;
}

/// Canonical truncation tau^{>= n} together with the projection from x.
template <class F>
struct TruncationAbove {
  ChainComplex<F> cx;
  ChainMap<F> proj;
};

template <class F>
TruncationAbove<F> truncate_ge(const ChainComplex<F>& x, int n) {
  TruncationAbove<F> out;
  out.cx.alg = x.alg;
  out.proj.src_min = x.min_deg;
  if (x.is_zero() || n > x.max_deg()) {
    out.cx = ChainComplex<F>::zero(*x.alg);
    return out;
  }
  if (n <= x.min_deg) {
    out.cx = x;
    for (std::size_t k = 0; k < x.terms.size(); ++k)
      out.proj.comps.push_back(ModuleMap<F>::identity(x.terms[k]));
    return out;
  }
  for (int d = x.min_deg; d < n; ++d)
    out.proj.comps.push_back(ModuleMap<F>::zero(x.term(d), Module<F>::zero(*x.alg)));
  out.cx.min_deg = n;
  auto sq = split_by_spaces(x.term(n), image_spaces(x.diff(n - 1)));
  out.cx.terms.push_back(sq.quot);
  out.proj.comps.push_back(sq.proj);
  for (int d = n + 1; d <= x.max_deg(); ++d) {
    out.cx.terms.push_back(x.term(d));
    out.proj.comps.push_back(ModuleMap<F>::identity(out.cx.terms.back()));
  }
  if (n < x.max_deg()) {
    // Factor d^n through the projection using any linear section.
    ModuleMap<F> g;
    ModuleMap<F> d = x.diff(n);
    for (std::size_t v = 0; v < sq.proj.mats.size(); ++v) {
      Matrix<F> section = solve_matrix(
          sq.proj.mats[v], Matrix<F>::identity(sq.proj.mats[v].rows())).value();
      g.mats.push_back(d.mats[v] * section);
    }
    out.cx.diffs.push_back(std::move(g));
    for (int d2 = n + 1; d2 < x.max_deg(); ++d2)
      out.cx.diffs.push_back(x.diff(d2));
  }
  out.cx.normalize();
  if (out.cx.is_zero()) out.proj.comps.clear();
  return out;
}

/// Vector-space dual over the opposite algebra: (DX)^i = D(X^{-i}).
template <class F>
ChainComplex<F> dual_complex(const QuiverAlgebra<F>& op,
                             const ChainComplex<F>& x) {
  ChainComplex<F> out;
  out.alg = &op;
  if (x.is_zero()) return out;
  out.min_deg = -x.max_deg();
  for (int i = x.max_deg(); i >= x.min_deg; --i)
    out.terms.push_back(dual_of_opposite(op, x.term(i)));
  for (int i = x.max_deg() - 1; i >= x.min_deg; --i)
    out.diffs.push_back(transpose_map(x.diff(i)));
  out.normalize();
  return out;
}

// ---------------------------------------------------------------------------
// Complexes of plain vector spaces (multiplicity complexes).

template <class F>
struct VectComplex {
  int min_deg = 0;
  std::vector<std::size_t> dims;
  std::vector<Matrix<F>> diffs;  // diffs[k] : dims[k] -> dims[k+1]

  bool is_zero() const {
    for (std::size_t d : dims)
      if (d > 0) return false;
    return true;
  }
  int max_deg() const { return min_deg + static_cast<int>(dims.size()) - 1; }
  bool has(int d) const { return d >= min_deg && d <= max_deg(); }
  std::size_t dim(int d) const { return has(d) ? dims[d - min_deg] : 0; }

  void check() const {
    for (std::size_t k = 0; k < diffs.size(); ++k) {
      if (diffs[k].rows() != dims[k + 1] || diffs[k].cols() != dims[k])
        throw std::logic_error("vector space complex: shape mismatch");
      if (k > 0 && !(diffs[k] * diffs[k - 1]).is_zero())
        throw std::logic_error("vector space complex: d^2 != 0");
    }
  }

  Matrix<F> cocycles(int d) const {
    if (!has(d)) return Matrix<F>(0, 0);
    if (d == max_deg()) return Matrix<F>::identity(dim(d));
    return kernel_basis(diffs[d - min_deg]);
  }

  Matrix<F> coboundaries(int d) const {
    if (!has(d) || d == min_deg) return Matrix<F>(dim(d), 0);
    return image_basis(diffs[d - min_deg - 1]);
  }

  std::map<int, long long> cohomology_dims() const {
    std::map<int, long long> out;
    for (int d = min_deg; d <= max_deg(); ++d) {
      long long h = static_cast<long long>(cocycles(d).cols()) -
                    static_cast<long long>(coboundaries(d).cols());
      if (h != 0) out[d] = h;
    }
    return out;
  }
};

}  // namespace bgg
