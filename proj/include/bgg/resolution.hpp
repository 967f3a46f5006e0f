#pragma once

/// Projective replacement of bounded complexes and derived Hom.
///
/// The replacement is built from the top degree down: having covered degrees
/// above i, the next term is a projective cover of
///     M^i = { (x, z) : x in X^i, z a cocycle of P^{i+1}, d x = eps z },
/// which makes the comparison map a quasi-isomorphism and, because covers are
/// minimal, terminates below the support of X once the algebra has finite
/// global dimension.

#include <map>
#include <vector>

#include "bgg/complex.hpp"
#include "bgg/errors.hpp"

namespace bgg {

template <class F>
struct CoverResult {
  ProjSum<F> ps;
  ModuleMap<F> pi;  // ps.mod -> target, onto
};

/// Standard basis vectors extending the columns of b to a basis of F^dim.
template <class F>
std::vector<std::size_t> complement_columns(const Matrix<F>& b, std::size_t dim) {
  std::vector<std::size_t> out;
  Matrix<F> cur = b;
  for (std::size_t j = 0; j < dim && cur.cols() < dim; ++j) {
    Matrix<F> e(dim, 1);
    e.at(j, 0) = F(1);
    Matrix<F> ext = Matrix<F>::hstack(cur, e);
    if (rank(ext) > cur.cols()) {
      out.push_back(j);
      cur = std::move(ext);
    }
  }
  return out;
}

/// Projective cover: one summand P_x per head basis vector.
template <class F>
CoverResult<F> projective_cover(const Module<F>& m) {
  const QuiverAlgebra<F>& alg = *m.alg;
  VertexSpaces<F> rad = radical_spaces(m);
  std::vector<std::size_t> verts;
  std::vector<std::vector<F>> gens;
  for (std::size_t x = 0; x < m.dims.size(); ++x) {
    for (std::size_t j : complement_columns(rad[x], m.dims[x])) {
      verts.push_back(x);
      std::vector<F> v(m.dims[x], F(0));
      v[j] = F(1);
      gens.push_back(std::move(v));
    }
  }
  CoverResult<F> out;
  out.ps = proj_sum(alg, verts);
  out.pi = map_from_proj(out.ps, m, gens);
  for (std::size_t x = 0; x < m.dims.size(); ++x)
    if (rank(out.pi.mats[x]) != m.dims[x])
      throw std::logic_error("projective cover is not onto");
  return out;
}

/// Kernel of a module map as a module with its inclusion.
template <class F>
SubQuot<F> kernel_module(const Module<F>& src, const ModuleMap<F>& f) {
  return split_by_spaces(src, kernel_spaces(f));
}

/// A bounded complex of labelled projective sums quasi-isomorphic to x.
template <class F>
struct ProjComplex {
  const QuiverAlgebra<F>* alg = nullptr;
  int min_deg = 0;
  std::vector<ProjSum<F>> terms;     // ascending degree
  std::vector<ModuleMap<F>> diffs;   // terms[k].mod -> terms[k+1].mod
  std::vector<ModuleMap<F>> eps;     // terms[k].mod -> x.term(min_deg + k)

  bool is_zero() const { return terms.empty(); }
  int max_deg() const { return min_deg + static_cast<int>(terms.size()) - 1; }
  bool has(int d) const { return d >= min_deg && d <= max_deg(); }
  const ProjSum<F>& at(int d) const { return terms[d - min_deg]; }

  ChainComplex<F> to_chain() const {
    ChainComplex<F> c;
    c.alg = alg;
    c.min_deg = min_deg;
    for (const auto& t : terms) c.terms.push_back(t.mod);
    c.diffs = diffs;
    return c;
  }

  ChainMap<F> comparison() const {
    ChainMap<F> cm;
    cm.src_min = min_deg;
    cm.comps = eps;
    return cm;
  }
};

template <class F>
ProjComplex<F> proj_replace(const ChainComplex<F>& x_in, int extra_steps = 0) {
  const QuiverAlgebra<F>& alg = *x_in.alg;
  ChainComplex<F> x = x_in;
  x.normalize();
  ProjComplex<F> out;
  out.alg = &alg;
  if (x.is_zero()) return out;

  int safety = 2 * (static_cast<int>(alg.poset().max_length()) + 2) +
               extra_steps;
  // Collected in descending degree, reversed at the end.
  std::vector<ProjSum<F>> terms;
  std::vector<ModuleMap<F>> diffs, eps;

  for (int i = x.max_deg();; --i) {
    if (i < x.min_deg - safety)
      throw InputError(
          "projective replacement does not terminate; "
          "the algebra may have infinite global dimension");
    Module<F> xi = x.term(i);
    SubQuot<F> z;  // cocycles of the previous term with inclusion
    if (terms.empty()) {
      Module<F> zero = Module<F>::zero(alg);
      z.sub = zero;
      z.incl = ModuleMap<F>::zero(zero, zero);
    } else {
      z = kernel_module(terms.back().mod, diffs.empty()
                                              ? ModuleMap<F>::zero(
                                                    terms.back().mod,
                                                    Module<F>::zero(alg))
                                              : diffs.back());
    }
    Summand2<F> d2 = dsum2(xi, z.sub);
    ModuleMap<F> g = compose(x.diff(i), d2.pr_a);
    if (!terms.empty())
      g = g - compose(compose(eps.back(), z.incl), d2.pr_b);
    SubQuot<F> m = kernel_module(d2.sum, g);
    if (i < x.min_deg && m.sub.is_zero()) break;
    CoverResult<F> cover = projective_cover(m.sub);
    ModuleMap<F> into_sum = compose(m.incl, cover.pi);
    ModuleMap<F> new_eps = compose(d2.pr_a, into_sum);
    if (!terms.empty()) {
      ModuleMap<F> new_diff =
          compose(z.incl, compose(d2.pr_b, into_sum));
      diffs.push_back(std::move(new_diff));
    }
    terms.push_back(std::move(cover.ps));
    eps.push_back(std::move(new_eps));
  }
  // Drop a trailing zero cover if the loop ended on one.
  while (!terms.empty() && terms.back().mod.is_zero()) {
    terms.pop_back();
    eps.pop_back();
    if (!diffs.empty()) diffs.pop_back();
  }
  std::reverse(terms.begin(), terms.end());
  std::reverse(diffs.begin(), diffs.end());
  std::reverse(eps.begin(), eps.end());
  out.terms = std::move(terms);
  out.diffs = std::move(diffs);
  out.eps = std::move(eps);
  out.min_deg = x.max_deg() - static_cast<int>(out.terms.size()) + 1;
  return out;
}

/// Minimal projective resolution of a module: the replacement of the
/// one-term complex, so the module sits in degree 0 and the terms in
/// degrees <= 0.
template <class F>
ProjComplex<F> proj_resolution(const Module<F>& m, int extra_steps = 0) {
  return proj_replace(ChainComplex<F>::from_module(m), extra_steps);
}

// ---------------------------------------------------------------------------
// Derived Hom via the total Hom complex out of a projective replacement.

/// Hom^n = sum_i Hom(P^i, Y^{i+n}) in (summand, target-basis) coordinates,
/// with differential  (df)^i = d_Y f^i - (-1)^n f^{i+1} d_P^i.
template <class F>
VectComplex<F> hom_total(const ProjComplex<F>& p, const ChainComplex<F>& y) {
  VectComplex<F> out;
  if (p.is_zero() || y.is_zero()) return out;
  int n_min = y.min_deg - p.max_deg();
  int n_max = y.max_deg() - p.min_deg;
  out.min_deg = n_min;

  // offs[n - n_min] maps (i, summand) -> column offset; dims per level.
  std::vector<std::map<std::pair<int, std::size_t>, std::size_t>> offs;
  for (int n = n_min; n <= n_max; ++n) {
    std::map<std::pair<int, std::size_t>, std::size_t> table;
    std::size_t total = 0;
    for (int i = p.min_deg; i <= p.max_deg(); ++i) {
      if (!y.has(i + n)) continue;
      const Module<F>& yt = y.terms[i + n - y.min_deg];
      for (std::size_t s = 0; s < p.at(i).summands(); ++s) {
        table[{i, s}] = total;
        total += yt.dims[p.at(i).verts[s]];
      }
    }
    offs.push_back(std::move(table));
    out.dims.push_back(total);
  }

  for (int n = n_min; n < n_max; ++n) {
    Matrix<F> d(out.dims[n + 1 - n_min], out.dims[n - n_min]);
    F pre_sign = (n % 2 == 0) ? F(-1) : F(1);  // -(-1)^n
    for (int i = p.min_deg; i <= p.max_deg(); ++i) {
      if (!y.has(i + n)) continue;
      const Module<F>& yt = y.terms[i + n - y.min_deg];
      ModuleMap<F> dy = y.diff(i + n);
      for (std::size_t s = 0; s < p.at(i).summands(); ++s) {
        std::size_t w = p.at(i).verts[s];
        std::size_t col0 = offs[n - n_min].at({i, s});
        std::size_t bdim = yt.dims[w];
        // Post-compose with the differential of y.
        if (y.has(i + n + 1) && offs[n + 1 - n_min].count({i, s})) {
          std::size_t row0 = offs[n + 1 - n_min].at({i, s});
          for (std::size_t r = 0; r < dy.mats[w].rows(); ++r)
            for (std::size_t c = 0; c < bdim; ++c)
              d.at(row0 + r, col0 + c) += dy.mats[w].at(r, c);
        }
        // Pre-compose with the differential of p from degree i-1.
        if (!p.has(i - 1) || !y.has(i + n)) continue;
        const ProjSum<F>& prev = p.at(i - 1);
        const ModuleMap<F>& dp = p.diffs[i - 1 - p.min_deg];
        for (std::size_t t = 0; t < prev.summands(); ++t) {
          if (!offs[n + 1 - n_min].count({i - 1, t})) continue;
          std::size_t v = prev.verts[t];
          std::size_t row0 = offs[n + 1 - n_min].at({i - 1, t});
          // d_P(generator t) expanded in the labelled basis of P^i at v.
          const Matrix<F>& dmat = dp.mats[v];
          std::size_t gcol = prev.gen_pos[t];
          for (std::size_t pos = 0; pos < p.at(i).labels[v].size(); ++pos) {
            const F& coeff = dmat.at(pos, gcol);
            if (coeff == F(0)) continue;
            const auto& [s2, word] = p.at(i).labels[v][pos];
            if (s2 != s) continue;
            Matrix<F> act = yt.word_action(word, w);
            for (std::size_t r = 0; r < act.rows(); ++r)
              for (std::size_t c = 0; c < bdim; ++c)
                d.at(row0 + r, col0 + c) += pre_sign * coeff * act.at(r, c);
          }
        }
      }
    }
    out.diffs.push_back(std::move(d));
  }
  return out;
}

/// Graded dimensions of RHom(x, y) for bounded complexes.
template <class F>
std::map<int, long long> rhom_graded(const ChainComplex<F>& x,
                                     const ChainComplex<F>& y,
                                     int extra_steps = 0) {
  ProjComplex<F> p = proj_replace(x, extra_steps);
  return hom_total(p, y).cohomology_dims();
}

template <class F>
std::map<int, long long> rhom_graded(const Module<F>& x, const Module<F>& y,
                                     int extra_steps = 0) {
  return rhom_graded(ChainComplex<F>::from_module(x),
                     ChainComplex<F>::from_module(y), extra_steps);
}

/// Ext dimensions between modules (nonzero entries only, degrees >= 0).
template <class F>
std::map<int, long long> ext_dims(const Module<F>& m, const Module<F>& n,
                                  int extra_steps = 0) {
  return rhom_graded(m, n, extra_steps);
}

inline long long euler_characteristic(const std::map<int, long long>& graded) {
  long long chi = 0;
  for (const auto& [d, v] : graded) chi += (d % 2 == 0 ? v : -v);
  return chi;
}

}  // namespace bgg
