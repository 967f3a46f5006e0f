#pragma once

/// Spectral sequence of a decreasingly filtered bounded complex.
///
/// For a filtration C = F^{p_min} >= ... >= F^{p_max} >= 0 compatible with
/// the differential, the pages are computed cellwise from
///     Z_r^{p,q} = { x in F^p C^{p+q} : d x in F^{p+r} C^{p+q+1} }
///     E_r^{p,q} = Z_r^{p,q} / ( Z_{r-1}^{p+1,q-1} + d Z_{r-1}^{p-r+1,q+r-2} )
/// with d_r : E_r^{p,q} -> E_r^{p+r,q-r+1} induced by d.  Because module maps
/// act vertex by vertex, every cell carries a dimension vector over the
/// weight poset.

#include <map>
#include <utility>
#include <vector>

#include "bgg/complex.hpp"

namespace bgg {

template <class F>
struct Filtration {
  int p_min = 0;
  /// levels[j][k] = vertexwise basis of F^{p_min+j} at complex degree
  /// min_deg + k; levels must be nested decreasingly in j.
  std::vector<std::vector<VertexSpaces<F>>> levels;

  int p_max() const { return p_min + static_cast<int>(levels.size()) - 1; }
};

/// Filtration by traces: level p_min + j is the trace subcomplex generated by
/// the components at vertex_sets[j].  Traces of submodules stay submodules,
/// so compatibility with the differential is automatic; nesting requires
/// vertex_sets[0] to generate everything (pass all vertices).
template <class F>
Filtration<F> trace_filtration(
    const ChainComplex<F>& c,
    int p_min,
    const std::vector<std::vector<std::size_t>>& vertex_sets) {
  Filtration<F> f;
  f.p_min = p_min;
  for (const auto& verts : vertex_sets) {
    std::vector<VertexSpaces<F>> per_degree;
    for (const auto& term : c.terms)
      per_degree.push_back(trace_spaces(term, verts));
    f.levels.push_back(std::move(per_degree));
  }
  return f;
}

template <class F>
void check_filtration(const ChainComplex<F>& c, const Filtration<F>& f) {
  for (std::size_t j = 0; j < f.levels.size(); ++j) {
    if (f.levels[j].size() != c.terms.size())
      throw std::logic_error("filtration: degree count mismatch");
    for (std::size_t k = 0; k < c.terms.size(); ++k) {
      const VertexSpaces<F>& sp = f.levels[j][k];
      for (std::size_t x = 0; x < sp.size(); ++x) {
        if (sp[x].rows() != c.terms[k].dims[x])
          throw std::logic_error("filtration: space shape mismatch");
        if (j == 0 && rank(sp[x]) != c.terms[k].dims[x])
          throw std::logic_error("filtration: top level must be everything");
        if (j > 0 && !span_contains_all(f.levels[j - 1][k][x], sp[x]))
          throw std::logic_error("filtration: levels are not nested");
        if (k + 1 < c.terms.size() &&
            !span_contains_all(f.levels[j][k + 1][x],
                               image_basis(c.diffs[k].mats[x] * sp[x])))
          throw std::logic_error("filtration: not differential stable");
      }
    }
  }
}

struct SSPage {
  int r = 1;
  /// (p, q) -> dimension vector over the poset; only nonzero cells stored.
  std::map<std::pair<int, int>, std::vector<std::size_t>> cells;
  /// (p, q) -> rank of d_r out of that cell; only nonzero ranks stored.
  std::map<std::pair<int, int>, std::size_t> dr_rank;
};

struct SSResult {
  std::vector<SSPage> pages;  // pages[i] is E_{i+1}
  int stable_page = 1;        // E_r = E_infinity from this r on
};

template <class F>
SSResult compute_spectral(const ChainComplex<F>& c, const Filtration<F>& filt,
                          int max_pages = 0) {
  SSResult out;
  if (c.is_zero()) {
    out.pages.push_back(SSPage{});
    return out;
  }
  std::size_t nv = c.terms.front().dims.size();
  int span = filt.p_max() - filt.p_min + 1;
  int last = max_pages > 0 ? max_pages : span + 1;

  // Everything decomposes over vertices; fix a vertex x and work with plain
  // matrices.  Degree n has index n - c.min_deg.
  auto space = [&](int p, int n, std::size_t x) -> Matrix<F> {
    if (!c.has(n)) return Matrix<F>(0, 0);
    std::size_t dim = c.terms[n - c.min_deg].dims[x];
    if (p > filt.p_max()) return Matrix<F>(dim, 0);
    if (p < filt.p_min) return Matrix<F>::identity(dim);
    return filt.levels[p - filt.p_min][n - c.min_deg][x];
  };
  auto dmat = [&](int n, std::size_t x) -> Matrix<F> {
    if (c.has(n) && c.has(n + 1)) return c.diffs[n - c.min_deg].mats[x];
    std::size_t rows = c.has(n + 1) ? c.terms[n + 1 - c.min_deg].dims[x] : 0;
    std::size_t cols = c.has(n) ? c.terms[n - c.min_deg].dims[x] : 0;
    return Matrix<F>(rows, cols);
  };
  auto cycles = [&](int r, int p, int n, std::size_t x) -> Matrix<F> {
    if (!c.has(n)) return Matrix<F>(0, 0);
    return span_intersection(space(p, n, x),
                             preimage_basis(dmat(n, x), space(p + r, n + 1, x)));
  };
  auto denom = [&](int r, int p, int n, std::size_t x) -> Matrix<F> {
    Matrix<F> a = cycles(r - 1, p + 1, n, x);
    Matrix<F> b = c.has(n - 1)
                      ? image_basis(dmat(n - 1, x) *
                                    cycles(r - 1, p - r + 1, n - 1, x))
                      : Matrix<F>(a.rows(), 0);
    return span_sum(a, b);
  };

  for (int r = 1; r <= last; ++r) {
    SSPage page;
    page.r = r;
    for (int p = filt.p_min; p <= filt.p_max(); ++p) {
      for (int n = c.min_deg; n <= c.max_deg(); ++n) {
        std::vector<std::size_t> dims(nv, 0);
        std::size_t total = 0, rank_total = 0;
        for (std::size_t x = 0; x < nv; ++x) {
          Matrix<F> z = cycles(r, p, n, x);
          Matrix<F> den = denom(r, p, n, x);
          dims[x] = z.cols() - den.cols();
          total += dims[x];
          // Rank of the induced differential out of this cell.
          Matrix<F> img = image_basis(dmat(n, x) * z);
          Matrix<F> den_t = denom(r, p + r, n + 1, x);
          rank_total += span_sum(img, den_t).cols() - den_t.cols();
        }
        std::pair<int, int> key{p, n - p};
        if (total > 0) page.cells[key] = dims;
        if (rank_total > 0) page.dr_rank[key] = rank_total;
      }
    }
    out.pages.push_back(std::move(page));
  }
  out.stable_page = 1;
  for (std::size_t i = 0; i < out.pages.size(); ++i)
    if (!out.pages[i].dr_rank.empty())
      out.stable_page = out.pages[i].r + 1;
  return out;
}

}  // namespace bgg
