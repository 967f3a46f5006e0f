#ifndef BGG_MODULE_HPP
#define BGG_MODULE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bgg/algebra.hpp"
#include "bgg/matrix.hpp"

namespace bgg {

/// Left module over a quiver algebra, as a representation: one space
/// per vertex and one matrix per arrow, acting on columns.
template <class F>
struct Module {
  const QuiverAlgebra<F>* alg = nullptr;
  std::vector<std::size_t> dims;
  std::vector<Matrix<F>> action;  // per arrow: dims[to] x dims[from]

  static Module zero(const QuiverAlgebra<F>& a) {
    Module m;
    m.alg = &a;
    m.dims.assign(a.vertex_count(), 0);
    for (std::size_t i = 0; i < a.arrow_count(); ++i) m.action.emplace_back(0, 0);
    return m;
  }

  std::size_t total_dim() const {
    std::size_t n = 0;
    for (std::size_t d : dims) n += d;
    return n;
  }
  bool is_zero() const { return total_dim() == 0; }

  /// Action of an arrow word (left to right) from vertex spaces at the
  /// word's source to its target.
  Matrix<F> word_action(const std::vector<std::size_t>& word, std::size_t src_vertex) const {
    Matrix<F> m = Matrix<F>::identity(dims[src_vertex]);
    for (std::size_t a : word) m = action[a] * m;
    return m;
  }

  /// Shape and relation sanity; throws on violation.
  void check() const {
    for (std::size_t a = 0; a < alg->arrow_count(); ++a) {
      if (action[a].rows() != dims[alg->arrow(a).to] ||
          action[a].cols() != dims[alg->arrow(a).from])
        throw std::logic_error("Module: action shape mismatch");
    }
    for (const auto& rel : alg->relations()) {
      std::size_t src = alg->arrow(rel.front().second.front()).from;
      std::size_t tgt = alg->arrow(rel.front().second.back()).to;
      Matrix<F> sum(dims[tgt], dims[src]);
      for (const auto& [c, word] : rel) sum = sum + c * word_action(word, src);
      if (!sum.is_zero()) throw std::logic_error("Module: relation violated");
    }
  }

  friend bool operator==(const Module& a, const Module& b) {
    return a.alg == b.alg && a.dims == b.dims && a.action == b.action;
  }
};

/// Map of modules: one matrix per vertex. Source and target are passed
/// where needed; the struct carries only data.
template <class F>
struct ModuleMap {
  std::vector<Matrix<F>> mats;

  static ModuleMap zero(const Module<F>& s, const Module<F>& d) {
    ModuleMap f;
    for (std::size_t x = 0; x < s.dims.size(); ++x) f.mats.emplace_back(d.dims[x], s.dims[x]);
    return f;
  }
  static ModuleMap identity(const Module<F>& m) {
    ModuleMap f;
    for (std::size_t d : m.dims) f.mats.push_back(Matrix<F>::identity(d));
    return f;
  }
  bool is_zero() const {
    for (const auto& m : mats)
      if (!m.is_zero()) return false;
    return true;
  }
  friend ModuleMap operator+(const ModuleMap& a, const ModuleMap& b) {
    ModuleMap r;
    for (std::size_t x = 0; x < a.mats.size(); ++x) r.mats.push_back(a.mats[x] + b.mats[x]);
    return r;
  }
  friend ModuleMap operator-(const ModuleMap& a, const ModuleMap& b) {
    ModuleMap r;
    for (std::size_t x = 0; x < a.mats.size(); ++x) r.mats.push_back(a.mats[x] - b.mats[x]);
    return r;
  }
  friend ModuleMap operator*(const F& c, const ModuleMap& a) {
    ModuleMap r;
    for (const auto& m : a.mats) r.mats.push_back(c * m);
    return r;
  }
};

/// g after f.
template <class F>
ModuleMap<F> compose(const ModuleMap<F>& g, const ModuleMap<F>& f) {
  ModuleMap<F> r;
  for (std::size_t x = 0; x < f.mats.size(); ++x) r.mats.push_back(g.mats[x] * f.mats[x]);
  return r;
}

template <class F>
void check_map(const Module<F>& s, const Module<F>& d, const ModuleMap<F>& f) {
  const QuiverAlgebra<F>& a = *s.alg;
  for (std::size_t x = 0; x < s.dims.size(); ++x)
    if (f.mats[x].rows() != d.dims[x] || f.mats[x].cols() != s.dims[x])
      throw std::logic_error("ModuleMap: shape mismatch");
  for (std::size_t i = 0; i < a.arrow_count(); ++i) {
    std::size_t from = a.arrow(i).from, to = a.arrow(i).to;
    if (f.mats[to] * s.action[i] != d.action[i] * f.mats[from])
      throw std::logic_error("ModuleMap: does not intertwine arrow " + a.arrow(i).name);
  }
}

/// Per-vertex subspaces of a module, stored as column-basis matrices.
template <class F>
using VertexSpaces = std::vector<Matrix<F>>;

template <class F>
VertexSpaces<F> empty_spaces(const Module<F>& m) {
  VertexSpaces<F> s;
  for (std::size_t d : m.dims) s.emplace_back(d, 0);
  return s;
}

template <class F>
std::vector<std::size_t> space_dims(const VertexSpaces<F>& s) {
  std::vector<std::size_t> d;
  for (const auto& m : s) d.push_back(m.cols());
  return d;
}

/// Smallest arrow-closed family of subspaces containing the given ones.
template <class F>
VertexSpaces<F> submodule_closure(const Module<F>& m, VertexSpaces<F> s) {
  for (auto& sp : s) sp = image_basis(sp);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < m.alg->arrow_count(); ++a) {
      std::size_t from = m.alg->arrow(a).from, to = m.alg->arrow(a).to;
      if (s[from].cols() == 0) continue;
      Matrix<F> grown = span_sum(s[to], m.action[a] * s[from]);
      if (grown.cols() != s[to].cols()) {
        s[to] = grown;
        changed = true;
      }
    }
  }
  return s;
}

/// Submodule generated by the full vertex spaces at the given vertices.
template <class F>
VertexSpaces<F> trace_spaces(const Module<F>& m, const std::vector<std::size_t>& vertices) {
  VertexSpaces<F> s = empty_spaces(m);
  for (std::size_t v : vertices) s[v] = Matrix<F>::identity(m.dims[v]);
  return submodule_closure(m, std::move(s));
}

template <class F>
struct SubQuot {
  Module<F> sub;
  ModuleMap<F> incl;  // sub -> m
  Module<F> quot;
  ModuleMap<F> proj;  // m -> quot
};

/// Split a module along arrow-closed subspaces into submodule and
/// quotient, with the canonical maps. Complement bases are chosen
/// deterministically from standard basis vectors.
template <class F>
SubQuot<F> split_by_spaces(const Module<F>& m, const VertexSpaces<F>& raw) {
  const QuiverAlgebra<F>& alg = *m.alg;
  SubQuot<F> out;
  out.sub.alg = &alg;
  out.quot.alg = &alg;
  std::vector<Matrix<F>> incl, proj;
  std::vector<Matrix<F>> sub_basis(raw.size());
  for (std::size_t x = 0; x < raw.size(); ++x) {
    Matrix<F> b = image_basis(raw[x]);
    sub_basis[x] = b;
    std::size_t n = m.dims[x], k = b.cols();
    Matrix<F> ext = b;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < n && ext.cols() < n; ++i) {
      Matrix<F> e(n, 1);
      e.at(i, 0) = F(1);
      Matrix<F> cand = Matrix<F>::hstack(ext, e);
      if (rank(cand) > ext.cols()) {
        ext = cand;
        chosen.push_back(i);
      }
    }
    auto inv = inverse(ext);
    if (!inv) throw std::logic_error("split_by_spaces: basis completion failed");
    out.sub.dims.push_back(k);
    out.quot.dims.push_back(n - k);
    incl.push_back(b);
    proj.push_back(inv->submatrix(k, n, 0, n));
  }
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    std::size_t from = alg.arrow(a).from, to = alg.arrow(a).to;
    Matrix<F> sub_act(out.sub.dims[to], out.sub.dims[from]);
    if (out.sub.dims[from] > 0) {
      auto sol = solve_matrix(sub_basis[to], m.action[a] * sub_basis[from]);
      if (!sol) throw std::logic_error("split_by_spaces: spaces not arrow-closed");
      sub_act = *sol;
    }
    out.sub.action.push_back(std::move(sub_act));
    // Quotient action on complement representatives.
    Matrix<F> reps(m.dims[from], out.quot.dims[from]);
    {
      // complement columns are exactly where proj is a partial identity;
      // recover them by solving proj * reps = id.
      auto sol = solve_matrix(proj[from], Matrix<F>::identity(out.quot.dims[from]));
      if (!sol) throw std::logic_error("split_by_spaces: projection not surjective");
      reps = *sol;
    }
    out.quot.action.push_back(proj[to] * (m.action[a] * reps));
  }
  out.incl.mats = std::move(incl);
  out.proj.mats = std::move(proj);
  return out;
}

template <class F>
VertexSpaces<F> kernel_spaces(const ModuleMap<F>& f) {
  VertexSpaces<F> s;
  for (const auto& m : f.mats) s.push_back(kernel_basis(m));
  return s;
}

template <class F>
VertexSpaces<F> image_spaces(const ModuleMap<F>& f) {
  VertexSpaces<F> s;
  for (const auto& m : f.mats) s.push_back(image_basis(m));
  return s;
}

template <class F>
VertexSpaces<F> radical_spaces(const Module<F>& m) {
  VertexSpaces<F> s = empty_spaces(m);
  for (std::size_t a = 0; a < m.alg->arrow_count(); ++a) {
    std::size_t to = m.alg->arrow(a).to;
    s[to] = span_sum(s[to], m.action[a]);
  }
  for (auto& b : s) b = image_basis(b);
  return s;
}

/// Dimensions of the head M / rad M per vertex.
template <class F>
std::vector<std::size_t> top_dims(const Module<F>& m) {
  auto rad = radical_spaces(m);
  std::vector<std::size_t> t;
  for (std::size_t x = 0; x < m.dims.size(); ++x) t.push_back(m.dims[x] - rad[x].cols());
  return t;
}

/// Formal direct sum of indecomposable projectives with bookkeeping:
/// summand order, block offsets, and the arrow word labeling each basis
/// vector.
template <class F>
struct ProjSum {
  const QuiverAlgebra<F>* alg = nullptr;
  std::vector<std::size_t> verts;  // vertex of each summand
  Module<F> mod;
  // label per vertex basis position: (summand, path word from its vertex)
  std::vector<std::vector<std::pair<std::size_t, std::vector<std::size_t>>>> labels;
  // generator position of each summand inside vertex verts[k]
  std::vector<std::size_t> gen_pos;

  std::size_t summands() const { return verts.size(); }
};

template <class F>
ProjSum<F> proj_sum(const QuiverAlgebra<F>& alg, const std::vector<std::size_t>& verts) {
  ProjSum<F> ps;
  ps.alg = &alg;
  ps.verts = verts;
  ps.mod.alg = &alg;
  ps.mod.dims.assign(alg.vertex_count(), 0);
  ps.labels.resize(alg.vertex_count());
  ps.gen_pos.resize(verts.size());
  // (summand, degree, idx) -> position inside vertex space, filled in
  // summand-major order so summand blocks stay contiguous.
  std::map<std::tuple<std::size_t, int, std::size_t>, std::size_t> pos;
  for (std::size_t k = 0; k < verts.size(); ++k) {
    for (int d = 0; d <= alg.top_degree(); ++d)
      for (std::size_t i = 0; i < alg.basis(d).size(); ++i) {
        const auto& bp = alg.basis(d)[i];
        if (bp.src != verts[k]) continue;
        std::size_t x = bp.tgt;
        pos[{k, d, i}] = ps.mod.dims[x];
        ps.labels[x].push_back({k, bp.word});
        if (d == 0) ps.gen_pos[k] = ps.mod.dims[x];
        ps.mod.dims[x]++;
      }
  }
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    std::size_t from = alg.arrow(a).from, to = alg.arrow(a).to;
    Matrix<F> act(ps.mod.dims[to], ps.mod.dims[from]);
    for (std::size_t k = 0; k < verts.size(); ++k)
      for (int d = 0; d <= alg.top_degree(); ++d)
        for (std::size_t i = 0; i < alg.basis(d).size(); ++i) {
          const auto& bp = alg.basis(d)[i];
          if (bp.src != verts[k] || bp.tgt != from) continue;
          std::size_t col = pos.at({k, d, i});
          if (d + 1 > alg.top_degree()) continue;
          for (const auto& [j, c] : alg.step(d, i, a))
            act.at(pos.at({k, d + 1, j}), col) += c;
        }
    ps.mod.action.push_back(std::move(act));
  }
  return ps;
}

/// The map out of a projective sum determined by generator images;
/// images[k] is a vector in n at vertex verts[k].
template <class F>
ModuleMap<F> map_from_proj(const ProjSum<F>& ps, const Module<F>& n,
                           const std::vector<std::vector<F>>& images) {
  ModuleMap<F> f = ModuleMap<F>::zero(ps.mod, n);
  for (std::size_t x = 0; x < ps.labels.size(); ++x)
    for (std::size_t p = 0; p < ps.labels[x].size(); ++p) {
      const auto& [k, word] = ps.labels[x][p];
      Matrix<F> act = n.word_action(word, ps.verts[k]);
      std::vector<F> v = act.apply(images[k]);
      for (std::size_t i = 0; i < v.size(); ++i) f.mats[x].at(i, p) = v[i];
    }
  return f;
}

/// Generator images of a map out of a projective sum.
template <class F>
std::vector<std::vector<F>> proj_map_generators(const ProjSum<F>& ps, const ModuleMap<F>& f) {
  std::vector<std::vector<F>> images;
  for (std::size_t k = 0; k < ps.summands(); ++k)
    images.push_back(f.mats[ps.verts[k]].col(ps.gen_pos[k]));
  return images;
}

template <class F>
Module<F> projective(const QuiverAlgebra<F>& alg, std::size_t w) {
  return proj_sum(alg, std::vector<std::size_t>{w}).mod;
}

template <class F>
Module<F> simple(const QuiverAlgebra<F>& alg, std::size_t w) {
  Module<F> m = Module<F>::zero(alg);
  m.dims[w] = 1;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    std::size_t from = alg.arrow(a).from, to = alg.arrow(a).to;
    m.action[a] = Matrix<F>(m.dims[to], m.dims[from]);
  }
  return m;
}

/// Standard module with its presentation: projection from P_w and the
/// kernel as subspaces of P_w.
template <class F>
struct StandardData {
  Module<F> proj;     // P_w
  Module<F> mod;      // the standard module
  ModuleMap<F> pi;    // P_w -> mod
  VertexSpaces<F> kernel;  // of pi, inside P_w
};

template <class F>
StandardData<F> standard_data(const QuiverAlgebra<F>& alg, std::size_t w) {
  StandardData<F> out;
  out.proj = projective(alg, w);
  std::vector<std::size_t> bad;
  for (std::size_t x = 0; x < alg.vertex_count(); ++x)
    if (!alg.poset().le(x, w)) bad.push_back(x);
  VertexSpaces<F> tr = trace_spaces(out.proj, bad);
  SubQuot<F> sq = split_by_spaces(out.proj, tr);
  out.mod = std::move(sq.quot);
  out.pi = std::move(sq.proj);
  out.kernel = std::move(tr);
  return out;
}

template <class F>
Module<F> standard(const QuiverAlgebra<F>& alg, std::size_t w) {
  return standard_data(alg, w).mod;
}

/// Dual of a module over the opposite algebra, as a module over the
/// original one. Arrow i acts by the transpose of opposite arrow i.
template <class F>
Module<F> dual_of_opposite(const QuiverAlgebra<F>& alg, const Module<F>& op_mod) {
  Module<F> m;
  m.alg = &alg;
  m.dims = op_mod.dims;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a)
    m.action.push_back(op_mod.action[a].transpose());
  return m;
}

/// Costandard module: linear dual of the standard module over the
/// opposite algebra.
template <class F>
Module<F> costandard(const QuiverAlgebra<F>& alg, const QuiverAlgebra<F>& op, std::size_t w) {
  return dual_of_opposite(alg, standard(op, w));
}

/// Basis of Hom(M, N) as module maps, in a deterministic order.
template <class F>
std::vector<ModuleMap<F>> hom_space(const Module<F>& m, const Module<F>& n) {
  const QuiverAlgebra<F>& alg = *m.alg;
  std::vector<std::size_t> offset(m.dims.size() + 1, 0);
  for (std::size_t x = 0; x < m.dims.size(); ++x)
    offset[x + 1] = offset[x] + n.dims[x] * m.dims[x];
  std::size_t unknowns = offset.back();
  std::vector<std::vector<F>> rows;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    std::size_t from = alg.arrow(a).from, to = alg.arrow(a).to;
    // T_to * M_a - N_a * T_from = 0
    for (std::size_t i = 0; i < n.dims[to]; ++i)
      for (std::size_t j = 0; j < m.dims[from]; ++j) {
        std::vector<F> row(unknowns, F(0));
        for (std::size_t k = 0; k < m.dims[to]; ++k)
          row[offset[to] + i * m.dims[to] + k] += m.action[a].at(k, j);
        for (std::size_t l = 0; l < n.dims[from]; ++l)
          row[offset[from] + l * m.dims[from] + j] -= n.action[a].at(i, l);
        rows.push_back(std::move(row));
      }
  }
  Matrix<F> sys(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) sys.at(r, c) = rows[r][c];
  Matrix<F> ker = kernel_basis(sys);
  std::vector<ModuleMap<F>> out;
  for (std::size_t b = 0; b < ker.cols(); ++b) {
    ModuleMap<F> f = ModuleMap<F>::zero(m, n);
    for (std::size_t x = 0; x < m.dims.size(); ++x)
      for (std::size_t i = 0; i < n.dims[x]; ++i)
        for (std::size_t j = 0; j < m.dims[x]; ++j)
          f.mats[x].at(i, j) = ker.at(offset[x] + i * m.dims[x] + j, b);
    out.push_back(std::move(f));
  }
  return out;
}

template <class F>
std::size_t hom_dim(const Module<F>& m, const Module<F>& n) {
  return hom_space(m, n).size();
}

}  // namespace bgg

#endif
